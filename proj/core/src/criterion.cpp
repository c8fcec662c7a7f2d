#include "tcla/criterion.hpp"

#include <algorithm>
#include <limits>

namespace tcla {

bool Verdict::reducible_up_to(int max_height) const {
  return std::any_of(witnesses.begin(), witnesses.end(), [&](const RootVector& a) { return height(a) <= max_height; });
}

Verdict criterion_reducible(const WeightFunctional& lambda, const TruncatedAlgebra& alg, int max_root_height) {
  const LieAlgebra& base = alg.base();
  const int top = alg.nilp();
  Verdict v;

  if (auto closed = base.closed_form_witnesses(lambda.level(top), max_root_height)) {
    v.witnesses = std::move(*closed);
  } else {
    // finite root systems are always examined in full
    const int bound = base.is_finite() ? std::numeric_limits<int>::max() : max_root_height;
    if (!base.is_finite()) v.scanned_height = max_root_height;
    for (const auto& [alpha, dim] : enumerate_positive_roots(base, bound))
      if (sgn(lambda.eval(base.coroot(alpha), top)) == 0) v.witnesses.push_back(alpha);
  }
  std::sort(v.witnesses.begin(), v.witnesses.end(), root_less);
  v.reducible = !v.witnesses.empty();
  return v;
}

bool ScanReport::zero_found() const {
  return std::any_of(records.begin(), records.end(), [](const ScanRecord& r) { return sgn(r.det) == 0; });
}

std::vector<RootVector> ScanReport::zero_weights() const {
  std::vector<RootVector> out;
  for (const auto& r : records)
    if (sgn(r.det) == 0) out.push_back(r.chi);
  return out;
}

ScanReport scan_reducible(const VermaModule& module, int max_height) {
  ScanReport report;
  report.max_height = max_height;
  const int gens = module.algebra().base().generator_count();
  for (int h = 1; h <= max_height; ++h) {
    for (const auto& chi : weights_of_height(gens, h)) {
      ShapMatrix m = shap_matrix(module, chi);
      report.records.push_back({chi, m.monomials.size(), determinant(m.entries)});
    }
  }
  return report;
}

ScanReport scan_reducible(const WeightFunctional& lambda, const TruncatedAlgebra& alg, int max_height) {
  return scan_reducible(VermaModule(alg, lambda), max_height);
}

std::string describe(const Verdict& verdict, const LieAlgebra& base) {
  if (!verdict.reducible) {
    std::string s = "IRREDUCIBLE";
    if (verdict.scanned_height) s += " (no witness up to height " + std::to_string(*verdict.scanned_height) + ")";
    return s;
  }
  std::string s = verdict.witnesses.size() == 1 ? "REDUCIBLE, witness " : "REDUCIBLE, witnesses ";
  for (std::size_t i = 0; i < verdict.witnesses.size(); ++i) {
    if (i) s += ", ";
    s += base.root_label(verdict.witnesses[i]);
  }
  return s;
}

}  // namespace tcla
