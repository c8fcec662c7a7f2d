#include "tcla/shapovalov.hpp"

#include <json.hpp>

namespace tcla {

VermaVector ascend(const VermaModule& module, const PBWMonomial& theta, VermaVector v) {
  const TruncatedAlgebra& alg = module.algebra();
  for (const auto& f : theta.factors) {
    const GenComb up = alg.lift(alg.base().dual_raising(negated(f.elem.root), f.elem.index), f.degree);
    v = module.apply(up, v);
  }
  return v;
}

ShapMatrix shap_matrix(const VermaModule& module, const RootVector& chi, std::vector<PBWMonomial> monomials) {
  ShapMatrix out{chi, std::move(monomials), Matrix()};
  const std::size_t l = out.monomials.size();
  out.entries = Matrix(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    const VermaVector down(out.monomials[i]);
    for (std::size_t j = 0; j < l; ++j)
      out.entries(i, j) = VermaModule::highest_coefficient(ascend(module, out.monomials[j], down));
  }
  return out;
}

ShapMatrix shap_matrix(const VermaModule& module, const RootVector& chi) {
  return shap_matrix(module, chi, enumerate_monomials(chi, module.algebra()));
}

ShapMatrix shap_matrix(const WeightFunctional& lambda, const RootVector& chi, const TruncatedAlgebra& alg) {
  return shap_matrix(VermaModule(alg, lambda), chi);
}

Rat shap_det(const VermaModule& module, const RootVector& chi) { return determinant(shap_matrix(module, chi).entries); }

Rat shap_det(const WeightFunctional& lambda, const RootVector& chi, const TruncatedAlgebra& alg) {
  return determinant(shap_matrix(lambda, chi, alg).entries);
}

std::string shap_to_json(const ShapMatrix& m, const Rat& det) {
  using nlohmann::json;
  json monomials = json::array();
  for (const auto& theta : m.monomials) monomials.push_back(encode_monomial(theta));
  json entries = json::array();
  for (std::size_t i = 0; i < m.entries.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.entries.cols(); ++j) row.push_back(to_string(m.entries(i, j)));
    entries.push_back(row);
  }
  json doc{{"chi", m.chi}, {"monomials", monomials}, {"entries", entries}, {"det", to_string(det)}};
  return doc.dump(2);
}

}  // namespace tcla
