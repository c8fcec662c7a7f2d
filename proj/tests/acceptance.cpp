// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "algebra_checks.hpp"
#include "cli.hpp"
#include "random_elements.hpp"
#include "tcla/criterion.hpp"
#include "tcla/figures.hpp"
#include "tcla/rescaled.hpp"
#include "tcla/shapovalov.hpp"
#include "tcla/validation.hpp"

namespace {

using namespace tcla;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome hand_oracle_matrix() {
  Outcome o;
  const auto start = Clock::now();
  const TruncatedAlgebra alg(make_algebra("sl2"), 1);
  const auto m = shap_matrix(WeightFunctional({{Rat(5)}, {Rat(3)}}), {1}, alg);
  const Rat det = determinant(m.entries);
  const double t = seconds_since(start);
  if (matrix_text(m.entries) != "[[5,3],[3,0]]") o.fail("matrix " + matrix_text(m.entries));
  if (det != -9) o.fail("det " + to_string(det));
  if (t >= 1.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "[[5,3],[3,0]], det -9";
  return o;
}

Outcome hankel_law() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (int nilp : {1, 2}) {
    const TruncatedAlgebra alg(make_algebra("sl2"), nilp);
    std::optional<int> sign;
    for (std::uint64_t i = 0; i < 100; ++i) {
      auto rng = sample_rng(2024 + static_cast<std::uint64_t>(nilp), i);
      const auto lambda = random_weight(rng, alg);
      const Rat det = shap_det(lambda, {1}, alg);
      Rat power = 1;
      for (int k = 0; k <= nilp; ++k) power *= lambda.top()[0];
      if (sgn(power) == 0) {
        if (sgn(det) != 0) o.fail("N=" + std::to_string(nilp) + " nonzero det at Lambda_N(h)=0");
        ++checked;
        continue;
      }
      const Rat q = det / power;
      if (q != 1 && q != -1) {
        o.fail("N=" + std::to_string(nilp) + " det " + to_string(det) + " vs power " + to_string(power));
        continue;
      }
      const int s = sgn(q);
      if (sign && *sign != s) o.fail("sign not constant for N=" + std::to_string(nilp));
      sign = s;
      ++checked;
    }
    if (o.pass) o.detail += "N=" + std::to_string(nilp) + " sign " + (sign.value_or(1) > 0 ? "+" : "-") + " ";
  }
  const double t = seconds_since(start);
  if (t >= 10.0) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail += "(" + std::to_string(checked) + " weights)";
  return o;
}

struct Window {
  const char* name;
  int height;
};

constexpr Window kWindows[] = {{"sl2", 2}, {"sl3", 2}, {"virasoro", 4}, {"oscillator", 3}};

Outcome criterion_vs_scan() {
  Outcome o;
  std::string summary;
  for (const auto& w : kWindows) {
    const auto base = make_algebra(w.name);
    for (int nilp : {1, 2}) {
      const auto report = cross_validate(base, nilp, 100, 20240101, w.height);
      std::size_t constructed = 0;
      for (const auto& s : report.samples) constructed += s.constructed ? 1 : 0;
      summary += std::string(w.name) + "/N" + std::to_string(nilp) + " " + std::to_string(report.agreements()) + "/100 ";
      if (constructed != 50) o.fail(std::string(w.name) + " constructed " + std::to_string(constructed));
      if (!report.disagreements().empty()) {
        o.fail(std::string(w.name) + " N=" + std::to_string(nilp) + " disagreements");
        std::cout << "---- diagnostic dump: " << w.name << " N=" << nilp << "\n"
                  << report_to_json(report, *base) << "\n";
      }
    }
  }
  if (o.pass) o.detail = summary;
  return o;
}

Outcome top_level_only() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& w : kWindows) {
    const auto base = make_algebra(w.name);
    const auto roots = enumerate_positive_roots(*base, w.height);
    for (int nilp : {1, 2}) {
      const TruncatedAlgebra alg(base, nilp);
      for (std::uint64_t i = 0; i < 50; ++i) {
        auto rng = sample_rng(777 + static_cast<std::uint64_t>(nilp), i);
        auto a = random_weight(rng, alg);
        if (i % 2 == 1) plant_witness(rng, a, alg, roots[i / 2 % roots.size()].root);
        auto b = random_weight(rng, alg);
        b.level(nilp) = a.level(nilp);
        const auto va = criterion_reducible(a, alg, w.height);
        const auto vb = criterion_reducible(b, alg, w.height);
        const auto sa = scan_reducible(a, alg, w.height);
        const auto sb = scan_reducible(b, alg, w.height);
        if (va.reducible != vb.reducible || va.witnesses != vb.witnesses)
          o.fail(std::string(w.name) + " criterion differs at pair " + std::to_string(i));
        if (sa.zero_found() != sb.zero_found() || sa.zero_weights() != sb.zero_weights())
          o.fail(std::string(w.name) + " scan differs at pair " + std::to_string(i) + ": " + weight_to_json(a, *base) +
                 " vs " + weight_to_json(b, *base));
        ++pairs;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, 50 per algebra and N";
  return o;
}

Outcome structure_constants() {
  Outcome o;
  for (const auto& name : algebra_names()) {
    const auto alg = make_algebra(name);
    for (const auto& failure : {testing::check_antisymmetry(*alg), testing::check_jacobi(*alg), testing::check_grading(*alg),
                                testing::check_pairing(*alg), testing::check_cartan_action(*alg)})
      if (failure) o.fail(name + ": " + *failure);
  }
  if (o.pass) o.detail = "all built-ins, sl_n exhaustive, graded |m| <= 6";
  return o;
}

Outcome module_axiom() {
  Outcome o;
  for (const auto& name : algebra_names()) {
    std::mt19937_64 rng(std::hash<std::string>{}(name) ^ 0x5eedULL);
    for (int trial = 0; trial < 200; ++trial) {
      const int nilp = 1 + trial % 2;
      const TruncatedAlgebra alg(make_algebra(name), nilp);
      const VermaModule m(alg, testing::random_lambda(rng, alg));
      const auto x = testing::random_generator(rng, alg, 3);
      const auto y = testing::random_generator(rng, alg, 3);
      const auto v = testing::random_vector(rng, alg, 2);
      const VermaVector lhs = m.apply(x, m.apply(y, v)) - m.apply(y, m.apply(x, v));
      if (lhs != m.apply(alg.bracket(x, y), v))
        o.fail(name + " trial " + std::to_string(trial) + " [" + alg.base().element_name(x.elem) + "@" +
               std::to_string(x.degree) + ", " + alg.base().element_name(y.elem) + "@" + std::to_string(y.degree) + "]");
    }
  }
  if (o.pass) o.detail = "200 triples per algebra";
  return o;
}

Outcome invariance() {
  Outcome o;
  struct Probe {
    const char* name;
    int nilp;
    RootVector chi;
  };
  const Probe probes[] = {{"sl2", 1, {2}},         {"sl2", 2, {2}},         {"sl3", 1, {1, 1}},    {"sl3", 1, {2, 1}},
                          {"sl3", 2, {1, 1}},      {"sl4", 1, {1, 1, 1}},   {"virasoro", 1, {2}},  {"virasoro", 1, {3}},
                          {"virasoro", 2, {2}},    {"oscillator", 1, {2}},  {"oscillator", 1, {3}}, {"oscillator", 2, {2}}};
  std::size_t zeros = 0;
  for (std::size_t p = 0; p < 20; ++p) {
    const Probe& probe = probes[p % std::size(probes)];
    const auto base = make_algebra(probe.name);
    const TruncatedAlgebra plain(base, probe.nilp);
    const TruncatedAlgebra scaled(std::make_shared<RescaledAlgebra>(base, 1000 + p), probe.nilp);
    auto rng = sample_rng(31337, p);
    auto lambda = random_weight(rng, plain);
    if (p % 2 == 0) {
      // plant a witness below chi so the zero set is non-empty
      for (const auto& r : enumerate_positive_roots(*base, height(probe.chi))) {
        bool below = true;
        for (std::size_t k = 0; k < r.root.size(); ++k) below = below && r.root[k] <= probe.chi[k];
        if (below) {
          plant_witness(rng, lambda, plain, r.root);
          break;
        }
      }
    }
    const std::string tag = std::string(probe.name) + " N=" + std::to_string(probe.nilp) + " chi=" + format_root(probe.chi);
    const VermaModule module(plain, lambda);
    const auto canonical = shap_matrix(module, probe.chi);
    const Rat det = determinant(canonical.entries);
    zeros += sgn(det) == 0 ? 1 : 0;
    if ((sgn(det) == 0) != (sgn(shap_det(lambda, probe.chi, scaled)) == 0)) o.fail("rescaling moved zero at " + tag);

    auto order = canonical.monomials;
    std::shuffle(order.begin(), order.end(), rng);
    const Rat permuted = determinant(shap_matrix(module, probe.chi, order).entries);
    if (abs(permuted) != abs(det)) o.fail("permutation changed |det| at " + tag);
  }
  if (o.pass) o.detail = "20 probes, " + std::to_string(zeros) + " with zero det";
  return o;
}

Outcome figures() {
  Outcome o;
  const auto sl3 = sl3_hyperplanes();
  std::set<std::pair<Rat, Rat>> normals;
  for (const auto& l : sl3.lines) normals.insert({l.n1, l.n2});
  const std::set<std::pair<Rat, Rat>> want{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  if (sl3.lines.size() != 3 || normals != want) o.fail("sl3 normals");

  constexpr int kMaxM = 4;
  const auto vir = virasoro_lines(kMaxM);
  if (vir.lines.size() != kMaxM) o.fail("virasoro line count");
  for (int m = 1; m <= static_cast<int>(vir.lines.size()); ++m) {
    const auto& l = vir.lines[static_cast<std::size_t>(m - 1)];
    if (-l.n1 / l.n2 != ratio(1 - m * m, 24)) o.fail("slope at m=" + std::to_string(m));
  }

  const std::string dir = TCLA_GOLDEN_DIR;
  const std::pair<std::string, std::string> goldens[] = {{"sl3.csv", render_csv(sl3)},
                                                         {"sl3.svg", render_svg(sl3)},
                                                         {"virasoro_m4.csv", render_csv(vir)},
                                                         {"virasoro_m4.svg", render_svg(vir)}};
  for (const auto& [file, text] : goldens)
    if (read_file(dir + "/" + file) != text) o.fail(file + " differs from golden");
  if (o.pass) o.detail = "3 sl3 lines, 4 virasoro slopes, 4 golden files";
  return o;
}

Outcome virasoro_formula() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "tcla_acceptance";
  std::filesystem::create_directories(dir);
  struct Case {
    int nilp;
    const char* top;
    const char* expected;
  };
  for (const auto& c : {Case{1, R"({"L0": "1", "c": "-8"})", "REDUCIBLE, witness m=2"},
                        Case{2, R"({"L0": "1", "c": "-8"})", "REDUCIBLE, witness m=2"},
                        Case{1, R"({"L0": "-1", "c": "4"})", "IRREDUCIBLE"},
                        Case{2, R"({"L0": "-1", "c": "4"})", "IRREDUCIBLE"}}) {
    std::string levels;
    for (int i = 0; i < c.nilp; ++i) levels += R"({"L0": "3/2", "c": "5"}, )";
    const auto path = (dir / ("lambda_" + std::to_string(c.nilp) + ".json")).string();
    std::ofstream(path) << R"({"levels": [)" << levels << c.top << "]}";
    const std::string nilp = std::to_string(c.nilp);
    const char* argv[] = {"tcla", "check", "--algebra", "virasoro", "--nilp", nilp.c_str(), "--lambda", path.c_str()};
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(std::size(argv)), argv, out, err);
    const std::string first = out.str().substr(0, out.str().find('\n'));
    if (code != 0 || first != c.expected)
      o.fail("N=" + nilp + " " + c.top + ": exit " + std::to_string(code) + " '" + first + "' " + err.str());
  }
  std::filesystem::remove_all(dir);
  if (o.pass) o.detail = "m=2 witness for (1,-8); irreducible for (-1,4)";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"hand-oracle matrix", hand_oracle_matrix},
      {"hankel law", hankel_law},
      {"criterion vs determinant scan", criterion_vs_scan},
      {"top-level-only dependence", top_level_only},
      {"structure constants", structure_constants},
      {"module axiom", module_axiom},
      {"rescaling and order invariance", invariance},
      {"figures", figures},
      {"virasoro witness formula", virasoro_formula},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << seconds_since(start);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << name << ": " << o.detail << " (" << t.str()
              << " s)" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
