#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tcla/criterion.hpp"
#include "tcla/errors.hpp"
#include "tcla/figures.hpp"
#include "tcla/validation.hpp"

namespace tcla::cli {

namespace {

int default_height(const LieAlgebra& alg) { return alg.is_finite() ? 2 : 4; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read weight file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << text;
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

struct CommonArgs {
  std::string algebra;
  int nilp = 1;
  std::string lambda_path;
  int max_height = -1;
};

void add_algebra_options(CLI::App* cmd, CommonArgs& args, bool with_lambda) {
  cmd->add_option("--algebra", args.algebra, "Base algebra (sl2, sl3, sl4, virasoro, oscillator)")->required();
  cmd->add_option("--nilp", args.nilp, "Truncation N (t^(N+1) = 0), N >= 1")->required();
  if (with_lambda) cmd->add_option("--lambda", args.lambda_path, "Highest-weight JSON file")->required();
}

struct Loaded {
  AlgebraPtr base;
  TruncatedAlgebra alg;
  WeightFunctional lambda;
};

Loaded load(const CommonArgs& args) {
  AlgebraPtr base = make_algebra(args.algebra);
  TruncatedAlgebra alg(base, args.nilp);
  WeightFunctional lambda = parse_weight_json(read_file(args.lambda_path), alg);
  return {base, alg, std::move(lambda)};
}

int cmd_algebras(std::ostream& out) {
  for (const auto& name : algebra_names()) {
    const auto alg = make_algebra(name);
    std::string cartan;
    for (const auto& c : alg->cartan_names()) cartan += (cartan.empty() ? "" : ",") + c;
    out << name << ": cartan_rank=" << alg->cartan_rank() << " cartan=[" << cartan
        << "] simple_generators=" << alg->generator_count() << " roots=" << (alg->is_finite() ? "finite" : "infinite")
        << "\n";
  }
  return kSuccess;
}

int cmd_check(const CommonArgs& args, std::ostream& out) {
  const Loaded in = load(args);
  const int h = args.max_height >= 0 ? args.max_height : default_height(*in.base);
  const Verdict v = criterion_reducible(in.lambda, in.alg, h);
  out << describe(v, *in.base) << "\n";
  const auto& top = in.lambda.top();
  for (const auto& alpha : v.witnesses) {
    out << "  " << in.base->root_label(alpha) << " " << format_root(alpha) << ": Lambda_" << in.alg.nilp()
        << "(h_alpha) = " << to_string(in.lambda.eval(in.base->coroot(alpha), in.alg.nilp())) << "\n";
  }
  std::string levels;
  for (std::size_t k = 0; k < top.size(); ++k)
    levels += (k ? ", " : "") + in.base->cartan_names()[k] + "=" + to_string(top[k]);
  out << "  Lambda_" << in.alg.nilp() << ": " << levels << "\n";
  return kSuccess;
}

int cmd_shapovalov(const CommonArgs& args, const std::string& chi_text, const std::string& json_path,
                   std::ostream& out) {
  const Loaded in = load(args);
  const RootVector chi = parse_chi(chi_text, in.base->generator_count());
  const ShapMatrix m = shap_matrix(in.lambda, chi, in.alg);
  const Rat det = determinant(m.entries);
  out << "chi: " << format_root(chi) << "\n";
  out << "monomials:\n";
  for (std::size_t i = 0; i < m.monomials.size(); ++i) out << "  [" << i << "] " << encode_monomial(m.monomials[i]) << "\n";
  out << "matrix: " << matrix_text(m.entries) << "\n";
  out << "det: " << to_string(det) << "\n";
  if (!json_path.empty()) write_file(json_path, shap_to_json(m, det) + "\n");
  return kSuccess;
}

int cmd_scan(const CommonArgs& args, std::ostream& out) {
  const Loaded in = load(args);
  const ScanReport report = scan_reducible(in.lambda, in.alg, args.max_height);
  for (const auto& r : report.records)
    out << "chi=" << format_root(r.chi) << " dim=" << r.dim << " det=" << to_string(r.det) << "\n";
  const auto zeros = report.zero_weights();
  if (zeros.empty()) {
    out << "verdict: no zero determinant up to height " << report.max_height << "\n";
  } else {
    out << "verdict: zero determinant at";
    for (const auto& z : zeros) out << " " << format_root(z);
    out << "\n";
  }
  return kSuccess;
}

int cmd_validate(const CommonArgs& args, int samples, std::uint64_t seed, const std::string& json_path,
                 std::ostream& out) {
  const AlgebraPtr base = make_algebra(args.algebra);
  const int h = args.max_height >= 0 ? args.max_height : default_height(*base);
  const ValidationReport report = cross_validate(base, args.nilp, samples, seed, h);
  out << report_to_text(report, *base);
  if (!json_path.empty()) write_file(json_path, report_to_json(report, *base) + "\n");
  return report.disagreements().empty() ? kSuccess : kInternal;
}

int cmd_figure(const std::string& which, int m_max, const std::string& format, const std::string& path,
               std::ostream& out) {
  const LineSet ls = which == "sl3" ? sl3_hyperplanes() : virasoro_lines(m_max);
  const FigureFormat f = format == "csv" ? FigureFormat::csv : FigureFormat::svg;
  if (path == "-") {
    out << render(ls, f);
  } else {
    render_to_file(ls, f, path);
  }
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated current Lie algebras: Verma modules, Shapovalov determinants, reducibility"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string chi_text;
  std::string json_path;
  int samples = 100;
  std::uint64_t seed = 1;
  std::string which;
  int m_max = 4;
  std::string format;
  std::string out_path;

  auto* algebras = app.add_subcommand("algebras", "List built-in algebras");

  auto* check = app.add_subcommand("check", "Evaluate the top-level reducibility criterion");
  add_algebra_options(check, common, true);
  check->add_option("--max-height", common.max_height, "Root height bound for infinite root systems");

  auto* shap = app.add_subcommand("shapovalov", "Shapovalov matrix and determinant at one weight");
  add_algebra_options(shap, common, true);
  shap->add_option("--chi", chi_text, "Weight drop, comma-separated over simple generators")->required();
  shap->add_option("--json", json_path, "Also write the matrix as JSON");

  auto* scan = app.add_subcommand("scan", "Determinants for every weight up to a height");
  add_algebra_options(scan, common, true);
  scan->add_option("--max-height", common.max_height, "Height bound")->required()->check(CLI::NonNegativeNumber);

  auto* validate = app.add_subcommand("validate", "Randomized criterion vs determinant cross-validation");
  add_algebra_options(validate, common, false);
  validate->add_option("--samples", samples, "Number of random weights")->check(CLI::PositiveNumber);
  validate->add_option("--seed", seed, "Random seed");
  validate->add_option("--max-height", common.max_height, "Height window")->check(CLI::PositiveNumber);
  validate->add_option("--json", json_path, "Also write the report as JSON");

  auto* figure = app.add_subcommand("figure", "Reducibility hyperplane arrangements");
  figure->add_option("--which", which, "sl3 or virasoro")->required()->check(CLI::IsMember({"sl3", "virasoro"}));
  figure->add_option("--m-max", m_max, "Largest m for the Virasoro lines")->check(CLI::PositiveNumber);
  figure->add_option("--format", format, "csv or svg")->required()->check(CLI::IsMember({"csv", "svg"}));
  figure->add_option("--out", out_path, "Output path, '-' for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*algebras) return cmd_algebras(out);
    if (*check) return cmd_check(common, out);
    if (*shap) return cmd_shapovalov(common, chi_text, json_path, out);
    if (*scan) return cmd_scan(common, out);
    if (*validate) return cmd_validate(common, samples, seed, json_path, out);
    if (*figure) return cmd_figure(which, m_max, format, out_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace tcla::cli
