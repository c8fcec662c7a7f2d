#include "tcla/validation.hpp"

#include <atomic>
#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "tcla/errors.hpp"

namespace tcla {

using nlohmann::json;

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 6);
  const int n = num(rng);
  Rat q(n, den(rng));
  q.canonicalize();
  return q;
}

WeightFunctional random_weight(std::mt19937_64& rng, const TruncatedAlgebra& alg) {
  WeightFunctional lambda = WeightFunctional::zero(alg);
  for (int i = 0; i <= alg.nilp(); ++i)
    for (auto& x : lambda.level(i)) x = random_rat(rng);
  return lambda;
}

void plant_witness(std::mt19937_64& rng, WeightFunctional& lambda, const TruncatedAlgebra& alg,
                   const RootVector& witness) {
  const CartanVector h = alg.base().coroot(witness);
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < h.size(); ++k)
    if (sgn(h[k]) != 0) support.push_back(k);
  if (support.empty()) throw InvalidAlgebraError("zero coroot at " + format_root(witness));

  std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
  const std::size_t k = support[pick(rng)];
  auto& top = lambda.level(alg.nilp());
  Rat rest = 0;
  for (std::size_t j = 0; j < h.size(); ++j)
    if (j != k) rest += h[j] * top[j];
  top[k] = -rest / h[k];
}

SampleResult evaluate_sample(const TruncatedAlgebra& alg, WeightFunctional lambda, int max_height) {
  SampleResult r;
  r.criterion = criterion_reducible(lambda, alg, max_height);
  r.criterion_in_window = r.criterion.reducible_up_to(max_height);
  const ScanReport scan = scan_reducible(lambda, alg, max_height);
  r.zero_weights = scan.zero_weights();
  r.scan_zero = !r.zero_weights.empty();
  r.agree = r.criterion_in_window == r.scan_zero;
  r.lambda = std::move(lambda);
  return r;
}

int default_thread_count() {
  if (const char* env = std::getenv("TCLA_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

ValidationReport cross_validate(const AlgebraPtr& base, int nilp, int samples, std::uint64_t seed, int max_height,
                                int threads) {
  if (samples < 1) throw InputError("samples must be >= 1");
  if (max_height < 1) throw InputError("max height must be >= 1");
  const TruncatedAlgebra alg(base, nilp);
  const auto roots = enumerate_positive_roots(*base, max_height);
  if (roots.empty()) throw InputError("no positive roots up to height " + std::to_string(max_height));

  ValidationReport report{base->name(), nilp, seed, max_height, std::vector<SampleResult>(static_cast<std::size_t>(samples))};

  auto run_one = [&](std::size_t index) {
    auto rng = sample_rng(seed, index);
    WeightFunctional lambda = random_weight(rng, alg);
    std::optional<RootVector> planted;
    if (index % 2 == 1) {
      std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
      planted = roots[pick(rng)].root;
      plant_witness(rng, lambda, alg, *planted);
    }
    SampleResult r = evaluate_sample(alg, std::move(lambda), max_height);
    r.index = index;
    r.constructed = planted.has_value();
    r.planted = std::move(planted);
    report.samples[index] = std::move(r);
  };

  const int workers = std::min(threads > 0 ? threads : default_thread_count(), samples);
  if (workers <= 1) {
    for (std::size_t i = 0; i < report.samples.size(); ++i) run_one(i);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < report.samples.size(); i = next++) {
        try {
          run_one(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return report;
}

std::size_t ValidationReport::agreements() const {
  return static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(), [](const SampleResult& s) { return s.agree; }));
}

std::vector<const SampleResult*> ValidationReport::disagreements() const {
  std::vector<const SampleResult*> out;
  for (const auto& s : samples)
    if (!s.agree) out.push_back(&s);
  return out;
}

namespace {

json sample_to_json(const SampleResult& s, const LieAlgebra& base) {
  json witnesses = json::array();
  for (const auto& w : s.criterion.witnesses) witnesses.push_back({{"root", w}, {"label", base.root_label(w)}});
  json lambda = json::parse(weight_to_json(s.lambda, base));
  return json{{"index", s.index},
              {"kind", s.constructed ? "constructed" : "generic"},
              {"planted", s.planted ? json(*s.planted) : json(nullptr)},
              {"lambda", lambda["levels"]},
              {"criterion",
               {{"reducible", s.criterion.reducible},
                {"witnesses", witnesses},
                {"scanned_height", s.criterion.scanned_height ? json(*s.criterion.scanned_height) : json(nullptr)}}},
              {"criterion_in_window", s.criterion_in_window},
              {"zero_det_weights", s.zero_weights},
              {"agree", s.agree}};
}

std::string roots_text(const std::vector<RootVector>& roots) {
  if (roots.empty()) return "none";
  std::string out;
  for (const auto& r : roots) out += (out.empty() ? "" : " ") + format_root(r);
  return out;
}

}  // namespace

std::string report_to_text(const ValidationReport& report, const LieAlgebra& base) {
  std::ostringstream os;
  os << "cross-validation: algebra=" << report.algebra << " N=" << report.nilp << " seed=" << report.seed
     << " max_height=" << report.max_height << " samples=" << report.samples.size() << "\n";
  for (const auto& s : report.samples) {
    os << "sample " << s.index << " " << (s.constructed ? "constructed" : "generic");
    if (s.planted) os << " planted=" << base.root_label(*s.planted);
    os << " | criterion: " << describe(s.criterion, base) << " | zero det at: " << roots_text(s.zero_weights) << " | "
       << (s.agree ? "agree" : "DISAGREE") << "\n";
  }
  os << "agreements: " << report.agreements() << "/" << report.samples.size() << "\n";
  for (const auto* s : report.disagreements())
    os << "disagreement at sample " << s->index << ": lambda=" << weight_to_json(s->lambda, base) << "\n";
  return os.str();
}

std::string report_to_json(const ValidationReport& report, const LieAlgebra& base) {
  json samples = json::array();
  json disagreements = json::array();
  for (const auto& s : report.samples) {
    json j = sample_to_json(s, base);
    if (!s.agree) disagreements.push_back(j);
    samples.push_back(std::move(j));
  }
  json doc{{"algebra", report.algebra},
           {"nilp", report.nilp},
           {"seed", report.seed},
           {"max_height", report.max_height},
           {"samples", samples},
           {"agreements", report.agreements()},
           {"disagreements", disagreements}};
  return doc.dump(2);
}

}  // namespace tcla
