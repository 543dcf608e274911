#include "moire/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "moire/bar_align.hpp"
#include "moire/error.hpp"
#include "moire/random.hpp"

namespace moire {

namespace {

std::vector<double> run_trial(const SnrExperimentConfig& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const DnaSequence reference = random_sequence(rng, cfg.query_length + cfg.shifts - 1);
  const std::size_t match = random_below(rng, cfg.shifts);
  const DnaSequence query = reference.slice(match + 1, match + cfg.query_length);

  std::vector<double> out;
  out.reserve(cfg.schemes.size());
  for (Scheme s : cfg.schemes) {
    const auto stack = build_shift_stack(reference, cfg.query_length, s, cfg.shifts);
    const auto img = overlap(stack, build_query_pattern(query, s, cfg.shifts));
    try {
      out.push_back(snr_db(row_intensity(img), match));
    } catch (const UndefinedSnr&) {
      out.push_back(std::numeric_limits<double>::infinity());
    }
  }
  return out;
}

}  // namespace

std::vector<SnrSummary> run_snr_experiment(const SnrExperimentConfig& cfg) {
  if (cfg.trials == 0) throw std::invalid_argument("at least one trial is required");
  if (cfg.shifts < 2) throw std::invalid_argument("SNR needs at least two shifts");
  if (cfg.query_length < 2) throw std::invalid_argument("query length must be at least 2");

  std::vector<std::vector<double>> per_trial(cfg.trials);
  std::size_t workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, cfg.trials);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < cfg.trials; t += workers) per_trial[t] = run_trial(cfg, cfg.seed + t);
      });
  }

  std::vector<SnrSummary> out;
  for (std::size_t k = 0; k < cfg.schemes.size(); ++k) {
    SnrSummary s;
    s.scheme = cfg.schemes[k];
    for (const auto& trial : per_trial) {
      const double v = trial[k];
      if (std::isinf(v)) {
        ++s.unbounded;
        continue;
      }
      s.values.push_back(v);
    }
    s.trials = s.values.size();
    if (s.trials > 0) {
      double sum = 0.0;
      for (double v : s.values) sum += v;
      s.mean_db = sum / static_cast<double>(s.trials);
      double ss = 0.0;
      for (double v : s.values) ss += (v - s.mean_db) * (v - s.mean_db);
      s.std_db = s.trials > 1 ? std::sqrt(ss / static_cast<double>(s.trials - 1)) : 0.0;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace moire
