#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "moire/codec.hpp"

namespace moire {

struct SnrExperimentConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t query_length = 48;
  // Rows in each stack: one matching row plus shifts-1 random ones.
  std::size_t shifts = 16;
  std::vector<Scheme> schemes{kAllSchemes.begin(), kAllSchemes.end()};
  std::size_t threads = 0;  // 0: hardware concurrency
};

struct SnrSummary {
  Scheme scheme = Scheme::TypeI;
  double mean_db = 0.0;
  double std_db = 0.0;      // sample standard deviation
  std::size_t trials = 0;   // finite draws entering mean and std
  std::size_t unbounded = 0;  // draws whose other rows were all dark
  std::vector<double> values;
};

/// Trial t draws a reference of query_length + shifts - 1 IID bases from
/// seed + t, takes the query from a uniformly chosen row, and measures the SNR
/// of that row under every scheme. Results do not depend on thread count.
std::vector<SnrSummary> run_snr_experiment(const SnrExperimentConfig& config);

}  // namespace moire
