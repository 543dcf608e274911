#pragma once

#include <cstddef>
#include <vector>

#include "moire/bar_align.hpp"

namespace moire {

// Output of the cylindrical-lens row integrator.
struct ProjectionProfile {
  std::vector<int> values;
  std::size_t source_rows = 0;
  std::size_t source_cols = 0;
  Scheme scheme = Scheme::TypeI;
  int origin_shift = 1;
  // Intensity of a fully matched row.
  int full_match = 0;
};

ProjectionProfile project_rows(const OverlapImage& img);

/// Rows (shift numbers) whose value reaches `threshold` of the full-match
/// value, strongest first; equal values keep row order.
std::vector<int> detect_candidates(const ProjectionProfile& profile, double threshold);

struct TwoStageOptions {
  ChainOptions chain;
  // Rows searched on either side of every candidate in stage two.
  std::size_t dilation = 4;
  std::size_t shifts = 0;
};

struct TwoStageRun {
  ProjectionProfile profile;
  std::vector<int> candidates;
  std::vector<int> searched_rows;  // sorted shift numbers examined in 2D
  AlignmentReport report;
};

/// Coarse 1D detection on the projected profile, then segment detection on the
/// dilated candidate rows only. Throws NoCandidates when no row reaches the
/// threshold.
TwoStageRun two_stage_align(const DnaSequence& reference, const DnaSequence& query, Scheme scheme,
                            double threshold, const TwoStageOptions& options = {});

}  // namespace moire
