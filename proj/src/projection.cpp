#include "moire/projection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "moire/error.hpp"

namespace moire {

ProjectionProfile project_rows(const OverlapImage& img) {
  ProjectionProfile p;
  p.source_rows = img.intensity.rows();
  p.source_cols = img.intensity.cols();
  p.scheme = img.scheme;
  p.origin_shift = img.origin_shift;
  p.full_match = static_cast<int>(img.words_per_row()) * signal_level(img.scheme);
  p.values.resize(p.source_rows);
  for (std::size_t r = 0; r < p.source_rows; ++r) {
    const auto row = img.intensity.row(r);
    p.values[r] = std::accumulate(row.begin(), row.end(), 0);
  }
  return p;
}

std::vector<int> detect_candidates(const ProjectionProfile& profile, double threshold) {
  if (!(threshold > 0.0) || threshold > 1.0) throw std::invalid_argument("threshold must lie in (0, 1]");
  const double cut = threshold * static_cast<double>(profile.full_match);
  std::vector<std::size_t> idx;
  for (std::size_t r = 0; r < profile.values.size(); ++r)
    if (static_cast<double>(profile.values[r]) >= cut) idx.push_back(r);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return profile.values[a] > profile.values[b]; });
  std::vector<int> rows;
  rows.reserve(idx.size());
  for (auto r : idx) rows.push_back(static_cast<int>(r) + profile.origin_shift);
  return rows;
}

TwoStageRun two_stage_align(const DnaSequence& reference, const DnaSequence& query, Scheme scheme,
                            double threshold, const TwoStageOptions& options) {
  if (query.size() > reference.size()) throw WindowTooLarge("query is longer than the reference");
  const std::size_t shifts =
      options.shifts == 0 ? reference.size() - query.size() + 1 : options.shifts;
  const PatternImage stack = build_shift_stack(reference, query.size(), scheme, shifts);
  const PatternImage q = build_query_pattern(query, scheme, shifts);
  const OverlapImage full = overlap(stack, q);

  TwoStageRun run;
  run.profile = project_rows(full);
  run.candidates = detect_candidates(run.profile, threshold);
  if (run.candidates.empty())
    throw NoCandidates("no row reaches " + std::to_string(threshold) + " of the full-match intensity");

  std::set<int> rows;
  const int lo = full.origin_shift;
  const int hi = full.origin_shift + static_cast<int>(full.rows()) - 1;
  const int d = static_cast<int>(options.dilation);
  for (int c : run.candidates)
    for (int r = std::max(lo, c - d); r <= std::min(hi, c + d); ++r) rows.insert(r);
  run.searched_rows.assign(rows.begin(), rows.end());

  // Stage two only looks at the searched rows of the 2D image.
  OverlapImage part{Grid<std::uint8_t>(full.rows(), full.intensity.cols()), scheme, full.origin_shift};
  for (int r : run.searched_rows) {
    const auto src = full.intensity.row(static_cast<std::size_t>(r - lo));
    std::copy(src.begin(), src.end(), part.intensity.row(static_cast<std::size_t>(r - lo)).begin());
  }
  const auto segments = detect_segments(part, options.chain.min_run);
  run.report = infer_alignment(segments, word_count(scheme, query.size()), scheme, options.chain);
  attach_snr(run.report, run.profile.values, run.profile.origin_shift);
  return run;
}

}  // namespace moire
