#include "moire/bar_align.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "moire/error.hpp"

namespace moire {

std::string_view to_string(EventKind k) noexcept {
  return k == EventKind::Insertion ? "insertion" : "deletion";
}

PatternImage build_shift_stack(const DnaSequence& reference, std::size_t window_bases, Scheme scheme,
                               std::size_t shifts) {
  if (window_bases == 0 || window_bases > reference.size())
    throw WindowTooLarge("window of " + std::to_string(window_bases) + " bases does not fit a " +
                         std::to_string(reference.size()) + "-base reference");
  if (pair_coded(scheme) && window_bases < 2) throw TooShort("pair coding needs windows of two bases");
  const std::size_t max_shifts = reference.size() - window_bases + 1;
  if (shifts == 0 || shifts > max_shifts)
    throw WindowTooLarge(std::to_string(shifts) + " shifts requested, at most " +
                         std::to_string(max_shifts) + " available");

  const std::size_t cols = word_count(scheme, window_bases) * word_length(scheme);
  PatternImage img{Grid<SlotState>(shifts, cols), scheme, 1};
  // Row r is the reference window starting at base r+1; rows differ by one word.
  const SlotRow full = encode_sequence(reference, scheme);
  const std::size_t wl = word_length(scheme);
  for (std::size_t r = 0; r < shifts; ++r)
    std::copy_n(full.begin() + static_cast<std::ptrdiff_t>(r * wl), cols, img.slots.row(r).begin());
  return img;
}

PatternImage build_query_pattern(const DnaSequence& query, Scheme scheme, std::size_t rows) {
  if (rows == 0) throw std::invalid_argument("query pattern needs at least one row");
  const SlotRow code = encode_sequence(query, scheme);
  PatternImage img{Grid<SlotState>(rows, code.size()), scheme, 1};
  for (std::size_t r = 0; r < rows; ++r) std::copy(code.begin(), code.end(), img.slots.row(r).begin());
  return img;
}

OverlapImage overlap(const PatternImage& stack, const PatternImage& query) {
  if (stack.scheme != query.scheme) throw DimensionMismatch("patterns use different schemes");
  if (stack.slots.rows() != query.slots.rows() || stack.slots.cols() != query.slots.cols())
    throw DimensionMismatch("pattern sizes differ: " + std::to_string(stack.slots.rows()) + "x" +
                            std::to_string(stack.slots.cols()) + " vs " +
                            std::to_string(query.slots.rows()) + "x" +
                            std::to_string(query.slots.cols()));
  OverlapImage out{Grid<std::uint8_t>(stack.slots.rows(), stack.slots.cols()), stack.scheme,
                   stack.origin_shift};
  const auto& a = stack.slots.data();
  const auto& b = query.slots.data();
  auto& o = out.intensity.data();
  for (std::size_t i = 0; i < a.size(); ++i) o[i] = static_cast<std::uint8_t>(slot_product(a[i], b[i]));
  return out;
}

std::vector<int> row_intensity(const OverlapImage& img) {
  std::vector<int> sums(img.rows(), 0);
  for (std::size_t r = 0; r < img.rows(); ++r) {
    const auto row = img.intensity.row(r);
    sums[r] = std::accumulate(row.begin(), row.end(), 0);
  }
  return sums;
}

double snr_db(std::span<const int> row_sums, std::size_t match_index) {
  if (row_sums.size() < 2) throw UndefinedSnr("SNR needs at least two rows");
  if (match_index >= row_sums.size()) throw std::out_of_range("match row outside the image");
  double others = 0.0;
  for (std::size_t r = 0; r < row_sums.size(); ++r)
    if (r != match_index) others += row_sums[r];
  if (others <= 0.0) throw UndefinedSnr("every non-matching row is dark");
  const double mean = others / static_cast<double>(row_sums.size() - 1);
  return 10.0 * std::log10(static_cast<double>(row_sums[match_index]) / mean);
}

double snr_db(const OverlapImage& img, int match_row) {
  const auto sums = row_intensity(img);
  const long idx = static_cast<long>(match_row) - img.origin_shift;
  if (idx < 0) throw std::out_of_range("match row outside the image");
  return snr_db(sums, static_cast<std::size_t>(idx));
}

std::vector<BrightSegment> detect_segments(const OverlapImage& img, std::size_t min_run) {
  if (min_run == 0) throw std::invalid_argument("min_run must be at least 1");
  const std::size_t wl = word_length(img.scheme);
  const int full = signal_level(img.scheme);
  const std::size_t words = img.words_per_row();

  std::vector<BrightSegment> out;
  for (std::size_t r = 0; r < img.rows(); ++r) {
    const auto row = img.intensity.row(r);
    std::size_t run_start = 0;
    std::size_t run_len = 0;
    auto flush = [&] {
      if (run_len >= min_run)
        out.push_back({static_cast<int>(r) + img.origin_shift, run_start + 1, run_start + run_len,
                       static_cast<int>(run_len) * full});
      run_len = 0;
    };
    for (std::size_t w = 0; w < words; ++w) {
      int sum = 0;
      for (std::size_t k = 0; k < wl; ++k) sum += row[w * wl + k];
      if (sum == full) {
        if (run_len == 0) run_start = w;
        ++run_len;
      } else {
        flush();
      }
    }
    flush();
  }
  std::sort(out.begin(), out.end(), [](const BrightSegment& a, const BrightSegment& b) {
    return std::tie(a.word_start, a.row) < std::tie(b.word_start, b.row);
  });
  return out;
}

namespace {

// A segment expressed in query base positions (1-based, inclusive).
struct Block {
  int row;
  long start;
  long end;
  std::size_t segment;
};

struct Link {
  long effective_start;
  long gain;
};

struct Chain {
  std::vector<std::size_t> blocks;   // indices into the block list, query order
  std::vector<long> starts;          // effective start per block
  EventList events;
};

long total_length(const EventList& ev) {
  long t = 0;
  for (const auto& e : ev) t += static_cast<long>(e.length);
  return t;
}

// Preference order among chains of equal score.
bool chain_before(const Chain& a, const Chain& b, const std::vector<Block>& blocks) {
  if (a.events.size() != b.events.size()) return a.events.size() < b.events.size();
  const long ta = total_length(a.events), tb = total_length(b.events);
  if (ta != tb) return ta < tb;
  if (a.events != b.events) return a.events < b.events;
  std::vector<int> ra, rb;
  for (auto i : a.blocks) ra.push_back(blocks[i].row);
  for (auto i : b.blocks) rb.push_back(blocks[i].row);
  return ra < rb;
}

}  // namespace

AlignmentReport infer_alignment(std::span<const BrightSegment> segments, std::size_t query_words,
                                Scheme scheme, const ChainOptions& options) {
  AlignmentReport report;
  report.scheme = scheme;
  if (segments.empty()) return report;

  // Pair words span two bases, so a run of k words covers k+1 bases.
  const long span = pair_coded(scheme) ? 2 : 1;
  std::vector<Block> blocks;
  blocks.reserve(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (s.length() < options.min_run) continue;
    blocks.push_back({s.row, static_cast<long>(s.word_start),
                      static_cast<long>(s.word_end) + span - 1, i});
  }
  if (blocks.empty()) return report;

  for (const auto& b : blocks) {
    const auto& s = segments[b.segment];
    if (s.word_start == 1 && s.word_end == query_words) report.exact_match_offsets.push_back(s.row);
  }
  std::sort(report.exact_match_offsets.begin(), report.exact_match_offsets.end());

  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    return std::tie(a.end, a.start, a.row) < std::tie(b.end, b.start, b.row);
  });

  const long max_jump = static_cast<long>(options.max_event_length);
  auto link = [&](const Block& prev, const Block& next) -> std::optional<Link> {
    if (next.end <= prev.end) return std::nullopt;
    const long delta = prev.row - next.row;
    if (std::abs(delta) > max_jump) return std::nullopt;
    // An insertion of delta bases leaves at least delta query bases uncovered.
    const long eff = std::max(next.start, prev.end + 1 + std::max(delta, 0L));
    const long len = next.end - eff + 1;
    if (len < span) return std::nullopt;
    return Link{eff, len - (span - 1)};
  };

  // State (j, e): best chain ending in block j that used e events.
  const std::size_t n = blocks.size();
  const std::size_t layers = options.max_events + 1;
  constexpr long kNone = -1;
  std::vector<std::vector<long>> best(n, std::vector<long>(layers, kNone));
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> preds(
      n, std::vector<std::vector<std::pair<std::size_t, std::size_t>>>(layers));
  std::vector<bool> can_start(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    best[j][0] = blocks[j].end - blocks[j].start + 1 - (span - 1);
    can_start[j] = true;
    for (std::size_t i = 0; i < j; ++i) {
      const auto l = link(blocks[i], blocks[j]);
      if (!l) continue;
      const std::size_t cost = blocks[i].row != blocks[j].row ? 1 : 0;
      for (std::size_t e = 0; e + cost < layers; ++e) {
        if (best[i][e] == kNone) continue;
        const std::size_t to = e + cost;
        const long score = best[i][e] + l->gain;
        if (score > best[j][to]) {
          best[j][to] = score;
          preds[j][to].assign(1, {i, e});
          if (to == 0) can_start[j] = false;
        } else if (score == best[j][to]) {
          preds[j][to].emplace_back(i, e);
        }
      }
    }
  }
  long top = kNone;
  for (const auto& row : best) top = std::max(top, *std::max_element(row.begin(), row.end()));

  // Enumerate every chain reaching the top score.
  const std::size_t cap = options.max_alternatives + 1;
  std::vector<Chain> chains;
  bool truncated = false;
  std::vector<std::size_t> path;
  auto emit = [&] {
    Chain c;
    c.blocks.assign(path.rbegin(), path.rend());
    c.starts.resize(c.blocks.size());
    c.starts[0] = blocks[c.blocks[0]].start;
    for (std::size_t k = 1; k < c.blocks.size(); ++k) {
      const Block& p = blocks[c.blocks[k - 1]];
      const Block& q = blocks[c.blocks[k]];
      c.starts[k] = link(p, q)->effective_start;
      const long delta = p.row - q.row;
      if (delta > 0)
        c.events.push_back({static_cast<std::size_t>(p.end + 1), EventKind::Insertion,
                            static_cast<std::size_t>(delta)});
      else if (delta < 0)
        c.events.push_back({static_cast<std::size_t>(p.end + 1), EventKind::Deletion,
                            static_cast<std::size_t>(-delta)});
    }
    chains.push_back(std::move(c));
  };
  auto walk = [&](auto&& self, std::size_t j, std::size_t e) -> void {
    if (chains.size() >= cap) {
      truncated = true;
      return;
    }
    path.push_back(j);
    if (e == 0 && can_start[j]) emit();
    for (auto [i, pe] : preds[j][e]) self(self, i, pe);
    path.pop_back();
  };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t e = 0; e < layers; ++e)
      if (best[j][e] == top) walk(walk, j, e);

  std::sort(chains.begin(), chains.end(),
            [&](const Chain& a, const Chain& b) { return chain_before(a, b, blocks); });
  const Chain& chosen = chains.front();

  for (std::size_t k = 0; k < chosen.blocks.size(); ++k) {
    const Block& b = blocks[chosen.blocks[k]];
    const auto& s = segments[b.segment];
    BrightSegment out = s;
    out.word_start = static_cast<std::size_t>(chosen.starts[k]);
    out.intensity = static_cast<int>(out.length()) * signal_level(scheme);
    report.segments.push_back(out);
  }
  report.events = chosen.events;

  for (const auto& c : chains) {
    if (c.events == chosen.events || c.events.size() != chosen.events.size()) continue;
    if (std::find(report.alternatives.begin(), report.alternatives.end(), c.events) ==
        report.alternatives.end())
      report.alternatives.push_back(c.events);
  }
  report.ambiguous = truncated || !report.alternatives.empty();
  return report;
}

void attach_snr(AlignmentReport& report, std::span<const int> row_sums, int origin_shift) {
  report.snr_db.reset();
  if (row_sums.size() < 2) return;
  std::size_t idx;
  if (!report.exact_match_offsets.empty()) {
    idx = static_cast<std::size_t>(report.exact_match_offsets.front() - origin_shift);
    report.snr_reference = SnrReference::ExactMatch;
  } else {
    idx = static_cast<std::size_t>(std::max_element(row_sums.begin(), row_sums.end()) - row_sums.begin());
    report.snr_reference = SnrReference::BestRow;
  }
  try {
    report.snr_db = snr_db(row_sums, idx);
  } catch (const UndefinedSnr&) {
    report.snr_db = std::numeric_limits<double>::infinity();
  }
}

AlignmentRun align(const DnaSequence& reference, const DnaSequence& query, Scheme scheme,
                   const ChainOptions& options, std::size_t shifts) {
  if (query.size() > reference.size())
    throw WindowTooLarge("query is longer than the reference");
  if (shifts == 0) shifts = reference.size() - query.size() + 1;
  AlignmentRun run;
  run.stack = build_shift_stack(reference, query.size(), scheme, shifts);
  run.query = build_query_pattern(query, scheme, shifts);
  run.overlap = overlap(run.stack, run.query);
  run.row_sums = row_intensity(run.overlap);
  run.all_segments = detect_segments(run.overlap, options.min_run);
  run.report = infer_alignment(run.all_segments, word_count(scheme, query.size()), scheme, options);
  attach_snr(run.report, run.row_sums, run.overlap.origin_shift);
  return run;
}

}  // namespace moire
