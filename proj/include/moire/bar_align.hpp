#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "moire/codec.hpp"
#include "moire/grid.hpp"
#include "moire/sequence.hpp"

namespace moire {

// Rows are addressed by shift number: row index 0 of an image is shift
// `origin_shift`. Word positions in segments and events are 1-based.

struct PatternImage {
  Grid<SlotState> slots;
  Scheme scheme = Scheme::TypeI;
  int origin_shift = 1;

  std::size_t rows() const noexcept { return slots.rows(); }
  std::size_t words_per_row() const noexcept { return slots.cols() / word_length(scheme); }
};

struct OverlapImage {
  Grid<std::uint8_t> intensity;
  Scheme scheme = Scheme::TypeI;
  int origin_shift = 1;

  std::size_t rows() const noexcept { return intensity.rows(); }
  std::size_t words_per_row() const noexcept { return intensity.cols() / word_length(scheme); }
  // Column to 0-based word index.
  std::size_t word_of(std::size_t col) const noexcept { return col / word_length(scheme); }
};

struct BrightSegment {
  int row = 0;
  std::size_t word_start = 0;
  std::size_t word_end = 0;
  int intensity = 0;

  std::size_t length() const noexcept { return word_end - word_start + 1; }
  friend bool operator==(const BrightSegment&, const BrightSegment&) = default;
};

enum class EventKind : std::uint8_t { Insertion, Deletion };
std::string_view to_string(EventKind k) noexcept;

struct IndelEvent {
  // 1-based query base position: the first inserted base, or the first query
  // base following the deleted reference bases.
  std::size_t query_position = 0;
  EventKind kind = EventKind::Insertion;
  std::size_t length = 0;

  friend auto operator<=>(const IndelEvent&, const IndelEvent&) = default;
};

using EventList = std::vector<IndelEvent>;

enum class SnrReference : std::uint8_t { ExactMatch, BestRow };

struct AlignmentReport {
  Scheme scheme = Scheme::TypeI;
  std::vector<int> exact_match_offsets;
  std::vector<BrightSegment> segments;  // the chosen chain, in query order
  EventList events;
  std::optional<double> snr_db;  // +inf when the other rows carry no light
  SnrReference snr_reference = SnrReference::BestRow;
  bool ambiguous = false;
  std::vector<EventList> alternatives;  // same-size event lists tying the chosen chain

  bool empty() const noexcept { return segments.empty(); }
};

struct ChainOptions {
  std::size_t min_run = 3;
  // Largest row jump accepted between chained segments.
  std::size_t max_event_length = 8;
  // Most indel events a chain may contain.
  std::size_t max_events = 3;
  // Tied chains enumerated before giving up; hitting the cap marks the report
  // ambiguous.
  std::size_t max_alternatives = 64;
};

PatternImage build_shift_stack(const DnaSequence& reference, std::size_t window_bases, Scheme scheme,
                               std::size_t shifts);
PatternImage build_query_pattern(const DnaSequence& query, Scheme scheme, std::size_t rows);

OverlapImage overlap(const PatternImage& stack, const PatternImage& query);

std::vector<int> row_intensity(const OverlapImage& img);

/// 10*log10 of the intensity of row `match_row` (a shift number) over the mean
/// of every other row. Throws UndefinedSnr for fewer than two rows or when the
/// other rows are all dark.
double snr_db(std::span<const int> row_sums, std::size_t match_index);
double snr_db(const OverlapImage& img, int match_row);

/// Maximal runs of fully matched words of at least `min_run` words, sorted by
/// (word_start, row). Rows are processed independently.
std::vector<BrightSegment> detect_segments(const OverlapImage& img, std::size_t min_run);

/// Chains segments in query order and reads off indel events from the row
/// jumps between consecutive segments. `query_words` is the word count of the
/// query pattern.
AlignmentReport infer_alignment(std::span<const BrightSegment> segments, std::size_t query_words,
                                Scheme scheme, const ChainOptions& options = {});

// Fills snr_db / snr_reference of `report` from the per-row sums.
void attach_snr(AlignmentReport& report, std::span<const int> row_sums, int origin_shift);

struct AlignmentRun {
  PatternImage stack;
  PatternImage query;
  OverlapImage overlap;
  std::vector<int> row_sums;
  std::vector<BrightSegment> all_segments;
  AlignmentReport report;
};

/// Full 2D pipeline: the stack holds every window of `reference` of the query's
/// length (or the first `shifts` of them when non-zero).
AlignmentRun align(const DnaSequence& reference, const DnaSequence& query, Scheme scheme,
                   const ChainOptions& options = {}, std::size_t shifts = 0);

}  // namespace moire
