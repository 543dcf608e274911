#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "moire/bar_align.hpp"
#include "moire/sequence.hpp"

// Brute-force ground truth working directly on bases. Nothing here goes
// through the slot codes or the overlap images.
namespace moire::oracle {

/// All 1-based offsets k with reference[k .. k+|query|-1] == query.
std::vector<int> brute_force_find(const DnaSequence& reference, const DnaSequence& query);

struct SegmentAlignOptions {
  std::size_t max_events = 3;
  std::size_t min_segment = 3;   // bases per block
  std::size_t max_event_length = 8;
};

/// Exhaustive search over partitions of the query into exactly matching
/// blocks separated by at most `max_events` insertions or deletions. Blocks
/// sit on stack rows 1..|reference|-|query|+1. The placement with the most
/// matched bases wins; tied placements with the same number of different
/// events set the ambiguity flag. Throws NoAlignment when no partition exists.
AlignmentReport brute_force_segment_align(const DnaSequence& reference, const DnaSequence& query,
                                          const SegmentAlignOptions& options = {});

struct PlannedEvent {
  EventKind kind = EventKind::Insertion;
  std::size_t length = 0;
};

struct PlantedInstance {
  DnaSequence reference;
  DnaSequence query;
  AlignmentReport truth;
  std::uint64_t rng_seed = 0;
};

/// IID uniform reference; a query cut from it with `events` applied in order,
/// blocks of at least `min_spacing` bases between events. The truth report
/// places each event as far right as its blocks keep matching.
PlantedInstance plant_instance(std::uint64_t rng_seed, std::size_t ref_len, std::size_t query_len,
                               const std::vector<PlannedEvent>& events, std::size_t min_spacing = 5);

}  // namespace moire::oracle
