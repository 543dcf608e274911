#include "moire/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>

#include "moire/error.hpp"
#include "moire/random.hpp"

namespace moire::oracle {

std::vector<int> brute_force_find(const DnaSequence& reference, const DnaSequence& query) {
  std::vector<int> hits;
  if (query.size() > reference.size()) return hits;
  for (std::size_t k = 0; k + query.size() <= reference.size(); ++k) {
    bool same = true;
    for (std::size_t i = 0; i < query.size() && same; ++i) same = reference[k + i] == query[i];
    if (same) hits.push_back(static_cast<int>(k) + 1);
  }
  return hits;
}

namespace {

struct Block {
  long row;
  long start;  // 1-based query positions
  long end;
};

using Placement = std::vector<Block>;

class Search {
 public:
  Search(const DnaSequence& ref, const DnaSequence& query, const SegmentAlignOptions& opt)
      : ref_(ref), query_(query), opt_(opt),
        m_(static_cast<long>(query.size())),
        rows_(static_cast<long>(ref.size() - query.size() + 1)),
        min_(static_cast<long>(opt.min_segment)) {}

  bool matches(long row, long q) const {
    const long pos = row + q - 1;
    return pos >= 1 && pos <= static_cast<long>(ref_.size()) && ref_[pos - 1] == query_[q - 1];
  }

  // Last query position of the run starting at `start` on `row`, or start-1.
  long run_end(long row, long start) const {
    long e = start - 1;
    while (e + 1 <= m_ && matches(row, e + 1)) ++e;
    return e;
  }

  std::vector<Placement> all() {
    out_.clear();
    Placement cur;
    for (long row = 1; row <= rows_; ++row) extend(cur, row, 1, opt_.max_events);
    return out_;
  }

  // Every placement with the given row sequence starting at query position 1.
  std::vector<Placement> with_rows(const std::vector<long>& rows) {
    out_.clear();
    Placement cur;
    follow(cur, rows, 0, 1);
    return out_;
  }

 private:
  void extend(Placement& cur, long row, long start, std::size_t events_left) {
    const long last = run_end(row, start);
    if (last - start + 1 < min_) return;
    for (long e = start + min_ - 1; e <= last; ++e) {
      cur.push_back({row, start, e});
      if (e == m_) {
        out_.push_back(cur);
      } else if (events_left > 0) {
        for (long len = 1; len <= static_cast<long>(opt_.max_event_length); ++len) {
          if (row - len >= 1 && e + 1 + len <= m_) extend(cur, row - len, e + 1 + len, events_left - 1);
          if (row + len <= rows_) extend(cur, row + len, e + 1, events_left - 1);
        }
      }
      cur.pop_back();
    }
  }

  void follow(Placement& cur, const std::vector<long>& rows, std::size_t i, long start) {
    const long row = rows[i];
    const long last = run_end(row, start);
    if (last - start + 1 < min_) return;
    for (long e = start + min_ - 1; e <= last; ++e) {
      cur.push_back({row, start, e});
      if (i + 1 == rows.size()) {
        if (e == m_) out_.push_back(cur);
      } else if (e < m_) {
        const long delta = row - rows[i + 1];
        const long next = delta > 0 ? e + 1 + delta : e + 1;
        if (next <= m_) follow(cur, rows, i + 1, next);
      }
      cur.pop_back();
    }
  }

  const DnaSequence& ref_;
  const DnaSequence& query_;
  SegmentAlignOptions opt_;
  long m_;
  long rows_;
  long min_;
  std::vector<Placement> out_;
};

long matched(const Placement& p) {
  long t = 0;
  for (const auto& b : p) t += b.end - b.start + 1;
  return t;
}

std::vector<long> rows_of(const Placement& p) {
  std::vector<long> r;
  for (const auto& b : p) r.push_back(b.row);
  return r;
}

std::vector<long> ends_of(const Placement& p) {
  std::vector<long> e;
  for (const auto& b : p) e.push_back(b.end);
  return e;
}

EventList events_of(const Placement& p) {
  EventList ev;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const long delta = p[i - 1].row - p[i].row;
    ev.push_back({static_cast<std::size_t>(p[i - 1].end + 1),
                  delta > 0 ? EventKind::Insertion : EventKind::Deletion,
                  static_cast<std::size_t>(delta > 0 ? delta : -delta)});
  }
  return ev;
}

long event_total(const EventList& ev) {
  long t = 0;
  for (const auto& e : ev) t += static_cast<long>(e.length);
  return t;
}

// Among placements sharing a row sequence, keep the one whose block ends are
// lexicographically largest.
std::vector<Placement> canonical(const std::vector<Placement>& ps) {
  std::map<std::vector<long>, Placement> best;
  for (const auto& p : ps) {
    auto key = rows_of(p);
    auto it = best.find(key);
    if (it == best.end() || ends_of(p) > ends_of(it->second)) best[key] = p;
  }
  std::vector<Placement> out;
  for (auto& [k, p] : best) out.push_back(p);
  return out;
}

AlignmentReport to_report(const Placement& p) {
  AlignmentReport r;
  for (const auto& b : p)
    r.segments.push_back({static_cast<int>(b.row), static_cast<std::size_t>(b.start),
                          static_cast<std::size_t>(b.end), static_cast<int>(b.end - b.start + 1)});
  r.events = events_of(p);
  return r;
}

}  // namespace

AlignmentReport brute_force_segment_align(const DnaSequence& reference, const DnaSequence& query,
                                          const SegmentAlignOptions& options) {
  if (options.max_events > 3) throw std::invalid_argument("the oracle enumerates at most 3 events");
  if (reference.size() > 200 || query.size() > 200)
    throw std::invalid_argument("the oracle is limited to sequences of at most 200 bases");
  if (query.size() > reference.size()) throw NoAlignment("query is longer than the reference");
  if (options.min_segment == 0) throw std::invalid_argument("min_segment must be at least 1");

  Search search(reference, query, options);
  const auto placements = search.all();
  if (placements.empty()) throw NoAlignment("no block partition of the query matches the reference");

  long top = 0;
  for (const auto& p : placements) top = std::max(top, matched(p));
  std::vector<Placement> optimal;
  for (const auto& p : placements)
    if (matched(p) == top) optimal.push_back(p);
  auto canon = canonical(optimal);

  std::sort(canon.begin(), canon.end(), [](const Placement& a, const Placement& b) {
    const auto ea = events_of(a), eb = events_of(b);
    return std::make_tuple(ea.size(), event_total(ea), ea, rows_of(a)) <
           std::make_tuple(eb.size(), event_total(eb), eb, rows_of(b));
  });

  AlignmentReport report = to_report(canon.front());
  for (const auto& p : canon) {
    if (p.size() == 1 && p.front().start == 1 && p.front().end == static_cast<long>(query.size()))
      report.exact_match_offsets.push_back(static_cast<int>(p.front().row));
    const auto ev = events_of(p);
    if (ev != report.events && ev.size() == report.events.size() &&
        std::find(report.alternatives.begin(), report.alternatives.end(), ev) == report.alternatives.end())
      report.alternatives.push_back(ev);
  }
  std::sort(report.exact_match_offsets.begin(), report.exact_match_offsets.end());
  report.ambiguous = !report.alternatives.empty();
  return report;
}

PlantedInstance plant_instance(std::uint64_t rng_seed, std::size_t ref_len, std::size_t query_len,
                               const std::vector<PlannedEvent>& events, std::size_t min_spacing) {
  long inserted = 0, deleted = 0;
  for (const auto& e : events) {
    if (e.length == 0) throw InconsistentSpec("event of length zero");
    (e.kind == EventKind::Insertion ? inserted : deleted) += static_cast<long>(e.length);
  }
  const long m = static_cast<long>(query_len);
  const long n = static_cast<long>(ref_len);
  const long window = m - inserted + deleted;
  if (m < 1 || window < 1 || window > n || m > n)
    throw InconsistentSpec("a " + std::to_string(window) + "-base source window cannot come from a " +
                           std::to_string(ref_len) + "-base reference for a " +
                           std::to_string(query_len) + "-base query");
  const long blocks = static_cast<long>(events.size()) + 1;
  const long block_bases = m - inserted;
  const long spacing = static_cast<long>(std::max<std::size_t>(min_spacing, 1));
  if (block_bases < blocks * spacing)
    throw InconsistentSpec("query too short for " + std::to_string(blocks) + " blocks of " +
                           std::to_string(spacing) + " bases");

  // Row of each block relative to the first.
  std::vector<long> rel{0};
  for (const auto& e : events)
    rel.push_back(rel.back() + (e.kind == EventKind::Insertion ? -1 : 1) * static_cast<long>(e.length));
  const long rows = n - m + 1;
  const long lo = 1 - *std::min_element(rel.begin(), rel.end());
  const long hi = rows - *std::max_element(rel.begin(), rel.end());
  if (lo > hi) throw InconsistentSpec("events push blocks outside the shift range");

  std::mt19937_64 rng(rng_seed);
  const DnaSequence reference = random_sequence(rng, ref_len);

  std::vector<long> lengths(static_cast<std::size_t>(blocks), spacing);
  for (long extra = block_bases - blocks * spacing; extra > 0; --extra)
    ++lengths[random_below(rng, static_cast<std::size_t>(blocks))];
  const long row0 = lo + static_cast<long>(random_below(rng, static_cast<std::size_t>(hi - lo + 1)));

  std::vector<DnaBase> q;
  q.reserve(query_len);
  std::vector<long> planted_rows;
  for (long b = 0; b < blocks; ++b) {
    const long row = row0 + rel[static_cast<std::size_t>(b)];
    planted_rows.push_back(row);
    for (long k = 0; k < lengths[static_cast<std::size_t>(b)]; ++k) {
      const long qpos = static_cast<long>(q.size()) + 1;
      q.push_back(reference[static_cast<std::size_t>(row + qpos - 2)]);
    }
    if (b + 1 < blocks) {
      const auto& e = events[static_cast<std::size_t>(b)];
      if (e.kind == EventKind::Insertion)
        for (std::size_t k = 0; k < e.length; ++k) q.push_back(random_base(rng));
    }
  }
  DnaSequence query(std::move(q));

  // Move each event to its rightmost position consistent with the planted rows.
  SegmentAlignOptions opt;
  opt.min_segment = 1;
  Search search(reference, query, opt);
  const auto candidates = canonical(search.with_rows(planted_rows));
  if (candidates.empty()) throw InconsistentSpec("planted blocks do not reproduce the query");

  PlantedInstance inst{reference, std::move(query), to_report(candidates.front()), rng_seed};
  if (events.empty()) inst.truth.exact_match_offsets = brute_force_find(inst.reference, inst.query);
  return inst;
}

}  // namespace moire::oracle
