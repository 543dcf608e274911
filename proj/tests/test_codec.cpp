#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "moire/codec.hpp"
#include "moire/error.hpp"
#include "moire/random.hpp"

using namespace moire;

namespace {

SlotRow code(const char* s) { return parse_code(s); }

constexpr DnaBase kBases[] = {DnaBase::A, DnaBase::G, DnaBase::C, DnaBase::T};

DnaBase base(char c) { return parse_sequence(std::string(1, c))[0]; }

}  // namespace

TEST_CASE("parse_sequence") {
  CHECK(parse_sequence("ACGT").str() == "ACGT");
  CHECK(parse_sequence("acgt\n").str() == "ACGT");
  CHECK(parse_sequence(" a C\tg t ").size() == 4);
  try {
    parse_sequence("ACXT");
    FAIL("expected InvalidBase");
  } catch (const InvalidBase& e) {
    CHECK(e.position() == 3);
    CHECK(e.character() == 'X');
  }
  CHECK_THROWS_AS(parse_sequence("  \n"), EmptySequence);
  CHECK_THROWS_AS(parse_sequence("ACGN"), InvalidBase);
}

TEST_CASE("sequence indexing is 1-based") {
  const auto& s = test::s1();
  CHECK(s.size() == 40);
  CHECK(s.at(1) == DnaBase::T);
  CHECK(s.slice(6, 25) == test::s2());
  CHECK_THROWS(s.at(0));
  CHECK_THROWS(s.slice(10, 41));
}

TEST_CASE("Type I and II code words match the published table") {
  const char* type1[] = {"1000", "0100", "0010", "0001"};
  const char* type2[] = {"H00H", "V0V0", "0V0V", "0HH0"};
  const char order[] = {'A', 'G', 'C', 'T'};
  for (int i = 0; i < 4; ++i) {
    CHECK(encode_symbol(base(order[i]), Scheme::TypeI) == code(type1[i]));
    CHECK(encode_symbol(base(order[i]), Scheme::TypeII) == code(type2[i]));
  }
  CHECK(encode_symbol(DnaBase::A, Scheme::TypeI) ==
        SlotRow{SlotState::Bright, SlotState::Dark, SlotState::Dark, SlotState::Dark});
  CHECK(encode_symbol(DnaBase::A, Scheme::TypeII) ==
        SlotRow{SlotState::H, SlotState::Dark, SlotState::Dark, SlotState::H});
  CHECK(encode_symbol(DnaBase::T, Scheme::TypeII) ==
        SlotRow{SlotState::Dark, SlotState::H, SlotState::H, SlotState::Dark});
  CHECK_THROWS_AS(encode_symbol(DnaBase::A, Scheme::TypeIII), WrongScheme);
}

TEST_CASE("Type III and IV code words match the published table") {
  struct Row {
    const char* label;
    const char* t3;
    const char* t4;
  };
  const Row table[] = {
      {"AA", "H0000000", "1000000000000000"}, {"GA", "0H000000", "0100000000000000"},
      {"CA", "00H00000", "0010000000000000"}, {"TA", "000H0000", "0001000000000000"},
      {"AG", "0000H000", "0000100000000000"}, {"GG", "00000H00", "0000010000000000"},
      {"CG", "000000H0", "0000001000000000"}, {"TG", "0000000H", "0000000100000000"},
      {"AC", "V0000000", "0000000010000000"}, {"GC", "0V000000", "0000000001000000"},
      {"CC", "00V00000", "0000000000100000"}, {"TC", "000V0000", "0000000000010000"},
      {"AT", "0000V000", "0000000000001000"}, {"GT", "00000V00", "0000000000000100"},
      {"CT", "000000V0", "0000000000000010"}, {"TT", "0000000V", "0000000000000001"},
  };
  for (const auto& r : table) {
    CAPTURE(r.label);
    const DnaBase first = base(r.label[0]), second = base(r.label[1]);
    CHECK(encode_pair(first, second, Scheme::TypeIII) == code(r.t3));
    CHECK(encode_pair(first, second, Scheme::TypeIV) == code(r.t4));
  }
  CHECK_THROWS_AS(encode_pair(DnaBase::A, DnaBase::A, Scheme::TypeI), WrongScheme);
}

TEST_CASE("scheme properties") {
  CHECK(word_length(Scheme::TypeI) == 4);
  CHECK(word_length(Scheme::TypeII) == 4);
  CHECK(word_length(Scheme::TypeIII) == 8);
  CHECK(word_length(Scheme::TypeIV) == 16);
  CHECK(modulation(Scheme::TypeI) == Modulation::IntensityOrPolarization);
  CHECK(modulation(Scheme::TypeII) == Modulation::IntensityAndPolarization);
  CHECK(modulation(Scheme::TypeIII) == Modulation::IntensityAndPolarization);
  CHECK(modulation(Scheme::TypeIV) == Modulation::IntensityOrPolarization);
  CHECK(scheme_from_string("3") == Scheme::TypeIII);
  CHECK(scheme_from_string("iv") == Scheme::TypeIV);
  CHECK(scheme_from_string("type2") == Scheme::TypeII);
  CHECK_THROWS_AS(scheme_from_string("5"), WrongScheme);
}

TEST_CASE("Bright only in intensity schemes, H/V only in polarization schemes") {
  for (Scheme s : kAllSchemes) {
    std::set<SlotState> seen;
    for (auto x : kBases)
      for (auto y : kBases) {
        const auto w = pair_coded(s) ? encode_pair(x, y, s) : encode_symbol(x, s);
        seen.insert(w.begin(), w.end());
        std::size_t lit = 0;
        for (auto st : w) lit += st != SlotState::Dark;
        CHECK(lit == (s == Scheme::TypeII ? 2u : 1u));
      }
    const bool polar = s == Scheme::TypeII || s == Scheme::TypeIII;
    CHECK(seen.count(SlotState::Bright) == (polar ? 0u : 1u));
    CHECK(seen.count(SlotState::H) == (polar ? 1u : 0u));
  }
}

TEST_CASE("encode_sequence") {
  const auto ac = encode_sequence(parse_sequence("AC"), Scheme::TypeI);
  CHECK(ac == code("10000010"));

  const auto acg = encode_sequence(parse_sequence("ACG"), Scheme::TypeIII);
  SlotRow expect = encode_pair(DnaBase::A, DnaBase::C, Scheme::TypeIII);
  const auto cg = encode_pair(DnaBase::C, DnaBase::G, Scheme::TypeIII);
  expect.insert(expect.end(), cg.begin(), cg.end());
  CHECK(acg == expect);

  CHECK_THROWS_AS(encode_sequence(parse_sequence("A"), Scheme::TypeIII), TooShort);
  CHECK_THROWS_AS(encode_sequence(parse_sequence("A"), Scheme::TypeIV), TooShort);
  CHECK(encode_sequence(parse_sequence("A"), Scheme::TypeII).size() == 4);
}

TEST_CASE("slot_product") {
  CHECK(slot_product(SlotState::Bright, SlotState::Bright) == 1);
  CHECK(slot_product(SlotState::H, SlotState::V) == 0);
  CHECK(slot_product(SlotState::Dark, SlotState::H) == 0);
  CHECK(slot_product(SlotState::Dark, SlotState::Dark) == 0);
  constexpr SlotState all[] = {SlotState::Dark, SlotState::Bright, SlotState::H, SlotState::V};
  for (auto a : all)
    for (auto b : all) {
      CHECK(slot_product(a, b) == slot_product(b, a));
      CHECK(slot_product(a, b) >= 0);
    }
  for (auto a : all) CHECK(slot_product(a, a) == (a == SlotState::Dark ? 0 : 1));
}

TEST_CASE("word correlation examples") {
  CHECK(symbol_correlation(DnaBase::A, DnaBase::A, Scheme::TypeII) == 2);
  CHECK(symbol_correlation(DnaBase::A, DnaBase::G, Scheme::TypeII) == 0);
  CHECK(pair_correlation(DnaBase::G, DnaBase::A, DnaBase::G, DnaBase::A, Scheme::TypeIII) == 1);
}

TEST_CASE("all four code sets are orthogonal") {
  for (Scheme s : kAllSchemes) {
    CAPTURE(scheme_name(s));
    if (!pair_coded(s)) {
      for (auto x : kBases)
        for (auto y : kBases) CHECK(symbol_correlation(x, y, s) == (x == y ? signal_level(s) : 0));
    } else {
      for (auto x1 : kBases)
        for (auto x2 : kBases)
          for (auto y1 : kBases)
            for (auto y2 : kBases) {
              const bool same = x1 == y1 && x2 == y2;
              CHECK(pair_correlation(x1, x2, y1, y2, s) == (same ? signal_level(s) : 0));
            }
    }
  }
  CHECK(signal_level(Scheme::TypeI) == 1);
  CHECK(signal_level(Scheme::TypeII) == 2);
  CHECK(signal_level(Scheme::TypeIII) == 1);
  CHECK(signal_level(Scheme::TypeIV) == 1);
}

TEST_CASE("consecutive pair words share a base") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto seq = random_sequence(rng, 2 + random_below(rng, 40));
    for (Scheme s : {Scheme::TypeIII, Scheme::TypeIV}) {
      const auto row = encode_sequence(seq, s);
      const std::size_t wl = word_length(s);
      REQUIRE(row.size() == wl * (seq.size() - 1));
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const SlotRow word(row.begin() + static_cast<long>(i * wl), row.begin() + static_cast<long>((i + 1) * wl));
        CHECK(word == encode_pair(seq[i], seq[i + 1], s));
        if (i + 2 < seq.size()) {
          // word i ends in base i+1 and word i+1 starts with it
          const SlotRow next(row.begin() + static_cast<long>((i + 1) * wl),
                             row.begin() + static_cast<long>((i + 2) * wl));
          CHECK(next == encode_pair(seq[i + 1], seq[i + 2], s));
        }
      }
    }
  }
}

namespace {

// Pair words of `longer` (which has k extra bases starting at 0-based p)
// that differ from the word of `shorter` at the corresponding position.
std::size_t changed_words(const DnaSequence& longer, const DnaSequence& shorter, std::size_t p, std::size_t k) {
  std::size_t changed = 0;
  for (std::size_t j = 0; j + 1 < longer.size(); ++j) {
    long corr = j < p ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(k);
    const bool same = corr >= 0 && static_cast<std::size_t>(corr) + 1 < shorter.size() &&
                      longer[j] == shorter[static_cast<std::size_t>(corr)] &&
                      longer[j + 1] == shorter[static_cast<std::size_t>(corr) + 1];
    changed += !same;
  }
  return changed;
}

DnaSequence insert_at(const DnaSequence& s, std::size_t p, const std::vector<DnaBase>& ins) {
  std::vector<DnaBase> out(s.bases().begin(), s.bases().begin() + static_cast<long>(p));
  out.insert(out.end(), ins.begin(), ins.end());
  out.insert(out.end(), s.bases().begin() + static_cast<long>(p), s.bases().end());
  return DnaSequence(std::move(out));
}

}  // namespace

TEST_CASE("a k-base indel changes at most k+1 pair words") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = random_sequence(rng, 10 + random_below(rng, 30));
    const std::size_t k = 1 + random_below(rng, 4);
    const std::size_t p = 1 + random_below(rng, s.size() - 1);
    std::vector<DnaBase> ins(k);
    for (auto& b : ins) b = random_base(rng);
    const auto longer = insert_at(s, p, ins);
    // insertion into s, or equivalently deletion from `longer`
    CHECK(changed_words(longer, s, p, k) <= k + 1);
  }
}

TEST_CASE("the S2 to S3 edits each change exactly n+1 words") {
  const auto& s2 = test::s2();
  const auto with_ag = insert_at(s2, 6, {DnaBase::A, DnaBase::G});
  CHECK(with_ag.str() == "ACGTATAGCCGTACAGGTCGAA");
  CHECK(changed_words(with_ag, s2, 6, 2) == 3);
  // Removing GG (bases 14-15 of S2) from S2+AG gives S3.
  CHECK(changed_words(with_ag, test::s3(), 15, 2) == 3);
}

TEST_CASE("processing gain") {
  CHECK(processing_gain(48, Scheme::TypeI) == 12);
  CHECK(processing_gain(48, Scheme::TypeII) == 12);
  CHECK(processing_gain(48, Scheme::TypeIII) == 6);
  CHECK(processing_gain(48, Scheme::TypeIV) == 3);
  CHECK(processing_gain(1280, Scheme::TypeIV) == 80);
  CHECK_THROWS_AS(processing_gain(50, Scheme::TypeI), NotAligned);
  CHECK_THROWS_AS(processing_gain(40, Scheme::TypeIV), NotAligned);
}
