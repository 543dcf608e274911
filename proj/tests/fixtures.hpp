#pragma once

#include "moire/sequence.hpp"

namespace moire::test {

inline const DnaSequence& s1() {
  static const DnaSequence s = parse_sequence("TCCGTACGTATCCGTACAGGTCGAATGCGTACATCGACCT");
  return s;
}
inline const DnaSequence& s2() {
  static const DnaSequence s = parse_sequence("ACGTATCCGTACAGGTCGAA");
  return s;
}
// S2 with "AG" inserted after base 6 and bases 14-15 ("GG") removed.
inline const DnaSequence& s3() {
  static const DnaSequence s = parse_sequence("ACGTATAGCCGTACATCGAA");
  return s;
}

}  // namespace moire::test
