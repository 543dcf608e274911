#include "moire/codec.hpp"

#include <cctype>
#include <string>

#include "moire/error.hpp"

namespace moire {

namespace {

// Columns A, G, C, T.
constexpr std::array<std::string_view, 4> kTypeI{"1000", "0100", "0010", "0001"};
constexpr std::array<std::string_view, 4> kTypeII{"H00H", "V0V0", "0V0V", "0HH0"};

// Rows in table order; the label of row k is (k % 4, k / 4) in A,G,C,T order.
constexpr std::array<std::string_view, 16> kTypeIII{
    "H0000000", "0H000000", "00H00000", "000H0000", "0000H000", "00000H00", "000000H0", "0000000H",
    "V0000000", "0V000000", "00V00000", "000V0000", "0000V000", "00000V00", "000000V0", "0000000V"};
constexpr std::array<std::string_view, 16> kTypeIV{
    "1000000000000000", "0100000000000000", "0010000000000000", "0001000000000000",
    "0000100000000000", "0000010000000000", "0000001000000000", "0000000100000000",
    "0000000010000000", "0000000001000000", "0000000000100000", "0000000000010000",
    "0000000000001000", "0000000000000100", "0000000000000010", "0000000000000001"};

}  // namespace

char to_char(SlotState s) noexcept {
  switch (s) {
    case SlotState::Dark: return '0';
    case SlotState::Bright: return '1';
    case SlotState::H: return 'H';
    case SlotState::V: return 'V';
  }
  return '?';
}

std::size_t word_length(Scheme s) noexcept {
  switch (s) {
    case Scheme::TypeI:
    case Scheme::TypeII: return 4;
    case Scheme::TypeIII: return 8;
    case Scheme::TypeIV: return 16;
  }
  return 0;
}

bool pair_coded(Scheme s) noexcept { return s == Scheme::TypeIII || s == Scheme::TypeIV; }

int signal_level(Scheme s) noexcept { return s == Scheme::TypeII ? 2 : 1; }

Modulation modulation(Scheme s) noexcept {
  return (s == Scheme::TypeII || s == Scheme::TypeIII) ? Modulation::IntensityAndPolarization
                                                       : Modulation::IntensityOrPolarization;
}

std::string_view scheme_name(Scheme s) noexcept {
  switch (s) {
    case Scheme::TypeI: return "I";
    case Scheme::TypeII: return "II";
    case Scheme::TypeIII: return "III";
    case Scheme::TypeIV: return "IV";
  }
  return "?";
}

Scheme scheme_from_string(std::string_view text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t.rfind("TYPE", 0) == 0) t = t.substr(4);
  if (t == "1" || t == "I") return Scheme::TypeI;
  if (t == "2" || t == "II") return Scheme::TypeII;
  if (t == "3" || t == "III") return Scheme::TypeIII;
  if (t == "4" || t == "IV") return Scheme::TypeIV;
  throw WrongScheme("unknown coding scheme '" + std::string(text) + "'");
}

std::size_t word_count(Scheme s, std::size_t bases) noexcept {
  if (!pair_coded(s)) return bases;
  return bases == 0 ? 0 : bases - 1;
}

SlotRow parse_code(std::string_view code) {
  SlotRow row;
  row.reserve(code.size());
  for (char c : code) {
    switch (c) {
      case '0': row.push_back(SlotState::Dark); break;
      case '1': row.push_back(SlotState::Bright); break;
      case 'H': row.push_back(SlotState::H); break;
      case 'V': row.push_back(SlotState::V); break;
      default: throw std::invalid_argument(std::string("bad code character '") + c + "'");
    }
  }
  return row;
}

SlotRow encode_symbol(DnaBase base, Scheme scheme) {
  switch (scheme) {
    case Scheme::TypeI: return parse_code(kTypeI[index_of(base)]);
    case Scheme::TypeII: return parse_code(kTypeII[index_of(base)]);
    default: throw WrongScheme("symbol coding needs Type I or II");
  }
}

SlotRow encode_pair(DnaBase first, DnaBase second, Scheme scheme) {
  const std::size_t row = index_of(first) + 4 * index_of(second);
  switch (scheme) {
    case Scheme::TypeIII: return parse_code(kTypeIII[row]);
    case Scheme::TypeIV: return parse_code(kTypeIV[row]);
    default: throw WrongScheme("pair coding needs Type III or IV");
  }
}

SlotRow encode_word(const DnaSequence& seq, std::size_t i, Scheme scheme) {
  if (pair_coded(scheme)) return encode_pair(seq[i], seq[i + 1], scheme);
  return encode_symbol(seq[i], scheme);
}

SlotRow encode_sequence(const DnaSequence& seq, Scheme scheme) {
  if (pair_coded(scheme) && seq.size() < 2)
    throw TooShort("pair coding needs at least two bases");
  const std::size_t words = word_count(scheme, seq.size());
  SlotRow out;
  out.reserve(words * word_length(scheme));
  for (std::size_t i = 0; i < words; ++i) {
    const SlotRow w = encode_word(seq, i, scheme);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

int row_correlation(const SlotRow& a, const SlotRow& b) {
  if (a.size() != b.size()) throw DimensionMismatch("slot rows differ in length");
  int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += slot_product(a[i], b[i]);
  return sum;
}

int symbol_correlation(DnaBase x, DnaBase y, Scheme scheme) {
  return row_correlation(encode_symbol(x, scheme), encode_symbol(y, scheme));
}

int pair_correlation(DnaBase x1, DnaBase x2, DnaBase y1, DnaBase y2, Scheme scheme) {
  return row_correlation(encode_pair(x1, x2, scheme), encode_pair(y1, y2, scheme));
}

std::size_t processing_gain(std::size_t pixels, Scheme scheme) {
  const std::size_t w = word_length(scheme);
  if (pixels == 0 || pixels % w != 0)
    throw NotAligned(std::to_string(pixels) + " pixels is not a multiple of the word length " +
                     std::to_string(w));
  return pixels / w;
}

}  // namespace moire
