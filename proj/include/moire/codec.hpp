#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "moire/sequence.hpp"

namespace moire {

enum class SlotState : std::uint8_t { Dark = 0, Bright, H, V };

char to_char(SlotState s) noexcept;

using SlotRow = std::vector<SlotState>;

/// The four published code sets. Types I and II code one base per word,
/// Types III and IV code overlapped base pairs.
enum class Scheme : std::uint8_t { TypeI = 1, TypeII = 2, TypeIII = 3, TypeIV = 4 };

inline constexpr std::array<Scheme, 4> kAllSchemes{Scheme::TypeI, Scheme::TypeII, Scheme::TypeIII,
                                                   Scheme::TypeIV};

enum class Modulation : std::uint8_t { IntensityOrPolarization, IntensityAndPolarization };

std::size_t word_length(Scheme s) noexcept;
bool pair_coded(Scheme s) noexcept;
// Intensity of one fully matched word.
int signal_level(Scheme s) noexcept;
Modulation modulation(Scheme s) noexcept;
std::string_view scheme_name(Scheme s) noexcept;
// Accepts 1..4, "I".."IV" or "type1".."type4".
Scheme scheme_from_string(std::string_view text);

// Number of code words for a sequence of `bases` bases (n, or n-1 for pairs).
std::size_t word_count(Scheme s, std::size_t bases) noexcept;

/// Parses a literal code string such as "H00H" or "0000000000000001".
/// '1' maps to Bright, '0' to Dark, 'H'/'V' to the polarization states.
SlotRow parse_code(std::string_view code);

SlotRow encode_symbol(DnaBase base, Scheme scheme);
SlotRow encode_pair(DnaBase first, DnaBase second, Scheme scheme);

// Code word of the unit starting at 0-based base index `i` of `seq`.
SlotRow encode_word(const DnaSequence& seq, std::size_t i, Scheme scheme);

SlotRow encode_sequence(const DnaSequence& seq, Scheme scheme);

// 1 when both slots carry the same light state, 0 otherwise.
constexpr int slot_product(SlotState a, SlotState b) noexcept {
  return (a == b && a != SlotState::Dark) ? 1 : 0;
}

int row_correlation(const SlotRow& a, const SlotRow& b);

int symbol_correlation(DnaBase x, DnaBase y, Scheme scheme);
int pair_correlation(DnaBase x1, DnaBase x2, DnaBase y1, DnaBase y2, Scheme scheme);

/// Bases comparable in one run for a row of `pixels` slots.
std::size_t processing_gain(std::size_t pixels, Scheme scheme);

}  // namespace moire
