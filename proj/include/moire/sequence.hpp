#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace moire {

// Enumerator order follows the code tables: A, G, C, T.
enum class DnaBase : std::uint8_t { A = 0, G = 1, C = 2, T = 3 };

char to_char(DnaBase base) noexcept;
std::size_t index_of(DnaBase base) noexcept;

// Validated, non-empty string over {A, C, G, T}. Positions handed to and from
// callers are 1-based; the underlying storage is 0-based.
class DnaSequence {
 public:
  explicit DnaSequence(std::vector<DnaBase> bases);

  std::size_t size() const noexcept { return bases_.size(); }

  // 1-based access.
  DnaBase at(std::size_t position) const;
  DnaBase operator[](std::size_t index0) const noexcept { return bases_[index0]; }

  // Inclusive 1-based range [first, last].
  DnaSequence slice(std::size_t first, std::size_t last) const;

  const std::vector<DnaBase>& bases() const noexcept { return bases_; }
  std::string str() const;

  friend bool operator==(const DnaSequence&, const DnaSequence&) = default;

 private:
  std::vector<DnaBase> bases_;
};

/// Parses a base string. Case-insensitive; whitespace is skipped. Throws
/// InvalidBase with the 1-based position in `text` of the first offending
/// character, or EmptySequence when nothing remains.
DnaSequence parse_sequence(std::string_view text);

}  // namespace moire
