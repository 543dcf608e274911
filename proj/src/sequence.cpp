#include "moire/sequence.hpp"

#include <cctype>

#include "moire/error.hpp"

namespace moire {

InvalidBase::InvalidBase(std::size_t position, char character, std::string record)
    : Error(std::string("invalid base '") + character + "' at position " + std::to_string(position) +
            (record.empty() ? std::string() : " in record '" + record + "'")),
      position_(position),
      character_(character),
      record_(std::move(record)) {}

MalformedFasta::MalformedFasta(std::size_t line, const std::string& what)
    : Error("malformed FASTA at line " + std::to_string(line) + ": " + what), line_(line) {}

char to_char(DnaBase base) noexcept {
  switch (base) {
    case DnaBase::A: return 'A';
    case DnaBase::G: return 'G';
    case DnaBase::C: return 'C';
    case DnaBase::T: return 'T';
  }
  return '?';
}

std::size_t index_of(DnaBase base) noexcept { return static_cast<std::size_t>(base); }

DnaSequence::DnaSequence(std::vector<DnaBase> bases) : bases_(std::move(bases)) {
  if (bases_.empty()) throw EmptySequence();
}

DnaBase DnaSequence::at(std::size_t position) const {
  if (position == 0 || position > bases_.size())
    throw std::out_of_range("sequence position " + std::to_string(position) + " out of range");
  return bases_[position - 1];
}

DnaSequence DnaSequence::slice(std::size_t first, std::size_t last) const {
  if (first == 0 || first > last || last > bases_.size())
    throw std::out_of_range("slice [" + std::to_string(first) + ", " + std::to_string(last) +
                            "] out of range");
  return DnaSequence({bases_.begin() + static_cast<std::ptrdiff_t>(first - 1),
                      bases_.begin() + static_cast<std::ptrdiff_t>(last)});
}

std::string DnaSequence::str() const {
  std::string out;
  out.reserve(bases_.size());
  for (auto b : bases_) out.push_back(to_char(b));
  return out;
}

DnaSequence parse_sequence(std::string_view text) {
  std::vector<DnaBase> bases;
  bases.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'A': bases.push_back(DnaBase::A); break;
      case 'G': bases.push_back(DnaBase::G); break;
      case 'C': bases.push_back(DnaBase::C); break;
      case 'T': bases.push_back(DnaBase::T); break;
      default: throw InvalidBase(i + 1, c);
    }
  }
  if (bases.empty()) throw EmptySequence();
  return DnaSequence(std::move(bases));
}

}  // namespace moire
