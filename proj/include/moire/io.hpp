#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "moire/bar_align.hpp"
#include "moire/grid.hpp"
#include "moire/projection.hpp"

namespace moire::io {

struct FastaRecord {
  std::string id;
  DnaSequence sequence;
};

/// Reads every record of a FASTA file. Throws IoError, MalformedFasta, or
/// InvalidBase carrying the record id and the 1-based position in the record.
std::vector<FastaRecord> read_fasta(const std::filesystem::path& path);
std::vector<FastaRecord> parse_fasta(const std::string& text);

enum class ImageFormat : std::uint8_t { Pgm, Png };
ImageFormat image_format_from_string(const std::string& s);
const char* extension(ImageFormat f) noexcept;

// Gray levels: Dark 0, Bright 255, H 255, V 128.
std::uint8_t gray_level(SlotState s) noexcept;
Grid<std::uint8_t> to_gray(const Grid<SlotState>& slots);
// Intensity v becomes round(v * 255 / full_scale), clamped to 255.
Grid<std::uint8_t> to_gray(const Grid<std::uint8_t>& intensity, int full_scale);

// Inverse of gray_level; 255 reads back as Bright for Types I/IV and as H for II/III.
Grid<SlotState> from_gray(const Grid<std::uint8_t>& gray, Scheme scheme);

void write_pgm(const Grid<std::uint8_t>& gray, const std::filesystem::path& path);
void write_png(const Grid<std::uint8_t>& gray, const std::filesystem::path& path);
void write_gray(const Grid<std::uint8_t>& gray, ImageFormat format, const std::filesystem::path& path);
Grid<std::uint8_t> read_pgm(const std::filesystem::path& path);

void write_image(const PatternImage& pattern, ImageFormat format, const std::filesystem::path& path);
void write_image(const OverlapImage& overlap, ImageFormat format, const std::filesystem::path& path);

/// JSON text of a report: fixed key order, floats with four decimals, snr_db
/// omitted when absent and written as "+inf" when unbounded.
std::string report_json(const AlignmentReport& report);
void write_report(const AlignmentReport& report, const std::filesystem::path& path);

// "row,intensity" header then one line per row.
std::string profile_csv(const ProjectionProfile& profile);

void write_text(const std::string& text, const std::filesystem::path& path);

}  // namespace moire::io
