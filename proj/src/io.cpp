#include "moire/io.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <fmt/format.h>

#include "moire/error.hpp"

namespace moire::io {

namespace fs = std::filesystem;

std::vector<FastaRecord> parse_fasta(const std::string& text) {
  std::vector<FastaRecord> records;
  std::string id;
  std::string body;
  bool open = false;
  std::size_t header_line = 0;

  auto finish = [&] {
    if (!open) return;
    if (body.empty()) throw MalformedFasta(header_line, "record '" + id + "' has no sequence");
    try {
      records.push_back({id, parse_sequence(body)});
    } catch (const InvalidBase& e) {
      throw InvalidBase(e.position(), e.character(), id);
    }
  };

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '>') {
      finish();
      std::string header = line.substr(1);
      const auto cut = header.find_first_of(" \t");
      id = header.substr(0, cut);
      if (id.empty()) throw MalformedFasta(line_no, "empty record identifier");
      body.clear();
      open = true;
      header_line = line_no;
      continue;
    }
    bool blank = true;
    for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (blank) continue;
    if (!open) throw MalformedFasta(line_no, "sequence data before the first '>' header");
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
  }
  finish();
  if (records.empty()) throw MalformedFasta(line_no, "no records");
  return records;
}

std::vector<FastaRecord> read_fasta(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path.string() + "'");
  return parse_fasta(ss.str());
}

ImageFormat image_format_from_string(const std::string& s) {
  if (s == "pgm" || s == "PGM") return ImageFormat::Pgm;
  if (s == "png" || s == "PNG") return ImageFormat::Png;
  throw std::invalid_argument("unknown image format '" + s + "'");
}

const char* extension(ImageFormat f) noexcept { return f == ImageFormat::Pgm ? ".pgm" : ".png"; }

std::uint8_t gray_level(SlotState s) noexcept {
  switch (s) {
    case SlotState::Dark: return 0;
    case SlotState::Bright: return 255;
    case SlotState::H: return 255;
    case SlotState::V: return 128;
  }
  return 0;
}

Grid<std::uint8_t> to_gray(const Grid<SlotState>& slots) {
  Grid<std::uint8_t> g(slots.rows(), slots.cols());
  for (std::size_t i = 0; i < slots.data().size(); ++i) g.data()[i] = gray_level(slots.data()[i]);
  return g;
}

Grid<std::uint8_t> to_gray(const Grid<std::uint8_t>& intensity, int full_scale) {
  if (full_scale <= 0) throw std::invalid_argument("full scale must be positive");
  Grid<std::uint8_t> g(intensity.rows(), intensity.cols());
  for (std::size_t i = 0; i < intensity.data().size(); ++i) {
    const int v = (intensity.data()[i] * 255 + full_scale / 2) / full_scale;
    g.data()[i] = static_cast<std::uint8_t>(v > 255 ? 255 : v);
  }
  return g;
}

Grid<SlotState> from_gray(const Grid<std::uint8_t>& gray, Scheme scheme) {
  const SlotState full = modulation(scheme) == Modulation::IntensityAndPolarization ? SlotState::H
                                                                                    : SlotState::Bright;
  Grid<SlotState> s(gray.rows(), gray.cols());
  for (std::size_t i = 0; i < gray.data().size(); ++i) {
    switch (gray.data()[i]) {
      case 0: s.data()[i] = SlotState::Dark; break;
      case 128: s.data()[i] = SlotState::V; break;
      case 255: s.data()[i] = full; break;
      default: throw std::invalid_argument(fmt::format("gray level {} is not a slot state", gray.data()[i]));
    }
  }
  return s;
}

void write_pgm(const Grid<std::uint8_t>& gray, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create '" + path.string() + "'");
  out << "P5\n" << gray.cols() << ' ' << gray.rows() << "\n255\n";
  out.write(reinterpret_cast<const char*>(gray.data().data()),
            static_cast<std::streamsize>(gray.data().size()));
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

Grid<std::uint8_t> read_pgm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::string magic;
  std::size_t w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  if (magic != "P5" || maxval != 255 || !in) throw IoError("'" + path.string() + "' is not an 8-bit P5 PGM");
  in.get();
  Grid<std::uint8_t> g(h, w);
  in.read(reinterpret_cast<char*>(g.data().data()), static_cast<std::streamsize>(g.data().size()));
  if (static_cast<std::size_t>(in.gcount()) != g.data().size())
    throw IoError("'" + path.string() + "' is truncated");
  return g;
}

void write_png(const Grid<std::uint8_t>& gray, const fs::path& path) {
  std::unique_ptr<std::FILE, int (*)(std::FILE*)> fp(std::fopen(path.string().c_str(), "wb"), &std::fclose);
  if (!fp) throw IoError("cannot create '" + path.string() + "'");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("error writing '" + path.string() + "'");
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(gray.cols()), static_cast<png_uint_32>(gray.rows()), 8,
               PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t r = 0; r < gray.rows(); ++r)
    png_write_row(png, const_cast<png_bytep>(gray.row(r).data()));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

void write_gray(const Grid<std::uint8_t>& gray, ImageFormat format, const fs::path& path) {
  if (format == ImageFormat::Pgm)
    write_pgm(gray, path);
  else
    write_png(gray, path);
}

void write_image(const PatternImage& pattern, ImageFormat format, const fs::path& path) {
  write_gray(to_gray(pattern.slots), format, path);
}

void write_image(const OverlapImage& overlap, ImageFormat format, const fs::path& path) {
  write_gray(to_gray(overlap.intensity, signal_level(overlap.scheme)), format, path);
}

namespace {

std::string number4(double v) {
  if (std::isinf(v)) return v > 0 ? "\"+inf\"" : "\"-inf\"";
  return fmt::format("{:.4f}", v);
}

std::string events_json(const EventList& events, const std::string& indent) {
  if (events.empty()) return "[]";
  std::string s = "[\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    s += fmt::format("{}  {{\"query_position\": {}, \"kind\": \"{}\", \"length\": {}}}{}\n", indent,
                     e.query_position, to_string(e.kind), e.length, i + 1 < events.size() ? "," : "");
  }
  return s + indent + "]";
}

}  // namespace

std::string report_json(const AlignmentReport& r) {
  std::string s = "{\n";
  s += "  \"index_base\": 1,\n";
  s += fmt::format("  \"scheme\": {},\n", static_cast<int>(r.scheme));

  s += "  \"exact_match_offsets\": [";
  for (std::size_t i = 0; i < r.exact_match_offsets.size(); ++i)
    s += fmt::format("{}{}", i ? ", " : "", r.exact_match_offsets[i]);
  s += "],\n";

  s += "  \"segments\": ";
  if (r.segments.empty()) {
    s += "[],\n";
  } else {
    s += "[\n";
    for (std::size_t i = 0; i < r.segments.size(); ++i) {
      const auto& g = r.segments[i];
      s += fmt::format("    {{\"row\": {}, \"word_start\": {}, \"word_end\": {}}}{}\n", g.row, g.word_start,
                       g.word_end, i + 1 < r.segments.size() ? "," : "");
    }
    s += "  ],\n";
  }

  s += "  \"events\": " + events_json(r.events, "  ") + ",\n";
  if (r.snr_db) {
    s += "  \"snr_db\": " + number4(*r.snr_db) + ",\n";
    s += fmt::format("  \"snr_reference\": \"{}\",\n",
                     r.snr_reference == SnrReference::ExactMatch ? "exact_match" : "best_row");
  }
  s += fmt::format("  \"ambiguous\": {},\n", r.ambiguous ? "true" : "false");

  s += "  \"alternatives\": ";
  if (r.alternatives.empty()) {
    s += "[]\n";
  } else {
    s += "[\n";
    for (std::size_t i = 0; i < r.alternatives.size(); ++i)
      s += "    " + events_json(r.alternatives[i], "    ") + (i + 1 < r.alternatives.size() ? ",\n" : "\n");
    s += "  ]\n";
  }
  s += "}\n";
  return s;
}

void write_text(const std::string& text, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

void write_report(const AlignmentReport& report, const fs::path& path) {
  write_text(report_json(report), path);
}

std::string profile_csv(const ProjectionProfile& profile) {
  std::string s = "row,intensity\n";
  for (std::size_t r = 0; r < profile.values.size(); ++r)
    s += fmt::format("{},{}\n", static_cast<int>(r) + profile.origin_shift, profile.values[r]);
  return s;
}

}  // namespace moire::io
