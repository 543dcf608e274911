#include "moire/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <optional>
#include <ostream>

#include <fmt/format.h>

#include "moire/bar_align.hpp"
#include "moire/circular.hpp"
#include "moire/error.hpp"
#include "moire/experiment.hpp"
#include "moire/io.hpp"
#include "moire/projection.hpp"

namespace moire::cli {

namespace fs = std::filesystem;

std::string config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["scheme"] = c.scheme;
  j["window"] = c.window;
  j["shifts"] = c.shifts;
  j["min_run"] = c.min_run;
  j["max_event_length"] = c.max_event_length;
  j["max_events"] = c.max_events;
  j["threshold"] = c.threshold;
  j["dilation"] = c.dilation;
  j["circular"] = {{"r0", c.r0},         {"dr0", c.dr0},           {"rings", c.rings},
                   {"raster", c.raster}, {"rotation", c.rotation}, {"supersample", c.supersample}};
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["length"] = c.length;
  j["out_dir"] = c.out_dir;
  j["format"] = c.format;
  return j.dump(2) + "\n";
}

namespace {

struct SequenceSource {
  std::string file;
  std::string literal;
  std::string record;

  void add_to(CLI::App* app, const std::string& name, const std::string& what) {
    app->add_option("--" + name, file, "FASTA file holding the " + what);
    app->add_option("--" + name + "-seq", literal, what + " given inline");
    app->add_option("--" + name + "-id", record, "record of the FASTA file to use (default: first)");
  }

  std::pair<std::string, DnaSequence> load(const std::string& name) const {
    if (!literal.empty() && !file.empty())
      throw CLI::ValidationError("--" + name, "give either a file or an inline sequence, not both");
    if (!literal.empty()) return {name, parse_sequence(literal)};
    if (file.empty()) throw CLI::RequiredError("--" + name + " or --" + name + "-seq");
    auto records = io::read_fasta(file);
    if (record.empty()) return {records.front().id, records.front().sequence};
    for (auto& r : records)
      if (r.id == record) return {r.id, r.sequence};
    throw IoError("no record '" + record + "' in '" + file + "'");
  }
};

struct Context {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;

  Scheme scheme() const { return scheme_from_string(std::to_string(cfg.scheme)); }
  io::ImageFormat format() const { return io::image_format_from_string(cfg.format); }
  bool writing() const { return !cfg.out_dir.empty(); }

  fs::path path(const std::string& stem, const std::string& ext) const {
    return fs::path(cfg.out_dir) / (stem + ext);
  }
  fs::path image_path(const std::string& stem) const { return path(stem, io::extension(format())); }

  void prepare() const {
    if (!writing()) return;
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) throw IoError("cannot create '" + cfg.out_dir + "': " + ec.message());
  }
  void write_config() const {
    if (writing()) io::write_text(config_json(cfg), path("config", ".json"));
  }
};

ChainOptions chain_options(const RunConfig& c) {
  ChainOptions o;
  o.min_run = c.min_run;
  o.max_event_length = c.max_event_length;
  o.max_events = c.max_events;
  return o;
}

std::string slot_string(const SlotRow& row, std::size_t word) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i && i % word == 0) s.push_back(' ');
    s.push_back(to_char(row[i]));
  }
  return s;
}

int cmd_encode(Context& ctx, const SequenceSource& src) {
  const auto [id, seq] = src.load("seq");
  const Scheme s = ctx.scheme();
  const SlotRow row = encode_sequence(seq, s);
  ctx.cfg.window = seq.size();
  ctx.out << id << '\t' << slot_string(row, word_length(s)) << '\n';
  ctx.prepare();
  if (ctx.writing()) {
    io::write_image(build_query_pattern(seq, s, 1), ctx.format(), ctx.image_path(id + "_pattern"));
    ctx.write_config();
  }
  return kOk;
}

int cmd_align(Context& ctx, const SequenceSource& ref_src, const SequenceSource& query_src) {
  const auto [ref_id, ref] = ref_src.load("ref");
  const auto [query_id, query] = query_src.load("query");
  const Scheme s = ctx.scheme();
  ctx.cfg.window = query.size();
  if (query.size() > ref.size()) throw WindowTooLarge("query is longer than the reference");
  if (ctx.cfg.shifts == 0) ctx.cfg.shifts = ref.size() - query.size() + 1;

  const AlignmentRun run = align(ref, query, s, chain_options(ctx.cfg), ctx.cfg.shifts);
  const std::string json = io::report_json(run.report);
  ctx.out << json;
  ctx.prepare();
  if (ctx.writing()) {
    io::write_text(json, ctx.path("report", ".json"));
    io::write_image(run.stack, ctx.format(), ctx.image_path("stack"));
    io::write_image(run.query, ctx.format(), ctx.image_path("query"));
    io::write_image(run.overlap, ctx.format(), ctx.image_path("overlap"));
    ctx.write_config();
  }
  return run.report.empty() ? kNoAlignment : kOk;
}

int cmd_project(Context& ctx, const SequenceSource& ref_src, const SequenceSource& query_src) {
  const auto [ref_id, ref] = ref_src.load("ref");
  const auto [query_id, query] = query_src.load("query");
  const Scheme s = ctx.scheme();
  ctx.cfg.window = query.size();
  if (query.size() > ref.size()) throw WindowTooLarge("query is longer than the reference");
  if (ctx.cfg.shifts == 0) ctx.cfg.shifts = ref.size() - query.size() + 1;

  TwoStageOptions opt;
  opt.chain = chain_options(ctx.cfg);
  opt.dilation = ctx.cfg.dilation;
  opt.shifts = ctx.cfg.shifts;
  const TwoStageRun run = two_stage_align(ref, query, s, ctx.cfg.threshold, opt);
  const std::string csv = io::profile_csv(run.profile);
  ctx.out << csv;
  ctx.prepare();
  if (ctx.writing()) {
    io::write_text(csv, ctx.path("profile", ".csv"));
    io::write_report(run.report, ctx.path("report", ".json"));
    ctx.write_config();
  }
  return run.report.empty() ? kNoAlignment : kOk;
}

int cmd_circular(Context& ctx, const SequenceSource& ref_src, const SequenceSource& query_src) {
  const auto [ref_id, ref] = ref_src.load("ref");
  const auto [query_id, query] = query_src.load("query");
  const Scheme s = ctx.scheme();
  ctx.cfg.window = query.size();
  if (query.size() > ref.size()) throw WindowTooLarge("query is longer than the reference");
  if (ctx.cfg.shifts == 0) ctx.cfg.shifts = ref.size() - query.size() + 1;
  if (ctx.cfg.rings == 0) ctx.cfg.rings = ctx.cfg.shifts;

  const PatternImage stack = build_shift_stack(ref, query.size(), s, ctx.cfg.shifts);
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(stack.slots.cols());
  const auto geom = circular::CircularGeometry::make(ctx.cfg.r0, ctx.cfg.dr0, dtheta, ctx.cfg.rings);
  circular::RasterSpec raster;
  raster.width = raster.height = ctx.cfg.raster;
  raster.rotation = ctx.cfg.rotation;
  raster.supersample = ctx.cfg.supersample;

  const auto sector = circular::render_sector_pattern(query, geom, s, raster);
  const auto curved = circular::render_curved_pattern(stack, geom, raster);
  const auto img = circular::overlap_circular(sector, curved);
  const auto rings = circular::detect_ring(img, ctx.cfg.threshold);
  const auto energy = circular::normalized_ring_energy(img);

  nlohmann::ordered_json j;
  j["index_base"] = 0;
  j["scheme"] = ctx.cfg.scheme;
  j["rings"] = rings;
  std::vector<int> rows;
  for (auto r : rings) rows.push_back(static_cast<int>(r) + stack.origin_shift);
  j["matched_rows"] = rows;
  std::vector<double> rounded;
  for (double e : energy) rounded.push_back(std::round(e * 1e4) / 1e4);
  j["normalized_energy"] = rounded;
  const std::string json = j.dump(2) + "\n";
  ctx.out << json;

  ctx.prepare();
  if (ctx.writing()) {
    io::write_text(json, ctx.path("rings", ".json"));
    io::write_gray(io::to_gray(sector.raster), ctx.format(), ctx.image_path("sector"));
    io::write_gray(io::to_gray(curved.raster), ctx.format(), ctx.image_path("curved"));
    io::write_gray(io::to_gray(img.intensity, signal_level(s)), ctx.format(), ctx.image_path("circular_overlap"));
    ctx.write_config();
  }
  return rings.empty() ? kNoAlignment : kOk;
}

int cmd_snr(Context& ctx, std::size_t threads) {
  SnrExperimentConfig c;
  c.trials = ctx.cfg.trials;
  c.seed = ctx.cfg.seed;
  c.query_length = ctx.cfg.length;
  if (ctx.cfg.shifts == 0) ctx.cfg.shifts = c.shifts;
  c.shifts = ctx.cfg.shifts;
  c.threads = threads;
  const auto summary = run_snr_experiment(c);

  std::string table = "scheme,mean_snr_db,std_snr_db,trials\n";
  for (const auto& s : summary)
    table += fmt::format("{},{:.4f},{:.4f},{}\n", scheme_name(s.scheme), s.mean_db, s.std_db, s.trials);
  ctx.out << table;
  ctx.prepare();
  if (ctx.writing()) {
    io::write_text(table, ctx.path("snr", ".csv"));
    ctx.write_config();
  }
  return kOk;
}

int cmd_gain(Context& ctx, std::size_t pixels) {
  std::string table = "scheme,pixels,processing_gain\n";
  for (Scheme s : kAllSchemes)
    table += fmt::format("{},{},{}\n", scheme_name(s), pixels, processing_gain(pixels, s));
  ctx.out << table;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moire-pattern optical string alignment simulator", "moire"};
  app.require_subcommand(1);

  Context ctx{RunConfig{}, out, err};
  RunConfig& c = ctx.cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--scheme", c.scheme, "coding scheme 1-4 (Types I-IV)")->check(CLI::Range(1, 4));
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--format", c.format, "image format")->check(CLI::IsMember({"pgm", "png"}));
    sub->add_option("--out", c.out_dir, "output directory");
    sub->add_option("--min-run", c.min_run, "shortest bright run, in words")->check(CLI::PositiveNumber);
    sub->add_option("--threshold", c.threshold, "detection threshold (fraction of full match)");
  };

  SequenceSource seq_src, ref_src, query_src;
  std::size_t pixels = 0;
  std::size_t threads = 0;

  auto* encode = app.add_subcommand("encode", "encode a sequence into a slot pattern");
  common(encode);
  seq_src.add_to(encode, "seq", "sequence");

  auto pair_inputs = [&](CLI::App* sub) {
    common(sub);
    ref_src.add_to(sub, "ref", "reference");
    query_src.add_to(sub, "query", "query");
    sub->add_option("--shifts", c.shifts, "rows in the shift stack (default: all)");
    sub->add_option("--max-event-length", c.max_event_length, "largest indel read from a row jump");
    sub->add_option("--max-events", c.max_events, "most indel events in one alignment");
  };

  auto* align_cmd = app.add_subcommand("align", "full 2D bar alignment");
  pair_inputs(align_cmd);

  auto* circ = app.add_subcommand("circular", "circular pattern alignment");
  pair_inputs(circ);
  circ->add_option("--r0", c.r0, "inner radius in pixels")->check(CLI::PositiveNumber);
  circ->add_option("--dr0", c.dr0, "first ring width in pixels")->check(CLI::PositiveNumber);
  circ->add_option("--rings", c.rings, "ring count (default: shifts)");
  circ->add_option("--size", c.raster, "raster width and height")->check(CLI::PositiveNumber);
  circ->add_option("--rotation", c.rotation, "pattern rotation in radians");
  circ->add_option("--supersample", c.supersample, "samples per pixel side")->check(CLI::PositiveNumber);

  auto* project = app.add_subcommand("project", "1D projection and two-stage alignment");
  pair_inputs(project);
  project->add_option("--dilation", c.dilation, "rows searched around each candidate");

  auto* snr = app.add_subcommand("snr", "Monte Carlo SNR experiment");
  common(snr);
  snr->add_option("--trials", c.trials, "number of random draws")->check(CLI::PositiveNumber);
  snr->add_option("--length", c.length, "query length in bases");
  snr->add_option("--shifts", c.shifts, "rows per stack (default 16)");
  snr->add_option("--threads", threads, "worker threads (0: all cores)");

  auto* gain = app.add_subcommand("gain", "processing gain per scheme");
  gain->add_option("--pixels", pixels, "SLM pixels per row")->required();

  bool circ_threshold_set = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    circ_threshold_set = circ->count("--threshold") > 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*encode) {
      c.command = "encode";
      return cmd_encode(ctx, seq_src);
    }
    if (*align_cmd) {
      c.command = "align";
      return cmd_align(ctx, ref_src, query_src);
    }
    if (*circ) {
      c.command = "circular";
      if (!circ_threshold_set) c.threshold = 0.9;
      return cmd_circular(ctx, ref_src, query_src);
    }
    if (*project) {
      c.command = "project";
      return cmd_project(ctx, ref_src, query_src);
    }
    if (*snr) {
      c.command = "snr";
      return cmd_snr(ctx, threads);
    }
    if (*gain) {
      c.command = "gain";
      return cmd_gain(ctx, pixels);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NoCandidates& e) {
    err << "no alignment: " << e.what() << '\n';
    return kNoAlignment;
  } catch (const NoAlignment& e) {
    err << "no alignment: " << e.what() << '\n';
    return kNoAlignment;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}

}  // namespace moire::cli
