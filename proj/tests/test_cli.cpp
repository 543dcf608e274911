#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "moire/cli.hpp"

namespace fs = std::filesystem;
using moire::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = MOIRE_TEST_DATA;

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "moire_test_cli" / name;
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"align", "--scheme", "7", "--ref", kData + "/s1.fa", "--query", kData + "/s2.fa"}).code == 1);
  CHECK(call({"gain"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("input errors") {
  CHECK(call({"align", "--ref", kData + "/nope.fa", "--query", kData + "/s2.fa"}).code == 2);
  CHECK(call({"align", "--ref-seq", "ACGTX", "--query-seq", "ACG"}).code == 2);
  CHECK(call({"encode", "--seq-seq", "AC-GT"}).code == 2);
}

TEST_CASE("gain table") {
  const auto r = call({"gain", "--pixels", "1280"});
  CHECK(r.code == 0);
  CHECK(r.out == "scheme,pixels,processing_gain\nI,1280,320\nII,1280,320\nIII,1280,160\nIV,1280,80\n");
  CHECK(call({"gain", "--pixels", "1281"}).code == 2);
}

TEST_CASE("encode prints the slot string") {
  const auto r = call({"encode", "--seq-seq", "AG"});
  CHECK(r.code == 0);
  CHECK(r.out == "seq\t1000 0100\n");
}

TEST_CASE("align writes the report and its config") {
  const auto dir = fresh_dir("align");
  const auto r = call({"align", "--ref", kData + "/s1.fa", "--query", kData + "/s3.fa", "--out", dir.string()});
  CHECK(r.code == 0);
  const auto printed = nlohmann::json::parse(r.out);
  CHECK(printed["events"].size() == 2);
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "overlap.pgm"));
  std::ifstream cfg(dir / "config.json");
  const auto config = nlohmann::json::parse(cfg);
  CHECK(config["command"] == "align");
  CHECK(config["scheme"] == 1);
  CHECK(config["min_run"] == 3);
}

TEST_CASE("align without any bright run exits 3") {
  const auto r = call({"align", "--ref-seq", "AAAAAAAAAAAAAAAA", "--query-seq", "CCCCCC"});
  CHECK(r.code == 3);
}

TEST_CASE("project prints the profile") {
  const auto r = call({"project", "--ref", kData + "/s1.fa", "--query", kData + "/s2.fa", "--threshold", "0.9"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("row,intensity\n", 0) == 0);
  CHECK(r.out.find("\n6,20\n") != std::string::npos);
  CHECK(call({"project", "--ref", kData + "/s1.fa", "--query", kData + "/s3.fa", "--threshold", "1.0"}).code == 3);
}

TEST_CASE("circular finds the matching ring") {
  const auto dir = fresh_dir("circular");
  const auto r = call({"circular", "--ref", kData + "/s1.fa", "--query", kData + "/s2.fa", "--size", "512", "--r0",
                       "32", "--dr0", "8", "--out", dir.string()});
  CHECK(r.code == 0);
  std::ifstream in(dir / "rings.json");
  const auto rings = nlohmann::json::parse(in);
  CHECK(rings["rings"] == nlohmann::json::array({5}));
  CHECK(rings["matched_rows"] == nlohmann::json::array({6}));
}

TEST_CASE("snr table") {
  const auto r = call({"snr", "--trials", "20", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("scheme,mean_snr_db,std_snr_db,trials\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
  CHECK(call({"snr", "--trials", "20", "--seed", "3"}).out == r.out);
}
