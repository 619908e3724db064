#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "chiralkit/cli/commands.hpp"
#include "chiralkit/fm/chiral_fm.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using chiralkit::exactlin::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "chiralkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = chiralkit::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) { return slurp(fs::path(CHIRALKIT_GOLDEN_DIR) / name); }

class ScratchDir {
 public:
  ScratchDir() : path_(fs::temp_directory_path() / ("chiralkit-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("golden outputs") {
    CHECK(invoke({"noether", "--lagrangian", "1/2*i*(dt.x1^2 + ds.x1^2)", "--generator", "dt", "--restrict",
                  "--format", "text"})
              .out == golden("noether_dt_restrict.txt"));
    for (const std::string g : {"ds", "hol", "antihol", "shift"}) {
      const std::string gen = g == "shift" ? "shift:1" : g;
      CHECK(invoke({"noether", "--lagrangian", "1/2*i*(dt.x1^2 + ds.x1^2)", "--generator", gen, "--restrict",
                    "--format", "text"})
                .out == golden("noether_" + g + "_restrict.txt"));
    }
    CHECK(invoke({"bracket", "--left", "-i*dz.x1^2", "--right", "-i*dz.x1^2", "--via-fields", "--format", "text"})
              .out == golden("bracket_vir_plus.txt"));
    CHECK(invoke({"bracket", "--left", "-i*dzb.x1^2", "--right", "-i*dzb.x1^2", "--via-fields", "--format", "text"})
              .out == golden("bracket_vir_minus.txt"));
    CHECK(invoke({"tdual", "--radius-unit", "2/3"}).out == golden("tdual_2_3.json"));
    CHECK(invoke({"spectrum", "--radius-unit", "1", "--cutoff", "1"}).out == golden("spectrum_u1_c1.csv"));
    CHECK(invoke({"chiral", "--radius-unit", "1", "--cutoff", "1"}).out == golden("chiral_u1_c1.json"));
    CHECK(invoke({"bracket", "--left", "i*dz.x1", "--right", "i*dz.x1", "--via-fields", "--format", "text"}).out ==
          golden("bracket_heis.txt"));
    CHECK(invoke({"character", "--radius-unit", "1", "--sector", "0;0", "--order", "3"}).out ==
          golden("character_vacuum.json"));
  }

  TEST_CASE("t-duality round trip through files") {
    const ScratchDir dir;
    const auto once = invoke({"tdual", "--radius-unit", "2/3"});
    REQUIRE(once.code == 0);
    const auto twice = invoke({"tdual", "--model", dir.write("dual.json", once.out)});
    CHECK(twice.code == 0);
    CHECK(Json::parse(twice.out) == Json::parse(R"({"radius_unit":"2/3"})"));

    const std::string model = R"({"n":2,"g":[["2","1"],["1","1"]],"L":[["1","0"],["0","2"]]})";
    const auto d1 = invoke({"tdual", "--model", dir.write("m.json", model)});
    REQUIRE(d1.code == 0);
    const auto d2 = invoke({"tdual", "--model", dir.write("m1.json", d1.out)});
    REQUIRE(d2.code == 0);
    CHECK(Json::parse(d2.out)["L"] == Json::parse(model)["L"]);
  }

  TEST_CASE("fm with the identity class echoes its input") {
    const ScratchDir dir;
    testing_support::Random rnd(61);
    chiralkit::fm::CdoIsoClass x(rnd.alt(3, 3), rnd.alt(2, 3, 3));
    const Json input = chiralkit::fm::to_json(x);
    const auto r = invoke({"fm", "--mu", dir.write("mu.json", R"([["1","0","0"],["0","1","0"],["0","0","1"]])"),
                           "--class", dir.write("x.json", input.dump())});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out) == input);
  }

  TEST_CASE("stdin and --out") {
    const ScratchDir dir;
    const auto r = invoke({"noether", "--lagrangian", "-", "--generator", "ds", "--format", "text"},
                          "1/2*i*(dt.x1^2 + ds.x1^2)");
    CHECK(r.code == 0);
    CHECK(r.out.find("alpha = ") == 0);
    const auto w = invoke({"--out", dir.path("s.csv"), "spectrum", "--radius-unit", "1", "--cutoff", "1"});
    CHECK(w.code == 0);
    CHECK(w.out.empty());
    CHECK(slurp(dir.path("s.csv")) == golden("spectrum_u1_c1.csv"));
  }

  TEST_CASE("exit codes") {
    CHECK(invoke({"noether", "--lagrangian", "dt.x1^3", "--generator", "dt"}).code == 2);
    CHECK(invoke({"noether", "--lagrangian", "dt.x1^", "--generator", "dt"}).code == 1);
    CHECK(invoke({"spectrum"}).code == 1);
    CHECK(invoke({"spectrum", "--radius-unit", "0"}).code != 0);
    CHECK(invoke({"bogus"}).code == 1);
    CHECK(invoke({"--format", "xml", "chiral", "--radius-unit", "1"}).code == 1);
    CHECK(invoke({"tdual", "--model", "/nonexistent/model.json"}).code == 1);
    const auto bad = invoke({"fm", "--class", "-"}, R"({"kind":"cdo","n":2})");
    CHECK(bad.code == 1);
    CHECK_FALSE(bad.err.empty());
  }

  TEST_CASE("deterministic output") {
    const std::vector<std::string> args{"locality", "--radius-unit", "3/2", "--cutoff", "2"};
    const auto a = invoke(args), b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
