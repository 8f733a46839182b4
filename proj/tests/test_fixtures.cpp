#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coxlab/error.hpp"
#include "coxlab/fixtures.hpp"
#include "coxlab/verify.hpp"

using namespace coxlab;
namespace fs = std::filesystem;

namespace {

// Points COXLAB_FIXTURES at a scratch copy for the lifetime of the object.
class FixtureDir {
 public:
  explicit FixtureDir(const std::string& tag) : dir_(fs::temp_directory_path() / ("coxlab_fixtures_" + tag)) {
    fs::remove_all(dir_);
    fixtures::export_all(dir_);
    ::setenv("COXLAB_FIXTURES", dir_.c_str(), 1);
  }
  ~FixtureDir() {
    ::unsetenv("COXLAB_FIXTURES");
    fs::remove_all(dir_);
  }
  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / (name + ".json"));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / (name + ".json")) << text;
  }
  void replace(const std::string& name, const std::string& from, const std::string& to) const {
    std::string t = read(name);
    const auto pos = t.find(from);
    REQUIRE(pos != std::string::npos);
    t.replace(pos, from.size(), to);
    write(name, t);
  }

 private:
  fs::path dir_;
};

bool suite_all_fails() {
  try {
    return run_suite(fixtures::load_paper_labeling(), Suite::all, 1).failed();
  } catch (const Error&) {
    return true;
  }
}

}  // namespace

TEST_SUITE("fixtures") {
  TEST_CASE("shipped fixtures load and pass their oracle") {
    CHECK_NOTHROW(fixtures::load_paper_labeling());
    CHECK(fixtures::ax_relations().relations.size() == 25);
    CHECK(fixtures::nonrel_pairs().pairs.size() == 43);
    CHECK(fixtures::names().size() == 6);
    CHECK_THROWS_AS(fixtures::text("nope"), InvalidInput);
    CHECK_THROWS_AS(fixtures::bundled_presentation("tt33"), InvalidInput);
  }

  TEST_CASE("miscellaneous relation labels and lengths") {
    const AxFixture ax = fixtures::ax_relations();
    std::map<std::size_t, int> lengths;
    for (const auto& [label, w] : ax.relations) {
      CHECK(label != "AX9");
      ++lengths[w.size()];
    }
    CHECK(ax.relations.front().first == "AX1");
    CHECK(ax.relations.back().first == "AX26");
    CHECK(lengths == std::map<std::size_t, int>{{10, 4}, {12, 13}, {14, 2}, {18, 2}, {24, 3}, {30, 1}});
  }

  TEST_CASE("exported copy round-trips through the override") {
    FixtureDir d("roundtrip");
    CHECK_NOTHROW(fixtures::load_paper_labeling());
    CHECK_FALSE(suite_all_fails());
  }

  TEST_CASE("corrupted complex is rejected") {
    FixtureDir d("complex");
    SUBCASE("swapped plane") { d.replace("tt33", "\"planes\": [2, 7]", "\"planes\": [2, 8]"); }
    SUBCASE("wrong line kind") {
      d.replace("tt33", "{\"id\": 1, \"kind\": \"horizontal\"", "{\"id\": 1, \"kind\": \"vertical\"");
    }
    SUBCASE("flipped orientation") { d.replace("tt33", "\"points\": [1, 2]", "\"points\": [2, 1]"); }
    SUBCASE("chord moved") { d.replace("tt33", "\"label\": 4, \"line\": 17", "\"label\": 4, \"line\": 18"); }
    SUBCASE("truncated") { d.write("tt33", d.read("tt33").substr(0, 200)); }
    CHECK_THROWS_AS(fixtures::load_paper_labeling(), CorruptFixture);
  }

  TEST_CASE("corrupted chord orientation breaks verification") {
    FixtureDir d("orientation");
    d.replace("tt33", "\"label\": 1, \"line\": 1, \"tail\": 7, \"head\": 2",
              "\"label\": 1, \"line\": 1, \"tail\": 2, \"head\": 7");
    CHECK(suite_all_fails());
  }

  TEST_CASE("corrupted tables and relations break verification") {
    FixtureDir d("tables");
    SUBCASE("relation letter") { d.replace("ax_relations", "[1, 13, 22, 6, 4, 2,", "[1, 13, 22, 6, 5, 2,"); }
    SUBCASE("relation dropped") { d.replace("ax_relations", "{\"label\": \"AX1\"", "{\"label\": \"AX9\""); }
    SUBCASE("pair changed") { d.replace("nonrel_pairs", "[1, 2]", "[1, 5]"); }
    SUBCASE("trivia relator") { d.replace("s4_remark", "[1, 3, 1, 3]", "[1, 3, 1, 3, 1, 3]"); }
    SUBCASE("hexagon cycle") { d.replace("hexagon_quotient", "[1, 2, 3, 4, 5, 6, 5, 4, 3, 2]", "[1, 2]"); }
    CHECK(suite_all_fails());
  }
}
