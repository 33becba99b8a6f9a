#include "cauchon/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cauchon/diagram.hpp"
#include "cauchon/path_matrix.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace cauchon;
using namespace testutil;

namespace {

struct CliResult {
  int rc;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("validate") {
  CliResult ok = run_cli({"validate", fixture_path("corners3x3.txt")});
  CHECK(ok.rc == 0);
  CHECK(ok.out == "valid\n");
  CHECK(ok.err.empty());

  CliResult bad = run_cli({"validate", fixture_path("invalid2x2.txt")});
  CHECK(bad.rc == 1);
  CHECK(bad.out == "invalid\n");
  CHECK(bad.err == "square (2,2) violates the diagram condition\n");

  CliResult ragged = run_cli({"validate", fixture_path("ragged.txt")});
  CHECK(ragged.rc == 2);
  CHECK(ragged.out.empty());

  CliResult missing = run_cli({"validate", "no_such_file.txt"});
  CHECK(missing.rc == 2);
  CHECK(missing.err.find("cannot read") != std::string::npos);
}

TEST_CASE("enumerate") {
  CliResult count = run_cli({"enumerate", "2", "2", "--count"});
  CHECK(count.rc == 0);
  CHECK(count.out == "14\n");

  CliResult unit = run_cli({"enumerate", "1", "1"});
  CHECK(unit.rc == 0);
  CHECK(unit.out == ".\n\nX\n\n");

  CliResult capped = run_cli({"enumerate", "5", "5"});
  CHECK(capped.rc == 3);
  CHECK(capped.err.find("--max-cells") != std::string::npos);

  CliResult raised = run_cli({"enumerate", "5", "5", "--count", "--max-cells", "25"});
  CHECK(raised.rc == 0);

  CliResult zero = run_cli({"enumerate", "0", "2"});
  CHECK(zero.rc == 2);
}

TEST_CASE("graph") {
  CliResult dot = run_cli({"graph", fixture_path("corners3x3.txt")});
  CHECK(dot.rc == 0);
  CHECK(dot.out.substr(0, 8) == "digraph ");
  CHECK(dot.out.find("r1 -> w1_2 [label=\"t[1,2]\"];") != std::string::npos);

  CliResult invalid = run_cli({"graph", fixture_path("invalid2x2.txt")});
  CHECK(invalid.rc == 1);

  CliResult format = run_cli({"graph", fixture_path("corners3x3.txt"), "--format", "png"});
  CHECK(format.rc == 2);
}

TEST_CASE("path-matrix") {
  std::string file = fixture_path("corners3x3.txt");

  CliResult both = run_cli({"path-matrix", file, "--json"});
  CHECK(both.rc == 0);
  CHECK(both.err.empty());
  BMatrix expect = restore(CauchonDiagram::parse("..X\n...\nX..\n"));
  CHECK(nlohmann::json::parse(both.out) == expect.to_json());

  CliResult text = run_cli({"path-matrix", file, "--method", "paths"});
  CHECK(text.rc == 0);
  CHECK(text.out.find("(1,1) = t[1,1] + q t[1,2] t[2,1] t[2,2]^-1\n") != std::string::npos);
  CHECK(text.out.find("(1,3) = 0\n") != std::string::npos);
  CHECK(text.out.find("(3,3) = t[3,3]\n") != std::string::npos);

  CliResult stats = run_cli({"path-matrix", file, "--method", "restore", "--stats"});
  CHECK(stats.rc == 0);
  CHECK(stats.err == "restore max entry terms: 2\n");

  CliResult conflict = run_cli({"path-matrix", file, "--json", "--text"});
  CHECK(conflict.rc == 2);

  CliResult capped = run_cli({"path-matrix", file, "--max-paths", "1", "--method", "paths"});
  CHECK(capped.rc == 3);
}

TEST_CASE("qdet") {
  std::string file = fixture_path("corners3x3.txt");

  CliResult single = run_cli({"qdet", file, "-I", "1", "-J", "2"});
  CHECK(single.rc == 0);
  CHECK(single.out == "t[1,2]\n");

  CliResult zero = run_cli({"qdet", file, "-I", "1", "-J", "3"});
  CHECK(zero.rc == 0);
  CHECK(zero.out == "0\n");

  CliResult by_paths = run_cli({"qdet", file, "-I", "1,2,3", "-J", "1,2,3", "--method", "paths"});
  CliResult by_restore = run_cli({"qdet", file, "-I", "1,2,3", "-J", "1,2,3"});
  CHECK(by_paths.rc == 0);
  CHECK(by_restore.rc == 0);
  CHECK(by_paths.out == by_restore.out);

  CliResult js = run_cli({"qdet", file, "-I", "1", "-J", "2", "--json"});
  CHECK(js.rc == 0);
  CHECK(js.out == R"([{"coeff":[[0,1]],"mono":[[1,2,1]]}])" "\n");

  CHECK(run_cli({"qdet", file, "-I", "2,1", "-J", "1,2"}).rc == 2);
  CHECK(run_cli({"qdet", file, "-I", "1", "-J", "4"}).rc == 2);
  CHECK(run_cli({"qdet", file, "-I", "1,x", "-J", "1,2"}).rc == 2);
  CHECK(run_cli({"qdet", file, "-I", "1,2", "-J", "1"}).rc == 2);
}

TEST_CASE("generators") {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "cauchon_cli_test";
  std::filesystem::create_directories(dir);
  std::filesystem::path black = dir / "black2x2.txt";
  std::ofstream(black) << "XX\nXX\n";

  CliResult text = run_cli({"generators", black.string()});
  CHECK(text.rc == 0);
  CHECK(text.out ==
        "k=1 I=1 J=1\n"
        "k=1 I=1 J=2\n"
        "k=1 I=2 J=1\n"
        "k=1 I=2 J=2\n"
        "k=2 I=1,2 J=1,2\n");

  CliResult js = run_cli({"generators", black.string(), "--json"});
  CHECK(js.rc == 0);
  nlohmann::json arr = nlohmann::json::parse(js.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 5);
  CHECK(arr[0] == nlohmann::json({{"I", {1}}, {"J", {1}}, {"k", 1}}));
  CHECK(arr[4] == nlohmann::json({{"I", {1, 2}}, {"J", {1, 2}}, {"k", 2}}));

  CliResult again = run_cli({"generators", black.string(), "--json"});
  CHECK(again.out == js.out);

  CliResult ex = run_cli({"generators", fixture_path("corners3x3.txt")});
  CHECK(ex.rc == 0);
  CHECK(ex.out == "k=1 I=1 J=3\nk=1 I=3 J=1\n");
}

TEST_CASE("verify") {
  CliResult fig = run_cli({"verify", fixture_path("mixed4x5.txt")});
  CHECK(fig.rc == 0);
  CHECK(fig.out.find("violations: 0") != std::string::npos);
  CHECK(fig.out.find("checked 125 minors") != std::string::npos);

  CliResult ex = run_cli({"verify", fixture_path("corners3x3.txt")});
  CHECK(ex.rc == 0);
  CHECK(ex.out == "checked 19 minors; size 1: 2/9 vanishing; size 2: 0/9 vanishing; "
                  "size 3: 0/1 vanishing; violations: 0\n");
}

TEST_CASE("census") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "cauchon_cli_test" / "census";
  std::filesystem::remove_all(dir);

  CliResult first = run_cli({"census", "2", "2", "--out", dir.string()});
  CHECK(first.rc == 0);
  std::filesystem::path file = dir / "census_2x2.jsonl";
  CHECK(first.out == "wrote 14 records to " + file.string() + "\n");

  std::string bytes = read_file(file);
  std::istringstream lines(bytes);
  std::vector<nlohmann::json> records;
  std::string line;
  while (std::getline(lines, line)) records.push_back(nlohmann::json::parse(line));
  REQUIRE(records.size() == 14);
  CHECK(records.front()["diagram"] == "..\n..\n");
  CHECK(records.front()["generators"].empty());
  CHECK(records.front()["counts"] == nlohmann::json({{"1", 0}, {"2", 0}}));
  CHECK(records.back()["diagram"] == "XX\nXX\n");
  CHECK(records.back()["generators"].size() == 5);
  CHECK(records.back()["counts"] == nlohmann::json({{"1", 4}, {"2", 1}}));

  CliResult second = run_cli({"census", "2", "2", "--out", dir.string()});
  CHECK(second.rc == 0);
  CHECK(read_file(file) == bytes);

  CHECK(run_cli({"census", "5", "5", "--out", dir.string()}).rc == 3);
}

TEST_CASE("top level usage") {
  CliResult help = run_cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("Usage") != std::string::npos);

  CliResult none = run_cli({});
  CHECK(none.rc == 2);

  CliResult unknown = run_cli({"frobnicate"});
  CHECK(unknown.rc == 2);
}
