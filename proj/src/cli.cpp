#include "cauchon/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cauchon/cauchon_graph.hpp"
#include "cauchon/diagram.hpp"
#include "cauchon/errors.hpp"
#include "cauchon/minors.hpp"
#include "cauchon/path_matrix.hpp"

namespace cauchon::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_index_list(const std::string& s) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw FormatError("bad index list '" + s + "'");
    out.push_back(std::stoi(token));
  }
  if (out.empty()) throw FormatError("empty index list");
  return out;
}

json minor_to_json(const MinorIndex& idx) {
  return json{{"I", idx.rows}, {"J", idx.cols}, {"k", idx.size()}};
}

json census_record(const CauchonDiagram& d) {
  auto gens = generators(d);
  std::map<int, int> counts;
  for (int k = 1; k <= std::min(d.rows(), d.cols()); ++k) counts[k] = 0;
  json garr = json::array();
  for (const auto& g : gens) {
    ++counts[static_cast<int>(g.size())];
    garr.push_back(minor_to_json(g));
  }
  json cobj = json::object();
  for (const auto& [k, v] : counts) cobj[std::to_string(k)] = v;
  return json{{"counts", cobj}, {"diagram", d.serialize()}, {"generators", garr}};
}

int do_validate(const std::string& file, std::ostream& out, std::ostream& err) {
  CauchonDiagram d = CauchonDiagram::parse(read_file(file), /*enforce=*/false);
  if (auto v = d.first_violation()) {
    out << "invalid\n";
    err << "square (" << v->row << "," << v->col << ") violates the diagram condition\n";
    return 1;
  }
  out << "valid\n";
  return 0;
}

void check_cell_cap(int m, int n, std::uint64_t max_cells) {
  if (static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n) > max_cells)
    throw ResourceLimitError("grid has more than " + std::to_string(max_cells) +
                             " squares; raise --max-cells to proceed");
}

int do_path_matrix(const std::string& file, const std::string& method, bool as_json,
                   bool stats, std::size_t max_paths, std::ostream& out, std::ostream& err) {
  CauchonDiagram d = CauchonDiagram::parse(read_file(file));
  RestoreStats rs;
  std::optional<BMatrix> by_restore;
  std::optional<BMatrix> by_paths;
  if (method == "restore" || method == "both") by_restore = restore(d, &rs);
  if (method == "paths" || method == "both") by_paths = path_matrix(CauchonGraph(d), max_paths);
  if (stats && by_restore) err << "restore max entry terms: " << rs.max_entry_terms << "\n";
  if (by_restore && by_paths && !(*by_restore == *by_paths)) {
    err << "path matrix and restoration output differ\n";
    return 1;
  }
  const BMatrix& m = by_restore ? *by_restore : *by_paths;
  if (as_json) {
    out << m.to_json().dump() << "\n";
  } else {
    for (int i = 1; i <= m.rows(); ++i)
      for (int j = 1; j <= m.cols(); ++j)
        out << "(" << i << "," << j << ") = " << m.at(i, j).str() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cauchon diagrams, path matrices over the quantum torus, and "
               "quantum-minor generators of the attached prime ideal"};
  app.name("cauchon");
  app.require_subcommand(1);
  int rc = 0;

  auto* validate = app.add_subcommand("validate", "check the diagram condition");
  std::string validate_file;
  validate->add_option("file", validate_file, "diagram file")->required();
  validate->callback([&] { rc = do_validate(validate_file, out, err); });

  auto* enumerate = app.add_subcommand("enumerate", "list all valid diagrams of a shape");
  int en_m = 0;
  int en_n = 0;
  bool en_count = false;
  std::uint64_t en_cells = 20;
  enumerate->add_option("m", en_m, "rows")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("n", en_n, "columns")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--count", en_count, "print only the number of diagrams");
  enumerate->add_option("--max-cells", en_cells, "largest m*n accepted");
  enumerate->callback([&] {
    check_cell_cap(en_m, en_n, en_cells);
    if (en_count) {
      out << CauchonDiagram::count(en_m, en_n) << "\n";
    } else {
      CauchonDiagram::enumerate(en_m, en_n,
                                [&](const CauchonDiagram& d) { out << d.serialize() << "\n"; });
    }
  });

  auto* graph = app.add_subcommand("graph", "export the Cauchon graph");
  std::string graph_file;
  std::string graph_format = "dot";
  graph->add_option("file", graph_file, "diagram file")->required();
  graph->add_option("--format", graph_format, "output format")
      ->check(CLI::IsMember({"dot"}));
  graph->callback([&] {
    out << CauchonGraph(CauchonDiagram::parse(read_file(graph_file))).to_dot();
  });

  auto* pm = app.add_subcommand("path-matrix", "path matrix by summation and/or restoration");
  std::string pm_file;
  std::string pm_method = "both";
  bool pm_json = false;
  bool pm_text = false;
  bool pm_stats = false;
  std::size_t pm_max_paths = kDefaultMaxPaths;
  pm->add_option("file", pm_file, "diagram file")->required();
  pm->add_option("--method", pm_method, "paths, restore, or both (cross-checked)")
      ->check(CLI::IsMember({"paths", "restore", "both"}));
  auto* pm_json_flag = pm->add_flag("--json", pm_json, "canonical JSON output");
  pm->add_flag("--text", pm_text, "readable text output (default)")->excludes(pm_json_flag);
  pm->add_flag("--stats", pm_stats, "report restoration telemetry on stderr");
  pm->add_option("--max-paths", pm_max_paths, "cap on paths per entry");
  pm->callback([&] {
    rc = do_path_matrix(pm_file, pm_method, pm_json, pm_stats, pm_max_paths, out, err);
  });

  auto* qd = app.add_subcommand("qdet", "quantum determinant of a path-matrix minor");
  std::string qd_file;
  std::string qd_rows;
  std::string qd_cols;
  std::string qd_method = "restore";
  bool qd_json = false;
  std::size_t qd_max_paths = kDefaultMaxPaths;
  qd->add_option("file", qd_file, "diagram file")->required();
  qd->add_option("-I", qd_rows, "row indices, e.g. 1,2")->required();
  qd->add_option("-J", qd_cols, "column indices, e.g. 1,3")->required();
  qd->add_option("--method", qd_method, "matrix construction: restore or paths")
      ->check(CLI::IsMember({"paths", "restore"}));
  qd->add_flag("--json", qd_json, "canonical JSON output");
  qd->add_option("--max-paths", qd_max_paths, "cap on paths per entry");
  qd->callback([&] {
    CauchonDiagram d = CauchonDiagram::parse(read_file(qd_file));
    MinorIndex idx{parse_index_list(qd_rows), parse_index_list(qd_cols)};
    idx.validate(d.rows(), d.cols());
    BMatrix m = qd_method == "restore" ? restore(d)
                                       : path_matrix(CauchonGraph(d), qd_max_paths);
    Element e = qdet(m, idx);
    if (qd_json)
      out << e.to_json().dump() << "\n";
    else
      out << e.str() << "\n";
  });

  auto* gens = app.add_subcommand("generators", "quantum-minor generators of the ideal");
  std::string gens_file;
  bool gens_json = false;
  gens->add_option("file", gens_file, "diagram file")->required();
  gens->add_flag("--json", gens_json, "JSON output");
  gens->callback([&] {
    CauchonDiagram d = CauchonDiagram::parse(read_file(gens_file));
    auto list = generators(d);
    if (gens_json) {
      json arr = json::array();
      for (const auto& g : list) arr.push_back(minor_to_json(g));
      out << arr.dump() << "\n";
    } else {
      for (const auto& g : list) out << "k=" << g.size() << " " << g.str() << "\n";
    }
  });

  auto* verify = app.add_subcommand("verify", "cross-check vanishing minors against path systems");
  std::string verify_file;
  std::size_t verify_max_paths = kDefaultMaxPaths;
  verify->add_option("file", verify_file, "diagram file")->required();
  verify->add_option("--max-paths", verify_max_paths, "cap on paths per entry");
  verify->callback([&] {
    CauchonDiagram d = CauchonDiagram::parse(read_file(verify_file));
    CrossValidateReport report = cross_validate(d, verify_max_paths);
    out << report.str() << "\n";
    if (!report.ok()) rc = 1;
  });

  auto* census = app.add_subcommand("census", "generators for every diagram of a shape");
  int cs_m = 0;
  int cs_n = 0;
  std::string cs_out;
  std::uint64_t cs_cells = 20;
  census->add_option("m", cs_m, "rows")->required()->check(CLI::PositiveNumber);
  census->add_option("n", cs_n, "columns")->required()->check(CLI::PositiveNumber);
  census->add_option("--out", cs_out, "output directory")->required();
  census->add_option("--max-cells", cs_cells, "largest m*n accepted");
  census->callback([&] {
    check_cell_cap(cs_m, cs_n, cs_cells);
    std::filesystem::create_directories(cs_out);
    std::filesystem::path path = std::filesystem::path(cs_out) /
        ("census_" + std::to_string(cs_m) + "x" + std::to_string(cs_n) + ".jsonl");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw FormatError("cannot write " + path.string());
    std::uint64_t records = 0;
    CauchonDiagram::enumerate(cs_m, cs_n, [&](const CauchonDiagram& d) {
      file << census_record(d).dump() << "\n";
      ++records;
    });
    out << "wrote " << records << " records to " << path.string() << "\n";
  });

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cauchon");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace cauchon::cli
