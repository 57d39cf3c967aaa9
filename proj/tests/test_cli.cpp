#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "hvor/report.hpp"
#include "json.hpp"

using namespace hvor;
using namespace hvor::cli;

namespace {

std::string fresh_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("homology command for GL3 over Z[i]") {
  RunConfig c;
  c.disc = -4;
  c.rank = 3;
  c.out_dir = fresh_dir("hvor_cli_h");
  std::ostringstream out, err;
  CHECK(cmd_homology(c, out, err) == 0);
  CHECK(out.str().find("Z + Z_2") != std::string::npos);
  REQUIRE(std::filesystem::exists(c.report_path()));
  REQUIRE(std::filesystem::exists(c.cells_path()));

  auto text = slurp(c.report_path());
  auto doc = parse_run_document(text);
  CHECK(doc.disc == -4);
  CHECK(doc.census.size() == 1);
  REQUIRE(doc.homology.has_value());
  CHECK(doc.homology->at(5).str() == "Z + Z_2");
  CHECK(parse_run_document(to_json(doc)) == doc);

  // a second run reuses the cell database and prints the same table
  std::ostringstream out2, err2;
  CHECK(cmd_homology(c, out2, err2) == 0);
  CHECK(out2.str() == out.str());

  std::ostringstream vout, verr;
  CHECK(cmd_verify(c, vout, verr) == 0);
  std::filesystem::remove_all(c.out_dir);
}

TEST_CASE("verify fails on a tampered stabilizer order") {
  RunConfig c;
  c.disc = -3;
  c.rank = 3;
  c.out_dir = fresh_dir("hvor_cli_v");
  std::ostringstream out, err;
  REQUIRE(cmd_cells(c, out, err) == 0);

  std::ifstream in(c.cells_path());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  in.close();
  REQUIRE(lines.size() > 2);
  auto j = nlohmann::json::parse(lines[1]);
  Integer order(j.at("stabilizer_order").get<std::string>());
  j["stabilizer_order"] = Integer(order * 2).get_str();
  lines[1] = j.dump();
  std::ofstream o(c.cells_path());
  for (const auto& l : lines) o << l << '\n';
  o.close();

  std::ostringstream vout, verr;
  CHECK(cmd_verify(c, vout, verr) == 1);
  std::filesystem::remove_all(c.out_dir);
}

TEST_CASE("invalid configurations") {
  RunConfig c;
  c.disc = -5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.disc = -4;
  c.rank = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.rank = 3;
  CHECK_NOTHROW(c.validate());
  CHECK(c.checkpoint_path().find("perfect_gl3_-4.jsonl") != std::string::npos);
  std::ostringstream out, err;
  c.disc = -12;
  CHECK(cmd_perfect_forms(c, out, err) == 3);
}

TEST_CASE("perfect-forms command json output") {
  RunConfig c;
  c.disc = -7;
  c.rank = 3;
  c.format = Format::json;
  c.out_dir = fresh_dir("hvor_cli_p");
  std::ostringstream out, err;
  CHECK(cmd_perfect_forms(c, out, err) == 0);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j.at("perfect_forms").at("count") == 2);
  std::filesystem::remove_all(c.out_dir);
}
