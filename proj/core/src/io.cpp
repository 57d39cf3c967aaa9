#include "hvor/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hvor {

namespace {

using nlohmann::json;

json encode_vector(const OVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(json::array({x.a().get_str(), x.b().get_str()}));
  return out;
}

OVector decode_vector(long disc, const json& j) {
  OVector v;
  for (const auto& x : j) {
    v.emplace_back(disc, Integer(x.at(0).get<std::string>()), Integer(x.at(1).get<std::string>()));
  }
  return v;
}

}  // namespace

std::string checkpoint_line(long disc, std::size_t n, const CheckpointEntry& e) {
  json j;
  j["disc"] = disc;
  j["rank"] = n;
  json coords = json::array();
  for (const auto& c : e.form.coords()) coords.push_back(to_string(c));
  j["coords"] = std::move(coords);
  json mv = json::array();
  for (const auto& v : e.min_vectors) mv.push_back(encode_vector(v));
  j["min_vectors"] = std::move(mv);
  j["explored"] = e.explored;
  json nb = json::array();
  for (const auto& [f, c] : e.neighbors) nb.push_back(json::array({f, c}));
  j["neighbors"] = std::move(nb);
  return j.dump();
}

CheckpointEntry parse_checkpoint_line(const std::string& line, long disc, std::size_t n) {
  try {
    const json j = json::parse(line);
    if (j.at("disc").get<long>() != disc || j.at("rank").get<std::size_t>() != n) {
      throw std::runtime_error("checkpoint belongs to a different (disc, rank)");
    }
    CheckpointEntry e;
    CoordVector c;
    for (const auto& x : j.at("coords")) c.push_back(parse_rational(x.get<std::string>()));
    e.form = HermitianForm::from_coords(disc, n, c);
    for (const auto& v : j.at("min_vectors")) e.min_vectors.push_back(decode_vector(disc, v));
    e.explored = j.at("explored").get<bool>();
    for (const auto& p : j.at("neighbors")) {
      e.neighbors.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
    }
    return e;
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed checkpoint line: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("malformed checkpoint line: ") + ex.what());
  }
}

void write_checkpoint(const std::string& path, long disc, std::size_t n,
                      const std::vector<CheckpointEntry>& entries) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    for (const auto& e : entries) out << checkpoint_line(disc, n, e) << '\n';
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::vector<CheckpointEntry> read_checkpoint(const std::string& path, long disc, std::size_t n) {
  std::vector<CheckpointEntry> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_checkpoint_line(line, disc, n));
  }
  return out;
}

}  // namespace hvor
