#include "hvor/report.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hvor {

using nlohmann::json;

std::vector<CensusEntry> census(const std::vector<PerfectFormRecord>& forms) {
  std::vector<CensusEntry> out;
  for (const auto& f : forms) {
    CensusEntry e;
    e.min_vectors = f.min_vectors.vectors.size();
    e.total_count = f.min_vectors.total_count;
    e.stabilizer_order = f.stabilizer_order;
    e.facets = f.cone.facets ? f.cone.facets->size() : dual_description(f.cone.generators).size();
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

json encode_multiset(const std::map<Integer, std::size_t>& m) {
  json out = json::array();
  for (const auto& [x, k] : m) out.push_back(json::array({x.get_str(), k}));
  return out;
}

std::map<Integer, std::size_t> decode_multiset(const json& j) {
  std::map<Integer, std::size_t> out;
  for (const auto& e : j) out[Integer(e.at(0).get<std::string>())] = e.at(1).get<std::size_t>();
  return out;
}

json encode_integers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::vector<Integer> decode_integers(const json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.emplace_back(x.get<std::string>());
  return out;
}

json encode_verification(const VerificationReport& r) {
  json mass;
  json partial = json::array();
  for (const auto& [dim, s] : r.mass.partial_sums) partial.push_back(json::array({dim, to_string(s)}));
  mass["partial_sums"] = std::move(partial);
  mass["total"] = to_string(r.mass.total);
  mass["ok"] = r.mass.ok();
  json chain;
  chain["failing"] = r.chain.failing;
  chain["ok"] = r.chain.ok();
  json xi;
  xi["is_cycle"] = r.xi.is_cycle;
  xi["all_top_orientable"] = r.xi.all_top_orientable;
  xi["vector"] = encode_integers(r.xi.vector);
  xi["ok"] = r.xi.ok();
  json rows;
  rows["nonzero_rows"] = r.rows.nonzero_rows;
  rows["bad_rows"] = r.rows.bad_rows;
  rows["ok"] = r.rows.ok();
  json primes;
  primes["admissible"] = r.primes.admissible;
  primes["seen"] = r.primes.seen;
  primes["violations"] = r.primes.violations;
  primes["ok"] = r.primes.ok();
  json out;
  out["mass_formula"] = std::move(mass);
  out["chain_identity"] = std::move(chain);
  out["xi_cycle"] = std::move(xi);
  out["top_rows"] = std::move(rows);
  out["torsion_primes"] = std::move(primes);
  out["ok"] = r.ok();
  return out;
}

VerificationReport decode_verification(const json& j) {
  VerificationReport r;
  for (const auto& e : j.at("mass_formula").at("partial_sums")) {
    r.mass.partial_sums[e.at(0).get<std::size_t>()] = parse_rational(e.at(1).get<std::string>());
  }
  r.mass.total = parse_rational(j.at("mass_formula").at("total").get<std::string>());
  r.chain.failing = j.at("chain_identity").at("failing").get<std::vector<std::size_t>>();
  r.xi.is_cycle = j.at("xi_cycle").at("is_cycle").get<bool>();
  r.xi.all_top_orientable = j.at("xi_cycle").at("all_top_orientable").get<bool>();
  r.xi.vector = decode_integers(j.at("xi_cycle").at("vector"));
  r.rows.nonzero_rows = j.at("top_rows").at("nonzero_rows").get<std::size_t>();
  r.rows.bad_rows = j.at("top_rows").at("bad_rows").get<std::vector<std::size_t>>();
  r.primes.admissible = j.at("torsion_primes").at("admissible").get<std::set<long>>();
  r.primes.seen = j.at("torsion_primes").at("seen").get<std::set<long>>();
  r.primes.violations = j.at("torsion_primes").at("violations").get<std::set<long>>();
  return r;
}

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

std::string to_json(const RunDocument& doc) {
  json j;
  j["disc"] = doc.disc;
  j["rank"] = doc.rank;
  json c = json::array();
  for (const auto& e : doc.census) {
    c.push_back({{"min_vectors", e.min_vectors},
                 {"total_count", e.total_count},
                 {"stabilizer_order", e.stabilizer_order.get_str()},
                 {"stabilizer_factored", format_order(e.stabilizer_order)},
                 {"facets", e.facets}});
  }
  j["perfect_forms"] = {{"count", doc.census.size()}, {"classes", std::move(c)}};
  if (doc.summary) {
    json rows = json::array();
    for (const auto& r : doc.summary->degrees) {
      rows.push_back({{"n", r.n},
                      {"cells", r.cells},
                      {"stabilizers", encode_multiset(r.stabilizer_orders)},
                      {"orientable", r.orientable},
                      {"nnz", r.nnz},
                      {"rank", r.rank},
                      {"elementary_divisors", encode_multiset(r.elementary_divisors)}});
    }
    j["table"] = std::move(rows);
  }
  if (doc.homology) {
    json groups = json::array();
    for (const auto& g : doc.homology->groups) {
      groups.push_back({{"n", g.n},
                        {"cohomology_degree", g.cohomology_degree},
                        {"free_rank", g.free_rank},
                        {"torsion", encode_multiset(g.torsion)},
                        {"group", g.str()}});
    }
    j["homology"] = {{"groups", std::move(groups)}, {"serre_primes", doc.homology->serre_primes}};
  }
  if (doc.verification) j["verification"] = encode_verification(*doc.verification);
  return j.dump(2);
}

RunDocument parse_run_document(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunDocument d;
    d.disc = j.at("disc").get<long>();
    d.rank = j.at("rank").get<std::size_t>();
    for (const auto& e : j.at("perfect_forms").at("classes")) {
      CensusEntry c;
      c.min_vectors = e.at("min_vectors").get<std::size_t>();
      c.total_count = e.at("total_count").get<std::size_t>();
      c.stabilizer_order = Integer(e.at("stabilizer_order").get<std::string>());
      c.facets = e.at("facets").get<std::size_t>();
      d.census.push_back(std::move(c));
    }
    if (j.contains("table")) {
      ComplexSummary s;
      s.disc = d.disc;
      s.rank = d.rank;
      for (const auto& r : j.at("table")) {
        DegreeSummary row;
        row.n = r.at("n").get<std::size_t>();
        row.cells = r.at("cells").get<std::size_t>();
        row.stabilizer_orders = decode_multiset(r.at("stabilizers"));
        row.orientable = r.at("orientable").get<std::size_t>();
        row.nnz = r.at("nnz").get<std::size_t>();
        row.rank = r.at("rank").get<std::size_t>();
        row.elementary_divisors = decode_multiset(r.at("elementary_divisors"));
        s.degrees.push_back(std::move(row));
      }
      d.summary = std::move(s);
    }
    if (j.contains("homology")) {
      HomologyResult h;
      for (const auto& g : j.at("homology").at("groups")) {
        HomologyGroup x;
        x.n = g.at("n").get<std::size_t>();
        x.cohomology_degree = g.at("cohomology_degree").get<std::size_t>();
        x.free_rank = g.at("free_rank").get<std::size_t>();
        x.torsion = decode_multiset(g.at("torsion"));
        h.groups.push_back(std::move(x));
      }
      h.serre_primes = j.at("homology").at("serre_primes").get<std::set<long>>();
      d.homology = std::move(h);
    }
    if (j.contains("verification")) d.verification = decode_verification(j.at("verification"));
    return d;
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed run document: ") + ex.what());
  }
}

void write_complex(const std::string& path, const VoronoiComplex& cx) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    json head{{"kind", "voronoi-complex"}, {"disc", cx.disc}, {"rank", cx.rank}};
    out << head.dump() << '\n';
    for (const auto& [dim, cells] : cx.cells) {
      const auto& inc = cx.incidences.at(dim);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        json vs = json::array();
        for (const auto& v : c.vectors) vs.push_back(encode_vector(v));
        json gens = json::array();
        for (const auto& g : c.stabilizer.generators) gens.push_back(encode_vector(g.entries()));
        json faces = json::array();
        for (const auto& f : inc[i]) faces.push_back(json::array({f.target, f.sign, f.multiplicity}));
        json line{{"dim", dim},
                  {"index", i},
                  {"vectors", std::move(vs)},
                  {"stabilizer_order", c.stabilizer.order.get_str()},
                  {"generators", std::move(gens)},
                  {"orientable", c.orientable},
                  {"basis", c.basis},
                  {"faces", std::move(faces)}};
        out << line.dump() << '\n';
      }
    }
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

VoronoiComplex read_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  VoronoiComplex cx;
  std::string line;
  try {
    if (!std::getline(in, line)) throw std::runtime_error("empty cell database " + path);
    const json head = json::parse(line);
    if (head.at("kind").get<std::string>() != "voronoi-complex") {
      throw std::runtime_error(path + " is not a cell database");
    }
    cx.disc = head.at("disc").get<long>();
    cx.rank = head.at("rank").get<std::size_t>();
    const std::size_t n = cx.rank;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const json j = json::parse(line);
      const std::size_t dim = j.at("dim").get<std::size_t>();
      Cell c;
      for (const auto& v : j.at("vectors")) c.vectors.push_back(decode_vector(cx.disc, v));
      c.dim = dim;
      c.stabilizer.order = Integer(j.at("stabilizer_order").get<std::string>());
      if (sgn(c.stabilizer.order) <= 0) throw std::runtime_error("nonpositive stabilizer order");
      c.stabilizer.order_factorization = factorize(c.stabilizer.order);
      for (const auto& g : j.at("generators")) {
        c.stabilizer.generators.emplace_back(cx.disc, n, decode_vector(cx.disc, g));
      }
      c.orientable = j.at("orientable").get<bool>();
      c.basis = j.at("basis").get<std::vector<std::size_t>>();
      std::vector<FaceIncidence> faces;
      for (const auto& f : j.at("faces")) {
        faces.push_back({f.at(0).get<std::size_t>(), f.at(1).get<int>(), f.at(2).get<std::size_t>()});
      }
      auto& cells = cx.cells[dim];
      if (j.at("index").get<std::size_t>() != cells.size()) {
        throw std::runtime_error("cell database out of order");
      }
      cells.push_back(std::move(c));
      cx.incidences[dim].push_back(std::move(faces));
    }
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed cell database: ") + ex.what());
  }
  for (std::size_t dim = cx.bottom_dim(); dim <= cx.top_dim(); ++dim) {
    cx.cells[dim];
    cx.incidences[dim].resize(cx.cells[dim].size());
  }
  assemble_differentials(cx);
  return cx;
}

namespace {

std::string divisor_list(const std::map<Integer, std::size_t>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, k] : m) {
    if (!first) os << ", ";
    first = false;
    os << d.get_str();
    if (k > 1) os << " (" << k << ')';
  }
  return os.str();
}

std::string stabilizer_list(const std::map<Integer, std::size_t>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [o, k] : m) {
    if (!first) os << ", ";
    first = false;
    os << format_order(o);
    if (k > 1) os << " (" << k << ')';
  }
  return os.str();
}

}  // namespace

std::string format_table(const ComplexSummary& s, const HomologyResult& h) {
  std::ostringstream os;
  os << "GL_" << s.rank << "(O_" << s.disc << ")\n";
  os << std::left << std::setw(4) << "n" << std::setw(7) << "|S*|" << std::setw(56) << "|Stab|"
     << std::setw(6) << "|S|" << std::setw(7) << "Omega" << std::setw(6) << "rank" << std::setw(22)
     << "elem. div." << "H_n\n";
  for (const auto& r : s.degrees) {
    std::string hn;
    for (const auto& g : h.groups) {
      if (g.n == r.n) hn = g.str();
    }
    os << std::left << std::setw(4) << r.n << std::setw(7) << r.cells << std::setw(56)
       << stabilizer_list(r.stabilizer_orders) << std::setw(6) << r.orientable << std::setw(7)
       << r.nnz << std::setw(6) << r.rank << std::setw(22)
       << (r.rank == 0 ? std::string() : divisor_list(r.elementary_divisors)) << hn << '\n';
  }
  os << "H_n(Vor) = H^(" << s.rank * s.rank - 1 << " - n)(GL_" << s.rank << ") away from primes {";
  bool first = true;
  for (long p : h.serre_primes) {
    os << (first ? "" : ", ") << p;
    first = false;
  }
  os << "}\n";
  return os.str();
}

std::string format_census(long disc, std::size_t rank, const std::vector<CensusEntry>& c) {
  std::ostringstream os;
  os << "perfect forms for GL_" << rank << "(O_" << disc << "): " << c.size() << '\n';
  os << std::left << std::setw(6) << "#" << std::setw(8) << "|M|" << std::setw(10) << "|M|*units"
     << std::setw(8) << "facets" << "|Stab|\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    os << std::left << std::setw(6) << i << std::setw(8) << c[i].min_vectors << std::setw(10)
       << c[i].total_count << std::setw(8) << c[i].facets << c[i].stabilizer_order.get_str() << " = "
       << format_order(c[i].stabilizer_order) << '\n';
  }
  return os.str();
}

std::string format_verification(const VerificationReport& r) {
  std::ostringstream os;
  os << "mass formula: " << (r.mass.ok() ? "pass" : "FAIL") << ", total " << to_string(r.mass.total) << '\n';
  for (const auto& [dim, s] : r.mass.partial_sums) os << "  dim " << dim << ": " << to_string(s) << '\n';
  os << "chain identity: " << (r.chain.ok() ? "pass" : "FAIL");
  for (std::size_t n : r.chain.failing) os << " d_" << n - 1 << "d_" << n;
  os << '\n';
  os << "top cycle xi: " << (r.xi.ok() ? "pass" : "FAIL") << ", vector (";
  for (std::size_t i = 0; i < r.xi.vector.size(); ++i) os << (i ? ", " : "") << r.xi.vector[i].get_str();
  os << ")\n";
  os << "top differential rows: " << (r.rows.ok() ? "two-entry shape" : "shape differs") << " ("
     << r.rows.nonzero_rows << " nonzero rows, " << r.rows.bad_rows.size() << " other)\n";
  os << "torsion primes: " << (r.primes.ok() ? "pass" : "FAIL") << ", seen {";
  bool first = true;
  for (long p : r.primes.seen) {
    os << (first ? "" : ", ") << p;
    first = false;
  }
  os << "}\n";
  return os.str();
}

}  // namespace hvor
