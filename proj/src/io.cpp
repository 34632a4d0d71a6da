#include "cyclic/io.hpp"

#include <algorithm>

namespace cyclic {

using nlohmann::json;

namespace {

json simplex_list(const std::vector<Simplex>& list) {
  json out = json::array();
  for (Simplex s : list) out.push_back(s.vertices());
  return out;
}

void put_ground(json& j, VertexSet ground) {
  j["n"] = ground.max();
  if (ground != VertexSet::range(ground.max())) j["vertices"] = ground.vertices();
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<Vertex> vertex_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw InvalidInput(where + " must be a list of vertices");
  std::vector<Vertex> out;
  for (const json& x : v) {
    if (!x.is_number_integer()) throw InvalidInput(where + " contains a non-integer entry");
    out.push_back(x.get<Vertex>());
  }
  return out;
}

VertexSet read_ground(const json& j) {
  const int n = int_field(j, "n");
  if (n < 1 || n > kMaxVertex) throw InvalidInput("n must lie in 1.." + std::to_string(kMaxVertex));
  if (!j.contains("vertices")) return VertexSet::range(n);
  const auto v = vertex_list(j["vertices"], "\"vertices\"");
  const VertexSet ground(v);
  if (ground.max() != n) throw InvalidInput("\"n\" must equal the largest entry of \"vertices\"");
  return ground;
}

std::vector<Simplex> read_simplices(const json& j, const char* name, int n) {
  const json& list = field(j, name);
  if (!list.is_array()) throw InvalidInput(std::string("field \"") + name + "\" must be a list");
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = std::string(name) + "[" + std::to_string(i) + "]";
    const auto v = vertex_list(list[i], where);
    for (Vertex x : v)
      if (x < 1 || x > n) throw InvalidInput(where + " has vertex " + std::to_string(x) + " outside [1, n]");
    try {
      out.emplace_back(std::span<const Vertex>(v));
    } catch (const InvalidInput& e) {
      throw InvalidInput(where + ": " + e.what());
    }
  }
  return out;
}

Rational rational_from(const json& v) {
  if (!v.is_string()) throw InvalidInput("rational values are written as strings");
  try {
    return Rational(v.get<std::string>());
  } catch (const std::exception&) {
    throw InvalidInput("bad rational \"" + v.get<std::string>() + "\"");
  }
}

json pair_json(const std::array<Rational, 2>& p) { return json::array({p[0].str(), p[1].str()}); }

std::array<Rational, 2> pair_from(const json& v) {
  if (!v.is_array() || v.size() != 2) throw InvalidInput("expected a pair of rationals");
  return {rational_from(v[0]), rational_from(v[1])};
}

}  // namespace

json to_json(const Complex& f) {
  json j;
  j["d"] = f.d.value();
  put_ground(j, f.ground);
  j["simplices"] = simplex_list(f.simplices);
  return j;
}

json to_json(const Triangulation& t) {
  json j;
  j["d"] = t.d.value();
  put_ground(j, t.ground);
  j["facets"] = simplex_list(t.facets);
  return j;
}

json to_json(const SearchStats& s) {
  return {{"nodes", s.nodes}, {"interlace_tests", s.interlace_tests}, {"dead_ends", s.dead_ends},
          {"completions", s.completions}};
}

json to_json(const Certificate& c) {
  json j;
  j["verdict"] = std::string(to_string(c.verdict));
  j["method"] = c.method;
  j["stats"] = to_json(c.stats);
  if (c.witness) j["witness"] = to_json(*c.witness);
  if (c.gale) {
    json g;
    g["vectors"] = json::array();
    for (const auto& v : c.gale->vectors) g["vectors"].push_back(pair_json(v));
    g["spanning_pairs"] = json::array();
    for (auto [a, b] : c.gale->spanning) g["spanning_pairs"].push_back({a, b});
    if (c.gale->interior) g["interior_point"] = pair_json(*c.gale->interior);
    j["gale"] = g;
  }
  return j;
}

Complex complex_from_json(const json& j) {
  const VertexSet ground = read_ground(j);
  const int d = int_field(j, "d");
  if (d < 1) throw InvalidInput("d must be >= 1");
  return Complex::make(ground, Dim(d), read_simplices(j, "simplices", ground.max()));
}

std::vector<Simplex> simplices_from_json(const json& j) {
  return read_simplices(j, "simplices", read_ground(j).max());
}

Triangulation triangulation_from_json(const json& j) {
  const VertexSet ground = read_ground(j);
  const int d = int_field(j, "d");
  if (d < 1) throw InvalidInput("d must be >= 1");
  return Triangulation::make(ground, Dim(d), read_simplices(j, "facets", ground.max()));
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  const json& verdict = field(j, "verdict");
  bool known = false;
  for (Verdict v : {Verdict::Extendable, Verdict::NonExtendable, Verdict::Indeterminate})
    if (verdict == std::string(to_string(v))) {
      c.verdict = v;
      known = true;
    }
  if (!known) throw InvalidInput("unknown verdict " + verdict.dump());
  c.method = field(j, "method").get<std::string>();
  const json& s = field(j, "stats");
  c.stats = SearchStats{field(s, "nodes").get<std::uint64_t>(), field(s, "interlace_tests").get<std::uint64_t>(),
                        field(s, "dead_ends").get<std::uint64_t>(), field(s, "completions").get<std::uint64_t>()};
  if (j.contains("witness")) c.witness = triangulation_from_json(j["witness"]);
  if (j.contains("gale")) {
    const json& g = j["gale"];
    GaleData data;
    for (const json& v : field(g, "vectors")) data.vectors.push_back(pair_from(v));
    for (const json& p : field(g, "spanning_pairs")) data.spanning.emplace_back(p.at(0).get<Vertex>(), p.at(1).get<Vertex>());
    if (g.contains("interior_point")) data.interior = pair_from(g["interior_point"]);
    c.gale = std::move(data);
  }
  return c;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    throw ParseError(cut == std::string::npos ? what : what.substr(cut), line, column);
  }
}

Complex parse_instance(std::string_view text) { return complex_from_json(parse_json(text)); }
Triangulation parse_triangulation(std::string_view text) { return triangulation_from_json(parse_json(text)); }
Certificate parse_certificate(std::string_view text) { return certificate_from_json(parse_json(text)); }

}  // namespace cyclic
