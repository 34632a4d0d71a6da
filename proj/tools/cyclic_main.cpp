// cyclic: command-line driver. Reports go to stdout as JSON, timing to stderr.
// Exit codes: 0 success or extendable, 2 invalid input or failed validation,
// 3 budget exhausted or indeterminate, 4 certified non-extendable.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cyclic/io.hpp"

using namespace cyclic;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitNonExtendable = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(2) << '\n';
}

// FNV-1a, enough to tell inputs apart in reports.
std::string digest(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

struct Options {
  std::string input;
  std::string output;
  std::string strategy = "greedy";
  std::string method = "search";
  std::string check;
  std::string export_path;
  std::string family = "rambau";
  std::uint64_t budget = kDefaultNodeBudget;
  int n = 0;
  int d = 0;
  int times = 1;
  int attempts = 40;
  std::uint64_t seed = 1;
};

json report(const std::string& command, const std::string& input_text) {
  json r;
  r["command"] = command;
  if (!input_text.empty()) r["input_digest"] = digest(input_text);
  return r;
}

int run_classify(const Options& o) {
  const std::string text = read_file(o.input);
  const json j = parse_json(text);
  const std::vector<Simplex> list = simplices_from_json(j);
  if (o.d <= 0 && !(j.contains("d") && j["d"].is_number_integer())) throw InvalidInput("missing integer field \"d\"");
  const Dim d(o.d > 0 ? o.d : j["d"].get<int>());
  json r = report("classify", text);
  r["d"] = d.value();
  r["simplices"] = json::array();
  for (Simplex s : list) r["simplices"].push_back(s.vertices());
  json matrix = json::array();
  for (Simplex a : list) {
    json row = json::array();
    for (Simplex b : list) row.push_back(a == b ? "-" : std::string(to_string(classify_pair(a, b, d))));
    matrix.push_back(row);
  }
  r["classes"] = matrix;
  std::cout << r.dump(2) << '\n';
  return kExitOk;
}

int run_extend(const Options& o) {
  const std::string text = read_file(o.input);
  const Complex f = parse_instance(text);
  json r = report("extend", text);
  r["strategy"] = o.strategy;
  try {
    const ExtensionResult res = o.strategy == "constructive" ? constructive_extend(f, o.budget) : greedy_extend(f);
    r["status"] = "ok";
    r["triangulation"] = to_json(res.triangulation);
    r["stats"] = to_json(res.stats);
    r["steps"] = res.steps;
    if (!o.output.empty()) write_file(o.output, to_json(res.triangulation));
    std::cout << r.dump(2) << '\n';
    return kExitOk;
  } catch (const GreedyStuck& e) {
    r["status"] = "stuck";
    r["message"] = e.what();
    r["stuck_ridge"] = e.ridge.vertices();
    r["partial_facets"] = json::array();
    for (Simplex s : e.facets) r["partial_facets"].push_back(s.vertices());
    r["steps"] = e.steps;
    std::cout << r.dump(2) << '\n';
    return kExitInvalid;
  }
}

int run_certify(const Options& o) {
  const std::string text = read_file(o.input);
  const Complex f = parse_instance(text);
  const Certificate c = o.method == "gale" ? gale_dual_check(f) : verify_nonextendable(f, o.budget);
  json r = report("certify", text);
  r["certificate"] = to_json(c);
  if (!o.output.empty()) write_file(o.output, to_json(c));
  std::cout << r.dump(2) << '\n';
  switch (c.verdict) {
    case Verdict::Extendable: return kExitOk;
    case Verdict::NonExtendable: return kExitNonExtendable;
    case Verdict::Indeterminate: return kExitBudget;
  }
  return kExitInvalid;
}

int run_validate(const Options& o) {
  const std::string text = read_file(o.input);
  const Triangulation t = parse_triangulation(text);
  const ValidityReport v = validate(t);
  json r = report("validate", text);
  r["valid"] = v.ok;
  r["failures"] = json::array();
  for (const auto& fail : v.failures) {
    json w = json::array();
    for (Simplex s : fail.witness) w.push_back(s.vertices());
    r["failures"].push_back({{"kind", std::string(to_string(fail.kind))}, {"witness", w}});
  }
  std::cout << r.dump(2) << '\n';
  return v.ok ? kExitOk : kExitInvalid;
}

int run_poset(const Options& o) {
  const HSTPoset p = hst_poset(o.n, Dim(o.d), o.budget);
  json r = report("poset", "");
  r["n"] = o.n;
  r["d"] = o.d;
  r["size"] = p.elements.size();
  r["covers"] = p.covers.size();
  if (o.check == "lattice") {
    r["lattice"] = p.is_lattice();
  } else if (o.check == "meet-intersection") {
    const auto bad = meet_intersection_violation(p);
    r["meet_intersection"] = !bad.has_value();
    if (bad) r["witness"] = {to_json(p.elements[bad->first]), to_json(p.elements[bad->second])};
  } else if (!o.check.empty()) {
    throw InvalidInput("unknown check " + o.check);
  }
  if (!o.export_path.empty()) {
    std::ofstream out(o.export_path);
    if (!out) throw InvalidInput("cannot write " + o.export_path);
    out << "digraph hst {\n";
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
      out << "  t" << i << " [label=\"";
      for (Simplex f : p.elements[i].facets) out << f.to_string();
      out << "\"];\n";
    }
    for (auto [lo, hi] : p.covers) out << "  t" << lo << " -> t" << hi << ";\n";
    out << "}\n";
  }
  std::cout << r.dump(2) << '\n';
  return kExitOk;
}

Complex random_family(int n, int d, int attempts, std::uint64_t seed) {
  if (n < d + 1 || n > kMaxVertex) throw Unsupported("random family needs d+1 <= n <= 63");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  std::uniform_int_distribution<int> size(1, d + 1);
  std::vector<Simplex> kept;
  for (int a = 0; a < attempts; ++a) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> pick(all.begin(), all.begin() + size(rng));
    std::sort(pick.begin(), pick.end());
    const Simplex s{std::span<const Vertex>(pick)};
    if (std::none_of(kept.begin(), kept.end(), [&](Simplex t) { return t == s || overlaps(s, t, Dim(d)); }))
      kept.push_back(s);
  }
  return Complex::make(n, Dim(d), kept);
}

int run_generate(const Options& o) {
  Complex f = rambau_example();
  if (o.family == "random") {
    f = random_family(o.n, o.d, o.attempts, o.seed);
  } else if (o.family == "lift-n" || o.family == "lift-d") {
    if (!o.input.empty()) f = parse_instance(read_file(o.input));
    for (int i = 0; i < o.times; ++i) f = o.family == "lift-n" ? lift_n(f) : lift_D(f);
  } else if (o.family != "rambau") {
    throw InvalidInput("unknown family " + o.family);
  }
  const json out = to_json(f);
  if (!o.output.empty()) write_file(o.output, out);
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulations of cyclic polytopes: extension and non-extendability"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "pair classes of all simplices in an instance");
  classify->add_option("file", o.input, "instance file")->required();
  classify->add_option("--d", o.d, "override the dimension");

  auto* extend = app.add_subcommand("extend", "extend an instance to a triangulation");
  extend->add_option("file", o.input, "instance file")->required();
  extend->add_option("--strategy", o.strategy)->check(CLI::IsMember({"greedy", "constructive"}));
  extend->add_option("--budget", o.budget, "node budget for enumeration");
  extend->add_option("-o,--output", o.output, "write the triangulation here");

  auto* certify = app.add_subcommand("certify", "decide extendability");
  certify->add_option("file", o.input, "instance file")->required();
  certify->add_option("--method", o.method)->check(CLI::IsMember({"search", "gale"}));
  certify->add_option("--budget", o.budget, "node budget for the search");
  certify->add_option("-o,--output", o.output, "write the certificate here");

  auto* valid = app.add_subcommand("validate", "check a triangulation file");
  valid->add_option("file", o.input, "triangulation file")->required();

  auto* poset = app.add_subcommand("poset", "enumerate S(n,d) and inspect HST(n,d)");
  poset->add_option("--n", o.n)->required();
  poset->add_option("--d", o.d)->required();
  poset->add_option("--check", o.check)->check(CLI::IsMember({"lattice", "meet-intersection"}));
  poset->add_option("--export", o.export_path, "DOT file of covering relations");
  poset->add_option("--budget", o.budget, "node budget for enumeration");

  auto* generate = app.add_subcommand("generate", "write an instance file");
  generate->add_option("--family", o.family)->check(CLI::IsMember({"rambau", "lift-n", "lift-d", "random"}));
  generate->add_option("--input", o.input, "family to lift (default: the Rambau example)");
  generate->add_option("--times", o.times, "number of lifts");
  generate->add_option("--n", o.n);
  generate->add_option("--d", o.d);
  generate->add_option("--attempts", o.attempts, "random simplices tried");
  generate->add_option("--seed", o.seed);
  generate->add_option("-o,--output", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitInvalid;
  try {
    if (*classify) code = run_classify(o);
    else if (*extend) code = run_extend(o);
    else if (*certify) code = run_certify(o);
    else if (*valid) code = run_validate(o);
    else if (*poset) code = run_poset(o);
    else if (*generate) code = run_generate(o);
  } catch (const ResourceExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    code = kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kExitInvalid;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "elapsed " << std::fixed << std::setprecision(1) << ms << " ms\n";
  return code;
}
