// Command-line front end: verification suites, catalog export, adjacency graph.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tern/verify.hpp"

using namespace tern;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Common {
  int q = 0;
  std::string modulus;
  std::string format;
  std::string out;
  std::uint64_t seed = 1;
  bool allow_large = false;
};

std::optional<std::vector<int>> parse_modulus(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<int> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad modulus coefficient: " + item);
    coeffs.push_back(v);
  }
  return coeffs;
}

const Field& resolve_field(const Common& c) {
  if (c.q < 2) throw FieldError("q must be a prime power >= 2");
  return Field::of_order(c.q, parse_modulus(c.modulus));
}

std::uint64_t budget_for(const Common& c) {
  return c.allow_large ? std::numeric_limits<std::uint64_t>::max() : enumeration_budget();
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + c.out + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + c.out + " failed");
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--q", c.q, "field order (prime power)")->required();
  app->add_option("--modulus", c.modulus, "irreducible modulus, comma-separated coefficients, low degree first");
  app->add_option("--out", c.out, "output file (default: stdout)");
  app->add_option("--seed", c.seed, "seed for sampled checks");
  app->add_flag("--allow-large", c.allow_large, "lift the enumeration budget");
}

std::string join_entries(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string csv_basis(const Subspace& s) {
  std::string out;
  for (int i = 0; i < s.dim(); ++i) out += (i ? ";" : "") + join_entries(s.row(i));
  return out;
}

std::string csv_pair(const TernionPair& v) {
  return join_entries({v.a.x(), v.a.y(), v.a.z()}) + ";" + join_entries({v.b.x(), v.b.y(), v.b.z()});
}

std::vector<SubmoduleType> types_for(const std::string& set) {
  if (set == "all") return {kNonzeroTypes.begin(), kNonzeroTypes.end()};
  for (auto t : kNonzeroTypes)
    if (set_tag(t) == set) return {t};
  throw std::invalid_argument("unknown set: " + set);
}

int cmd_verify(const Common& c, const std::string& suite, int trials, int controls, int recipes) {
  RunConfig config;
  config.q = c.q;
  config.modulus = parse_modulus(c.modulus);
  config.suite = suite;
  config.seed = c.seed;
  config.budget = budget_for(c);
  config.thm1_trials = trials;
  config.thm1_controls = controls;
  config.preserver_recipes = recipes;
  resolve_field(c);
  const auto result = run_verify(config);
  emit(c, result.report.dump(2) + "\n");
  std::cerr << text_summary(result);
  return result.pass ? 0 : kExitFail;
}

int cmd_enumerate(const Common& c, const std::string& set) {
  const Field& f = resolve_field(c);
  const auto types = types_for(set);
  const auto cat = build_catalog(f, budget_for(c));
  if (c.format == "csv") {
    std::string out = "type,index,dim,basis,generator\n";
    for (auto t : types)
      for (std::size_t i = 0; i < cat.count(t); ++i) {
        const auto& e = cat.entries(t)[i];
        out += std::string(type_name(t)) + "," + std::to_string(i) + "," + std::to_string(e.span.dim()) + "," +
               csv_basis(e.span) + "," + csv_pair(e.witness) + "\n";
      }
    emit(c, out);
    return 0;
  }
  Json sets = Json::array();
  std::size_t total = 0;
  for (auto t : types) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < cat.count(t); ++i) {
      const auto& e = cat.entries(t)[i];
      entries.push_back({{"index", i}, {"basis", to_json(e.span)}, {"generator", to_json(e.witness)}});
    }
    total += cat.count(t);
    sets.push_back({{"type", type_name(t)}, {"tag", set_tag(t)}, {"count", cat.count(t)}, {"entries", entries}});
  }
  emit(c, Json{{"field", field_json(f)}, {"q", c.q}, {"sets", sets}, {"total", total}}.dump(2) + "\n");
  return 0;
}

int cmd_graph(const Common& c) {
  const Field& f = resolve_field(c);
  const auto cat = build_catalog(f, budget_for(c));
  const AdjacencyGraph g(cat);
  const auto fam = clique_family(cat, g);
  // Clique id of a vertex: position of the alpha line P with Z in [P, P + J]_3.
  std::vector<int> clique(g.size(), -1);
  for (std::size_t p = 0; p < fam.by_alpha.size(); ++p)
    for (int v : fam.by_alpha[p]) clique[v] = static_cast<int>(p);
  auto label = [&](int v) {
    return std::string(type_name(g.type(v))) + std::to_string(g.is_x(v) ? v : v - g.num_x());
  };
  std::size_t from_cliques = fam.y_pencil.size() * (fam.y_pencil.size() - 1) / 2;
  for (const auto& cl : fam.by_alpha) from_cliques += cl.size() * (cl.size() - 1) / 2;

  if (c.format == "json") {
    Json vertices = Json::array();
    for (int v = 0; v < g.size(); ++v)
      vertices.push_back({{"id", v}, {"label", label(v)}, {"type", type_name(g.type(v))}, {"clique", clique[v]},
                          {"basis", to_json(g.vertex(v))}});
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    emit(c, Json{{"q", c.q},
                 {"vertices", vertices},
                 {"edges", edges},
                 {"edge_count", g.edge_count()},
                 {"edge_count_from_cliques", from_cliques}}
                    .dump(2) +
                "\n");
  } else if (c.format == "dot") {
    std::string out = "graph adjacency {\n";
    out += "  // q = " + std::to_string(c.q) + ", " + std::to_string(g.size()) + " vertices, " +
           std::to_string(g.edge_count()) + " edges\n";
    for (int v = 0; v < g.size(); ++v)
      out += "  " + std::to_string(v) + " [label=\"" + label(v) + "\", type=\"" + std::string(type_name(g.type(v))) +
             "\", clique=" + std::to_string(clique[v]) + (g.is_x(v) ? "" : ", shape=box") + "];\n";
    for (auto [a, b] : g.edges()) out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    out += "}\n";
    emit(c, out);
  } else {
    throw std::invalid_argument("graph format must be dot or json");
  }
  if (g.edge_count() != from_cliques) {
    std::cerr << "edge count " << g.edge_count() << " differs from the clique count " << from_cliques << "\n";
    return kExitFail;
  }
  return 0;
}

int cmd_incidence(const Common& c) {
  const Field& f = resolve_field(c);
  const auto cat = build_catalog(f, budget_for(c));
  const auto q = static_cast<std::uint64_t>(f.order());
  std::string csv = "P0,X,Y,alpha,beta,gamma,elements,uniform,matches_closed_form\n";
  Json rows = Json::object();
  bool ok = true;
  for (auto t : kNonzeroTypes) {
    const auto first = incidence_counts(cat.entries(t).front().span, cat);
    bool uniform = true;
    for (const auto& e : cat.entries(t)) uniform = uniform && incidence_counts(e.span, cat) == first;
    const bool matches = first == expected_incidence_row(t, q);
    ok = ok && uniform && matches;
    csv += std::string(type_name(t));
    for (auto v : first) csv += "," + std::to_string(v);
    csv += "," + std::to_string(cat.count(t)) + "," + (uniform ? "true" : "false") + "," + (matches ? "true" : "false") +
           "\n";
    rows[std::string(type_name(t))] = {{"row", to_json(first)}, {"uniform", uniform}, {"matches_closed_form", matches}};
  }
  if (c.format == "json")
    emit(c, Json{{"q", c.q}, {"columns", {"X", "Y", "alpha", "beta", "gamma"}}, {"rows", rows}}.dump(2) + "\n");
  else
    emit(c, csv);
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free cyclic submodules of T^2 over GF(q) and their plane model in PG(5, q)"};
  app.require_subcommand(1);

  Common c;
  std::string suite = "all";
  std::string set = "all";
  int trials = 100, controls = 1000, recipes = 20;

  auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  add_common(verify, c);
  verify->add_option("--suite", suite, "suite to run")
      ->check(CLI::IsMember({"all", "counts", "incidence", "adjacency", "lemmas", "thm1", "thm2", "remark"}));
  verify->add_option("--format", c.format, "report format")->check(CLI::IsMember({"json"}));
  verify->add_option("--trials", trials, "random semilinear maps per theorem check")->check(CLI::PositiveNumber);
  verify->add_option("--controls", controls, "random non-block matrices")->check(CLI::NonNegativeNumber);
  verify->add_option("--recipes", recipes, "random preserver recipes")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "write the catalog or one of its sets");
  add_common(enumerate, c);
  enumerate->add_option("--set", set, "which set")
      ->check(CLI::IsMember({"gx", "gy", "galpha", "gbeta", "ggamma", "all"}));
  enumerate->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* graph = app.add_subcommand("graph", "write the adjacency graph of the free planes");
  add_common(graph, c);
  graph->add_option("--format", c.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* incidence = app.add_subcommand("incidence", "write the incidence table");
  add_common(incidence, c);
  incidence->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(c, suite, trials, controls, recipes);
    if (*enumerate) {
      if (c.format.empty()) c.format = "json";
      return cmd_enumerate(c, set);
    }
    if (*graph) {
      if (c.format.empty()) c.format = "dot";
      return cmd_graph(c);
    }
    if (*incidence) {
      if (c.format.empty()) c.format = "csv";
      return cmd_incidence(c);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
