#pragma once

/**
 * @file verify.hpp
 * @brief Verification suites and their JSON report.
 *
 * Every check carries a claim identifier, a PASS/FAIL status and the data
 * needed to redo it by hand. Suites appear in the report sorted by name and
 * contain no timing, so equal configurations give equal bytes.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tern/adjacency.hpp"
#include "tern/collineation.hpp"
#include "tern/incidence.hpp"
#include "tern/lemmas.hpp"
#include "tern/model.hpp"
#include "tern/preserver.hpp"
#include "tern/rng.hpp"
#include "tern/xi.hpp"

namespace tern {

using Json = nlohmann::json;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"adjacency", "counts", "incidence", "lemmas",
                                                 "remark",    "thm1",   "thm2"};
  return names;
}

struct RunConfig {
  int q = 2;
  std::optional<std::vector<int>> modulus;
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::uint64_t budget = enumeration_budget();
  int thm1_trials = 100;
  int thm1_controls = 1000;
  int preserver_recipes = 20;
};

// --- JSON helpers ------------------------------------------------------------------------

inline Json to_json(const Vec& v) {
  Json out = Json::array();
  for (Elem e : v) out.push_back(static_cast<int>(e));
  return out;
}

inline Json to_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& r : s.rows()) out.push_back(to_json(r));
  return out;
}

inline Json to_json(const Ternion& t) { return Json::array({t.x(), t.y(), t.z()}); }
inline Json to_json(const TernionPair& v) { return Json::array({to_json(v.a), to_json(v.b)}); }
inline Json to_json(const TernionMatrix2& s) {
  return Json::array({Json::array({to_json(s.a()), to_json(s.b())}), Json::array({to_json(s.c()), to_json(s.d())})});
}
inline Json to_json(const IncidenceRow& r) {
  Json out = Json::array();
  for (auto v : r) out.push_back(v);
  return out;
}

inline Json field_json(const Field& f) {
  return {{"order", f.order()}, {"characteristic", f.characteristic()}, {"degree", f.degree()},
          {"modulus", f.modulus()}};
}

// --- the verifier --------------------------------------------------------------------------

struct Check {
  std::string id;
  std::string claim;
  bool pass = false;
  Json detail = Json::object();
};

class Verifier {
 public:
  explicit Verifier(RunConfig config)
      : config_(std::move(config)), field_(&Field::of_order(config_.q, config_.modulus)) {}

  const Catalog& catalog() {
    if (!catalog_) catalog_ = std::make_unique<Catalog>(build_catalog(*field_, config_.budget));
    return *catalog_;
  }
  const AdjacencyGraph& graph() {
    if (!graph_) graph_ = std::make_unique<AdjacencyGraph>(catalog());
    return *graph_;
  }
  const CliqueFamily& cliques() {
    if (!family_) family_ = std::make_unique<CliqueFamily>(clique_family(catalog(), graph()));
    return *family_;
  }
  const std::vector<Subspace>& lemma_lines() {
    if (!lines_) lines_ = scan_lines(catalog(), config_.budget);
    return *lines_;
  }
  const std::vector<Subspace>& lemma_solids() {
    if (!solids_) solids_ = scan_solids(catalog(), config_.budget);
    return *solids_;
  }

  std::vector<Check> run_suite(const std::string& name) {
    // Each suite draws from its own stream so that suite selection does not
    // change the samples.
    std::uint64_t h = 14695981039346656037ULL;  // FNV-1a
    for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ULL;
    Rng rng(config_.seed ^ h);
    if (name == "counts") return counts();
    if (name == "incidence") return incidence(rng);
    if (name == "adjacency") return adjacency(rng);
    if (name == "lemmas") return lemmas();
    if (name == "thm1") return thm1(rng);
    if (name == "thm2") return thm2();
    if (name == "remark") return remark(rng);
    throw std::invalid_argument("unknown suite: " + name);
  }

  std::vector<Check> counts();
  std::vector<Check> incidence(Rng& rng);
  std::vector<Check> adjacency(Rng& rng);
  std::vector<Check> lemmas();
  std::vector<Check> thm1(Rng& rng);
  std::vector<Check> thm2();
  std::vector<Check> remark(Rng& rng);

  const RunConfig& config() const { return config_; }
  const Field& field() const { return *field_; }

 private:
  RunConfig config_;
  const Field* field_;
  std::unique_ptr<Catalog> catalog_;
  std::unique_ptr<AdjacencyGraph> graph_;
  std::unique_ptr<CliqueFamily> family_;
  std::optional<std::vector<Subspace>> lines_;
  std::optional<std::vector<Subspace>> solids_;
};

namespace detail {

/// Indices 0..n-1 when n <= limit, otherwise `limit` distinct sorted samples.
inline std::vector<int> sample_indices(int n, int limit, Rng& rng) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (n <= limit) return all;
  const auto p = rng.permutation(n);
  std::vector<int> out(p.begin(), p.begin() + limit);
  std::sort(out.begin(), out.end());
  return out;
}

inline Json subspace_list(const std::vector<Subspace>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

inline TernionSemilinear random_semilinear(const Field& f, Rng& rng) {
  Ternion u = rng.ternion(f);
  while (!u.is_unit()) u = rng.ternion(f);
  const auto sigma = rng.automorphism(f);
  return {u, sigma, rng.gl2(f)};
}

}  // namespace detail

inline std::vector<Check> Verifier::counts() {
  const Catalog& cat = catalog();
  const auto q = static_cast<std::uint64_t>(cat.q());
  std::vector<Check> out;

  {
    Check c{"prop:orbits", "nonzero cyclic submodules number q(q+1)^2, q+1, q+1, q^3+q^2, q+1 by type"};
    const auto expected = expected_counts(q);
    c.pass = true;
    for (auto t : kNonzeroTypes) {
      c.detail["found"][std::string(type_name(t))] = cat.count(t);
      c.detail["expected"][std::string(type_name(t))] = expected[type_index(t)];
      c.pass = c.pass && cat.count(t) == expected[type_index(t)];
    }
    c.detail["generators"] = cat.generators_scanned();
    c.detail["distinct"] = cat.total();
    out.push_back(std::move(c));
  }
  {
    Check c{"prop:distinct", "distinct cyclic submodules give distinct subspaces of the expected dimensions"};
    std::set<std::set<Vec>> member_sets;
    bool dims = true;
    for (auto t : kNonzeroTypes)
      for (const auto& e : cat.entries(t)) {
        const int want = t == SubmoduleType::X || t == SubmoduleType::Y ? 3 : t == SubmoduleType::Alpha ? 2 : 1;
        dims = dims && e.span.dim() == want;
        std::set<Vec> members;
        const Field& f = cat.field();
        for (int x = 0; x < f.order(); ++x)
          for (int y = 0; y < f.order(); ++y)
            for (int z = 0; z < f.order(); ++z)
              members.insert(phi(left_multiply(
                  Ternion(f, static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z)), e.witness)));
        member_sets.insert(std::move(members));
      }
    c.detail["distinct_member_sets"] = member_sets.size();
    c.detail["dimensions_ok"] = dims;
    c.pass = dims && member_sets.size() == cat.total();
    out.push_back(std::move(c));
  }
  {
    Check c{"classify", "decision tree, rank classifier and unimodularity agree on every generator"};
    std::size_t mismatches = 0, unimodular = 0, checked = 0;
    for (const auto& v : all_pairs(cat.field())) {
      const auto t = classify(v);
      const bool uni = is_unimodular(v);
      unimodular += uni ? 1 : 0;
      ++checked;
      if (t != classify_by_rank(v, cat.flats()) || uni != (t == SubmoduleType::X)) ++mismatches;
    }
    c.detail = {{"generators", checked}, {"unimodular", unimodular}, {"mismatches", mismatches}};
    c.pass = mismatches == 0;
    out.push_back(std::move(c));
  }
  {
    const bool full = cat.q() <= 3 && gaussian_binomial(6, 3, q) <= config_.budget;
    const auto geo = characterize_geometrically(cat.field(), cat.flats(), cat.quadric(),
                                                full ? PlaneScan::Full : PlaneScan::Targeted, config_.budget);
    const std::string scan = full ? "full plane scan" : "planes through alpha lines";
    auto add = [&](std::string id, std::string claim, const std::vector<Subspace>& found, SubmoduleType t) {
      Check c{std::move(id), std::move(claim)};
      c.pass = found == cat.spans(t);
      c.detail = {{"geometric", found.size()}, {"catalog", cat.count(t)}};
      if (t == SubmoduleType::X) c.detail["scan"] = scan;
      out.push_back(std::move(c));
    };
    add("prop:gamma", "gamma submodules are the points of L", geo.gamma, SubmoduleType::Gamma);
    add("prop:beta", "beta submodules are the points of J off L", geo.beta, SubmoduleType::Beta);
    add("prop:alpha", "alpha submodules are the regulus of H not containing L", geo.alpha, SubmoduleType::Alpha);
    add("prop:Y", "Y submodules are the pencil [L, K]_3", geo.y, SubmoduleType::Y);
    add("prop:X", "X submodules are the planes meeting J in a line other than L and K in an alpha line", geo.x,
        SubmoduleType::X);
  }
  {
    Check c{"rem:1", "J-traces of X planes are exactly the lines of PG(3,q) meeting the axis in one point"};
    const Subspace axis = line_model_axis(cat.field());
    std::set<Subspace> traces;
    bool meets = true;
    for (const auto& e : cat.entries(SubmoduleType::X)) {
      const Subspace line = project_j(meet(e.span, cat.flats().j));
      meets = meets && line.dim() == 2 && meet_dim(line, axis) == 1 && line == line_model(e.witness);
      traces.insert(line);
    }
    std::size_t complex_lines = 0;
    for_each_subspace(cat.field(), 4, 2, [&](const Subspace& l) {
      if (l != axis && meet_dim(l, axis) == 1) ++complex_lines;
    });
    c.detail = {{"distinct_traces", traces.size()}, {"complex_lines_off_axis", complex_lines}};
    c.pass = meets && traces.size() == cat.count(SubmoduleType::X) && complex_lines == traces.size();
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<Check> Verifier::incidence(Rng& rng) {
  const Catalog& cat = catalog();
  const auto q = static_cast<std::uint64_t>(cat.q());
  const bool exhaustive = cat.q() <= 4;
  Check c{"prop:I", "incidence table rows match the closed forms for every element"};
  Json table = Json::object();
  std::size_t checked = 0, mismatches = 0;
  for (auto t : kNonzeroTypes) {
    const auto rows =
        detail::sample_indices(static_cast<int>(cat.count(t)), exhaustive ? static_cast<int>(cat.count(t)) : 100, rng);
    std::vector<std::pair<SubmoduleType, int>> sample;
    for (int i : rows) sample.emplace_back(t, i);
    const auto bad = check_incidence_table(cat, sample);
    checked += sample.size();
    mismatches += bad.size();
    Json row = {{"expected", to_json(expected_incidence_row(t, q))},
                {"checked", sample.size()},
                {"mismatches", bad.size()}};
    if (!bad.empty()) row["first_mismatch"] = {{"position", bad[0].position}, {"found", to_json(bad[0].found)}};
    table[std::string(type_name(t))] = std::move(row);
  }
  c.detail = {{"columns", {"X", "Y", "alpha", "beta", "gamma"}},
              {"rows", table},
              {"checked", checked},
              {"mode", exhaustive ? "exhaustive" : "sampled"}};
  c.pass = mismatches == 0;
  return {c};
}

inline std::vector<Check> Verifier::adjacency(Rng& rng) {
  const Catalog& cat = catalog();
  const AdjacencyGraph& g = graph();
  const CliqueFamily& fam = cliques();
  const auto& flats = cat.flats();
  const int nx = g.num_x();
  const int q = cat.q();
  std::vector<Check> out;

  {
    Check c{"eq:adj_X", "two X planes are adjacent or equal iff their K-traces agree"};
    std::vector<Subspace> traces;
    for (int i = 0; i < nx; ++i) traces.push_back(meet(g.vertex(i), flats.k));
    std::size_t bad = 0;
    for (int i = 0; i < nx; ++i)
      for (int j = i + 1; j < nx; ++j)
        if (g.adjacent(i, j) != (traces[i] == traces[j])) ++bad;
    c.detail = {{"pairs", static_cast<std::size_t>(nx) * (nx - 1) / 2}, {"mismatches", bad}};
    c.pass = bad == 0;
    out.push_back(std::move(c));
  }
  {
    Check c{"eq:class_X", "adjacent-or-equal is an equivalence on X with classes [P, P+J]_3 minus P+L"};
    const bool transitive = congruence_is_transitive_x(g);
    auto classes = congruence_classes_x(g);
    std::vector<std::vector<int>> expected;
    for (std::size_t p = 0; p < fam.alpha.size(); ++p) {
      std::vector<int> cls;
      for (int v : fam.by_alpha[p])
        if (v != fam.marked[p]) cls.push_back(v);
      expected.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end());
    std::sort(expected.begin(), expected.end());
    bool sizes = true;
    for (const auto& cls : classes) sizes = sizes && static_cast<int>(cls.size()) == q * q + q;
    c.detail = {{"transitive", transitive}, {"classes", classes.size()}, {"class_size", q * q + q}};
    c.pass = transitive && sizes && classes == expected && static_cast<int>(classes.size()) == q + 1;
    out.push_back(std::move(c));
  }
  {
    Check c{"companion", "every X plane has exactly one Y neighbour, namely (M meet K) + L"};
    std::size_t bad = 0;
    for (int i = 0; i < nx; ++i) {
      std::vector<int> ys;
      for (int v : g.neighbours(i))
        if (!g.is_x(v)) ys.push_back(v);
      if (ys.size() != 1 || g.vertex(ys[0]) != companion_y(g.vertex(i), cat)) ++bad;
    }
    c.detail = {{"x_planes", nx}, {"violations", bad}};
    c.pass = bad == 0;
    out.push_back(std::move(c));
  }
  {
    Check c{"eq:cliques_XY", "the maximal cliques are [L, K]_3 and the sets [P, P+J]_3"};
    const auto found = maximal_cliques(g);
    auto expected = fam.by_alpha;
    expected.push_back(fam.y_pencil);
    std::sort(expected.begin(), expected.end());
    bool maximal = true;
    for (const auto& cl : expected) maximal = maximal && is_maximal_clique(g, cl);
    Json sizes = Json::array();
    for (const auto& cl : found) sizes.push_back(cl.size());
    c.detail = {{"cliques", found.size()}, {"sizes", sizes}, {"expected_are_maximal", maximal}};
    c.pass = maximal && found == expected;
    out.push_back(std::move(c));
  }
  {
    Check c{"distance", "the graph is connected and distinct X planes lie at distance 1 or 3"};
    Check geo{"geodesic",
              "for non-adjacent X planes M1 ~ (M1 meet K)+L ~ (M2 meet K)+L ~ M2 is the only shortest path"};
    Check yd{"distance:XY", "an X plane is at distance 2 from every Y plane other than its companion"};
    const bool connected = is_connected(g);
    const auto sources = detail::sample_indices(nx, q <= 3 ? nx : 30, rng);
    std::size_t bad_dist = 0, bad_geo = 0, far_pairs = 0, bad_y = 0;
    for (int s : sources) {
      const auto b = bfs(g, s);
      const int comp = g.index_of(companion_y(g.vertex(s), cat));
      for (int t = nx; t < g.size(); ++t)
        if (t != comp && b.dist[t] != 2) ++bad_y;
      for (int t = 0; t < nx; ++t) {
        if (t == s) continue;
        const int d = b.dist[t];
        if (d != 1 && d != 3) ++bad_dist;
        if (d != 3) continue;
        ++far_pairs;
        const int comp_t = g.index_of(companion_y(g.vertex(t), cat));
        const bool path = g.adjacent(s, comp) && g.adjacent(comp, comp_t) && g.adjacent(comp_t, t);
        if (b.paths[t] != 1 || !path) ++bad_geo;
      }
    }
    const std::string mode = static_cast<int>(sources.size()) == nx ? "exhaustive" : "sampled sources";
    c.detail = {{"connected", connected}, {"sources", sources.size()}, {"violations", bad_dist}, {"mode", mode}};
    c.pass = connected && bad_dist == 0;
    geo.detail = {{"distance_3_pairs", far_pairs}, {"violations", bad_geo}, {"mode", mode}};
    geo.pass = bad_geo == 0 && far_pairs > 0;
    yd.detail = {{"violations", bad_y}, {"mode", mode}};
    yd.pass = bad_y == 0;
    out.push_back(std::move(c));
    out.push_back(std::move(geo));
    out.push_back(std::move(yd));
  }
  {
    Check c{"prop:adj", "random recipes (mu, psi_P) give adjacency preservers"};
    Check cor{"cor:1", "these preservers fix X and Y setwise"};
    bool rejects = false;
    try {
      auto bad = identity_recipe(fam);
      const int from = detail::position_in(fam.by_alpha[0], fam.marked[0]);
      std::swap(bad.psi[0][from], bad.psi[0][from == 0 ? 1 : 0]);
      validate_recipe(bad, fam);
    } catch (const std::invalid_argument&) {
      rejects = true;
    }
    int good = 0, fixing = 0;
    const int n = config_.preserver_recipes;
    const auto id = build_preserver(identity_recipe(fam), fam, g);
    bool identity_ok = verify_preserver(id, g);
    for (int i = 0; i < static_cast<int>(id.size()); ++i) identity_ok = identity_ok && id[i] == i;
    for (int i = 0; i < n; ++i) {
      const auto lambda = build_preserver(random_recipe(fam, rng), fam, g);
      good += verify_preserver(lambda, g) ? 1 : 0;
      fixing += fixes_types(lambda, g) ? 1 : 0;
    }
    c.detail = {{"recipes", n}, {"preservers", good}, {"identity_ok", identity_ok}, {"rejects_unmarked", rejects}};
    c.pass = good == n && identity_ok && rejects;
    cor.detail = {{"recipes", n}, {"fixing_types", fixing}};
    cor.pass = fixing == n;
    out.push_back(std::move(c));
    out.push_back(std::move(cor));
  }
  {
    Check c{"prop:adj:semilinear", "maps induced by semilinear bijections of T^2 are preservers with extractable recipes"};
    int ok = 0;
    const int n = config_.preserver_recipes;
    for (int i = 0; i < n; ++i) {
      const auto f = detail::random_semilinear(cat.field(), rng).lift();
      const auto lambda = induced_map(f, g);
      if (!lambda || !verify_preserver(*lambda, g)) continue;
      const auto recipe = extract_recipe(*lambda, fam, g, flats.k);
      if (build_preserver(recipe, fam, g) == *lambda) ++ok;
    }
    c.detail = {{"maps", n}, {"rebuilt", ok}};
    c.pass = ok == n;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<Check> Verifier::lemmas() {
  const Catalog& cat = catalog();
  std::vector<Check> out;
  {
    Check c{"lem:line", "the lines meeting every X plane in a point form the opposite regulus"};
    const auto& lines = lemma_lines();
    c.detail = {{"lines_scanned", gaussian_binomial(6, 2, cat.q())},
                {"found", lines.size()},
                {"lines", detail::subspace_list(lines)}};
    c.pass = lines == cat.quadric().regulus_opposite;
    out.push_back(std::move(c));
  }
  {
    Check c{"lem:solid", "the solids meeting every X plane in a line are J and K"};
    const auto& solids = lemma_solids();
    std::vector<Subspace> expected = {cat.flats().j, cat.flats().k};
    std::sort(expected.begin(), expected.end());
    c.detail = {{"solids_scanned", gaussian_binomial(6, 4, cat.q())},
                {"found", solids.size()},
                {"solids", detail::subspace_list(solids)}};
    c.pass = solids == expected;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<Check> Verifier::thm2() {
  const auto cert = no_duality_certificate(lemma_lines().size(), lemma_solids().size());
  Check c{"thm:2", "no duality fixes X or X u Y: a duality would biject the lemma lines onto the lemma solids"};
  c.detail = {{"lines", cert.lines},
              {"solids", cert.solids},
              {"conclusive", cert.conclusive()},
              {"union_case", "a duality fixing X u Y is an adjacency preserver, hence fixes X"}};
  c.pass = cert.conclusive() && cert.lines == static_cast<std::size_t>(catalog().q() + 1) && cert.solids == 2;
  return {c};
}

inline std::vector<Check> Verifier::thm1(Rng& rng) {
  const Catalog& cat = catalog();
  const Field& f = cat.field();
  std::vector<Check> out;
  {
    Check c{"thm:1:forward", "maps of F^6 induced by semilinear bijections of T^2 fix the free planes, the X planes, and J and H"};
    Check d{"thm:1:decompose", "every such map factors as f3 f2 f1 and Phi g = f Phi holds on all of T^2"};
    int ok = 0, round = 0;
    const int n = config_.thm1_trials;
    Json first;
    for (int i = 0; i < n; ++i) {
      const auto g = detail::random_semilinear(f, rng);
      const auto map = g.lift();
      if (theorem1_conditions(map, cat).all()) ++ok;
      try {
        const auto dec = decompose_semilinear(map, cat);
        if (round_trip(dec, map)) ++round;
        if (i == 0)
          first = {{"unit", to_json(g.unit)}, {"sigma_power", g.sigma.power()}, {"S", to_json(g.s)},
                   {"recovered_S", to_json(dec.s)}, {"a", dec.a}, {"b", dec.b}};
      } catch (const std::exception&) {
      }
    }
    c.detail = {{"trials", n}, {"passed", ok}};
    c.pass = ok == n;
    d.detail = {{"trials", n}, {"round_trips", round}, {"first", first}};
    d.pass = round == n;
    out.push_back(std::move(c));
    out.push_back(std::move(d));
  }
  if (f.order() == 2) {
    Check c{"thm:1:block-exhaustive", "every block lift of GL_2(T) fixes the free planes, the X planes, and J and H"};
    std::size_t total = 0, ok = 0;
    std::vector<Ternion> ts;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) ts.emplace_back(f, static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z));
    for (const auto& a : ts)
      for (const auto& b : ts)
        for (const auto& cc : ts)
          for (const auto& dd : ts) {
            TernionMatrix2 s(a, b, cc, dd);
            if (!s.is_invertible()) continue;
            ++total;
            if (theorem1_conditions(lift(s, FieldAutomorphism(f, 0)), cat).all()) ++ok;
          }
    c.detail = {{"maps", total}, {"passed", ok}};
    c.pass = total == 576 && ok == total;
    out.push_back(std::move(c));
  }
  {
    Check c{"thm:1:controls", "random invertible matrices outside the block form fail one of the three invariance conditions unless they decompose"};
    const int n = config_.thm1_controls;
    int failed = 0, admissible = 0, admissible_ok = 0, skipped_block = 0;
    for (int i = 0; i < n; ++i) {
      Matrix m = rng.invertible(f, 6);
      if (block6_pattern(m)) {
        ++skipped_block;
        continue;
      }
      const SemilinearMap map(m, rng.automorphism(f));
      const auto cond = theorem1_conditions(map, cat, true);
      if (!cond.all()) {
        ++failed;
        continue;
      }
      ++admissible;
      try {
        if (round_trip(decompose_semilinear(map, cat), map)) ++admissible_ok;
      } catch (const std::exception&) {
      }
    }
    c.detail = {{"controls", n - skipped_block},
                {"failed", failed},
                {"accidentally_admissible", admissible},
                {"admissible_decomposed", admissible_ok},
                {"block_form_skipped", skipped_block}};
    c.pass = admissible == admissible_ok;
    out.push_back(std::move(c));
  }
  {
    Check c{"thm:1:swap", "swapping x1 and x3 does not fix J"};
    Matrix m = Matrix::identity(f, 6);
    m(0, 0) = m(2, 2) = 0;
    m(0, 2) = m(2, 0) = 1;
    const auto cond = theorem1_conditions(SemilinearMap::linear(m), cat);
    c.detail = {{"fixes_j_and_h", cond.j_and_h_fixed}, {"fixes_x", cond.x_planes_fixed}};
    c.pass = !cond.j_and_h_fixed;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<Check> Verifier::remark(Rng& rng) {
  const Catalog& cat = catalog();
  const Field& f = cat.field();
  std::vector<Check> out;
  {
    Check c{"rem:anti", "(x, y, z) -> (z, y, x) is an antiautomorphism of T"};
    const auto iota = RingMap::antiautomorphism();
    std::size_t bad = 0, pairs = 0;
    const int q = f.order();
    const bool exhaustive = q <= 3;
    std::vector<Ternion> ts;
    if (exhaustive) {
      for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
          for (int z = 0; z < q; ++z)
            ts.emplace_back(f, static_cast<Elem>(x), static_cast<Elem>(y), static_cast<Elem>(z));
    } else {
      for (int i = 0; i < 200; ++i) ts.push_back(rng.ternion(f));
    }
    for (const auto& s : ts)
      for (const auto& t : ts) {
        ++pairs;
        if (iota(s * t) != iota(t) * iota(s) || iota(s + t) != iota(s) + iota(t)) ++bad;
      }
    c.detail = {{"pairs", pairs}, {"violations", bad}, {"mode", exhaustive ? "exhaustive" : "sampled"}};
    c.pass = bad == 0;
    out.push_back(std::move(c));
  }
  const int nx = static_cast<int>(cat.count(SubmoduleType::X));
  const auto rows = detail::sample_indices(nx, f.order() <= 3 ? nx : 40, rng);
  const bool exhaustive = static_cast<int>(rows.size()) == nx;
  const auto report = xi_witnesses(cat, exhaustive ? std::nullopt : std::optional<std::vector<int>>(rows));
  {
    Check c{"rem:xi:bijection", "xi permutes the X planes"};
    c.detail = {{"x_planes", nx}, {"permutation", report.permutation}};
    c.pass = report.is_permutation;
    out.push_back(std::move(c));
  }
  {
    Check c{"rem:xi:adjacency", "xi does not preserve adjacency: adjacent planes with images meeting in a beta point"};
    c.detail = {{"adjacent_pairs", report.adjacent_pairs}, {"adjacency_broken", report.adjacency_broken}};
    if (report.witness) {
      const auto& w = *report.witness;
      const auto& xs = cat.entries(SubmoduleType::X);
      c.detail["witness"] = {{"M1", to_json(xs[w.m1].span)},
                             {"M2", to_json(xs[w.m2].span)},
                             {"M1_generator", to_json(xs[w.m1].witness)},
                             {"M2_generator", to_json(xs[w.m2].witness)},
                             {"common_line", to_json(w.common_line)},
                             {"xi_M1", to_json(xs[report.permutation[w.m1]].span)},
                             {"xi_M2", to_json(xs[report.permutation[w.m2]].span)},
                             {"image_meet", to_json(w.image_meet)},
                             {"j_traces_and_L_span_J", w.j_traces_span_j}};
    }
    c.pass = report.witness.has_value();
    out.push_back(std::move(c));
  }
  {
    Check c{"rem:xi:traces", "for adjacent X planes, images meet in a point iff the J-traces and L are not coplanar"};
    c.detail = {{"adjacent_pairs", report.adjacent_pairs}};
    c.pass = report.point_iff_traces_span;
    out.push_back(std::move(c));
  }
  {
    Check c{"rem:xi:skew", "xi preserves unordered pairs of skew planes in both directions"};
    c.detail = {{"pairs", report.skew_checked},
                {"skew_pairs", report.skew_pairs},
                {"mismatches", report.skew_mismatches},
                {"mode", exhaustive ? "exhaustive" : "sampled rows"}};
    c.pass = report.skew_mismatches == 0 && report.skew_pairs > 0;
    out.push_back(std::move(c));
  }
  return out;
}

// --- report -----------------------------------------------------------------------------

struct SuiteTiming {
  std::string name;
  double seconds;
};

struct VerifyResult {
  Json report;
  bool pass = true;
  std::vector<SuiteTiming> timings;  // kept out of the report for byte stability
};

inline std::vector<std::string> selected_suites(const std::string& suite) {
  if (suite == "all") return suite_names();
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite: " + suite);
  return {suite};
}

inline VerifyResult run_verify(const RunConfig& config) {
  Verifier v(config);
  VerifyResult result;
  Json suites = Json::array();
  std::size_t passed = 0, failed = 0;
  for (const auto& name : selected_suites(config.suite)) {
    const auto start = std::chrono::steady_clock::now();
    const auto checks = v.run_suite(name);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    result.timings.push_back({name, elapsed.count()});
    Json list = Json::array();
    for (const auto& c : checks) {
      list.push_back({{"id", c.id}, {"claim", c.claim}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
      (c.pass ? passed : failed) += 1;
    }
    suites.push_back({{"name", name}, {"checks", list}});
  }
  result.pass = failed == 0;
  result.report = {{"field", field_json(v.field())},
                   {"q", config.q},
                   {"seed", config.seed},
                   {"suites", suites},
                   {"summary", {{"passed", passed}, {"failed", failed}, {"status", failed == 0 ? "PASS" : "FAIL"}}}};
  return result;
}

/// One line per check, then per-suite timings.
inline std::string text_summary(const VerifyResult& r) {
  std::string out;
  for (const auto& s : r.report["suites"]) {
    for (const auto& c : s["checks"])
      out += "[" + c["status"].get<std::string>() + "] " + c["id"].get<std::string>() + "  " +
             c["claim"].get<std::string>() + "\n";
  }
  for (const auto& t : r.timings) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", t.seconds);
    out += "suite " + t.name + ": " + buf + " s\n";
  }
  out += std::string("overall: ") + (r.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace tern
