#include "jsj/verification.hpp"

#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "jsj/error.hpp"
#include "jsj/width.hpp"

namespace jsj {

using nlohmann::json;

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Check& VerificationReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back(Check{std::move(name), passed, std::move(detail), json::object()});
  return checks.back();
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    for (const auto& [key, value] : c.measures.items()) out << "  " << key << "=" << value.dump();
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  return out.str();
}

json VerificationReport::json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks)
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"measures", c.measures}});
  return {{"passed", passed()}, {"checks", list}};
}

VerificationReport check_closed_manifold(const Triangulation& t) {
  VerificationReport r;
  t.validate();
  int boundary = t.boundary_face_count();
  r.add("manifold.closed", boundary == 0, boundary ? std::to_string(boundary) + " boundary faces" : "")
      .measures["tetrahedra"] = t.size();
  r.add("manifold.orientable", is_orientable(t), "no consistent orientation labels");
  if (r.checks.back().passed) r.checks.back().detail.clear();

  auto skel = skeleton(t);
  auto& euler = r.add("manifold.euler_zero", skel.euler_characteristic() == 0);
  euler.measures = {{"V", skel.vertex_count}, {"E", skel.edge_count}, {"F", skel.triangle_count},
                    {"T", skel.tetrahedron_count}, {"chi", skel.euler_characteristic()}};
  if (!euler.passed) euler.detail = "V - E + F - T = " + std::to_string(skel.euler_characteristic());

  auto links = vertex_link_check(t);
  bool spheres = links.reversed_edges.empty();
  std::string why;
  for (const auto& v : links.vertices)
    if (!v.closed() || v.euler != 2) {
      spheres = false;
      if (why.empty())
        why = "vertex " + std::to_string(v.vertex) + " link has euler characteristic " + std::to_string(v.euler) +
              (v.closed() ? "" : " and boundary");
    }
  if (!links.reversed_edges.empty()) why = links.first_failure();
  auto& link = r.add("manifold.vertex_links", spheres, why);
  link.measures["vertices"] = links.vertices.size();
  return r;
}

namespace {

struct Owners {
  std::vector<int> owner;  // block node index, or node_count + arc index
  int node_count = 0;
};

Owners owners_from(const Triangulation& t, const Multigraph& g, const AssemblyMetadata& meta) {
  if (static_cast<int>(meta.nodes.size()) != g.node_count())
    throw StructureError("metadata lists " + std::to_string(meta.nodes.size()) + " blocks for " +
                         std::to_string(g.node_count()) + " nodes");
  if (meta.arcs.size() != g.arc_count())
    throw StructureError("metadata lists " + std::to_string(meta.arcs.size()) + " chains for " +
                         std::to_string(g.arc_count()) + " arcs");
  Owners o;
  o.node_count = g.node_count();
  o.owner.assign(t.size(), -1);
  auto claim = [&](int first, int count, int who, const std::string& what) {
    if (first < 0 || count < 0 || first + count > t.size())
      throw StructureError(what + " range [" + std::to_string(first) + ", " + std::to_string(first + count) +
                           ") lies outside the triangulation");
    for (int i = first; i < first + count; ++i) {
      if (o.owner[i] >= 0) throw StructureError(what + " overlaps another range at tetrahedron " + std::to_string(i));
      o.owner[i] = who;
    }
  };
  for (std::size_t i = 0; i < meta.nodes.size(); ++i) {
    if (meta.nodes[i].node != static_cast<int>(i)) throw StructureError("block records out of order");
    claim(meta.nodes[i].first, meta.nodes[i].count, static_cast<int>(i), "block " + std::to_string(i));
  }
  for (std::size_t e = 0; e < meta.arcs.size(); ++e)
    claim(meta.arcs[e].first, meta.arcs[e].count, o.node_count + static_cast<int>(e), "chain " + std::to_string(e));
  for (int i = 0; i < t.size(); ++i)
    if (o.owner[i] < 0) throw StructureError("tetrahedron " + std::to_string(i) + " belongs to no range");
  return o;
}

std::string arc_list(const Multigraph& g) {
  std::string s;
  for (const auto& a : g.arcs()) s += (s.empty() ? "" : " ") + std::to_string(a.u) + "-" + std::to_string(a.v);
  return s.empty() ? "(none)" : s;
}

}  // namespace

VerificationReport check_dual_structure(const Multigraph& g, const Triangulation& t,
                                        const AssemblyMetadata& meta) {
  t.validate();
  if (meta.total_tetrahedra != t.size())
    throw StructureError("metadata total " + std::to_string(meta.total_tetrahedra) + " differs from table size " +
                         std::to_string(t.size()));
  Owners o = owners_from(t, g, meta);
  const int n = g.node_count();
  VerificationReport r;
  r.add("dual.ranges", true).measures = {{"blocks", n}, {"chains", meta.arcs.size()}};

  // Chains with no layers glue block faces directly; their gluings are routed
  // through the chain's own quotient node.
  std::map<FaceRef, int> direct;
  for (std::size_t e = 0; e < meta.arcs.size(); ++e)
    if (meta.arcs[e].count == 0)
      for (const auto& f : meta.arcs[e].source_faces) direct[f] = n + static_cast<int>(e);

  std::map<std::pair<int, int>, int> between;  // quotient arc multiplicities, doubled
  std::vector<std::vector<std::pair<int, int>>> internal(n + meta.arcs.size());
  std::vector<std::map<int, int>> external(meta.arcs.size());  // chain tet -> external gluing count
  std::string stray;
  for (int a = 0; a < t.size(); ++a)
    for (int f = 0; f < 4; ++f) {
      const auto& glue = t.gluing(a, f);
      if (!glue) continue;
      FaceRef here{a, f}, there{glue->tet, glue->perm[f]};
      if (there < here) continue;
      int oa = o.owner[a], ob = o.owner[glue->tet];
      auto d = direct.find(here);
      if (d == direct.end()) d = direct.find(there);
      if (d != direct.end()) {
        const auto& rec = meta.arcs[d->second - n];
        auto is_target = [&](FaceRef x) { return x == rec.target_faces[0] || x == rec.target_faces[1]; };
        if (!is_target(here) && !is_target(there)) {
          stray = "chain " + std::to_string(d->second - n) + " source face glued to a non-target face";
          continue;
        }
        between[std::minmax(oa, d->second)] += 1;
        between[std::minmax(d->second, ob)] += 1;
        continue;
      }
      if (oa == ob) {
        internal[oa].push_back({a, glue->tet});
        continue;
      }
      between[std::minmax(oa, ob)] += 1;
      if (oa >= n) external[oa - n][a] += 1;
      if (ob >= n) external[ob - n][glue->tet] += 1;
    }

  // Halve, then suppress the chain nodes.
  Multigraph quotient(n);
  std::vector<std::vector<int>> chain_ends(meta.arcs.size());
  for (const auto& [key, count] : between) {
    auto [x, y] = key;
    if (count % 2) {
      stray = "odd number (" + std::to_string(count) + ") of gluings between quotient nodes " + std::to_string(x) +
              " and " + std::to_string(y);
      continue;
    }
    for (int i = 0; i < count / 2; ++i) {
      if (x < n && y >= n) chain_ends[y - n].push_back(x);
      else if (x >= n && y < n) chain_ends[x - n].push_back(y);
      else stray = "gluing between " + std::string(x < n ? "two blocks " : "two chains ") + std::to_string(x) +
                   " and " + std::to_string(y);
    }
  }
  for (std::size_t e = 0; e < chain_ends.size(); ++e) {
    if (chain_ends[e].size() != 2) {
      stray = "chain " + std::to_string(e) + " attaches to " + std::to_string(chain_ends[e].size()) + " block tori";
      continue;
    }
    quotient.add_arc(chain_ends[e][0], chain_ends[e][1]);
  }
  bool same = stray.empty() && quotient.same_arcs(g);
  auto& q = r.add("dual.quotient", same,
                  same ? "" : (stray.empty() ? "quotient arcs " + arc_list(quotient) + " differ from " + arc_list(g)
                                             : stray));
  q.measures = {{"quotient_nodes", quotient.node_count()}, {"quotient_arcs", quotient.arc_count()}};

  // Blocks induce connected subgraphs.
  std::string disconnected;
  for (int v = 0; v < n && disconnected.empty(); ++v) {
    const auto& rec = meta.nodes[v];
    if (rec.count == 0) {
      disconnected = "block " + std::to_string(v) + " is empty";
      break;
    }
    std::vector<std::vector<int>> adj(rec.count);
    for (auto [a, b] : internal[v]) {
      adj[a - rec.first].push_back(b - rec.first);
      adj[b - rec.first].push_back(a - rec.first);
    }
    std::vector<char> seen(rec.count, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          queue.push_back(y);
        }
    }
    if (reached != rec.count)
      disconnected = "block " + std::to_string(v) + " splits; only " + std::to_string(reached) + " of " +
                     std::to_string(rec.count) + " tetrahedra reachable";
  }
  r.add("dual.blocks_connected", disconnected.empty(), disconnected);

  // Chains are doubled paths, attached by two gluings at each end.
  std::string bad_chain;
  for (std::size_t e = 0; e < meta.arcs.size() && bad_chain.empty(); ++e) {
    const auto& rec = meta.arcs[e];
    if (rec.count == 0) continue;
    std::map<std::pair<int, int>, int> pairs;
    for (auto [a, b] : internal[n + e]) pairs[std::minmax(a, b)] += 1;
    bool ok = internal[n + e].size() == static_cast<std::size_t>(2 * (rec.count - 1));
    for (int i = rec.first; ok && i + 1 < rec.first + rec.count; ++i) ok = pairs[{i, i + 1}] == 2;
    const int last = rec.first + rec.count - 1;
    if (ok) {
      int outside = 0;
      for (auto [tet, c] : external[e]) outside += c;
      ok = outside == 4 && (rec.count == 1 ? external[e][rec.first] == 4
                                           : external[e][rec.first] == 2 && external[e][last] == 2);
    }
    if (!ok) bad_chain = "chain " + std::to_string(e) + " is not a doubled path attached at both ends";
  }
  r.add("dual.chains_daisy", bad_chain.empty(), bad_chain);
  return r;
}

VerificationReport check_metadata(const Multigraph& g, const Triangulation& t, const AssemblyMetadata& meta) {
  VerificationReport r;
  Owners o = owners_from(t, g, meta);
  (void)o;

  std::string degree_problem;
  for (const auto& rec : meta.nodes) {
    if (rec.k != g.degree(rec.node))
      degree_problem = "block " + std::to_string(rec.node) + " has " + std::to_string(rec.k) +
                       " tori but the node has degree " + std::to_string(g.degree(rec.node));
    else if (rec.count != 9 * rec.k + 6)
      degree_problem = "block " + std::to_string(rec.node) + " has " + std::to_string(rec.count) + " tetrahedra";
  }
  r.add("meta.blocks_match_degrees", degree_problem.empty(), degree_problem);

  const std::int64_t budget = meta.distance_budget();
  std::string distance_problem, layer_problem;
  std::int64_t min_distance = -1, max_layers = 0;
  for (const auto& rec : meta.arcs) {
    std::int64_t d = gluing_distance(rec.map, meta.fiber_slope, meta.fiber_slope);
    min_distance = min_distance < 0 ? d : std::min(min_distance, d);
    if (d != rec.achieved_distance || d < budget)
      distance_problem = "chain " + std::to_string(rec.arc) + " has distance " + std::to_string(d) + " (recorded " +
                         std::to_string(rec.achieved_distance) + ", budget " + std::to_string(budget) + ")";
    LayeredGluing lg{rec.map, rec.flips, rec.terminal, d};
    max_layers = std::max<std::int64_t>(max_layers, rec.count);
    if (rec.map.det() != -1) layer_problem = "chain " + std::to_string(rec.arc) + " map does not reverse orientation";
    else if (!lg.certifies_map())
      layer_problem = "chain " + std::to_string(rec.arc) + " flips do not reproduce its map";
    else if (rec.count != lg.tetrahedron_count() || rec.count > 2 * budget)
      layer_problem = "chain " + std::to_string(rec.arc) + " has " + std::to_string(rec.count) + " tetrahedra for " +
                      std::to_string(lg.tetrahedron_count()) + " flips";
  }
  auto& dist = r.add("meta.distance", distance_problem.empty(), distance_problem);
  dist.measures = {{"budget", budget}, {"min_achieved", min_distance}};
  auto& layers = r.add("meta.layers", layer_problem.empty(), layer_problem);
  layers.measures = {{"max_chain", max_layers}, {"limit", 2 * budget}};

  long long blocks = 0, chains = 0;
  for (const auto& rec : meta.nodes) blocks += 9 * g.degree(rec.node) + 6;
  for (const auto& rec : meta.arcs) chains += rec.count;
  const long long bound = blocks + static_cast<long long>(g.arc_count()) * 2 * budget;
  bool size_ok = meta.total_tetrahedra == t.size() && blocks + chains == t.size() && t.size() <= bound;
  auto& size = r.add("meta.size_bound", size_ok,
                     size_ok ? "" : "total " + std::to_string(t.size()) + " against bound " + std::to_string(bound));
  const int pw_scale = std::max(meta.pathwidth, 1);
  size.measures = {{"total", t.size()},
                   {"bound", bound},
                   {"constant", static_cast<double>(t.size()) /
                                    (std::max(g.max_degree(), 1) * meta.K * pw_scale * g.node_count())}};

  std::int64_t formula = std::max<std::int64_t>(18 * (meta.treewidth + 1), 4 * (3 * meta.pathwidth + 1));
  std::string delta_problem;
  if (!meta.delta_overridden && formula != meta.delta)
    delta_problem = "delta " + std::to_string(meta.delta) + " but the formula gives " + std::to_string(formula);
  if (meta.treewidth_exactness == Exactness::exact && g.node_count() <= kMaxExactNodes) {
    int tw = treewidth_exact(g, kMaxExactNodes).value;
    int pw = pathwidth_exact(g, kMaxExactNodes).value;
    if (tw != meta.treewidth || pw != meta.pathwidth)
      delta_problem = "recorded widths tw=" + std::to_string(meta.treewidth) + " pw=" + std::to_string(meta.pathwidth) +
                      " but exact widths are tw=" + std::to_string(tw) + " pw=" + std::to_string(pw);
  }
  auto& delta = r.add("meta.delta", delta_problem.empty(), delta_problem);
  delta.measures = {{"delta", meta.delta}, {"formula", formula}, {"overridden", meta.delta_overridden}};
  return r;
}

VerificationReport check_width_inequalities(const Multigraph& g, const Triangulation& t,
                                            const AssemblyMetadata& meta) {
  (void)meta;
  VerificationReport r;
  auto dual = dual_graph(t);
  auto tw_dual = treewidth_upper(dual);
  auto pw_dual = pathwidth_upper(dual);
  bool exact = g.node_count() <= kDefaultExactBudget;
  auto tw = exact ? treewidth_exact(g) : treewidth_upper(g);
  auto pw = exact ? pathwidth_exact(g) : pathwidth_upper(g);
  const std::string note = exact ? "" : "graph widths are heuristic upper bounds";

  bool tw_ok = tw.value <= 18 * (tw_dual.value + 1);
  auto& a = r.add("width.treewidth_inherited", tw_ok,
                  tw_ok ? note : "tw(G)=" + std::to_string(tw.value) + " exceeds 18(" + std::to_string(tw_dual.value) + "+1)");
  a.measures = {{"tw_G", tw.value}, {"tw_dual_ub", tw_dual.value}, {"rhs", 18 * (tw_dual.value + 1)}};

  bool pw_ok = pw.value <= 4 * (3 * pw_dual.value + 1);
  auto& b = r.add("width.pathwidth_inherited", pw_ok,
                  pw_ok ? note : "pw(G)=" + std::to_string(pw.value) + " exceeds 4(3*" + std::to_string(pw_dual.value) + "+1)");
  b.measures = {{"pw_G", pw.value}, {"pw_dual_ub", pw_dual.value}, {"rhs", 4 * (3 * pw_dual.value + 1)}};

  const int maxdeg = std::max(g.max_degree(), 1);
  auto& ratios = r.add("width.ratios", true);
  ratios.measures["max_degree"] = g.max_degree();
  ratios.measures["tw_ratio"] =
      tw.value > 0 ? json(static_cast<double>(tw_dual.value) / (maxdeg * tw.value)) : json(nullptr);
  ratios.measures["pw_ratio"] =
      pw.value > 0 ? json(static_cast<double>(pw_dual.value) / (maxdeg * pw.value)) : json(nullptr);
  return r;
}

VerificationReport verify_assembly(const Multigraph& g, const Triangulation& t, const AssemblyMetadata& meta) {
  VerificationReport r = check_closed_manifold(t);
  r.append(check_dual_structure(g, t, meta));
  r.append(check_metadata(g, t, meta));
  r.append(check_width_inequalities(g, t, meta));
  return r;
}

namespace {

// Largest subdivided graph the suite hands to the exact solvers.
constexpr int kSubdivisionNodeCap = 28;

std::vector<Multigraph> hand_picked_graphs() {
  return {cycle_graph(3), star_graph(3), path_graph(3), complete_graph(4), complete_graph(5),
          complete_binary_tree(2), cycle_graph(6), grid_graph(3), parse_graph("0 0\n0 1\n1 1"),
          parse_graph("0 1\n0 1\n1 2")};
}

}  // namespace

VerificationReport subdivision_lemma_suite(std::uint64_t seed, int trials) {
  VerificationReport r;
  std::mt19937_64 rng(seed);
  auto hand = hand_picked_graphs();
  int violations = 0, resampled = 0;
  std::string first_violation;
  int worst_pw_gain = 0;
  for (int trial = 0; trial < trials; ++trial) {
    Multigraph g;
    if (trial < static_cast<int>(hand.size())) {
      g = hand[trial];
    } else {
      int n = std::uniform_int_distribution<int>(1, 10)(rng);
      g = Multigraph(n);
      std::bernoulli_distribution coin(0.4);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (coin(rng)) g.add_arc(i, j);
    }
    std::map<std::size_t, int> plan;
    for (int attempt = 0;; ++attempt) {
      plan.clear();
      int added = 0;
      // Later attempts select fewer arcs so the subdivided graph fits.
      double p = 0.5 / (1 + attempt);
      std::bernoulli_distribution pick(p);
      std::uniform_int_distribution<int> count(1, 3);
      for (std::size_t i = 0; i < g.arc_count(); ++i)
        if (pick(rng)) {
          plan[i] = count(rng);
          added += plan[i];
        }
      if (trial == 0) plan = {{0, 1}};  // C3 -> C4
      if (g.node_count() + added <= kSubdivisionNodeCap || trial == 0) break;
      ++resampled;
    }
    auto h = subdivide_arcs(g, plan);
    int tw = treewidth_exact(g, kMaxExactNodes).value;
    int pw = pathwidth_exact(g, kMaxExactNodes).value;
    int tw2 = treewidth_exact(h, kMaxExactNodes).value;
    int pw2 = pathwidth_exact(h, kMaxExactNodes).value;
    worst_pw_gain = std::max(worst_pw_gain, pw2 - pw);
    if (pw2 > pw + 2 || tw2 > std::max(tw, 3)) {
      ++violations;
      if (first_violation.empty())
        first_violation = "graph {" + arc_list(g) + "} -> {" + arc_list(h) + "}: tw " + std::to_string(tw) + "->" +
                          std::to_string(tw2) + ", pw " + std::to_string(pw) + "->" + std::to_string(pw2);
    }
  }
  auto& c = r.add("subdivision.lemma", violations == 0, first_violation);
  c.measures = {{"trials", trials}, {"violations", violations}, {"resampled_plans", resampled},
                {"max_pw_gain", worst_pw_gain}};
  return r;
}

VerificationReport corollary_family_suite() {
  VerificationReport r;
  for (int h = 0; h <= 5; ++h) {
    int pw = pathwidth_exact(complete_binary_tree(h), kMaxExactNodes).value;
    int expected = (h + 1) / 2;
    auto& c = r.add("family.binary_tree_pathwidth.h" + std::to_string(h), pw == expected,
                    pw == expected ? "" : "pathwidth " + std::to_string(pw));
    c.measures = {{"pw", pw}, {"expected", expected}};
  }
  for (int k = 2; k <= 4; ++k) {
    auto g = grid_graph(k);
    int tw = treewidth_exact(g).value;
    int pw = pathwidth_exact(g).value;
    bool ok = tw == k && pw == k;
    auto& c = r.add("family.grid_widths.k" + std::to_string(k), ok,
                    ok ? "" : "tw=" + std::to_string(tw) + " pw=" + std::to_string(pw));
    c.measures = {{"tw", tw}, {"pw", pw}};
  }
  const std::pair<std::string, Multigraph> instances[] = {
      {"T1", complete_binary_tree(1)}, {"T2", complete_binary_tree(2)}, {"grid2", grid_graph(2)}};
  for (const auto& [name, g] : instances) {
    auto assembly = build_manifold(g);
    auto report = verify_assembly(g, assembly.triangulation, assembly.metadata);
    std::string failed;
    for (const auto& c : report.checks)
      if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
    auto& c = r.add("family.assembly." + name, report.passed(), failed);
    c.measures = {{"tetrahedra", assembly.triangulation.size()}, {"delta", assembly.metadata.delta}};
  }
  return r;
}

}  // namespace jsj
