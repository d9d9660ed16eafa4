#include "jsj/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "jsj/error.hpp"

namespace jsj {

Multigraph::Multigraph(int node_count) : node_count_(node_count) {
  if (node_count < 0) throw InputError("negative node count");
}

Multigraph::Multigraph(int node_count, std::vector<Arc> arcs)
    : Multigraph(node_count) {
  for (const Arc& a : arcs) add_arc(a.u, a.v);
}

void Multigraph::check_node(int v) const {
  if (v < 0 || v >= node_count_)
    throw InputError("node index " + std::to_string(v) + " out of range");
}

std::size_t Multigraph::add_arc(int u, int v) {
  check_node(u);
  check_node(v);
  arcs_.push_back({u, v});
  return arcs_.size() - 1;
}

int Multigraph::add_node() {
  if (!labels_.empty()) labels_.emplace_back();
  return node_count_++;
}

int Multigraph::degree(int v) const {
  check_node(v);
  int d = 0;
  for (const Arc& a : arcs_) d += (a.u == v) + (a.v == v);
  return d;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(node_count_, 0);
  for (const Arc& a : arcs_) {
    ++deg[a.u];
    ++deg[a.v];
  }
  return deg;
}

int Multigraph::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<std::vector<int>> Multigraph::simple_adjacency() const {
  std::vector<std::vector<int>> adj(node_count_);
  for (const Arc& a : arcs_) {
    if (a.is_loop()) continue;
    adj[a.u].push_back(a.v);
    adj[a.v].push_back(a.u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

Multigraph Multigraph::simplified() const {
  std::set<Arc> unique;
  for (const Arc& a : arcs_)
    if (!a.is_loop()) unique.insert(a.normalized());
  Multigraph out(node_count_, {unique.begin(), unique.end()});
  out.labels_ = labels_;
  return out;
}

bool Multigraph::is_connected() const {
  if (node_count_ <= 1) return true;
  auto adj = simple_adjacency();
  std::vector<char> seen(node_count_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == node_count_;
}

void Multigraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != node_count_)
    throw InputError("label count does not match node count");
  labels_ = std::move(labels);
}

bool Multigraph::same_arcs(const Multigraph& other) const {
  if (node_count_ != other.node_count_ || arcs_.size() != other.arcs_.size())
    return false;
  auto sorted = [](const std::vector<Arc>& arcs) {
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (const Arc& a : arcs) out.push_back(a.normalized());
    std::sort(out.begin(), out.end());
    return out;
  };
  return sorted(arcs_) == sorted(other.arcs_);
}

namespace {

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  std::optional<long long> header;
  std::vector<std::pair<long long, long long>> pairs;
  long long max_index = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto tok = split_ws(line);
    if (tok[0] == "p") {
      if (header) throw ParseError(line_no, "duplicate header");
      if (!pairs.empty()) throw ParseError(line_no, "header after arcs");
      if (tok.size() != 2) throw ParseError(line_no, "header must be 'p <node_count>'");
      long long n = parse_int(tok[1], line_no);
      if (n < 0) throw ParseError(line_no, "negative node count");
      header = n;
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "arc line must be '<u> <v>'");
    long long u = parse_int(tok[0], line_no);
    long long v = parse_int(tok[1], line_no);
    if (u < 0 || v < 0) throw ParseError(line_no, "negative node index");
    if (header && (u >= *header || v >= *header))
      throw ParseError(line_no, "node index exceeds header node count");
    max_index = std::max({max_index, u, v});
    pairs.emplace_back(u, v);
  }
  long long n = header ? *header : max_index + 1;
  if (n > 50'000'000) throw ParseError(line_no, "node count too large");
  Multigraph g(static_cast<int>(n));
  for (auto [u, v] : pairs) g.add_arc(static_cast<int>(u), static_cast<int>(v));
  return g;
}

std::string write_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "p " << g.node_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.u << ' ' << a.v << '\n';
  return out.str();
}

int TreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return static_cast<int>(best) - 1;
}

int PathDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return static_cast<int>(best) - 1;
}

TreeDecomposition PathDecomposition::as_tree() const {
  TreeDecomposition t;
  t.bags = bags;
  for (std::size_t i = 1; i < bags.size(); ++i)
    t.host_arcs.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
  return t;
}

namespace {

// Connected components of the host restricted to `members`; used both for the
// tree check (all host nodes) and the sub-tree property.
int count_components(int host_nodes, const std::vector<std::vector<int>>& host_adj,
                     const std::vector<char>& members) {
  std::vector<char> seen(host_nodes, 0);
  int comps = 0;
  for (int s = 0; s < host_nodes; ++s) {
    if (!members[s] || seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : host_adj[x])
        if (members[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return comps;
}

}  // namespace

DecompositionReport validate_tree_decomposition(const Multigraph& g,
                                                const TreeDecomposition& d) {
  DecompositionReport r;
  r.width = d.width();
  const int hn = static_cast<int>(d.bags.size());
  std::vector<std::vector<int>> host_adj(hn);

  bool arcs_ok = true;
  for (auto [a, b] : d.host_arcs) {
    if (a < 0 || b < 0 || a >= hn || b >= hn || a == b) {
      arcs_ok = false;
      continue;
    }
    host_adj[a].push_back(b);
    host_adj[b].push_back(a);
  }
  std::vector<char> all(hn, 1);
  r.host_is_tree = hn > 0 && arcs_ok &&
                   static_cast<int>(d.host_arcs.size()) == hn - 1 &&
                   count_components(hn, host_adj, all) == 1;
  if (!r.host_is_tree && g.node_count() == 0 && hn == 0) r.host_is_tree = true;
  if (!r.host_is_tree) r.detail = "host is not a tree";

  const int n = g.node_count();
  std::vector<std::vector<int>> holders(n);
  bool bag_nodes_ok = true;
  for (int i = 0; i < hn; ++i)
    for (int v : d.bags[i]) {
      if (v < 0 || v >= n) {
        bag_nodes_ok = false;
        continue;
      }
      holders[v].push_back(i);
    }

  r.node_coverage = bag_nodes_ok;
  for (int v = 0; v < n && r.node_coverage; ++v)
    if (holders[v].empty()) {
      r.node_coverage = false;
      if (r.detail.empty()) r.detail = "node " + std::to_string(v) + " in no bag";
    }
  if (!bag_nodes_ok && r.detail.empty()) r.detail = "bag references unknown node";

  r.arc_coverage = true;
  std::vector<std::set<int>> bag_sets(hn);
  for (int i = 0; i < hn; ++i) bag_sets[i] = {d.bags[i].begin(), d.bags[i].end()};
  for (const Arc& a : g.arcs()) {
    bool covered = false;
    for (int i : holders[a.u])
      if (bag_sets[i].count(a.v)) {
        covered = true;
        break;
      }
    if (!covered) {
      r.arc_coverage = false;
      if (r.detail.empty())
        r.detail = "arc " + std::to_string(a.u) + "-" + std::to_string(a.v) + " uncovered";
      break;
    }
  }

  r.subtree_property = true;
  for (int v = 0; v < n; ++v) {
    if (holders[v].empty()) continue;
    std::vector<char> members(hn, 0);
    for (int i : holders[v]) members[i] = 1;
    if (count_components(hn, host_adj, members) != 1) {
      r.subtree_property = false;
      if (r.detail.empty())
        r.detail = "bags holding node " + std::to_string(v) + " are not connected";
      break;
    }
  }
  return r;
}

DecompositionReport validate_path_decomposition(const Multigraph& g,
                                                const PathDecomposition& d) {
  return validate_tree_decomposition(g, d.as_tree());
}

Multigraph subdivide_arcs(const Multigraph& g,
                          const std::map<std::size_t, int>& plan) {
  for (auto [idx, count] : plan) {
    if (idx >= g.arc_count())
      throw InputError("subdivision plan references unknown arc " + std::to_string(idx));
    if (count < 0) throw InputError("negative subdivision count");
  }
  Multigraph out(g.node_count());
  if (!g.labels().empty()) out.set_labels(g.labels());
  for (std::size_t i = 0; i < g.arc_count(); ++i) {
    const Arc& a = g.arc(i);
    auto it = plan.find(i);
    int count = it == plan.end() ? 0 : it->second;
    int prev = a.u;
    for (int s = 0; s < count; ++s) {
      int fresh = out.add_node();
      out.add_arc(prev, fresh);
      prev = fresh;
    }
    out.add_arc(prev, a.v);
  }
  return out;
}

Multigraph complete_binary_tree(int height) {
  if (height < 0) throw InputError("binary tree height must be >= 0");
  if (height > 24) throw InputError("binary tree height too large");
  int n = (1 << (height + 1)) - 1;
  Multigraph g(n);
  for (int i = 1; i < n; ++i) g.add_arc((i - 1) / 2, i);
  return g;
}

Multigraph grid_graph(int side) {
  if (side < 1) throw InputError("grid side must be >= 1");
  if (side > 4096) throw InputError("grid side too large");
  Multigraph g(side * side);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) {
      int v = r * side + c;
      if (c + 1 < side) g.add_arc(v, v + 1);
      if (r + 1 < side) g.add_arc(v, v + side);
    }
  return g;
}

Multigraph path_graph(int nodes) {
  if (nodes < 1) throw InputError("path needs at least one node");
  Multigraph g(nodes);
  for (int i = 0; i + 1 < nodes; ++i) g.add_arc(i, i + 1);
  return g;
}

Multigraph cycle_graph(int nodes) {
  if (nodes < 1) throw InputError("cycle needs at least one node");
  Multigraph g(nodes);
  for (int i = 0; i < nodes; ++i) g.add_arc(i, (i + 1) % nodes);
  return g;
}

Multigraph complete_graph(int nodes) {
  if (nodes < 1) throw InputError("complete graph needs at least one node");
  Multigraph g(nodes);
  for (int i = 0; i < nodes; ++i)
    for (int j = i + 1; j < nodes; ++j) g.add_arc(i, j);
  return g;
}

Multigraph star_graph(int leaves) {
  if (leaves < 0) throw InputError("star needs a non-negative leaf count");
  Multigraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_arc(0, i);
  return g;
}

}  // namespace jsj
