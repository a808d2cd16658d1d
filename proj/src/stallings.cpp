#include "fbc/stallings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <sstream>

namespace fbc {

namespace {

/// Mutable graph with union-find vertex merging, used only during build.
struct Folder {
  std::vector<int> parent;
  std::vector<std::map<int, int>> out, in;
  std::deque<std::pair<int, int>> merges;

  int fresh() {
    parent.push_back(static_cast<int>(parent.size()));
    out.emplace_back();
    in.emplace_back();
    return static_cast<int>(parent.size()) - 1;
  }

  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void insert_edge(int s, int lbl, int d) {
    s = find(s);
    d = find(d);
    auto it = out[s].find(lbl);
    if (it == out[s].end()) {
      out[s][lbl] = d;
    } else if (find(it->second) != d) {
      merges.emplace_back(find(it->second), d);
    }
    auto jt = in[d].find(lbl);
    if (jt == in[d].end()) {
      in[d][lbl] = s;
    } else if (find(jt->second) != s) {
      merges.emplace_back(find(jt->second), s);
    }
  }

  void process_merges() {
    while (!merges.empty()) {
      auto [a, b] = merges.front();
      merges.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      int keep = (out[a].size() + in[a].size() >= out[b].size() + in[b].size())
                     ? a
                     : b;
      int lose = keep == a ? b : a;
      parent[lose] = keep;
      for (auto& [lbl, t] : out[lose]) {
        int tt = find(t);
        auto it = out[keep].find(lbl);
        if (it == out[keep].end())
          out[keep][lbl] = tt;
        else if (find(it->second) != tt)
          merges.emplace_back(find(it->second), tt);
      }
      for (auto& [lbl, s] : in[lose]) {
        int ss = find(s);
        auto it = in[keep].find(lbl);
        if (it == in[keep].end())
          in[keep][lbl] = ss;
        else if (find(it->second) != ss)
          merges.emplace_back(find(it->second), ss);
      }
      out[lose].clear();
      in[lose].clear();
    }
  }
};

}  // namespace

CoreGraph CoreGraph::build(const std::vector<Word>& generators) {
  Folder f;
  int base = f.fresh();
  std::vector<std::tuple<int, int, int>> raw_edges;
  for (const Word& w : generators) {
    if (w.empty()) continue;
    int cur = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = (i + 1 == w.size()) ? base : f.fresh();
      Letter l = w[i];
      if (l.sign() > 0)
        raw_edges.emplace_back(cur, l.index(), next);
      else
        raw_edges.emplace_back(next, l.index(), cur);
      cur = next;
    }
  }
  for (auto [s, lbl, d] : raw_edges) {
    f.insert_edge(s, lbl, d);
    f.process_merges();
  }

  // Collect representative adjacency, normalizing stored neighbors.
  int b = f.find(base);
  std::map<int, std::map<int, int>> out, in;
  for (int v = 0; v < static_cast<int>(f.parent.size()); ++v) {
    if (f.find(v) != v) continue;
    for (auto [lbl, t] : f.out[v]) out[v][lbl] = f.find(t);
    for (auto [lbl, s] : f.in[v]) in[v][lbl] = f.find(s);
  }

  // Prune hairs: repeatedly drop non-basepoint vertices of degree <= 1.
  auto degree = [&](int v) { return out[v].size() + in[v].size(); };
  std::deque<int> check;
  for (auto& [v, _] : out) check.push_back(v);
  while (!check.empty()) {
    int v = check.front();
    check.pop_front();
    if (v == b || !out.count(v) || degree(v) > 1) continue;
    if (!out[v].empty()) {
      auto [lbl, t] = *out[v].begin();
      in[t].erase(lbl);
      check.push_back(t);
    } else if (!in[v].empty()) {
      auto [lbl, s] = *in[v].begin();
      out[s].erase(lbl);
      check.push_back(s);
    }
    out.erase(v);
    in.erase(v);
  }

  // Canonical renumbering: BFS from the basepoint, neighbors in label order,
  // outgoing before incoming.
  std::map<int, int> id;
  std::vector<int> order;
  id[b] = 0;
  order.push_back(b);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (auto [lbl, t] : out[v])
      if (!id.count(t)) {
        id[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    for (auto [lbl, s] : in[v])
      if (!id.count(s)) {
        id[s] = static_cast<int>(order.size());
        order.push_back(s);
      }
  }

  CoreGraph g;
  g.out_.resize(order.size());
  g.in_.resize(order.size());
  for (int v : order) {
    for (auto [lbl, t] : out[v]) {
      g.out_[id[v]][lbl] = id[t];
      g.in_[id[t]][lbl] = id[v];
      g.edges_.push_back({id[v], lbl, id[t]});
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

bool CoreGraph::contains(const Word& w) const {
  int v = 0;
  for (Letter l : w) {
    const auto& adj = l.sign() > 0 ? out_[v] : in_[v];
    auto it = adj.find(l.index());
    if (it == adj.end()) return false;
    v = it->second;
  }
  return v == 0;
}

std::vector<Word> CoreGraph::basis() const {
  const int n = vertex_count();
  std::vector<Letter> parent_letter(n, kZ);
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<int> q{0};
  std::vector<Edge> tree_edges;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto [lbl, t] : out_[v])
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = v;
        parent_letter[t] = Letter(lbl, 1);
        tree_edges.push_back({v, lbl, t});
        q.push_back(t);
      }
    for (auto [lbl, s] : in_[v])
      if (!seen[s]) {
        seen[s] = true;
        parent[s] = v;
        parent_letter[s] = Letter(lbl, -1);
        tree_edges.push_back({s, lbl, v});
        q.push_back(s);
      }
  }

  auto path_from_base = [&](int v) {
    std::vector<Letter> rev;
    while (parent[v] >= 0) {
      rev.push_back(parent_letter[v]);
      v = parent[v];
    }
    std::reverse(rev.begin(), rev.end());
    return Word::reduce(rev);
  };

  std::vector<Word> out;
  for (const Edge& e : edges_) {
    if (std::find(tree_edges.begin(), tree_edges.end(), e) != tree_edges.end())
      continue;
    Word w = path_from_base(e.source) * Word{Letter(e.label, 1)} *
             path_from_base(e.target).inverse();
    out.push_back(w);
  }
  return out;
}

std::optional<Word> CoreGraph::find_z_conjugate() const {
  const int n = vertex_count();
  std::vector<int> pred(n, -1);
  std::vector<Letter> pred_letter(n, kZ);
  std::vector<bool> seen(n, false);
  std::deque<int> q{0};
  seen[0] = true;
  auto has_z_loop = [&](int v) {
    auto it = out_[v].find(0);
    return it != out_[v].end() && it->second == v;
  };
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (has_z_loop(v)) {
      std::vector<Letter> rev;  // path v -> basepoint
      for (int u = v; pred[u] >= 0; u = pred[u])
        rev.push_back(pred_letter[u].inverse());
      return Word::reduce(rev);
    }
    // Expand z-free edges in letter order: out (positive) before in.
    std::vector<std::pair<Letter, int>> steps;
    for (auto [lbl, t] : out_[v])
      if (lbl != 0) steps.emplace_back(Letter(lbl, 1), t);
    for (auto [lbl, s] : in_[v])
      if (lbl != 0) steps.emplace_back(Letter(lbl, -1), s);
    std::sort(steps.begin(), steps.end());
    for (auto [l, t] : steps)
      if (!seen[t]) {
        seen[t] = true;
        pred[t] = v;
        pred_letter[t] = l;
        q.push_back(t);
      }
  }
  return std::nullopt;
}

std::string CoreGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph core {\n  rankdir=LR;\n";
  os << "  0 [shape=doublecircle];\n";
  for (int v = 1; v < vertex_count(); ++v) os << "  " << v << " [shape=circle];\n";
  for (const Edge& e : edges_)
    os << "  " << e.source << " -> " << e.target << " [label=\""
       << debug_string(Word{Letter(e.label, 1)}) << "\"];\n";
  os << "}\n";
  return os.str();
}

bool same_subgroup(const CoreGraph& a, const CoreGraph& b) { return a == b; }

bool involves_z(const std::vector<Word>& generators) {
  for (const Word& w : generators)
    if (w.involves(0)) return true;
  return false;
}

}  // namespace fbc
