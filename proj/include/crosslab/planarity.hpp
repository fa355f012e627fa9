#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "crosslab/graph.hpp"

namespace crosslab {

namespace detail {

// Left-right planarity criterion (Brandes' formulation of de Fraysseix /
// Rosenstiehl), decision only: the embedding-extraction bookkeeping (side
// signs) is omitted. Each undirected edge receives exactly one orientation
// during DFS, so edge indices double as oriented-edge ids.
class LeftRightTest {
 public:
  explicit LeftRightTest(const Graph& g) : g_(g), m_(g.edge_count()) {
    const int n = g_.vertex_count();
    height_.assign(n, -1);
    parent_edge_.assign(n, -1);
    tail_.assign(m_, -1);
    head_.assign(m_, -1);
    oriented_.assign(m_, false);
    lowpt_.assign(m_, 0);
    lowpt2_.assign(m_, 0);
    nesting_depth_.assign(m_, 0);
    ref_.assign(m_, -1);
    lowpt_edge_.assign(m_, -1);
    stack_bottom_.assign(m_, 0);
    incident_.assign(n, {});
    for (int idx = 0; idx < m_; ++idx) {
      auto [u, v] = g_.edges()[idx];
      incident_[u].push_back(idx);
      incident_[v].push_back(idx);
    }
    // neighbors ascending; edges() is lex-sorted so incident_ already is
  }

  bool run() {
    const int n = g_.vertex_count();
    if (n > 2 && m_ > 3 * n - 6) return false;  // Euler bound
    for (int v = 0; v < n; ++v)
      if (height_[v] == -1) {
        height_[v] = 0;
        roots_.push_back(v);
        dfs_orientation(v);
      }
    ordered_out_.assign(n, {});
    for (int idx = 0; idx < m_; ++idx) ordered_out_[tail_[idx]].push_back(idx);
    for (int v = 0; v < n; ++v)
      std::stable_sort(ordered_out_[v].begin(), ordered_out_[v].end(),
                       [&](int a, int b) {
                         return nesting_depth_[a] < nesting_depth_[b];
                       });
    for (int r : roots_) {
      stack_.clear();  // components are independent
      if (!dfs_testing(r)) return false;
    }
    return true;
  }

 private:
  struct Interval {
    int low = -1, high = -1;
    bool empty() const { return low == -1 && high == -1; }
  };
  struct ConflictPair {
    Interval left, right;
  };

  int other_end(int idx, int v) const {
    auto [a, b] = g_.edges()[idx];
    return a == v ? b : a;
  }

  void dfs_orientation(int v) {
    const int e = parent_edge_[v];
    for (int idx : incident_[v]) {
      if (oriented_[idx]) continue;
      oriented_[idx] = true;
      const int w = other_end(idx, v);
      tail_[idx] = v;
      head_[idx] = w;
      lowpt_[idx] = height_[v];
      lowpt2_[idx] = height_[v];
      if (height_[w] == -1) {  // tree edge
        parent_edge_[w] = idx;
        height_[w] = height_[v] + 1;
        dfs_orientation(w);
      } else {  // back edge to an ancestor
        lowpt_[idx] = height_[w];
      }
      nesting_depth_[idx] = 2 * lowpt_[idx];
      if (lowpt2_[idx] < height_[v]) ++nesting_depth_[idx];  // chordal
      if (e != -1) {
        if (lowpt_[idx] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[idx]);
          lowpt_[e] = lowpt_[idx];
        } else if (lowpt_[idx] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[idx]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[idx]);
        }
      }
    }
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  bool dfs_testing(int v) {
    const int e = parent_edge_[v];
    const auto& out = ordered_out_[v];
    for (int ei : out) {
      stack_bottom_[ei] = stack_.size();
      const int w = head_[ei];
      if (parent_edge_[w] == ei) {  // tree edge
        if (!dfs_testing(w)) return false;
      } else {  // back edge
        lowpt_edge_[ei] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {  // ei has a return edge below v
        if (ei == out.front()) {
          if (e != -1) lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != -1) remove_back_edges(e);
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // merge return edges of ei into p.right
    do {
      assert(!stack_.empty());
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;  // not planar
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty())
          p.right.high = q.right.high;
        else
          ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];  // align
      }
    } while (stack_.size() != stack_bottom_[ei]);
    // merge conflicting return edges of earlier siblings into p.left
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) ||
                               conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;  // not planar
      if (p.right.low != -1) ref_[p.right.low] = q.right.high;
      if (q.right.low != -1) p.right.low = q.right.low;
      if (p.left.empty())
        p.left.high = q.left.high;
      else
        ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    const int u = tail_[e];
    // drop conflict pairs whose return edges all end at u
    while (!stack_.empty() && lowest(stack_.back()) == height_[u])
      stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != -1 && head_[p.left.high] == u)
        p.left.high = ref_[p.left.high];
      if (p.left.high == -1 && p.left.low != -1) {  // interval just emptied
        ref_[p.left.low] = p.right.low;
        p.left.low = -1;
      }
      while (p.right.high != -1 && head_[p.right.high] == u)
        p.right.high = ref_[p.right.high];
      if (p.right.high == -1 && p.right.low != -1) {
        ref_[p.right.low] = p.left.low;
        p.right.low = -1;
      }
      if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    }
  }

  const Graph& g_;
  int m_;
  std::vector<int> height_, parent_edge_, tail_, head_;
  std::vector<bool> oriented_;
  std::vector<int> lowpt_, lowpt2_, nesting_depth_, ref_, lowpt_edge_;
  std::vector<size_t> stack_bottom_;
  std::vector<std::vector<int>> incident_, ordered_out_;
  std::vector<int> roots_;
  std::vector<ConflictPair> stack_;
};

}  // namespace detail

/// True iff G admits a planar drawing.
inline bool is_planar(const Graph& g) {
  if (g.vertex_count() <= 2) return true;
  return detail::LeftRightTest(g).run();
}

}  // namespace crosslab
