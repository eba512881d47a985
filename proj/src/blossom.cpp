#include <algorithm>
#include <cassert>
#include <utility>

#include "forks/matching.hpp"

// Maximum-weight general matching, primal-dual blossom method. The layout
// follows the classic formulation (Galil 1986): vertex duals are stored
// doubled so that all slacks stay integral for integer weights; blossoms
// occupy ids [nvertex, 2*nvertex). Edge "endpoints" are indexed 2k and 2k+1
// for edge k, so p^1 is the opposite endpoint of p.

namespace forks {

namespace {

constexpr int kLabelFree = 0;
constexpr int kLabelS = 1;
constexpr int kLabelT = 2;
constexpr int kBreadcrumb = 4;

class BlossomMatcher {
 public:
  BlossomMatcher(int vertex_count, const std::vector<WeightedEdge>& edges, bool max_cardinality)
      : nvertex_(vertex_count), edges_(edges), max_cardinality_(max_cardinality) {}

  std::vector<int> run();

 private:
  std::int64_t slack(int k) const {
    const WeightedEdge& e = edges_[k];
    return dual_[e.u] + dual_[e.v] - 2 * static_cast<std::int64_t>(e.weight);
  }

  void for_each_leaf(int b, const auto& fn) const {
    if (b < nvertex_) {
      fn(b);
      return;
    }
    for (const int child : blossom_childs_[b]) {
      for_each_leaf(child, fn);
    }
  }

  void assign_label(int w, int t, int p);
  int scan_blossom(int v, int w);
  void add_blossom(int base, int k);
  void expand_blossom(int b, bool endstage);
  void augment_blossom(int b, int v);
  void augment_matching(int k);

  int nvertex_;
  const std::vector<WeightedEdge>& edges_;
  bool max_cardinality_;

  std::vector<int> endpoint_;             // endpoint p -> vertex
  std::vector<std::vector<int>> neighb_;  // vertex -> remote endpoints of incident edges
  std::vector<int> mate_;                 // vertex -> remote endpoint or -1
  std::vector<int> label_;                // per vertex/blossom
  std::vector<int> label_end_;
  std::vector<int> in_blossom_;      // vertex -> top-level blossom
  std::vector<int> blossom_parent_;  // blossom -> parent or -1
  std::vector<std::vector<int>> blossom_childs_;
  std::vector<int> blossom_base_;
  std::vector<std::vector<int>> blossom_endps_;
  std::vector<int> best_edge_;
  std::vector<std::vector<int>> blossom_best_edges_;
  std::vector<int> unused_blossoms_;
  std::vector<std::int64_t> dual_;
  std::vector<char> allow_edge_;
  std::vector<int> queue_;
};

void BlossomMatcher::assign_label(int w, int t, int p) {
  const int b = in_blossom_[w];
  assert(label_[w] == kLabelFree && label_[b] == kLabelFree);
  label_[w] = label_[b] = t;
  label_end_[w] = label_end_[b] = p;
  best_edge_[w] = best_edge_[b] = -1;
  if (t == kLabelS) {
    for_each_leaf(b, [&](int leaf) { queue_.push_back(leaf); });
  } else if (t == kLabelT) {
    const int base = blossom_base_[b];
    assert(mate_[base] >= 0);
    assign_label(endpoint_[mate_[base]], kLabelS, mate_[base] ^ 1);
  }
}

int BlossomMatcher::scan_blossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = in_blossom_[v];
    if (label_[b] & kBreadcrumb) {
      base = blossom_base_[b];
      break;
    }
    assert(label_[b] == kLabelS);
    path.push_back(b);
    label_[b] = kLabelS | kBreadcrumb;
    assert(label_end_[b] == mate_[blossom_base_[b]]);
    if (label_end_[b] == -1) {
      v = -1;  // base of b is single; this path ends
    } else {
      v = endpoint_[label_end_[b]];
      b = in_blossom_[v];
      assert(label_[b] == kLabelT);
      assert(label_end_[b] >= 0);
      v = endpoint_[label_end_[b]];
    }
    if (w != -1) std::swap(v, w);
  }
  for (const int b : path) label_[b] = kLabelS;
  return base;
}

void BlossomMatcher::add_blossom(int base, int k) {
  int v = edges_[k].u;
  int w = edges_[k].v;
  const int bb = in_blossom_[base];
  int bv = in_blossom_[v];
  int bw = in_blossom_[w];

  const int b = unused_blossoms_.back();
  unused_blossoms_.pop_back();
  blossom_base_[b] = base;
  blossom_parent_[b] = -1;
  blossom_parent_[bb] = b;

  std::vector<int>& path = blossom_childs_[b];
  std::vector<int>& endps = blossom_endps_[b];
  path.clear();
  endps.clear();

  while (bv != bb) {
    blossom_parent_[bv] = b;
    path.push_back(bv);
    endps.push_back(label_end_[bv]);
    assert(label_[bv] == kLabelT ||
           (label_[bv] == kLabelS && label_end_[bv] == mate_[blossom_base_[bv]]));
    assert(label_end_[bv] >= 0);
    v = endpoint_[label_end_[bv]];
    bv = in_blossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    blossom_parent_[bw] = b;
    path.push_back(bw);
    endps.push_back(label_end_[bw] ^ 1);
    assert(label_[bw] == kLabelT ||
           (label_[bw] == kLabelS && label_end_[bw] == mate_[blossom_base_[bw]]));
    assert(label_end_[bw] >= 0);
    w = endpoint_[label_end_[bw]];
    bw = in_blossom_[w];
  }

  assert(label_[bb] == kLabelS);
  label_[b] = kLabelS;
  label_end_[b] = label_end_[bb];
  dual_[b] = 0;

  for_each_leaf(b, [&](int leaf) {
    if (label_[in_blossom_[leaf]] == kLabelT) {
      queue_.push_back(leaf);  // former T-vertex becomes S
    }
    in_blossom_[leaf] = b;
  });

  // Merge least-slack edge lists of the children into the new blossom.
  std::vector<int> best_edge_to(2 * nvertex_, -1);
  for (const int child : path) {
    std::vector<int> candidates;
    if (blossom_best_edges_[child].empty()) {
      for_each_leaf(child, [&](int leaf) {
        for (const int p : neighb_[leaf]) candidates.push_back(p / 2);
      });
    } else {
      candidates = blossom_best_edges_[child];
    }
    for (const int ek : candidates) {
      int i = edges_[ek].u;
      int j = edges_[ek].v;
      if (in_blossom_[j] == b) std::swap(i, j);
      const int bj = in_blossom_[j];
      if (bj != b && label_[bj] == kLabelS &&
          (best_edge_to[bj] == -1 || slack(ek) < slack(best_edge_to[bj]))) {
        best_edge_to[bj] = ek;
      }
    }
    blossom_best_edges_[child].clear();
    best_edge_[child] = -1;
  }
  blossom_best_edges_[b].clear();
  for (const int ek : best_edge_to) {
    if (ek != -1) blossom_best_edges_[b].push_back(ek);
  }
  best_edge_[b] = -1;
  for (const int ek : blossom_best_edges_[b]) {
    if (best_edge_[b] == -1 || slack(ek) < slack(best_edge_[b])) {
      best_edge_[b] = ek;
    }
  }
}

void BlossomMatcher::expand_blossom(int b, bool endstage) {
  for (const int s : blossom_childs_[b]) {
    blossom_parent_[s] = -1;
    if (s < nvertex_) {
      in_blossom_[s] = s;
    } else if (endstage && dual_[s] == 0) {
      expand_blossom(s, endstage);
    } else {
      for_each_leaf(s, [&](int leaf) { in_blossom_[leaf] = s; });
    }
  }

  if (!endstage && label_[b] == kLabelT) {
    // Relabel the sub-blossoms along the path from the entry child to the
    // base; the rest become free or T depending on reachability.
    assert(label_end_[b] >= 0);
    const int entry_child = in_blossom_[endpoint_[label_end_[b] ^ 1]];
    const auto& childs = blossom_childs_[b];
    const auto& endps = blossom_endps_[b];
    const int nchilds = static_cast<int>(childs.size());
    auto child_at = [&](int j) { return childs[((j % nchilds) + nchilds) % nchilds]; };
    auto endp_at = [&](int j) { return endps[((j % nchilds) + nchilds) % nchilds]; };

    int j = static_cast<int>(std::find(childs.begin(), childs.end(), entry_child) -
                             childs.begin());
    int jstep;
    int endptrick;
    if (j & 1) {
      j -= nchilds;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = label_end_[b];
    while (j != 0) {
      label_[endpoint_[p ^ 1]] = kLabelFree;
      label_[endpoint_[endp_at(j - endptrick) ^ endptrick ^ 1]] = kLabelFree;
      assign_label(endpoint_[p ^ 1], kLabelT, p);
      allow_edge_[endp_at(j - endptrick) / 2] = true;
      j += jstep;
      p = endp_at(j - endptrick) ^ endptrick;
      allow_edge_[p / 2] = true;
      j += jstep;
    }
    const int bv = child_at(j);
    label_[endpoint_[p ^ 1]] = label_[bv] = kLabelT;
    label_end_[endpoint_[p ^ 1]] = label_end_[bv] = p;
    best_edge_[bv] = -1;
    j += jstep;
    while (child_at(j) != entry_child) {
      const int bw = child_at(j);
      if (label_[bw] == kLabelS) {
        j += jstep;
        continue;
      }
      int reached = -1;
      for_each_leaf(bw, [&](int leaf) {
        if (reached == -1 && label_[leaf] != kLabelFree) reached = leaf;
      });
      if (reached != -1) {
        assert(label_[reached] == kLabelT);
        assert(in_blossom_[reached] == bw);
        label_[reached] = kLabelFree;
        label_[endpoint_[mate_[blossom_base_[bw]]]] = kLabelFree;
        assign_label(reached, kLabelT, label_end_[reached]);
      }
      j += jstep;
    }
  }

  label_[b] = -1;
  label_end_[b] = -1;
  blossom_childs_[b].clear();
  blossom_endps_[b].clear();
  blossom_base_[b] = -1;
  blossom_best_edges_[b].clear();
  best_edge_[b] = -1;
  unused_blossoms_.push_back(b);
}

void BlossomMatcher::augment_blossom(int b, int v) {
  int t = v;
  while (blossom_parent_[t] != b) t = blossom_parent_[t];
  if (t >= nvertex_) augment_blossom(t, v);

  auto& childs = blossom_childs_[b];
  auto& endps = blossom_endps_[b];
  const int nchilds = static_cast<int>(childs.size());
  auto child_at = [&](int j) { return childs[((j % nchilds) + nchilds) % nchilds]; };
  auto endp_at = [&](int j) { return endps[((j % nchilds) + nchilds) % nchilds]; };

  const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
  int j = i;
  int jstep;
  int endptrick;
  if (i & 1) {
    j -= nchilds;
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    int child = child_at(j);
    const int p = endp_at(j - endptrick) ^ endptrick;
    if (child >= nvertex_) augment_blossom(child, endpoint_[p]);
    j += jstep;
    child = child_at(j);
    if (child >= nvertex_) augment_blossom(child, endpoint_[p ^ 1]);
    mate_[endpoint_[p]] = p ^ 1;
    mate_[endpoint_[p ^ 1]] = p;
  }
  std::rotate(childs.begin(), childs.begin() + i, childs.end());
  std::rotate(endps.begin(), endps.begin() + i, endps.end());
  blossom_base_[b] = blossom_base_[childs[0]];
  assert(blossom_base_[b] == v);
}

void BlossomMatcher::augment_matching(int k) {
  const std::pair<int, int> starts[2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
  for (auto [s, p] : starts) {
    while (true) {
      const int bs = in_blossom_[s];
      assert(label_[bs] == kLabelS);
      assert(label_end_[bs] == mate_[blossom_base_[bs]]);
      if (bs >= nvertex_) augment_blossom(bs, s);
      mate_[s] = p;
      if (label_end_[bs] == -1) break;  // reached a root
      const int t = endpoint_[label_end_[bs]];
      const int bt = in_blossom_[t];
      assert(label_[bt] == kLabelT);
      assert(label_end_[bt] >= 0);
      s = endpoint_[label_end_[bt]];
      const int j = endpoint_[label_end_[bt] ^ 1];
      assert(blossom_base_[bt] == t);
      if (bt >= nvertex_) augment_blossom(bt, j);
      mate_[j] = label_end_[bt];
      p = label_end_[bt] ^ 1;
    }
  }
}

std::vector<int> BlossomMatcher::run() {
  if (nvertex_ == 0 || edges_.empty()) {
    return std::vector<int>(nvertex_, -1);
  }

  std::int64_t max_weight = 0;
  for (const WeightedEdge& e : edges_) {
    max_weight = std::max<std::int64_t>(max_weight, e.weight);
  }

  endpoint_.resize(2 * edges_.size());
  neighb_.assign(nvertex_, {});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    endpoint_[2 * k] = edges_[k].u;
    endpoint_[2 * k + 1] = edges_[k].v;
    neighb_[edges_[k].u].push_back(static_cast<int>(2 * k + 1));
    neighb_[edges_[k].v].push_back(static_cast<int>(2 * k));
  }

  mate_.assign(nvertex_, -1);
  label_.assign(2 * nvertex_, kLabelFree);
  label_end_.assign(2 * nvertex_, -1);
  in_blossom_.resize(nvertex_);
  for (int v = 0; v < nvertex_; ++v) in_blossom_[v] = v;
  blossom_parent_.assign(2 * nvertex_, -1);
  blossom_childs_.assign(2 * nvertex_, {});
  blossom_base_.resize(2 * nvertex_);
  for (int v = 0; v < nvertex_; ++v) blossom_base_[v] = v;
  for (int b = nvertex_; b < 2 * nvertex_; ++b) blossom_base_[b] = -1;
  blossom_endps_.assign(2 * nvertex_, {});
  best_edge_.assign(2 * nvertex_, -1);
  blossom_best_edges_.assign(2 * nvertex_, {});
  unused_blossoms_.clear();
  for (int b = 2 * nvertex_ - 1; b >= nvertex_; --b) unused_blossoms_.push_back(b);
  dual_.assign(2 * nvertex_, 0);
  for (int v = 0; v < nvertex_; ++v) dual_[v] = max_weight;
  allow_edge_.assign(edges_.size(), 0);

  for (int stage = 0; stage < nvertex_; ++stage) {
    std::fill(label_.begin(), label_.end(), kLabelFree);
    std::fill(best_edge_.begin(), best_edge_.end(), -1);
    for (int b = nvertex_; b < 2 * nvertex_; ++b) blossom_best_edges_[b].clear();
    std::fill(allow_edge_.begin(), allow_edge_.end(), 0);
    queue_.clear();

    for (int v = 0; v < nvertex_; ++v) {
      if (mate_[v] == -1 && label_[in_blossom_[v]] == kLabelFree) {
        assign_label(v, kLabelS, -1);
      }
    }

    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        assert(label_[in_blossom_[v]] == kLabelS);

        for (const int p : neighb_[v]) {
          const int k = p / 2;
          const int w = endpoint_[p];
          if (in_blossom_[v] == in_blossom_[w]) continue;

          std::int64_t kslack = 0;
          if (!allow_edge_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allow_edge_[k] = true;
          }
          if (allow_edge_[k]) {
            if (label_[in_blossom_[w]] == kLabelFree) {
              assign_label(w, kLabelT, p ^ 1);
            } else if (label_[in_blossom_[w]] == kLabelS) {
              const int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == kLabelFree) {
              // w sits in a T-blossom but has not been reached itself yet;
              // remember the entry for a later expansion.
              assert(label_[in_blossom_[w]] == kLabelT);
              label_[w] = kLabelT;
              label_end_[w] = p ^ 1;
            }
          } else if (label_[in_blossom_[w]] == kLabelS) {
            const int b = in_blossom_[v];
            if (best_edge_[b] == -1 || kslack < slack(best_edge_[b])) {
              best_edge_[b] = k;
            }
          } else if (label_[w] == kLabelFree) {
            if (best_edge_[w] == -1 || kslack < slack(best_edge_[w])) {
              best_edge_[w] = k;
            }
          }
        }
      }
      if (augmented) break;

      // No augmenting path under the current tight edges; adjust duals.
      int delta_type = -1;
      std::int64_t delta = 0;
      int delta_edge = -1;
      int delta_blossom = -1;

      if (!max_cardinality_) {
        delta_type = 1;
        delta = std::max<std::int64_t>(
            0, *std::min_element(dual_.begin(), dual_.begin() + nvertex_));
      }

      for (int v = 0; v < nvertex_; ++v) {
        if (label_[in_blossom_[v]] == kLabelFree && best_edge_[v] != -1) {
          const std::int64_t d = slack(best_edge_[v]);
          if (delta_type == -1 || d < delta) {
            delta = d;
            delta_type = 2;
            delta_edge = best_edge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * nvertex_; ++b) {
        if (blossom_parent_[b] == -1 && label_[b] == kLabelS && best_edge_[b] != -1) {
          const std::int64_t kslack = slack(best_edge_[b]);
          assert(kslack % 2 == 0);
          const std::int64_t d = kslack / 2;
          if (delta_type == -1 || d < delta) {
            delta = d;
            delta_type = 3;
            delta_edge = best_edge_[b];
          }
        }
      }
      for (int b = nvertex_; b < 2 * nvertex_; ++b) {
        if (blossom_base_[b] >= 0 && blossom_parent_[b] == -1 && label_[b] == kLabelT &&
            (delta_type == -1 || dual_[b] < delta)) {
          delta = dual_[b];
          delta_type = 4;
          delta_blossom = b;
        }
      }
      if (delta_type == -1) {
        // Max-cardinality optimum: no tightening step remains.
        assert(max_cardinality_);
        delta_type = 1;
        delta = std::max<std::int64_t>(
            0, *std::min_element(dual_.begin(), dual_.begin() + nvertex_));
      }

      for (int v = 0; v < nvertex_; ++v) {
        const int lbl = label_[in_blossom_[v]];
        if (lbl == kLabelS) {
          dual_[v] -= delta;
        } else if (lbl == kLabelT) {
          dual_[v] += delta;
        }
      }
      for (int b = nvertex_; b < 2 * nvertex_; ++b) {
        if (blossom_base_[b] >= 0 && blossom_parent_[b] == -1) {
          if (label_[b] == kLabelS) {
            dual_[b] += delta;
          } else if (label_[b] == kLabelT) {
            dual_[b] -= delta;
          }
        }
      }

      if (delta_type == 1) {
        break;  // optimum reached
      } else if (delta_type == 2) {
        allow_edge_[delta_edge] = true;
        int i = edges_[delta_edge].u;
        if (label_[in_blossom_[i]] == kLabelFree) i = edges_[delta_edge].v;
        assert(label_[in_blossom_[i]] == kLabelS);
        queue_.push_back(i);
      } else if (delta_type == 3) {
        allow_edge_[delta_edge] = true;
        assert(label_[in_blossom_[edges_[delta_edge].u]] == kLabelS);
        queue_.push_back(edges_[delta_edge].u);
      } else {
        expand_blossom(delta_blossom, false);
      }
    }

    if (!augmented) break;

    for (int b = nvertex_; b < 2 * nvertex_; ++b) {
      if (blossom_parent_[b] == -1 && blossom_base_[b] >= 0 && label_[b] == kLabelS &&
          dual_[b] == 0) {
        expand_blossom(b, true);
      }
    }
  }

  std::vector<int> result(nvertex_, -1);
  for (int v = 0; v < nvertex_; ++v) {
    if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
  }
  for (int v = 0; v < nvertex_; ++v) {
    assert(result[v] == -1 || result[result[v]] == v);
  }
  return result;
}

}  // namespace

std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality) {
  for (const WeightedEdge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count || e.u == e.v) {
      throw std::invalid_argument("max_weight_matching: bad edge");
    }
  }
  BlossomMatcher matcher(vertex_count, edges, max_cardinality);
  return matcher.run();
}

Matching min_weight_perfect_matching(const WeightedGraph& graph) {
  const int n = graph.vertex_count();
  if (n % 2 != 0) {
    throw NoPerfectMatchingError("odd vertex count");
  }

  // Complement the weights: a maximum-cardinality maximum-weight matching on
  // 1 - w uses as many weight-0 edges of the original graph as possible.
  std::vector<WeightedEdge> flipped;
  flipped.reserve(graph.edges().size());
  for (const WeightedEdge& e : graph.edges()) {
    flipped.push_back({e.u, e.v, 1 - e.weight});
  }

  const std::vector<int> mate = max_weight_matching(n, flipped, /*max_cardinality=*/true);
  Matching m;
  for (int v = 0; v < n; ++v) {
    if (mate[v] == -1) {
      throw NoPerfectMatchingError("graph admits no perfect matching");
    }
    if (v < mate[v]) {
      m.pairs.emplace_back(v, mate[v]);
    }
  }
  return m;
}

}  // namespace forks
