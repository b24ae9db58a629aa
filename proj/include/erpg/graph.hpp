// Copyright 2026 The erpg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file graph.hpp
 * @brief Dense undirected graphs stored as bitset adjacency rows, with the
 * verification predicates, an exact maximum independent set solver and
 * graph6 / DIMACS / CSV interchange.
 */

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "erpg/error.hpp"

namespace erpg {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Fixed-size bitset over [0, n).
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }

  /// Least set index, or size() if empty.
  std::size_t first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
    return n_;
  }

  Bitset& operator&=(std::span<const std::uint64_t> other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
    return *this;
  }

  /// this &= ~other
  Bitset& subtract(std::span<const std::uint64_t> other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other[i];
    return *this;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w; w &= w - 1) fn((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t intersection_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

/**
 * @brief Simple undirected graph with dense bitset rows.
 *
 * Vertices may carry labels (the canonical point index they stand for);
 * by default vertex i has label i.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::uint32_t n) : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0) {}

  std::uint32_t size() const noexcept { return n_; }

  std::span<const std::uint64_t> row(std::uint32_t v) const noexcept {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    check(u);
    check(v);
    return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }

  void add_edge(std::uint32_t u, std::uint32_t v) {
    check(u);
    check(v);
    if (u == v) throw Error(ErrorCode::VertexOutOfRange, "self-loops are not allowed");
    adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  }

  std::uint32_t degree(std::uint32_t v) const {
    check(v);
    std::uint32_t d = 0;
    for (auto w : row(v)) d += static_cast<std::uint32_t>(std::popcount(w));
    return d;
  }

  std::uint64_t edge_count() const noexcept {
    std::uint64_t c = 0;
    for (auto w : adj_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c / 2;
  }

  std::vector<std::uint32_t> neighbors(std::uint32_t v) const {
    check(v);
    std::vector<std::uint32_t> out;
    for_each_bit(row(v), [&](std::uint32_t u) { out.push_back(u); });
    return out;
  }

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::uint32_t u = 0; u < n_; ++u) {
      for_each_bit(row(u), [&](std::uint32_t v) {
        if (v > u) out.emplace_back(u, v);
      });
    }
    return out;
  }

  std::uint32_t label(std::uint32_t v) const {
    check(v);
    return labels_.empty() ? v : labels_[v];
  }

  void set_labels(std::vector<std::uint32_t> labels) {
    if (labels.size() != n_) throw Error(ErrorCode::VertexOutOfRange, "label count differs from vertex count");
    labels_ = std::move(labels);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

  template <class Fn>
  static void for_each_bit(std::span<const std::uint64_t> words, Fn&& fn) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::uint64_t w = words[i]; w; w &= w - 1) {
        fn(static_cast<std::uint32_t>((i << 6) + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
  }

 private:
  void check(std::uint32_t v) const {
    if (v >= n_) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }

  std::uint32_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint32_t> labels_;
};

namespace detail {

inline Bitset to_bitset(const Graph& G, std::span<const std::uint32_t> S) {
  Bitset b(G.size());
  for (auto v : S) {
    if (v >= G.size()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
    b.set(v);
  }
  return b;
}

}  // namespace detail

/// An edge with both ends in S, or nullopt if S is independent.
inline std::optional<Edge> independence_violation(const Graph& G, std::span<const std::uint32_t> S) {
  const Bitset members = detail::to_bitset(G, S);
  std::optional<Edge> found;
  members.for_each([&](std::size_t u) {
    if (found) return;
    const auto row = G.row(static_cast<std::uint32_t>(u));
    const auto mw = members.words();
    for (std::size_t i = 0; i < mw.size(); ++i) {
      if (const std::uint64_t hit = row[i] & mw[i]) {
        const auto v = static_cast<std::uint32_t>((i << 6) + static_cast<std::size_t>(std::countr_zero(hit)));
        found = Edge{std::min<std::uint32_t>(static_cast<std::uint32_t>(u), v),
                     std::max<std::uint32_t>(static_cast<std::uint32_t>(u), v)};
        return;
      }
    }
  });
  return found;
}

inline bool is_independent(const Graph& G, std::span<const std::uint32_t> S) {
  return !independence_violation(G, S).has_value();
}

/// Calls fn(u, v, w) for every triangle u < v < w, lexicographically.
template <class Fn>
void for_each_triangle(const Graph& G, Fn&& fn) {
  const std::uint32_t n = G.size();
  std::vector<std::uint64_t> common(G.row(0).size());
  for (std::uint32_t u = 0; u < n; ++u) {
    const auto ru = G.row(u);
    Graph::for_each_bit(ru, [&](std::uint32_t v) {
      if (v <= u) return;
      const auto rv = G.row(v);
      for (std::size_t i = 0; i < common.size(); ++i) common[i] = ru[i] & rv[i];
      Graph::for_each_bit(common, [&](std::uint32_t w) {
        if (w > v) fn(u, v, w);
      });
    });
  }
}

inline std::uint64_t triangle_count(const Graph& G) {
  if (G.size() == 0) return 0;
  std::uint64_t t = 0;
  for (std::uint32_t u = 0; u < G.size(); ++u) {
    const auto ru = G.row(u);
    Graph::for_each_bit(ru, [&](std::uint32_t v) {
      if (v > u) t += intersection_count(ru, G.row(v));
    });
  }
  return t / 3;
}

/// Length of a shortest cycle, or nullopt for a forest.
inline std::optional<std::uint32_t> girth(const Graph& G) {
  const std::uint32_t n = G.size();
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t best = kUnseen;
  std::vector<std::uint32_t> dist(n), parent(n), queue;
  queue.reserve(n);
  for (std::uint32_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    queue.clear();
    dist[root] = 0;
    parent[root] = kUnseen;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      if (2 * dist[u] >= best) break;
      Graph::for_each_bit(G.row(u), [&](std::uint32_t v) {
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (parent[u] != v) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      });
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best;
}

/// Subgraph induced on S; vertex i of the result is S[i] and keeps its label.
inline Graph induced(const Graph& G, std::span<const std::uint32_t> S) {
  Graph H(static_cast<std::uint32_t>(S.size()));
  std::vector<std::uint32_t> labels;
  labels.reserve(S.size());
  for (auto v : S) labels.push_back(G.label(v));
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      if (G.has_edge(S[i], S[j])) H.add_edge(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    }
  }
  if (!S.empty()) H.set_labels(std::move(labels));
  return H;
}

inline bool is_regular(const Graph& G, std::uint32_t k) {
  for (std::uint32_t v = 0; v < G.size(); ++v) {
    if (G.degree(v) != k) return false;
  }
  return true;
}

/// Adds every candidate, in order, that has no neighbour in the growing set.
inline std::vector<std::uint32_t> greedy_extend(const Graph& G, std::span<const std::uint32_t> S,
                                                std::span<const std::uint32_t> candidates) {
  if (!is_independent(G, S)) throw Error(ErrorCode::NotIndependentInput, "seed set is not independent");
  Bitset in = detail::to_bitset(G, S);
  Bitset blocked(G.size());
  for (auto v : S) Graph::for_each_bit(G.row(v), [&](std::uint32_t u) { blocked.set(u); });
  std::vector<std::uint32_t> out(S.begin(), S.end());
  for (auto c : candidates) {
    if (c >= G.size()) throw Error(ErrorCode::VertexOutOfRange, "candidate out of range");
    if (in.test(c) || blocked.test(c)) continue;
    in.set(c);
    out.push_back(c);
    Graph::for_each_bit(G.row(c), [&](std::uint32_t u) { blocked.set(u); });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact maximum independent set.

struct SolveBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds time_cap = std::chrono::hours(24);
};

enum class SolveStatus { optimal, budget_exhausted };

constexpr std::string_view to_string(SolveStatus s) {
  return s == SolveStatus::optimal ? "optimal" : "budget_exhausted";
}

struct MisResult {
  std::uint32_t size = 0;
  std::vector<std::uint32_t> set;  // sorted
  SolveStatus status = SolveStatus::optimal;
  std::uint64_t nodes = 0;
};

namespace detail {

class MisSolver {
 public:
  MisSolver(const Graph& G, SolveBudget budget) : G_(G), budget_(budget), start_(std::chrono::steady_clock::now()) {}

  MisResult run(std::span<const std::uint32_t> incumbent) {
    best_.assign(incumbent.begin(), incumbent.end());
    Bitset cands(G_.size());
    for (std::uint32_t v = 0; v < G_.size(); ++v) cands.set(v);
    std::vector<std::uint32_t> current;
    expand(cands, current);
    MisResult r;
    r.set = best_;
    std::sort(r.set.begin(), r.set.end());
    r.size = static_cast<std::uint32_t>(r.set.size());
    r.status = exhausted_ ? SolveStatus::budget_exhausted : SolveStatus::optimal;
    r.nodes = nodes_;
    return r;
  }

 private:
  bool out_of_budget() {
    if (exhausted_) return true;
    if (nodes_ >= budget_.max_nodes) exhausted_ = true;
    if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_cap) exhausted_ = true;
    return exhausted_;
  }

  // Greedy clique cover of the candidates: an independent set takes at most
  // one vertex per clique.
  std::size_t clique_cover_bound(const Bitset& cands, std::size_t limit) const {
    Bitset rest = cands;
    std::size_t cliques = 0;
    while (rest.any()) {
      if (++cliques > limit) return cliques;
      const auto v = static_cast<std::uint32_t>(rest.first());
      rest.reset(v);
      Bitset common = rest;
      common &= G_.row(v);
      while (common.any()) {
        const auto u = static_cast<std::uint32_t>(common.first());
        rest.reset(u);
        common.reset(u);
        common &= G_.row(u);
      }
    }
    return cliques;
  }

  void expand(Bitset cands, std::vector<std::uint32_t>& current) {
    ++nodes_;
    if (out_of_budget()) return;

    // Vertices of candidate-degree 0 or 1 belong to some maximum solution.
    const std::size_t base = current.size();
    for (bool changed = true; changed;) {
      changed = false;
      cands.for_each([&](std::size_t v) {
        if (changed || !cands.test(v)) return;
        const auto row = G_.row(static_cast<std::uint32_t>(v));
        if (intersection_count(row, cands.words()) <= 1) {
          current.push_back(static_cast<std::uint32_t>(v));
          cands.reset(v);
          cands.subtract(row);
          changed = true;
        }
      });
    }

    const std::size_t remaining = cands.count();
    if (remaining == 0) {
      if (current.size() > best_.size()) best_ = current;
      current.resize(base);
      return;
    }
    if (current.size() + remaining <= best_.size()) {
      current.resize(base);
      return;
    }
    if (current.size() < best_.size()) {
      const std::size_t needed = best_.size() - current.size();
      if (clique_cover_bound(cands, needed) <= needed) {
        current.resize(base);
        return;
      }
    }

    std::uint32_t pivot = 0;
    std::size_t pivot_degree = 0;
    cands.for_each([&](std::size_t v) {
      const std::size_t d = intersection_count(G_.row(static_cast<std::uint32_t>(v)), cands.words());
      if (d > pivot_degree) {
        pivot_degree = d;
        pivot = static_cast<std::uint32_t>(v);
      }
    });

    Bitset with = cands;
    with.reset(pivot);
    with.subtract(G_.row(pivot));
    current.push_back(pivot);
    expand(std::move(with), current);
    current.pop_back();

    cands.reset(pivot);
    expand(std::move(cands), current);
    current.resize(base);
  }

  const Graph& G_;
  SolveBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::uint32_t> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/**
 * @brief Branch and bound for alpha(G).
 *
 * Branches on a candidate of maximum candidate-degree (least index on ties),
 * first including it, then excluding it. Pruning uses the candidate count
 * and a greedy clique-cover bound. An optional independent incumbent seeds
 * the search. The status is optimal only if the search completed within the
 * budget; otherwise the best set found is returned.
 */
inline MisResult max_independent_set_exact(const Graph& G, SolveBudget budget = {},
                                           std::span<const std::uint32_t> incumbent = {}) {
  if (!is_independent(G, incumbent)) throw Error(ErrorCode::NotIndependentInput, "incumbent is not independent");
  detail::MisSolver solver(G, budget);
  return solver.run(incumbent);
}

// ---------------------------------------------------------------------------
// Interchange formats.

enum class GraphFormat { graph6, dimacs, edgelist_csv };

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "csv" || name == "edgelist_csv") return GraphFormat::edgelist_csv;
  throw Error(ErrorCode::UnsupportedFormat, "unknown graph format '" + std::string(name) + "'");
}

namespace detail {

inline void graph6_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
}

}  // namespace detail

/// graph6 without the optional ">>graph6<<" header and without a newline.
inline std::string to_graph6(const Graph& G) {
  std::string out;
  detail::graph6_size(out, G.size());
  int bits = 0, filled = 0;
  for (std::uint32_t j = 1; j < G.size(); ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      bits = (bits << 1) | (G.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(bits + 63));
        bits = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((bits << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  auto byte = [&](std::size_t i) -> std::uint64_t {
    if (i >= s.size() || s[i] < 63 || s[i] > 126) throw Error(ErrorCode::ParseError, "malformed graph6 string");
    return static_cast<std::uint64_t>(s[i] - 63);
  };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else if (byte(1) < 63) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte(i);
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorCode::TooLarge, "graph too large");
  const auto nv = static_cast<std::uint32_t>(n);
  const std::uint64_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  if (s.size() - pos != (pairs + 5) / 6) throw Error(ErrorCode::ParseError, "graph6 length mismatch");
  Graph G(nv);
  std::uint64_t k = 0;
  for (std::uint32_t j = 1; j < nv; ++j) {
    for (std::uint32_t i = 0; i < j; ++i, ++k) {
      if ((byte(pos + k / 6) >> (5 - k % 6)) & 1) G.add_edge(i, j);
    }
  }
  return G;
}

/// "p edge n m" followed by sorted 1-based "e u v" lines.
inline std::string to_dimacs(const Graph& G) {
  std::ostringstream os;
  const auto es = G.edges();
  os << "p edge " << G.size() << ' ' << es.size() << '\n';
  for (const auto& [u, v] : es) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

/// Sorted 0-based "u,v" lines, no header.
inline std::string to_edgelist_csv(const Graph& G) {
  std::ostringstream os;
  for (const auto& [u, v] : G.edges()) os << u << ',' << v << '\n';
  return os.str();
}

inline std::string export_graph(const Graph& G, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: return to_graph6(G) + "\n";
    case GraphFormat::dimacs: return to_dimacs(G);
    case GraphFormat::edgelist_csv: return to_edgelist_csv(G);
  }
  throw Error(ErrorCode::UnsupportedFormat, "unknown graph format");
}

}  // namespace erpg
