#include "freevertex/generators.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>

#include "freevertex/error.hpp"
#include "freevertex/structure.hpp"

namespace freevertex::gen {
namespace {

constexpr int kTriesPerEdge = 10'000;
constexpr int kRestarts = 100;

class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  /// Uniform in [0, bound) by rejection on the top of the 64-bit range.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[below(k)]);
  }

 private:
  std::mt19937_64 engine_;
};

[[noreturn]] void generation_failed(const std::string& what, Seed seed) {
  fail(ErrorKind::GenerationFailed, what + " (seed " + std::to_string(seed) + ")");
}

// One configuration-model attempt; nullopt when an edge draw gets stuck.
std::optional<std::vector<Hypergraph::Edge>> configuration_attempt(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<VertexId> stubs;
  stubs.reserve(n * k);
  for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), k, static_cast<VertexId>(v));

  std::vector<Hypergraph::Edge> edges;
  edges.reserve(n);
  while (!stubs.empty()) {
    bool placed = false;
    for (int attempt = 0; attempt < kTriesPerEdge && !placed; ++attempt) {
      // Partial Fisher-Yates: move k random stubs to the back.
      const std::size_t size = stubs.size();
      for (std::size_t j = 0; j < k; ++j) std::swap(stubs[size - 1 - j], stubs[rng.below(size - j)]);
      Hypergraph::Edge edge(stubs.end() - static_cast<std::ptrdiff_t>(k), stubs.end());
      std::sort(edge.begin(), edge.end());
      if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
        // Give up early when too few distinct vertices remain.
        auto rest = stubs;
        std::sort(rest.begin(), rest.end());
        if (static_cast<std::size_t>(std::unique(rest.begin(), rest.end()) - rest.begin()) < k) return std::nullopt;
        continue;
      }
      stubs.resize(size - k);
      edges.push_back(std::move(edge));
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
  return edges;
}

Hypergraph configuration_model(std::size_t n, std::size_t k, Rng& rng, bool require_connected, Seed seed) {
  for (int restart = 0; restart < kRestarts; ++restart) {
    auto edges = configuration_attempt(n, k, rng);
    if (!edges) continue;
    Hypergraph h(n, std::move(*edges));
    if (require_connected && !is_connected(h)) continue;
    return h;
  }
  generation_failed("configuration model exhausted its restart budget for n=" + std::to_string(n) +
                        " k=" + std::to_string(k),
                    seed);
}

// Connected 3-uniform edge list with maximum degree 3: the first edge brings
// three vertices, each later edge brings 0..2 new ones and attaches to
// existing vertices that still have spare degree. Labels are shuffled at the
// end.
//
// Spare capacity C (sum of 3 - degree over existing vertices) changes by
// 3f - 3 for an edge with f new vertices. Every existing vertex has degree at
// least 1, so at least C/2 vertices are open, and an edge with f new vertices
// fits whenever C >= 2(3 - f). Taking the remaining budgets in descending
// order keeps C as high as possible, so checking that order tells whether the
// remaining budgets can still be placed.
bool completable(std::size_t capacity, const std::array<std::size_t, 3>& left) {
  long c = static_cast<long>(capacity);
  if (left[2] > 0 && c < 2) return false;
  c += 3 * static_cast<long>(left[2]);
  if (left[1] > 0 && c < 4) return false;
  if (left[0] > 0 && c - 3 * (static_cast<long>(left[0]) - 1) < 6) return false;
  return true;
}

std::vector<Hypergraph::Edge> sparse_3uniform(std::size_t n, std::size_t m, Rng& rng) {
  // How many edges after the first bring 0, 1 and 2 new vertices.
  std::vector<std::size_t> fresh(m, 0);
  for (std::size_t units = n - 3; units > 0; --units) {
    std::vector<std::size_t> room;
    for (std::size_t e = 1; e < m; ++e) {
      if (fresh[e] < 2) room.push_back(e);
    }
    ensure(!room.empty(), "sparse generator ran out of edges for new vertices");
    ++fresh[room[rng.below(room.size())]];
  }
  std::array<std::size_t, 3> left{};
  for (std::size_t e = 1; e < m; ++e) ++left[fresh[e]];

  std::vector<std::size_t> deg(3, 1);
  std::vector<Hypergraph::Edge> edges{{0, 1, 2}};
  edges.reserve(m);
  std::size_t capacity = 6;
  for (std::size_t e = 1; e < m; ++e) {
    // Draw a budget in proportion to what is left, among those that keep the
    // rest completable.
    std::array<std::size_t, 3> weight{};
    std::size_t total = 0;
    for (std::size_t f = 0; f < 3; ++f) {
      if (left[f] == 0 || capacity < 2 * (3 - f)) continue;
      auto after = left;
      --after[f];
      if (completable(capacity + 3 * f - 3, after)) weight[f] = left[f];
      total += weight[f];
    }
    ensure(total > 0, "sparse generator found no feasible edge");
    std::size_t pick = rng.below(total), f = 0;
    while (pick >= weight[f]) pick -= weight[f++];
    --left[f];

    std::vector<VertexId> open;
    for (std::size_t v = 0; v < deg.size(); ++v) {
      if (deg[v] < 3) open.push_back(static_cast<VertexId>(v));
    }
    ensure(open.size() >= 3 - f, "sparse generator ran out of open vertices");
    rng.shuffle(open);
    Hypergraph::Edge edge(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(3 - f));
    for (std::size_t j = 0; j < f; ++j) {
      edge.push_back(static_cast<VertexId>(deg.size()));
      deg.push_back(0);
    }
    for (VertexId v : edge) ++deg[v];
    capacity = capacity + 3 * f - 3;
    edges.push_back(std::move(edge));
  }

  std::vector<VertexId> relabel(n);
  for (std::size_t v = 0; v < n; ++v) relabel[v] = static_cast<VertexId>(v);
  rng.shuffle(relabel);
  for (auto& edge : edges) {
    for (auto& v : edge) v = relabel[v];
    rng.shuffle(edge);
  }
  return edges;
}

}  // namespace

Hypergraph fano() {
  return Hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

Hypergraph complement(const Hypergraph& h) {
  std::vector<Hypergraph::Edge> edges;
  edges.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    Hypergraph::Edge c;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      if (!std::binary_search(e.begin(), e.end(), static_cast<VertexId>(v))) c.push_back(static_cast<VertexId>(v));
    }
    edges.push_back(std::move(c));
  }
  return Hypergraph(h.vertex_count(), std::move(edges));
}

Hypergraph complete_uniform(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    fail(ErrorKind::InvalidParams, "complete_uniform needs 1 <= k <= n, got n=" + std::to_string(n) +
                                       " k=" + std::to_string(k));
  }
  std::vector<Hypergraph::Edge> edges;
  Hypergraph::Edge pick(k);
  for (std::size_t j = 0; j < k; ++j) pick[j] = static_cast<VertexId>(j);
  while (true) {
    edges.push_back(pick);
    std::size_t j = k;
    while (j > 0 && pick[j - 1] == n - k + j - 1) --j;
    if (j == 0) break;
    ++pick[j - 1];
    for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return Hypergraph(n, std::move(edges));
}

NaeInstance proposition_family(std::size_t s) {
  if (s < 1) fail(ErrorKind::InvalidParams, "proposition_family needs s >= 1");
  std::vector<Clause> clauses;
  clauses.reserve(3 * s - 1);
  for (std::size_t i = 1; i <= s; ++i) {
    clauses.emplace_back(pos(family_var(i, 1)), pos(family_var(i, 2)), pos(family_var(i, 3)));
    clauses.emplace_back(neg(family_var(i, 1)), pos(family_var(i, 2)), pos(family_var(i, 3)));
  }
  for (std::size_t i = 1; i < s; ++i) {
    clauses.emplace_back(pos(family_var(i, 1)), pos(family_var(i + 1, 2)), neg(family_var(i + 1, 3)));
  }
  return NaeInstance(3 * s, std::move(clauses));
}

Hypergraph random_regular_uniform(std::size_t n, std::size_t k, Seed seed) {
  if (k < 2 || n < k + 1) {
    fail(ErrorKind::InvalidParams, "random_regular_uniform needs k >= 2 and n >= k + 1, got n=" + std::to_string(n) +
                                       " k=" + std::to_string(k));
  }
  Rng rng(seed);
  return configuration_model(n, k, rng, true, seed);
}

Hypergraph random_lemma_instance(std::size_t n, Seed seed) {
  if (n < 3) fail(ErrorKind::InvalidParams, "random_lemma_instance needs n >= 3");
  Rng rng(seed);
  const std::size_t lo = n / 2;  // smallest m with 2m + 1 >= n
  const std::size_t m = lo + rng.below(n - lo);
  return Hypergraph(n, sparse_3uniform(n, m, rng));
}

NaeInstance random_nae_instance(std::size_t n, std::size_t m, Seed seed) {
  if (n == 1 && m == 0) return NaeInstance(1, {});
  if (n < 3 || m >= n || 2 * m + 1 < n) {
    fail(ErrorKind::InvalidParams, "random_nae_instance cannot be connected with n=" + std::to_string(n) +
                                       " m=" + std::to_string(m));
  }
  Rng rng(seed);
  const auto edges = sparse_3uniform(n, m, rng);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (const auto& e : edges) {
    const bool n0 = rng.coin();
    const bool n1 = rng.coin();
    const bool n2 = rng.coin();
    clauses.emplace_back(Literal{e[0], n0}, Literal{e[1], n1}, Literal{e[2], n2});
  }
  return NaeInstance(n, std::move(clauses));
}

AllFixedInstance random_all_fixed(std::size_t half, Seed seed, std::size_t blocks) {
  if (blocks < 1 || half < 4 * blocks) {
    fail(ErrorKind::InvalidParams, "random_all_fixed needs blocks >= 1 and half >= 4 * blocks, got half=" +
                                       std::to_string(half) + " blocks=" + std::to_string(blocks));
  }
  Rng rng(seed);
  const std::size_t n = 2 * half;
  for (int restart = 0; restart < kRestarts; ++restart) {
    // side[s] lists the global labels of color class s.
    std::vector<VertexId> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<VertexId>(v);
    rng.shuffle(labels);
    const std::vector<VertexId> side[2] = {{labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(half)},
                                           {labels.begin() + static_cast<std::ptrdiff_t>(half), labels.end()}};
    std::vector<Hypergraph::Edge> edges;
    edges.reserve(n);
    for (int s = 0; s < 2; ++s) {
      std::vector<VertexId> apex = side[1 - s];
      rng.shuffle(apex);
      std::size_t next_apex = 0;
      std::size_t offset = 0;
      for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t size = half / blocks + (b < half % blocks ? 1 : 0);
        const Hypergraph inner = configuration_model(size, 3, rng, false, seed);
        for (const auto& e : inner.edges()) {
          Hypergraph::Edge edge{apex[next_apex++]};
          for (VertexId local : e) edge.push_back(side[s][offset + local]);
          edges.push_back(std::move(edge));
        }
        offset += size;
      }
    }
    Hypergraph h(n, std::move(edges));
    if (!is_connected(h)) continue;
    PartialColoring coloring(n, Color::None);
    for (VertexId v : side[0]) coloring[v] = Color::One;
    for (VertexId v : side[1]) coloring[v] = Color::Two;
    return {std::move(h), std::move(coloring)};
  }
  generation_failed("random_all_fixed exhausted its restart budget for half=" + std::to_string(half), seed);
}

}  // namespace freevertex::gen
