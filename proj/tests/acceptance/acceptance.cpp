// Acceptance suite. Each criterion prints one PASS or FAIL line; the exit
// status is nonzero when any of them fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "freevertex/colorer.hpp"
#include "freevertex/error.hpp"
#include "freevertex/generators.hpp"
#include "freevertex/io.hpp"
#include "freevertex/nae_solver.hpp"
#include "freevertex/oracle.hpp"
#include "freevertex/structure.hpp"

using namespace freevertex;

namespace {

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::string note;

  void fail(const std::string& what) { failures.push_back(what); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

// Instances reused by the determinism and depth criterion.
struct Corpus {
  std::vector<NaeInstance> nae;
  std::vector<Hypergraph> regular;
  std::vector<Hypergraph> lemma;
};

Corpus corpus;

bool contains(const std::vector<std::uint32_t>& xs, std::uint32_t x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

std::string tag(const std::string& kind, std::size_t n, gen::Seed seed) {
  return kind + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

// Runs `body` and turns library exceptions into failures.
void guarded(Outcome& o, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    o.fail(what + ": " + e.what());
  }
}

Outcome solver_soundness() {
  Outcome o;
  for (gen::Seed seed = 0; seed < 1200; ++seed) {
    const std::size_t n = 3 + seed % 10;                  // 3..12
    const std::size_t lo = n / 2;                         // smallest m keeping it connected
    const std::size_t m = lo + (seed / 10) % (n - lo);    // lo..n-1
    const std::string what = tag("nae", n, seed) + " m=" + std::to_string(m);
    guarded(o, what, [&] {
      const auto i = gen::random_nae_instance(n, m, seed);
      corpus.nae.push_back(i);
      const auto c = nae::solve_free(i);
      o.expect(oracle::verify_nae_certificate(i, c).ok, what + ": certificate rejected");
      o.expect(c.free_var && contains(oracle::free_variables(i).free, *c.free_var),
               what + ": free variable not free per oracle");
      ++o.checked;
    });
  }
  return o;
}

Outcome family_extremality() {
  Outcome o;
  for (std::size_t s = 1; s <= 4; ++s) {
    const auto i = gen::proposition_family(s);
    corpus.nae.push_back(i);
    const auto free = oracle::free_variables(i).free;
    o.expect(free == std::vector<std::uint32_t>{gen::family_var(s, 1)}, "s=" + std::to_string(s) + ": free set differs");
    ++o.checked;
  }
  return o;
}

Outcome fano_not_colorable() {
  Outcome o;
  const auto h = gen::fano();
  try {
    color::two_color(h);
    o.fail("two_color returned a coloring");
  } catch (const Error& e) {
    o.expect(e.kind() == ErrorKind::NotTwoColorable, std::string("unexpected error ") + e.what());
  }
  o.expect(!oracle::is_nae_satisfiable(instance_from_hypergraph(h)), "oracle finds a nae assignment");
  o.checked = 1;
  return o;
}

Outcome tightness_pair() {
  Outcome o;
  const std::pair<std::string, Hypergraph> graphs[] = {{"complement(fano)", gen::complement(gen::fano())},
                                                       {"complete_uniform(5,4)", gen::complete_uniform(5, 4)}};
  for (const auto& [name, h] : graphs) {
    guarded(o, name, [&] {
      const auto c = color::solve_free_vertex(h);
      o.expect(oracle::verify_coloring_certificate(h, c).ok && c.free_vertex.has_value(), name + ": certificate rejected");
      std::vector<std::vector<VertexId>> singles;
      for (VertexId v = 0; v < h.vertex_count(); ++v) singles.push_back({v});
      o.expect(oracle::free_sets(h, 1) == singles, name + ": not every vertex is free");
      o.expect(oracle::free_sets(h, 2).empty(), name + ": a pair of vertices is free");
      ++o.checked;
    });
  }
  return o;
}

Outcome regular_at_scale() {
  Outcome o;
  for (std::size_t n : {12u, 16u, 20u, 28u, 40u}) {
    for (gen::Seed seed = 0; seed < 25; ++seed) {
      const std::string what = tag("4-regular", n, seed);
      guarded(o, what, [&] {
        const auto h = gen::random_regular_uniform(n, 4, seed);
        corpus.regular.push_back(h);
        const auto c = color::solve_free_vertex(h);
        o.expect(oracle::verify_coloring_certificate(h, c).ok && c.free_vertex.has_value(),
                 what + ": certificate rejected");
        ++o.checked;
      });
    }
  }
  // Hypergraphs with a coloring that fixes every vertex, so the walk runs.
  for (gen::Seed seed = 0; seed < 100; ++seed) {
    const std::size_t blocks = 1 + seed % 4;
    const std::size_t half = 4 * blocks + seed % 7;
    const std::string what = tag("all-fixed", 2 * half, seed);
    guarded(o, what, [&] {
      const auto inst = gen::random_all_fixed(half, seed, blocks);
      corpus.regular.push_back(inst.hypergraph);
      const auto c = color::free_vertex_from_coloring(inst.hypergraph, inst.coloring);
      o.expect(oracle::verify_coloring_certificate(inst.hypergraph, c).ok && c.free_vertex.has_value(),
               what + ": certificate rejected");
      ++o.checked;
    });
  }
  return o;
}

Outcome lemma_two_free() {
  Outcome o;
  for (gen::Seed seed = 0; seed < 600; ++seed) {
    const std::size_t n = 3 + seed % 28;  // 3..30
    const std::string what = tag("lemma", n, seed);
    guarded(o, what, [&] {
      const auto h = gen::random_lemma_instance(n, seed);
      corpus.lemma.push_back(h);
      const auto r = color::lemma_two_free(h);
      o.expect(r.primary.free_vertex.has_value() && *r.primary.free_vertex != r.alternate_free,
               what + ": free vertices coincide");
      o.expect(r.alternate.free_vertex == r.alternate_free, what + ": alternate certificate mislabeled");
      o.expect(oracle::verify_coloring_certificate(h, r.primary).ok, what + ": primary rejected");
      o.expect(oracle::verify_coloring_certificate(h, r.alternate).ok, what + ": alternate rejected");
      if (n <= 14) {
        const auto singles = oracle::free_sets(h, 1);
        auto free = [&](VertexId v) {
          return std::find(singles.begin(), singles.end(), std::vector<VertexId>{v}) != singles.end();
        };
        o.expect(free(*r.primary.free_vertex) && free(r.alternate_free), what + ": oracle disagrees");
      }
      ++o.checked;
    });
  }
  return o;
}

void check_pair(Outcome& o, const Hypergraph& h, const PartialColoring& c, const std::string& what) {
  const auto pair = color::derive_pair(h, c, color::star_maps(h, c));
  for (int s = 0; s < 2; ++s) {
    const auto& g = pair.side[s].graph;
    o.expect(g.is_uniform(3) && g.is_regular(3), what + ": side " + std::to_string(s) + " is not 3-regular 3-uniform");
  }
  o.expect(pair.side[0].graph.vertex_count() == pair.side[1].graph.vertex_count(), what + ": class sizes differ");
  ++o.checked;
}

// Every total proper coloring of h that fixes all vertices. Vertex 0 keeps
// color One; the mirror images are equivalent.
std::vector<PartialColoring> all_fixed_colorings(const Hypergraph& h) {
  std::vector<PartialColoring> out;
  const std::size_t n = h.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    PartialColoring c(n, Color::One);
    for (std::size_t v = 1; v < n; ++v)
      if (mask >> (v - 1) & 1) c[v] = Color::Two;
    if (!oracle::verify_coloring_certificate(h, {c, std::nullopt}).ok) continue;
    if (color::star_maps(h, c).all_fixed()) out.push_back(std::move(c));
  }
  return out;
}

Outcome structural_accounting() {
  Outcome o;
  // Exhaustive over small hypergraphs.
  for (std::size_t n = 8; n <= 16; n += 2) {
    for (gen::Seed seed = 0; seed < 4; ++seed) {
      const std::string what = tag("enumerated 4-regular", n, seed);
      guarded(o, what, [&] {
        const auto h = gen::random_regular_uniform(n, 4, seed);
        for (const auto& c : all_fixed_colorings(h)) check_pair(o, h, c, what);
      });
    }
    for (gen::Seed seed = 0; seed < 4; ++seed) {
      const std::size_t half = n / 2;
      const std::string what = tag("enumerated all-fixed", n, seed);
      guarded(o, what, [&] {
        const auto h = gen::random_all_fixed(half, seed, half >= 8 ? 2 : 1).hypergraph;
        for (const auto& c : all_fixed_colorings(h)) check_pair(o, h, c, what);
      });
    }
  }
  const std::size_t enumerated = o.checked;
  // Colorings met while solving larger instances.
  for (std::size_t k = 0; k < corpus.regular.size(); ++k) {
    const auto& h = corpus.regular[k];
    guarded(o, "corpus hypergraph " + std::to_string(k), [&] {
      const auto c = color::two_color(h);
      if (color::star_maps(h, c).all_fixed()) check_pair(o, h, c, "corpus hypergraph " + std::to_string(k));
    });
  }
  for (gen::Seed seed = 0; seed < 200; ++seed) {
    const std::size_t blocks = 1 + seed % 5;
    const auto inst = gen::random_all_fixed(4 * blocks + seed % 11, seed, blocks);
    guarded(o, tag("all-fixed", inst.hypergraph.vertex_count(), seed),
            [&] { check_pair(o, inst.hypergraph, inst.coloring, tag("all-fixed", inst.hypergraph.vertex_count(), seed)); });
  }
  if (enumerated == 0) o.fail("enumeration found no all-fixed coloring");
  o.note = std::to_string(enumerated) + " by enumeration";
  return o;
}

std::string walk_text(const color::WalkReport& r) {
  std::ostringstream s;
  for (const auto& c : r.components) {
    s << "C " << c.vertices.size() << ' ' << c.early_exit << ' ' << c.cycle_start << ' ' << c.cycle_end << '\n';
    for (const auto& w : c.walk)
      s << "W " << w.side << ' ' << w.component << ' ' << w.free_vertex << ' '
        << (w.removed_edge ? std::to_string(*w.removed_edge) : "-") << '\n';
    for (const auto& a : c.absorptions) s << "A " << a.via << ' ' << a.side << ' ' << a.component << ' ' << a.new_free << '\n';
  }
  return s.str();
}

Outcome determinism_and_depth() {
  Outcome o;
  for (std::size_t k = 0; k < corpus.nae.size(); ++k) {
    const auto& i = corpus.nae[k];
    const std::string what = "nae instance " + std::to_string(k);
    guarded(o, what, [&] {
      nae::ReductionTrace t1, t2;
      const auto a = io::to_json(nae::solve_free(i, &t1));
      const auto b = io::to_json(nae::solve_free(i, &t2));
      o.expect(a == b, what + ": certificates differ");
      o.expect(t1.dump() == t2.dump(), what + ": traces differ");
      o.expect(t1.max_depth() <= i.clause_count(), what + ": depth exceeds clause count");
      ++o.checked;
    });
  }
  for (std::size_t k = 0; k < corpus.lemma.size(); ++k) {
    const auto& h = corpus.lemma[k];
    const std::string what = "lemma instance " + std::to_string(k);
    guarded(o, what, [&] {
      const auto i = instance_from_hypergraph(h);
      nae::ReductionTrace t;
      nae::solve_free(i, &t);
      o.expect(t.max_depth() <= i.clause_count(), what + ": depth exceeds clause count");
      const auto a = color::lemma_two_free(h), b = color::lemma_two_free(h);
      o.expect(io::to_json(a.primary) == io::to_json(b.primary) && io::to_json(a.alternate) == io::to_json(b.alternate),
               what + ": certificates differ");
      ++o.checked;
    });
  }
  for (std::size_t k = 0; k < corpus.regular.size(); ++k) {
    const auto& h = corpus.regular[k];
    const std::string what = "hypergraph " + std::to_string(k);
    guarded(o, what, [&] {
      color::WalkReport r1, r2;
      const auto a = io::to_json(color::solve_free_vertex(h, &r1));
      const auto b = io::to_json(color::solve_free_vertex(h, &r2));
      o.expect(a == b, what + ": certificates differ");
      o.expect(walk_text(r1) == walk_text(r2), what + ": walk reports differ");
      ++o.checked;
    });
  }
  // Regenerating from the same seeds reproduces the instances.
  for (gen::Seed seed = 0; seed < 50; ++seed) {
    o.expect(gen::random_nae_instance(40, 30, seed) == gen::random_nae_instance(40, 30, seed), "random_nae_instance drifts");
    o.expect(gen::random_regular_uniform(40, 4, seed) == gen::random_regular_uniform(40, 4, seed),
             "random_regular_uniform drifts");
    o.expect(gen::random_lemma_instance(30, seed) == gen::random_lemma_instance(30, seed), "random_lemma_instance drifts");
    const auto a = gen::random_all_fixed(10, seed, 2), b = gen::random_all_fixed(10, seed, 2);
    o.expect(a.hypergraph == b.hypergraph && a.coloring == b.coloring, "random_all_fixed drifts");
  }
  return o;
}

struct Criterion {
  const char* name;
  double budget_seconds;  // 0 when no runtime bound is stated
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"solver soundness on random NAE instances", 60, solver_soundness},
      {"proposition family has exactly one free variable", 10, family_extremality},
      {"Fano plane is not 2-colorable", 1, fano_not_colorable},
      {"tightness pair: every vertex free, no free pair", 30, tightness_pair},
      {"free vertex on random 4-regular 4-uniform hypergraphs", 300, regular_at_scale},
      {"two distinct free vertices on sparse 3-uniform inputs", 120, lemma_two_free},
      {"derived pair is 3-regular 3-uniform with equal classes", 0, structural_accounting},
      {"determinism and recursion depth", 0, determinism_and_depth},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = c.budget_seconds > 0 && seconds > c.budget_seconds;
    const bool ok = o.failures.empty() && o.checked > 0 && !slow;
    failed += ok ? 0 : 1;
    std::printf("%s %s (%zu checked", ok ? "PASS" : "FAIL", c.name, o.checked);
    if (!o.note.empty()) std::printf(", %s", o.note.c_str());
    std::printf(", %zu failures, %.2f s", o.failures.size(), seconds);
    if (c.budget_seconds > 0) std::printf(", budget %.0f s", c.budget_seconds);
    std::printf(")\n");
    for (std::size_t k = 0; k < o.failures.size() && k < 10; ++k) std::printf("    %s\n", o.failures[k].c_str());
    if (slow) std::printf("    over the time budget\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
