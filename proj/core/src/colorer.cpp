#include "freevertex/colorer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "freevertex/error.hpp"
#include "freevertex/nae_solver.hpp"
#include "freevertex/oracle.hpp"

namespace freevertex::color {
namespace {

class ColoringSearch {
 public:
  explicit ColoringSearch(const Hypergraph& h)
      : h_(h), incident_(h.vertex_count()), color_(h.vertex_count(), Color::None), count_(h.edge_count()) {
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      count_[e] = {h.edge(e).size(), 0, 0};
      for (VertexId u : h.edge(e)) incident_[u].push_back(e);
    }
  }

  bool run() { return branch(); }
  const PartialColoring& coloring() const { return color_; }

 private:
  // Colors v and everything that is forced by it. False on a monochromatic
  // edge; the trail keeps what was colored either way.
  bool assign(VertexId v, Color c) {
    std::vector<std::pair<VertexId, Color>> pending{{v, c}};
    while (!pending.empty()) {
      const auto [u, k] = pending.back();
      pending.pop_back();
      if (color_[u] != Color::None) {
        if (color_[u] != k) return false;
        continue;
      }
      color_[u] = k;
      trail_.push_back(u);
      const auto slot = static_cast<std::size_t>(k);
      for (std::size_t e : incident_[u]) {
        --count_[e][0];
        ++count_[e][slot];
      }
      for (std::size_t e : incident_[u]) {
        const std::size_t size = h_.edge(e).size();
        if (count_[e][slot] == size) return false;
        if (count_[e][0] == 1 && count_[e][slot] == size - 1) {
          for (VertexId w : h_.edge(e)) {
            if (color_[w] == Color::None) pending.emplace_back(w, flip(k));
          }
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const VertexId u = trail_.back();
      trail_.pop_back();
      const auto slot = static_cast<std::size_t>(color_[u]);
      for (std::size_t e : incident_[u]) {
        --count_[e][slot];
        ++count_[e][0];
      }
      color_[u] = Color::None;
    }
  }

  bool branch() {
    const auto next = std::find(color_.begin(), color_.end(), Color::None);
    if (next == color_.end()) return true;
    const auto v = static_cast<VertexId>(next - color_.begin());
    for (Color c : {Color::One, Color::Two}) {
      const std::size_t mark = trail_.size();
      if (assign(v, c) && branch()) return true;
      undo(mark);
    }
    return false;
  }

  const Hypergraph& h_;
  std::vector<std::vector<std::size_t>> incident_;
  PartialColoring color_;
  std::vector<std::array<std::size_t, 3>> count_;  // uncolored, One, Two
  std::vector<VertexId> trail_;
};

bool bichromatic(const Hypergraph& h, std::size_t e, const PartialColoring& c) {
  bool one = false;
  bool two = false;
  for (VertexId u : h.edge(e)) {
    one |= c[u] == Color::One;
    two |= c[u] == Color::Two;
  }
  return one && two;
}

/// The common color of the colored vertices of edge e other than `skip`, or
/// None when they are mixed or absent.
Color common_color(const Hypergraph& h, std::size_t e, VertexId skip, const PartialColoring& c) {
  Color seen = Color::None;
  for (VertexId u : h.edge(e)) {
    if (u == skip || c[u] == Color::None) continue;
    if (seen == Color::None) {
      seen = c[u];
    } else if (seen != c[u]) {
      return Color::None;
    }
  }
  return seen;
}

void require_four_regular(const Hypergraph& h) {
  if (h.vertex_count() == 0) fail(ErrorKind::PreconditionViolated, "hypergraph has no vertices");
  if (!h.is_uniform(4)) fail(ErrorKind::PreconditionViolated, "hypergraph is not 4-uniform");
  if (!h.is_regular(4)) fail(ErrorKind::PreconditionViolated, "hypergraph is not 4-regular");
}

// A colored region of one derived component: coloring over global vertices
// (None outside `members`) with `free_vertex` uncolored.
struct Piece {
  PartialColoring coloring;
  std::vector<VertexId> members;
  VertexId free_vertex = 0;
};

class Walker {
 public:
  Walker(const Hypergraph& h, const PartialColoring& base, ComponentReport& report)
      : h_(h), maps_(star_maps(h, base)), pair_(derive_pair(h, base, maps_)), report_(report) {
    const std::size_t n = h.vertex_count();
    side_of_.assign(n, 0);
    vertex_comp_.assign(n, 0);
    e_of_.assign(n, {0, 0});
    for (int s = 0; s < 2; ++s) {
      const DerivedSide& side = pair_.side[s];
      comps_[s] = components(side.graph);
      edge_comp_[s].assign(side.graph.edge_count(), 0);
      for (std::size_t c = 0; c < comps_[s].size(); ++c) {
        for (std::size_t e : comps_[s][c].items) edge_comp_[s][e] = c;
      }
      for (std::size_t k = 0; k < side.vertices.size(); ++k) side_of_[side.vertices[k]] = s;
      for (std::size_t c = 0; c < comps_[s].size(); ++c) {
        for (auto m : comps_[s][c].members) vertex_comp_[side.vertices[m]] = c;
      }
      for (std::size_t e = 0; e < side.provenance.size(); ++e) e_of_[side.provenance[e].apex] = {s, e};
      in_star_[s].assign(comps_[s].size(), false);
    }
  }

  ColoringCertificate run() {
    walk();
    stitch();
    absorb();
    ColoringCertificate cert{work_, free_};
    const auto verdict = oracle::verify_coloring_certificate(h_, cert);
    ensure(verdict.ok, "walk produced a certificate that does not verify");
    return cert;
  }

 private:
  /// Applies the two-free-vertex lemma to every component of derived
  /// component (s, c) minus its local edge `removed`, and picks the smallest
  /// available free vertex other than `avoid`.
  Piece apply(int s, std::size_t c, std::size_t removed, std::optional<VertexId> avoid) const {
    const DerivedSide& side = pair_.side[s];
    const Component& comp = comps_[s][c];
    std::vector<std::size_t> items;
    for (std::size_t e : comp.items) {
      if (e != removed) items.push_back(e);
    }
    const auto rest = restrict_hypergraph(side.graph, comp.members, items);

    std::vector<TwoFree> results;
    std::vector<IndexMap> to_side;
    for (const Component& sub : components(rest.value)) {
      std::vector<VertexId> verts;
      std::vector<std::size_t> ids;
      for (auto m : sub.members) verts.push_back(rest.vars[m]);
      for (auto k : sub.items) ids.push_back(rest.items[k]);
      const auto piece = restrict_hypergraph(side.graph, verts, ids);
      if (auto why = lemma_failure(piece.value)) {
        fail(ErrorKind::InternalInvariant, "derived component minus an edge is outside the lemma: " + *why);
      }
      results.push_back(lemma_two_free(piece.value));
      to_side.push_back(piece.vars);
    }
    ensure(!results.empty(), "derived component vanished after removing an edge");

    auto global = [&](std::size_t r, VertexId local) { return side.vertices[to_side[r][local]]; };
    std::optional<std::pair<std::size_t, bool>> pick;
    VertexId best = 0;
    for (std::size_t r = 0; r < results.size(); ++r) {
      for (bool alternate : {false, true}) {
        const VertexId g = global(r, alternate ? results[r].alternate_free : *results[r].primary.free_vertex);
        if (g == avoid) continue;
        if (!pick || g < best) {
          pick = {r, alternate};
          best = g;
        }
      }
    }
    ensure(pick.has_value(), "no admissible free vertex in a derived component");

    Piece out;
    out.coloring.assign(h_.vertex_count(), Color::None);
    out.free_vertex = best;
    for (std::size_t r = 0; r < results.size(); ++r) {
      const bool chosen = r == pick->first;
      const ColoringCertificate& cert = chosen && pick->second ? results[r].alternate : results[r].primary;
      for (std::size_t k = 0; k < cert.coloring.size(); ++k) {
        const VertexId g = global(r, static_cast<VertexId>(k));
        Color col = cert.coloring[k];
        if (col == Color::None && !chosen) col = Color::One;
        out.coloring[g] = col;
        out.members.push_back(g);
      }
    }
    return out;
  }

  void walk() {
    ensure(!comps_[0].empty(), "derived hypergraph on color One is empty");
    const std::size_t budget = comps_[0].size() + comps_[1].size() + 1;
    std::map<std::pair<int, std::size_t>, std::size_t> seen{{{0, 0}, 0}};
    report_.walk.push_back({0, 0, pair_.side[0].vertices[comps_[0][0].members.front()], std::nullopt});
    pieces_.emplace_back();
    while (true) {
      const VertexId u = report_.walk.back().free_vertex;
      const auto [s, e] = e_of_[u];
      const std::size_t c = edge_comp_[s][e];
      const auto hit = seen.find({s, c});
      std::optional<VertexId> avoid;
      if (hit != seen.end()) avoid = report_.walk[hit->second].free_vertex;
      Piece piece = apply(s, c, e, avoid);
      report_.walk.push_back({s, c, piece.free_vertex, pair_.side[s].provenance[e].edge});
      pieces_.push_back(std::move(piece));
      if (hit != seen.end()) {
        report_.cycle_start = hit->second;
        report_.cycle_end = report_.walk.size() - 1;
        return;
      }
      seen.emplace(std::pair{s, c}, report_.walk.size() - 1);
      ensure(report_.walk.size() <= budget, "alternating walk did not close a cycle in time");
    }
  }

  void scatter_piece(const Piece& p) {
    for (VertexId g : p.members) work_[g] = p.coloring[g];
  }

  void flip_members(const std::vector<VertexId>& members) {
    for (VertexId g : members) work_[g] = flip(work_[g]);
  }

  void mark(int s, std::size_t c) {
    in_star_[s][c] = true;
    for (std::size_t e : comps_[s][c].items) {
      star_edges_.push_back(pair_.side[s].provenance[e].edge);
    }
  }

  void check_star_edges(const char* stage) const {
    for (std::size_t e : star_edges_) {
      ensure(bichromatic(h_, e, work_), std::string("4-edge ") + std::to_string(e) + " monochromatic after " + stage);
    }
  }

  void stitch() {
    const std::size_t l = report_.cycle_start;
    const std::size_t k = report_.cycle_end;
    work_.assign(h_.vertex_count(), Color::None);
    for (std::size_t t = l + 1; t < k; ++t) scatter_piece(pieces_[t]);
    // The component of position l takes its coloring from the closing step.
    scatter_piece(pieces_[k]);

    const VertexId ul = report_.walk[l].free_vertex;
    ensure(work_[ul] != Color::None, "cycle anchor left uncolored");
    if (common_color(h_, *maps_.e_star[ul], ul, work_) == work_[ul]) flip_members(pieces_[k].members);
    for (std::size_t t = l + 1; t < k; ++t) {
      const VertexId ut = report_.walk[t].free_vertex;
      const Color around = common_color(h_, *maps_.e_star[ut], ut, work_);
      work_[ut] = around == Color::None ? Color::One : flip(around);
    }
    free_ = report_.walk[k].free_vertex;
    for (std::size_t t = l; t < k; ++t) mark(report_.walk[t].side, report_.walk[t].component);
    check_star_edges("stitching");
  }

  bool in_star_vertex(VertexId g) const { return in_star_[side_of_[g]][vertex_comp_[g]]; }

  void absorb() {
    while (true) {
      std::optional<VertexId> via;
      bool complete = true;
      for (VertexId g = 0; g < h_.vertex_count(); ++g) {
        if (!in_star_vertex(g)) {
          complete = false;
          continue;
        }
        const auto [s, e] = e_of_[g];
        if (!via && !in_star_[s][edge_comp_[s][e]]) via = g;
      }
      if (complete) return;
      ensure(via.has_value(), "no edge leaves the absorbed region although H is connected");

      const VertexId v = *via;
      const auto [s, e] = e_of_[v];
      const std::size_t c = edge_comp_[s][e];
      const Piece piece = apply(s, c, e, std::nullopt);
      scatter_piece(piece);
      const Color around = common_color(h_, *maps_.e_star[v], v, work_);
      if (work_[v] != Color::None) {
        if (around == work_[v]) flip_members(piece.members);
        // The previous free vertex is superseded and may take any color.
        if (work_[free_] == Color::None) work_[free_] = Color::One;
      } else {
        ensure(v == free_, "uncolored absorbing vertex is not the current free vertex");
        work_[v] = around == Color::None ? Color::One : flip(around);
      }
      free_ = piece.free_vertex;
      mark(s, c);
      report_.absorptions.push_back({v, s, c, free_});
      check_star_edges("absorption");
    }
  }

  const Hypergraph& h_;
  StarMaps maps_;
  DerivedPair pair_;
  ComponentReport& report_;
  std::vector<Component> comps_[2];
  std::vector<std::size_t> edge_comp_[2];
  std::vector<std::size_t> vertex_comp_;  // global vertex -> component on its own side
  std::vector<int> side_of_;
  std::vector<std::pair<int, std::size_t>> e_of_;
  std::vector<bool> in_star_[2];
  std::vector<Piece> pieces_;
  std::vector<std::size_t> star_edges_;
  PartialColoring work_;
  VertexId free_ = 0;
};

}  // namespace

PartialColoring two_color(const Hypergraph& h) {
  ColoringSearch search(h);
  if (!search.run()) fail(ErrorKind::NotTwoColorable, "no proper 2-coloring exists");
  return search.coloring();
}

std::optional<std::string> lemma_failure(const Hypergraph& h) {
  if (h.vertex_count() == 0) return "hypergraph has no vertices";
  if (!h.is_uniform(3)) return "hypergraph is not 3-uniform";
  if (h.edge_count() >= h.vertex_count()) {
    return std::to_string(h.edge_count()) + " edges is not below " + std::to_string(h.vertex_count()) + " vertices";
  }
  const auto deg = degrees(h);
  for (std::size_t u = 0; u < deg.size(); ++u) {
    if (deg[u] == 0) return "vertex " + std::to_string(u) + " is isolated";
    if (deg[u] > 3) return "vertex " + std::to_string(u) + " has degree " + std::to_string(deg[u]) + " > 3";
  }
  if (!is_connected(h)) return "hypergraph is not connected";
  return std::nullopt;
}

TwoFree lemma_two_free(const Hypergraph& h) {
  if (auto why = lemma_failure(h)) fail(ErrorKind::PreconditionViolated, *why);
  TwoFree out;
  out.primary = to_coloring_certificate(nae::solve_free(instance_from_hypergraph(h)));
  const VertexId v = *out.primary.free_vertex;

  std::vector<std::size_t> around_v;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (std::binary_search(h.edge(e).begin(), h.edge(e).end(), v)) around_v.push_back(e);
  }
  const auto fixed = oracle::fixed_vertices(h, out.primary.coloring, around_v);
  std::optional<VertexId> u;
  for (VertexId x = 0; x < h.vertex_count() && !u; ++x) {
    if (x != v && !std::binary_search(fixed.begin(), fixed.end(), x)) u = x;
  }
  ensure(u.has_value(), "fewer than two vertices escape being fixed");

  out.alternate_free = *u;
  out.alternate = out.primary;
  out.alternate.coloring[v] = out.alternate.coloring[*u];
  out.alternate.coloring[*u] = Color::None;
  out.alternate.free_vertex = *u;
  ensure(oracle::verify_coloring_certificate(h, out.alternate).ok, "alternate certificate does not verify");
  return out;
}

bool StarMaps::all_fixed() const noexcept {
  return std::all_of(e_star.begin(), e_star.end(), [](const auto& e) { return e.has_value(); });
}

StarMaps star_maps(const Hypergraph& h, const PartialColoring& c) {
  if (c.size() != h.vertex_count()) fail(ErrorKind::InvalidArgument, "coloring size does not match hypergraph");
  StarMaps maps;
  maps.v_star.assign(h.edge_count(), std::nullopt);
  maps.e_star.assign(h.vertex_count(), std::nullopt);
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    std::size_t count[3] = {0, 0, 0};
    VertexId last[3] = {0, 0, 0};
    for (VertexId u : h.edge(e)) {
      const auto k = static_cast<std::size_t>(c[u]);
      ++count[k];
      last[k] = u;
    }
    if (count[1] == 0 || count[2] == 0) continue;
    if (count[1] == 1) {
      maps.v_star[e] = last[1];
    } else if (count[2] == 1) {
      maps.v_star[e] = last[2];
    }
    if (maps.v_star[e] && !maps.e_star[*maps.v_star[e]]) maps.e_star[*maps.v_star[e]] = e;
  }
  return maps;
}

DerivedPair derive_pair(const Hypergraph& h, const PartialColoring& c, const StarMaps& maps) {
  require_four_regular(h);
  if (c.size() != h.vertex_count()) fail(ErrorKind::PreconditionViolated, "coloring size does not match hypergraph");
  if (std::find(c.begin(), c.end(), Color::None) != c.end()) {
    fail(ErrorKind::PreconditionViolated, "coloring is not total");
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (!bichromatic(h, e, c)) fail(ErrorKind::PreconditionViolated, "edge " + std::to_string(e) + " is monochromatic");
  }
  if (maps.e_star.size() != h.vertex_count() || maps.v_star.size() != h.edge_count() || !maps.all_fixed()) {
    fail(ErrorKind::PreconditionViolated, "not every vertex is fixed by the coloring");
  }
  for (VertexId u = 0; u < h.vertex_count(); ++u) {
    const std::size_t e = *maps.e_star[u];
    if (e >= h.edge_count() || maps.v_star[e] != u) {
      fail(ErrorKind::PreconditionViolated, "star maps are not inverse to each other at vertex " + std::to_string(u));
    }
  }

  DerivedPair pair;
  std::vector<std::uint32_t> local(h.vertex_count(), kNoParent);
  for (int s = 0; s < 2; ++s) {
    const Color own = s == 0 ? Color::One : Color::Two;
    auto& to_parent = pair.side[s].vertices.to_parent;
    for (VertexId u = 0; u < h.vertex_count(); ++u) {
      if (c[u] == own) {
        local[u] = static_cast<std::uint32_t>(to_parent.size());
        to_parent.push_back(u);
      }
    }
  }
  ensure(pair.side[0].vertices.size() == pair.side[1].vertices.size(), "color classes differ in size");

  for (int s = 0; s < 2; ++s) {
    std::vector<Hypergraph::Edge> edges;
    auto& prov = pair.side[s].provenance;
    // Apexes come from the opposite class.
    for (VertexId u : pair.side[1 - s].vertices.to_parent) {
      const std::size_t e = *maps.e_star[u];
      Hypergraph::Edge derived;
      for (VertexId w : h.edge(e)) {
        if (w == u) continue;
        ensure(local[w] != kNoParent && c[w] == (s == 0 ? Color::One : Color::Two), "derived edge leaves its color class");
        derived.push_back(local[w]);
      }
      edges.push_back(std::move(derived));
      prov.push_back({e, u});
    }
    pair.side[s].graph = Hypergraph(pair.side[s].vertices.size(), std::move(edges));
    ensure(pair.side[s].graph.is_uniform(3) && pair.side[s].graph.is_regular(3),
           "derived hypergraph is not 3-regular and 3-uniform");
  }
  return pair;
}

ColoringCertificate free_vertex_from_coloring(const Hypergraph& h, const PartialColoring& base,
                                              ComponentReport* report) {
  require_four_regular(h);
  if (!is_connected(h)) fail(ErrorKind::PreconditionViolated, "hypergraph is not connected");
  if (base.size() != h.vertex_count() || std::find(base.begin(), base.end(), Color::None) != base.end()) {
    fail(ErrorKind::PreconditionViolated, "base coloring is not total");
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (!bichromatic(h, e, base)) {
      fail(ErrorKind::PreconditionViolated, "base coloring leaves edge " + std::to_string(e) + " monochromatic");
    }
  }

  ComponentReport local;
  ComponentReport& r = report ? *report : local;
  r = ComponentReport{};
  for (VertexId u = 0; u < h.vertex_count(); ++u) r.vertices.push_back(u);

  const auto fixed = oracle::fixed_vertices(h, base, {});
  for (VertexId u = 0; u < h.vertex_count(); ++u) {
    if (!std::binary_search(fixed.begin(), fixed.end(), u)) {
      r.early_exit = true;
      ColoringCertificate cert{base, u};
      cert.coloring[u] = Color::None;
      ensure(oracle::verify_coloring_certificate(h, cert).ok, "uncoloring an unfixed vertex broke an edge");
      return cert;
    }
  }
  return Walker(h, base, r).run();
}

ColoringCertificate solve_free_vertex(const Hypergraph& h, WalkReport* report) {
  require_four_regular(h);
  if (report) report->components.clear();
  ColoringCertificate merged{PartialColoring(h.vertex_count(), Color::None), std::nullopt};
  std::vector<VertexId> frees;
  for (const Component& comp : components(h)) {
    const auto sub = restrict_hypergraph(h, comp.members, comp.items);
    ComponentReport r;
    const auto cert = free_vertex_from_coloring(sub.value, two_color(sub.value), &r);
    scatter(cert.coloring, sub.vars, merged.coloring);
    frees.push_back(sub.vars[*cert.free_vertex]);
    if (report) {
      for (auto& v : r.vertices) v = sub.vars[v];
      for (auto& step : r.walk) {
        step.free_vertex = sub.vars[step.free_vertex];
        if (step.removed_edge) step.removed_edge = sub.items[*step.removed_edge];
      }
      for (auto& a : r.absorptions) {
        a.via = sub.vars[a.via];
        a.new_free = sub.vars[a.new_free];
      }
      report->components.push_back(std::move(r));
    }
  }
  const VertexId free = *std::min_element(frees.begin(), frees.end());
  for (VertexId f : frees) {
    if (f != free) merged.coloring[f] = Color::One;
  }
  merged.free_vertex = free;
  const auto verdict = oracle::verify_coloring_certificate(h, merged);
  ensure(verdict.ok, "merged certificate does not verify");
  return merged;
}

}  // namespace freevertex::color
