// The core 2-complex of a subgroup H of A * B.
//
// The covering complex of K(A) v K(B) associated with H is never built.  Its
// vertices are the right cosets Hg; the vertices reachable from one of them by
// A-edges form a copy of the coset space (A ∩ g^-1 H g)\A.  The core is the
// subcomplex induced by finitely many vertices, so each of its A-components
// (and B-components) is recorded as a stabilizer subgroup together with the
// set of cosets that are occupied by core vertices.  Edges and 2-cells of the
// induced subcomplex are then implicit: from a vertex with coordinate c in a
// component with stabilizer S, the syllable x leads to the vertex occupying
// S*c*x, if there is one.
//
// Every CoreComplex is stored in canonical form: vertices are numbered by a
// breadth-first search from the base (A before B, elements in index order),
// components are ordered by their least vertex, and each component is rooted
// at its least vertex, which gets coordinate 0.  Two complexes describing
// the same subgroup are therefore equal as values.

#ifndef KCORE_CORE_COMPLEX_HPP_
#define KCORE_CORE_COMPLEX_HPP_

#include <algorithm>  // for sort, min
#include <array>      // for array
#include <cstddef>    // for size_t
#include <limits>     // for numeric_limits
#include <memory>     // for shared_ptr, make_shared
#include <numeric>    // for iota
#include <optional>   // for optional
#include <queue>      // for queue
#include <string>     // for string
#include <utility>    // for move, pair
#include <vector>     // for vector

#include "factor_group.hpp"
#include "word.hpp"

namespace kcore {

  using vertex_type = std::size_t;

  inline constexpr vertex_type no_vertex
      = std::numeric_limits<vertex_type>::max();

  struct FactorComponent {
    FactorTag                tag = FactorTag::A;
    Subgroup                 stabilizer;
    std::vector<vertex_type> members;   // sorted
    std::vector<elem_type>   rep_of;    // element -> canonical coset rep
    std::vector<vertex_type> occupied;  // canonical rep -> vertex or no_vertex

    [[nodiscard]] std::size_t coset_count() const noexcept {
      return rep_of.size() / stabilizer.size();
    }
    [[nodiscard]] bool is_complete() const noexcept {
      return members.size() == coset_count();
    }
  };

  // Uncanonicalized description of a coset-structured complex.  Coordinates
  // need not be canonical coset representatives and component ids may have
  // gaps; assemble() sorts all of that out.
  struct ComplexDraft {
    std::size_t                            vertex_count = 0;
    vertex_type                            base         = 0;
    std::array<std::vector<std::size_t>, 2> component_of;  // per vertex
    std::array<std::vector<elem_type>, 2>   coord;         // per vertex
    std::array<std::vector<Subgroup>, 2>    stabilizer;    // per component
    std::vector<char>                       keep;  // empty means keep all
  };

  class CoreComplex;
  CoreComplex assemble(std::shared_ptr<FreeProduct const> fp,
                       ComplexDraft const&                draft);

  class CoreComplex {
   public:
    CoreComplex() = default;

    [[nodiscard]] FreeProduct const& free_product() const noexcept {
      return *_fp;
    }
    [[nodiscard]] std::shared_ptr<FreeProduct const> const&
    free_product_ptr() const noexcept {
      return _fp;
    }
    [[nodiscard]] vertex_type base() const noexcept {
      return _base;
    }
    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return _vertex_count;
    }
    [[nodiscard]] std::vector<FactorComponent> const&
    components(FactorTag t) const noexcept {
      return _components[index_of(t)];
    }
    [[nodiscard]] std::size_t component_of(FactorTag   t,
                                           vertex_type v) const noexcept {
      return _component_of[index_of(t)][v];
    }
    [[nodiscard]] FactorComponent const& component(FactorTag   t,
                                                   vertex_type v) const {
      return _components[index_of(t)][component_of(t, v)];
    }
    [[nodiscard]] elem_type coord(FactorTag t, vertex_type v) const noexcept {
      return _coord[index_of(t)][v];
    }

    // Endpoint of the edge labelled x at v, or no_vertex if it leaves the
    // core.
    [[nodiscard]] vertex_type trans(vertex_type v, Syllable x) const {
      auto const&            c = component(x.tag, v);
      FactorGroup const&     g = _fp->factor(x.tag);
      return c.occupied[c.rep_of[g.mul(coord(x.tag, v), x.elem)]];
    }

    [[nodiscard]] ComplexDraft draft() const {
      ComplexDraft d;
      d.vertex_count = _vertex_count;
      d.base         = _base;
      for (auto t : both_tags) {
        d.component_of[index_of(t)] = _component_of[index_of(t)];
        d.coord[index_of(t)]        = _coord[index_of(t)];
        for (auto const& c : _components[index_of(t)]) {
          d.stabilizer[index_of(t)].push_back(c.stabilizer);
        }
      }
      return d;
    }

    friend bool operator==(CoreComplex const& x, CoreComplex const& y) {
      if (x._base != y._base || x._vertex_count != y._vertex_count
          || x._component_of != y._component_of || x._coord != y._coord) {
        return false;
      }
      for (auto t : both_tags) {
        auto const& cx = x._components[index_of(t)];
        auto const& cy = y._components[index_of(t)];
        if (cx.size() != cy.size()) {
          return false;
        }
        for (std::size_t i = 0; i < cx.size(); ++i) {
          if (cx[i].stabilizer != cy[i].stabilizer) {
            return false;
          }
        }
      }
      return true;
    }

   private:
    friend CoreComplex assemble(std::shared_ptr<FreeProduct const>,
                                ComplexDraft const&);

    std::shared_ptr<FreeProduct const>          _fp;
    vertex_type                                 _base         = 0;
    std::size_t                                 _vertex_count = 0;
    std::array<std::vector<std::size_t>, 2>     _component_of;
    std::array<std::vector<elem_type>, 2>       _coord;
    std::array<std::vector<FactorComponent>, 2> _components;
  };

  // All syllables in canonical order: A before B, elements ascending.
  inline std::vector<Syllable> all_syllables(FreeProduct const& fp) {
    std::vector<Syllable> out;
    for (auto t : both_tags) {
      for (elem_type e = 1; e < fp.factor(t).order(); ++e) {
        out.push_back({t, e});
      }
    }
    return out;
  }

  inline std::vector<Syllable> syllables_of(FreeProduct const& fp,
                                            FactorTag          t) {
    std::vector<Syllable> out;
    for (elem_type e = 1; e < fp.factor(t).order(); ++e) {
      out.push_back({t, e});
    }
    return out;
  }

  // Validates a draft and brings it into canonical form.  Vertices with
  // keep[v] == 0 are dropped together with any component left empty.
  inline CoreComplex assemble(std::shared_ptr<FreeProduct const> fp,
                              ComplexDraft const&                draft) {
    std::size_t const n = draft.vertex_count;
    if (n == 0 || draft.base >= n) {
      throw input_error("complex needs at least one vertex and a valid base");
    }
    auto kept = [&](vertex_type v) {
      return draft.keep.empty() || draft.keep[v] != 0;
    };
    if (!kept(draft.base)) {
      throw input_error("the base vertex cannot be removed");
    }

    // Per tag and old component: coset rep tables and occupancy.
    std::array<std::vector<std::vector<elem_type>>, 2>   reps;
    std::array<std::vector<std::vector<vertex_type>>, 2> occ;
    for (auto t : both_tags) {
      auto const         ti = index_of(t);
      FactorGroup const& g  = fp->factor(t);
      if (draft.component_of[ti].size() != n || draft.coord[ti].size() != n) {
        throw input_error(std::string("every vertex needs one ")
                          + letter_of(t) + "-component and coordinate");
      }
      for (auto const& s : draft.stabilizer[ti]) {
        if (s.parent != t || s.elements.empty()
            || subgroup_closure(g, s.elements) != s) {
          throw input_error(std::string("stabilizer of an ") + letter_of(t)
                            + "-component is not a sorted subgroup");
        }
        reps[ti].push_back(coset_rep_table(g, s));
        occ[ti].emplace_back(g.order(), no_vertex);
      }
      for (vertex_type v = 0; v < n; ++v) {
        std::size_t const c = draft.component_of[ti][v];
        elem_type const   x = draft.coord[ti][v];
        if (c >= draft.stabilizer[ti].size() || x >= g.order()) {
          throw input_error("component id or coordinate out of range");
        }
        if (!kept(v)) {
          continue;
        }
        auto& slot = occ[ti][c][reps[ti][c][x]];
        if (slot != no_vertex) {
          throw input_error(std::string("two vertices occupy the same coset "
                                        "of an ")
                            + letter_of(t) + "-component");
        }
        slot = v;
      }
    }

    auto old_trans = [&](vertex_type v, Syllable x) {
      auto const        ti = index_of(x.tag);
      std::size_t const c  = draft.component_of[ti][v];
      elem_type const   y
          = fp->factor(x.tag).mul(draft.coord[ti][v], x.elem);
      return occ[ti][c][reps[ti][c][y]];
    };

    auto const               syllables = all_syllables(*fp);
    std::vector<vertex_type> new_id(n, no_vertex);
    std::vector<vertex_type> order{draft.base};
    new_id[draft.base] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto x : syllables) {
        vertex_type const w = old_trans(order[i], x);
        if (w != no_vertex && new_id[w] == no_vertex) {
          new_id[w] = order.size();
          order.push_back(w);
        }
      }
    }
    for (vertex_type v = 0; v < n; ++v) {
      if (kept(v) && new_id[v] == no_vertex) {
        throw input_error("complex is not connected");
      }
    }

    CoreComplex out;
    out._fp           = fp;
    out._base         = 0;
    out._vertex_count = order.size();
    for (auto t : both_tags) {
      auto const         ti = index_of(t);
      FactorGroup const& g  = fp->factor(t);
      out._component_of[ti].assign(order.size(), 0);
      out._coord[ti].assign(order.size(), 0);
      std::vector<std::size_t> new_comp(draft.stabilizer[ti].size(),
                                        no_vertex);
      // Visiting vertices in new order meets each component first at its
      // root, so components come out ordered by least member.
      for (vertex_type nv = 0; nv < order.size(); ++nv) {
        vertex_type const ov = order[nv];
        std::size_t const oc = draft.component_of[ti][ov];
        if (new_comp[oc] == no_vertex) {
          new_comp[oc] = out._components[ti].size();
          FactorComponent comp;
          comp.tag        = t;
          comp.stabilizer = conjugate(g, draft.stabilizer[ti][oc],
                                      draft.coord[ti][ov]);
          comp.rep_of     = coset_rep_table(g, comp.stabilizer);
          comp.occupied.assign(g.order(), no_vertex);
          out._components[ti].push_back(std::move(comp));
        }
        std::size_t const nc   = new_comp[oc];
        auto&             comp = out._components[ti][nc];
        vertex_type const root = order[comp.members.empty()
                                           ? nv
                                           : comp.members.front()];
        elem_type const   shift = g.inv(draft.coord[ti][root]);
        elem_type const   x
            = comp.rep_of[g.mul(shift, draft.coord[ti][ov])];
        comp.members.push_back(nv);
        comp.occupied[x]          = nv;
        out._component_of[ti][nv] = nc;
        out._coord[ti][nv]        = x;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  struct Lift {
    std::vector<vertex_type> path;      // maximal defined prefix
    bool                     complete;  // every step was defined
  };

  // Lift of the word w starting at v.
  inline Lift lift(CoreComplex const& c, vertex_type v, Word const& w) {
    Lift out{{v}, true};
    for (auto x : w) {
      vertex_type const u = c.trans(out.path.back(), x);
      if (u == no_vertex) {
        out.complete = false;
        break;
      }
      out.path.push_back(u);
    }
    return out;
  }

  // Endpoint of the lift of w at v, or no_vertex.
  inline vertex_type endpoint(CoreComplex const& c, vertex_type v,
                              Word const& w) {
    for (auto x : w) {
      v = c.trans(v, x);
      if (v == no_vertex) {
        break;
      }
    }
    return v;
  }

  inline bool member(CoreComplex const& c, Word const& w) {
    return endpoint(c, c.base(), reduce(c.free_product(), w)) == c.base();
  }

  inline bool is_complete(CoreComplex const& c) {
    for (auto t : both_tags) {
      for (auto const& comp : c.components(t)) {
        if (!comp.is_complete()) {
          return false;
        }
      }
    }
    return true;
  }

  // [G:H], or nullopt for infinite index.
  inline std::optional<std::size_t> index(CoreComplex const& c) {
    if (is_complete(c)) {
      return c.vertex_count();
    }
    return std::nullopt;
  }

  // Label of a shortest reduced path from `from` to `to` of length >= 1,
  // optionally with a prescribed first factor.  nullopt if none exists.
  inline std::optional<Word>
  reduced_path(CoreComplex const& c, vertex_type from, vertex_type to,
               std::optional<FactorTag> first = std::nullopt) {
    FreeProduct const& fp = c.free_product();
    // State (vertex, tag of last syllable) -> 2*vertex + tag.
    std::size_t const        states = 2 * c.vertex_count();
    std::vector<std::size_t> parent(states, no_vertex);
    std::vector<Syllable>    via(states);
    std::vector<char>        seen(states, 0);
    std::queue<std::size_t>  queue;
    constexpr std::size_t    start = no_vertex - 1;

    auto finish = [&](std::size_t s) {
      Word w;
      while (s != start) {
        w.push_back(via[s]);
        s = parent[s];
      }
      std::reverse(w.begin(), w.end());
      return w;
    };
    auto visit = [&](std::size_t from_state, vertex_type u, Syllable x)
        -> std::optional<std::size_t> {
      vertex_type const w = c.trans(u, x);
      if (w == no_vertex) {
        return std::nullopt;
      }
      std::size_t const s = 2 * w + index_of(x.tag);
      if (seen[s]) {
        return std::nullopt;
      }
      seen[s]   = 1;
      parent[s] = from_state;
      via[s]    = x;
      return s;
    };

    for (auto t : both_tags) {
      if (first && *first != t) {
        continue;
      }
      for (auto x : syllables_of(fp, t)) {
        if (auto s = visit(start, from, x)) {
          if (*s / 2 == to) {
            return finish(*s);
          }
          queue.push(*s);
        }
      }
    }
    while (!queue.empty()) {
      std::size_t const s = queue.front();
      queue.pop();
      auto const next_tag = other(static_cast<FactorTag>(s % 2));
      for (auto x : syllables_of(fp, next_tag)) {
        if (auto r = visit(s, s / 2, x)) {
          if (*r / 2 == to) {
            return finish(*r);
          }
          queue.push(*r);
        }
      }
    }
    return std::nullopt;
  }

  // Vertices u such that some reduced loop at `base` passes through u: a
  // reduced path base -> u ending in one factor followed by a reduced path
  // u -> base starting in the other.
  inline std::vector<char> spanned_vertices(CoreComplex const& c,
                                            vertex_type        base) {
    FreeProduct const&    fp = c.free_product();
    std::size_t const     n  = c.vertex_count();
    // reach[2v+t]: reduced path from base to v whose last syllable is in t.
    // back[2v+t]: reduced path from v to base whose first syllable is in t.
    std::vector<char>     reach(2 * n, 0), back(2 * n, 0);
    std::queue<std::size_t> queue;

    for (auto x : all_syllables(fp)) {
      vertex_type const w = c.trans(base, x);
      if (w != no_vertex && !reach[2 * w + index_of(x.tag)]) {
        reach[2 * w + index_of(x.tag)] = 1;
        queue.push(2 * w + index_of(x.tag));
      }
    }
    while (!queue.empty()) {
      std::size_t const s = queue.front();
      queue.pop();
      auto const t = other(static_cast<FactorTag>(s % 2));
      for (auto x : syllables_of(fp, t)) {
        vertex_type const w = c.trans(s / 2, x);
        if (w != no_vertex && !reach[2 * w + index_of(t)]) {
          reach[2 * w + index_of(t)] = 1;
          queue.push(2 * w + index_of(t));
        }
      }
    }

    // trans(v, x) = w iff trans(w, x^-1) = v, so predecessors of w through
    // a t-syllable are the t-neighbours of w.
    for (auto x : all_syllables(fp)) {
      vertex_type const v = c.trans(base, x);
      if (v != no_vertex && !back[2 * v + index_of(x.tag)]) {
        back[2 * v + index_of(x.tag)] = 1;
        queue.push(2 * v + index_of(x.tag));
      }
    }
    while (!queue.empty()) {
      std::size_t const s = queue.front();
      queue.pop();
      auto const t = other(static_cast<FactorTag>(s % 2));
      for (auto x : syllables_of(fp, t)) {
        vertex_type const v = c.trans(s / 2, x);
        if (v != no_vertex && !back[2 * v + index_of(t)]) {
          back[2 * v + index_of(t)] = 1;
          queue.push(2 * v + index_of(t));
        }
      }
    }

    std::vector<char> out(n, 0);
    out[base] = 1;
    for (vertex_type v = 0; v < n; ++v) {
      if ((reach[2 * v] && back[2 * v + 1])
          || (reach[2 * v + 1] && back[2 * v])) {
        out[v] = 1;
      }
    }
    return out;
  }

  inline CoreComplex prune_to_span(CoreComplex const& c) {
    ComplexDraft d = c.draft();
    d.keep         = spanned_vertices(c, c.base());
    return assemble(c.free_product_ptr(), d);
  }

  // Core of the conjugate g H g^-1 where g labels a reduced path from v to
  // the base.
  inline CoreComplex rebase(CoreComplex const& c, vertex_type v) {
    if (v >= c.vertex_count()) {
      throw input_error("rebase: vertex out of range");
    }
    ComplexDraft d = c.draft();
    d.base         = v;
    d.keep         = spanned_vertices(c, v);
    return assemble(c.free_product_ptr(), d);
  }

  ////////////////////////////////////////////////////////////////////////
  // Folding
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      // Smaller root wins.
      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        return true;
      }

     private:
      std::vector<std::size_t> _parent;
    };

  }  // namespace detail

  struct RawEdge {
    vertex_type from;
    Syllable    label;
    vertex_type to;
  };

  // Labelled graph before folding: the generator loops glued at vertex 0.
  struct RawGraph {
    std::size_t          vertex_count = 1;
    std::vector<RawEdge> edges;

    void add_loop(Word const& w) {
      vertex_type prev = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        vertex_type const next = i + 1 == w.size() ? 0 : vertex_count++;
        edges.push_back({prev, w[i], next});
        prev = next;
      }
    }
  };

  namespace detail {

    struct FactorLayout {
      std::vector<std::size_t> component_of;  // indexed by root vertex
      std::vector<elem_type>   coord;         // indexed by root vertex
      std::vector<Subgroup>    stabilizer;
    };

    // Components of the t-edges among current root vertices, spanning-tree
    // coordinates, and stabilizers generated by the cycles.
    inline FactorLayout layout(FreeProduct const& fp, RawGraph const& raw,
                               UnionFind& uf, FactorTag t) {
      FactorGroup const& g = fp.factor(t);
      std::size_t const  n = raw.vertex_count;
      std::vector<std::vector<std::pair<elem_type, vertex_type>>> adj(n);
      for (auto const& e : raw.edges) {
        if (e.label.tag != t) {
          continue;
        }
        vertex_type const u = uf.find(e.from), v = uf.find(e.to);
        adj[u].emplace_back(e.label.elem, v);
        adj[v].emplace_back(g.inv(e.label.elem), u);
      }
      FactorLayout out{std::vector<std::size_t>(n, no_vertex),
                       std::vector<elem_type>(n, 0),
                       {}};
      for (vertex_type r = 0; r < n; ++r) {
        if (uf.find(r) != r || out.component_of[r] != no_vertex) {
          continue;
        }
        std::size_t const id = out.stabilizer.size();
        std::vector<elem_type> gens;
        std::vector<vertex_type> queue{r};
        out.component_of[r] = id;
        for (std::size_t i = 0; i < queue.size(); ++i) {
          vertex_type const u = queue[i];
          for (auto [x, v] : adj[u]) {
            if (out.component_of[v] == no_vertex) {
              out.component_of[v] = id;
              out.coord[v]        = g.mul(out.coord[u], x);
              queue.push_back(v);
            } else {
              // u -x-> v forces coord(u) x coord(v)^-1 into the stabilizer.
              gens.push_back(g.mul(g.mul(out.coord[u], x),
                                   g.inv(out.coord[v])));
            }
          }
        }
        out.stabilizer.push_back(subgroup_closure(g, gens));
      }
      return out;
    }

  }  // namespace detail

  // Folds a raw graph to the coset-structured complex it determines.  Each
  // round lays out the components of one factor and identifies vertices
  // whose coordinates lie in the same coset of the component's stabilizer;
  // rounds repeat until neither factor forces an identification.
  inline CoreComplex fold(std::shared_ptr<FreeProduct const> fp,
                          RawGraph const&                    raw) {
    detail::UnionFind uf(raw.vertex_count);
    bool              merged = true;
    while (merged) {
      merged = false;
      for (auto t : both_tags) {
        auto const lay  = detail::layout(*fp, raw, uf, t);
        auto const& g   = fp->factor(t);
        std::vector<std::vector<vertex_type>> seen(lay.stabilizer.size());
        std::vector<std::vector<elem_type>>   reps;
        for (auto const& s : lay.stabilizer) {
          reps.push_back(coset_rep_table(g, s));
        }
        for (auto& v : seen) {
          v.assign(g.order(), no_vertex);
        }
        for (vertex_type v = 0; v < raw.vertex_count; ++v) {
          if (uf.find(v) != v) {
            continue;
          }
          std::size_t const c    = lay.component_of[v];
          auto&             slot = seen[c][reps[c][lay.coord[v]]];
          if (slot == no_vertex) {
            slot = v;
          } else {
            merged |= uf.unite(slot, v);
          }
        }
        if (merged) {
          break;  // re-lay out with the new identifications
        }
      }
    }

    std::vector<vertex_type> roots;
    std::vector<vertex_type> new_index(raw.vertex_count, no_vertex);
    for (vertex_type v = 0; v < raw.vertex_count; ++v) {
      if (uf.find(v) == v) {
        new_index[v] = roots.size();
        roots.push_back(v);
      }
    }
    ComplexDraft d;
    d.vertex_count = roots.size();
    d.base         = new_index[uf.find(0)];
    for (auto t : both_tags) {
      auto const ti  = index_of(t);
      auto       lay = detail::layout(*fp, raw, uf, t);
      for (auto r : roots) {
        d.component_of[ti].push_back(lay.component_of[r]);
        d.coord[ti].push_back(lay.coord[r]);
      }
      d.stabilizer[ti] = std::move(lay.stabilizer);
    }
    return assemble(std::move(fp), d);
  }

  // Core of the subgroup generated by `gens`.  Generators are reduced first;
  // those equal to the identity are dropped.
  inline CoreComplex build_core(std::shared_ptr<FreeProduct const> fp,
                                std::vector<Word> const&           gens) {
    if (gens.empty()) {
      throw input_error("at least one generator is required");
    }
    RawGraph raw;
    for (auto const& w : gens) {
      validate(*fp, w);
      raw.add_loop(reduce(*fp, w));
    }
    return fold(std::move(fp), raw);
  }

}  // namespace kcore

#endif  // KCORE_CORE_COMPLEX_HPP_
