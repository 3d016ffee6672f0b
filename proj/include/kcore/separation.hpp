// Witnesses for both directions of the finite-index / normal-subgroup
// criterion.
//
// Infinite index: move the base to a vertex with a missing edge, descend to a
// cyclically reduced element g of monodromy rank 0, and report N = <<g^6>>,
// which meets H trivially.
//
// Finite index: given x != 1, produce a nontrivial element of H that is a
// product of conjugates of x^{+-1}.

#ifndef KCORE_SEPARATION_HPP_
#define KCORE_SEPARATION_HPP_

#include <cstddef>    // for size_t
#include <numeric>    // for lcm
#include <optional>   // for optional
#include <stdexcept>  // for runtime_error, logic_error
#include <string>     // for string
#include <utility>    // for move, pair
#include <vector>     // for vector

#include "core_complex.hpp"
#include "monodromy.hpp"
#include "word.hpp"

namespace kcore {

  // Raised when a witness is requested for the wrong side of the criterion.
  class precondition_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct BoundaryEdge {
    vertex_type vertex;
    Syllable    missing;

    friend bool operator==(BoundaryEdge const&, BoundaryEdge const&)
        = default;
  };

  inline std::vector<BoundaryEdge> boundary_vertices(CoreComplex const& c) {
    std::vector<BoundaryEdge> out;
    auto const                syllables = all_syllables(c.free_product());
    for (vertex_type v = 0; v < c.vertex_count(); ++v) {
      for (auto x : syllables) {
        if (c.trans(v, x) == no_vertex) {
          out.push_back({v, x});
        }
      }
    }
    return out;
  }

  struct WellSituated {
    CoreComplex core;
    Word        conjugator;  // labels a reduced path from the new to the old base
  };

  inline WellSituated well_situate(CoreComplex const& c) {
    auto const boundary = boundary_vertices(c);
    if (boundary.empty()) {
      throw precondition_error(
          "finite index: no separating normal subgroup exists");
    }
    vertex_type const v = boundary.front().vertex;
    if (v == c.base()) {
      return {c, {}};
    }
    auto path = reduced_path(c, v, c.base());
    if (!path) {
      throw std::logic_error("well_situate: no reduced path to the base");
    }
    return {rebase(c, v), std::move(*path)};
  }

  struct TraceStep {
    Word        word;
    std::size_t rank;
  };

  struct SeparationWitness {
    Word                   g;         // cyclically reduced, length >= 2
    int                    exponent = 6;
    std::vector<TraceStep> trace;     // ranks strictly decrease
    Word                   rebase_conjugator;
    Syllable               missing_at_base;
    bool                   length_one_extended = false;
  };

  // Greedy descent to a cyclically reduced element of rank 0 in a well
  // situated core.  Let x0 be the first syllable missing at the base and F its
  // factor.  g always starts in the other factor.  While rank(g) > 0 take the
  // least v in dom(g): if v.g is the base, g <- g x0; otherwise g <- g p x0
  // where p labels a shortest reduced path from v.g to the base starting in
  // F.  Either way v drops out of the domain and the domain only shrinks.
  inline SeparationWitness find_rank_zero(CoreComplex const& c) {
    FreeProduct const& fp = c.free_product();
    if (is_complete(c)) {
      throw precondition_error(
          "finite index: every element has full rank, none has rank 0");
    }
    std::optional<Syllable> x0;
    for (auto x : all_syllables(fp)) {
      if (c.trans(c.base(), x) == no_vertex) {
        x0 = x;
        break;
      }
    }
    if (!x0) {
      throw precondition_error("core is not well situated");
    }
    FactorTag const f      = x0->tag;
    Syllable const  filler = {other(f), 1};

    SeparationWitness out;
    out.missing_at_base = *x0;
    Word g{filler};
    while (true) {
      auto const        rho = monodromy(c, g);
      std::size_t const r   = rho.rank();
      out.trace.push_back({g, r});
      if (r == 0) {
        break;
      }
      if (out.trace.size() > c.vertex_count() + 1) {
        throw std::logic_error("find_rank_zero: descent did not terminate");
      }
      vertex_type const end = rho.pairs.front().second;  // least v in dom, v.g
      Word              next = g;
      if (end != c.base()) {
        auto p = reduced_path(c, end, c.base(), f);
        if (!p) {
          throw std::logic_error(
              "find_rank_zero: no reduced path with prescribed first factor");
        }
        next = concat_reduce(fp, std::move(next), *p);
      }
      next = concat_reduce(fp, std::move(next), {*x0});
      if (rank(c, next) == 0) {
        g = std::move(next);
        continue;
      }
      // Restore "ends in the other factor"; the domain cannot grow.
      next.push_back(filler);
      g = std::move(next);
    }

    // g starts in other(f).  If it also ends there, one more f-syllable
    // makes it cyclically reduced and keeps rank 0.
    if (g.back().tag == g.front().tag) {
      out.length_one_extended = g.size() == 1;
      g.push_back(*x0);
    }
    out.g = std::move(g);
    return out;
  }

  inline SeparationWitness separating_witness(CoreComplex const& c) {
    auto ws  = well_situate(c);
    auto out = find_rank_zero(ws.core);
    out.rebase_conjugator = std::move(ws.conjugator);
    return out;
  }

  struct ConjugateFactor {
    Word conjugator;
    int  sign;  // +1 or -1
  };

  // Reduced form of prod_i w_i x^{s_i} w_i^-1.
  inline Word evaluate_conjugate_product(
      FreeProduct const& fp, Word const& x,
      std::vector<ConjugateFactor> const& factors) {
    Word out;
    for (auto const& f : factors) {
      Word term = concat_reduce(fp, f.conjugator, power(fp, x, f.sign));
      term      = concat_reduce(fp, std::move(term), invert(fp, f.conjugator));
      out       = concat_reduce(fp, std::move(out), term);
    }
    return out;
  }

  struct IntersectionWitness {
    Word                         z;      // cyclically reduced, length >= 2
    std::size_t                  power;  // least k with z^k acting trivially
    Word                         h;      // z^k, in H and in <<x>>
    std::vector<ConjugateFactor> expression;
  };

  // For a finite-index core and x != 1.  With x = u s u^-1, s cyclically
  // reduced, take z = s if |s| >= 2 and z = (c s c^-1) s for a syllable c of
  // the other factor when |s| = 1.  z acts on the n vertices of the complete
  // core as a permutation; its order k gives h = z^k fixing every vertex, in
  // particular h in H, and h != 1 because z has infinite order.
  inline IntersectionWitness intersection_witness(CoreComplex const& c,
                                                  Word const&        x) {
    FreeProduct const& fp = c.free_product();
    validate(fp, x);
    Word const rx = reduce(fp, x);
    if (rx.empty()) {
      throw input_error("intersection witness: x reduces to the identity");
    }
    if (!is_complete(c)) {
      throw precondition_error("index infinite: core is not complete");
    }
    auto const [u, s]  = cyclically_reduce(fp, rx);
    Word const u_inv   = invert(fp, u);

    IntersectionWitness          out;
    std::vector<ConjugateFactor> once;
    if (s.size() >= 2) {
      out.z = s;
      once  = {{u_inv, 1}};
    } else {
      Syllable const cs{other(s.front().tag), 1};
      out.z = {cs, s.front(), inverse(fp, cs), s.front()};
      once  = {{concat_reduce(fp, {cs}, u_inv), 1}, {u_inv, 1}};
    }

    std::vector<vertex_type> perm(c.vertex_count());
    for (vertex_type v = 0; v < c.vertex_count(); ++v) {
      perm[v] = endpoint(c, v, out.z);
    }
    std::size_t       k = 1;
    std::vector<char> done(perm.size(), 0);
    for (vertex_type v = 0; v < perm.size(); ++v) {
      std::size_t len = 0;
      for (vertex_type w = v; !done[w]; w = perm[w]) {
        done[w] = 1;
        ++len;
      }
      if (len != 0) {
        k = std::lcm(k, len);
      }
    }
    out.power = k;
    for (std::size_t i = 0; i < k; ++i) {
      out.h.insert(out.h.end(), out.z.begin(), out.z.end());
      out.expression.insert(out.expression.end(), once.begin(), once.end());
    }
    return out;
  }

}  // namespace kcore

#endif  // KCORE_SEPARATION_HPP_
