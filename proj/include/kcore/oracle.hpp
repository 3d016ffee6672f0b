// Brute-force machinery used to cross-check the core-based algorithms.
//
// Nothing in here looks at a CoreComplex: balls are built by multiplying out
// generators, coset tables by Todd-Coxeter enumeration over the presentation
// of A * B, and normal-closure samples by multiplying random conjugates.

#ifndef KCORE_ORACLE_HPP_
#define KCORE_ORACLE_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <limits>    // for numeric_limits
#include <optional>  // for optional
#include <random>    // for mt19937_64
#include <set>       // for set
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "factor_group.hpp"
#include "separation.hpp"
#include "word.hpp"

namespace kcore {

  ////////////////////////////////////////////////////////////////////////
  // Ball enumeration
  ////////////////////////////////////////////////////////////////////////

  // Reduced forms of all products of at most `depth` factors from
  // gens and their inverses.
  inline std::set<Word> enumerate_ball(FreeProduct const&       fp,
                                       std::vector<Word> const& gens,
                                       std::size_t              depth) {
    std::vector<Word> letters;
    for (auto const& g : gens) {
      Word const r = reduce(fp, g);
      if (!r.empty()) {
        letters.push_back(r);
        letters.push_back(invert(fp, r));
      }
    }
    std::set<Word>    ball{Word{}};
    std::vector<Word> frontier{Word{}};
    for (std::size_t k = 0; k < depth; ++k) {
      std::vector<Word> next;
      for (auto const& w : frontier) {
        for (auto const& l : letters) {
          Word p = concat_reduce(fp, w, l);
          if (ball.insert(p).second) {
            next.push_back(std::move(p));
          }
        }
      }
      frontier = std::move(next);
    }
    return ball;
  }

  ////////////////////////////////////////////////////////////////////////
  // Todd-Coxeter coset enumeration
  ////////////////////////////////////////////////////////////////////////

  // Coset table of H = <gens> in A * B.  Letters are the syllables in
  // canonical order; table[c][l] is the coset reached from c by letter l.
  struct FullCoverSlice {
    bool                                   complete = false;
    std::size_t                            index    = 0;
    std::vector<Syllable>                  letters;
    std::vector<std::vector<std::size_t>>  table;
  };

  namespace detail {

    // HLT strategy with coincidence processing.
    class ToddCoxeter {
     public:
      static constexpr std::size_t undefined
          = std::numeric_limits<std::size_t>::max();

      ToddCoxeter(FreeProduct const& fp, std::size_t cap) : _cap(cap) {
        for (auto t : both_tags) {
          FactorGroup const& g = fp.factor(t);
          for (elem_type e = 1; e < g.order(); ++e) {
            _letters.push_back({t, e});
          }
        }
        auto letter = [this](Syllable s) { return letter_of(s); };
        for (auto s : _letters) {
          _inverse.push_back(letter(inverse(fp, s)));
        }
        // x y = z within a factor; x y = 1 is covered by the inverse columns.
        for (auto t : both_tags) {
          FactorGroup const& g = fp.factor(t);
          for (elem_type x = 1; x < g.order(); ++x) {
            for (elem_type y = 1; y < g.order(); ++y) {
              elem_type const z = g.mul(x, y);
              if (z != 0) {
                _relators.push_back({letter({t, x}), letter({t, y}),
                                     letter({t, g.inv(z)})});
              }
            }
          }
        }
      }

      FullCoverSlice run(FreeProduct const& fp, std::vector<Word> const& gens) {
        new_coset();
        for (auto const& w : gens) {
          std::vector<std::size_t> word;
          for (auto s : reduce(fp, w)) {
            word.push_back(letter_of(s));
          }
          if (!word.empty()) {
            scan_and_fill(0, word);
          }
          if (_overflow) {
            return {};
          }
        }
        for (std::size_t c = 0; c < _table.size(); ++c) {
          for (auto const& r : _relators) {
            if (!live(c)) {
              break;
            }
            scan_and_fill(c, r);
            if (_overflow) {
              return {};
            }
          }
          for (std::size_t l = 0; l < _letters.size() && live(c); ++l) {
            if (_table[c][l] == undefined) {
              define(c, l);
              if (_overflow) {
                return {};
              }
            }
          }
        }
        return compact();
      }

     private:
      std::size_t letter_of(Syllable s) const {
        std::size_t i = 0;
        while (_letters[i] != s) {
          ++i;
        }
        return i;
      }

      bool live(std::size_t c) const {
        return _parent[c] == c;
      }

      std::size_t new_coset() {
        if (_table.size() >= _cap) {
          _overflow = true;
          return undefined;
        }
        _table.emplace_back(_letters.size(), undefined);
        _parent.push_back(_parent.size());
        return _table.size() - 1;
      }

      void define(std::size_t c, std::size_t l) {
        std::size_t const d = new_coset();
        if (d == undefined) {
          return;
        }
        _table[c][l]             = d;
        _table[d][_inverse[l]]   = c;
      }

      void scan_and_fill(std::size_t c, std::vector<std::size_t> const& w) {
        std::size_t f = c, b = c;
        std::size_t i = 0, j = w.size();  // unscanned letters are [i, j)
        while (true) {
          while (i < j && _table[f][w[i]] != undefined) {
            f = _table[f][w[i++]];
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j > i && _table[b][_inverse[w[j - 1]]] != undefined) {
            b = _table[b][_inverse[w[--j]]];
          }
          if (j == i) {
            coincidence(f, b);
            return;
          }
          if (j == i + 1) {
            _table[f][w[i]]             = b;
            _table[b][_inverse[w[i]]]   = f;
            return;
          }
          define(f, w[i]);
          if (_overflow) {
            return;
          }
        }
      }

      std::size_t rep(std::size_t c) {
        std::size_t r = c;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[c] != r) {
          std::size_t const next = _parent[c];
          _parent[c]             = r;
          c                      = next;
        }
        return r;
      }

      void merge(std::size_t x, std::size_t y, std::vector<std::size_t>& q) {
        x = rep(x);
        y = rep(y);
        if (x == y) {
          return;
        }
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        q.push_back(y);
      }

      void coincidence(std::size_t a, std::size_t b) {
        std::vector<std::size_t> q;
        merge(a, b, q);
        for (std::size_t i = 0; i < q.size(); ++i) {
          std::size_t const g = q[i];
          for (std::size_t l = 0; l < _letters.size(); ++l) {
            std::size_t const d = _table[g][l];
            if (d == undefined) {
              continue;
            }
            if (_table[d][_inverse[l]] == g) {
              _table[d][_inverse[l]] = undefined;
            }
            std::size_t const m = rep(g), n = rep(d);
            if (_table[m][l] != undefined) {
              merge(n, _table[m][l], q);
            } else if (_table[n][_inverse[l]] != undefined) {
              merge(m, _table[n][_inverse[l]], q);
            } else {
              _table[m][l]              = n;
              _table[n][_inverse[l]]    = m;
            }
          }
        }
      }

      // Live cosets renumbered by breadth-first search from coset 0.
      FullCoverSlice compact() {
        FullCoverSlice out;
        out.complete = true;
        out.letters  = _letters;
        std::vector<std::size_t> id(_table.size(), undefined);
        std::vector<std::size_t> order{0};
        id[0] = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (std::size_t l = 0; l < _letters.size(); ++l) {
            std::size_t const d = rep(_table[order[i]][l]);
            if (id[d] == undefined) {
              id[d] = order.size();
              order.push_back(d);
            }
          }
        }
        out.index = order.size();
        for (auto c : order) {
          std::vector<std::size_t> row;
          for (std::size_t l = 0; l < _letters.size(); ++l) {
            row.push_back(id[rep(_table[c][l])]);
          }
          out.table.push_back(std::move(row));
        }
        return out;
      }

      std::size_t                              _cap;
      bool                                     _overflow = false;
      std::vector<Syllable>                    _letters;
      std::vector<std::size_t>                 _inverse;
      std::vector<std::vector<std::size_t>>    _relators;
      std::vector<std::vector<std::size_t>>    _table;
      std::vector<std::size_t>                 _parent;
    };

  }  // namespace detail

  // Enumerates the right cosets of <gens>; gives up (complete == false) once
  // more than `cap` cosets have been defined.
  inline FullCoverSlice full_cover_bfs(FreeProduct const&       fp,
                                       std::vector<Word> const& gens,
                                       std::size_t              cap) {
    detail::ToddCoxeter tc(fp, cap);
    return tc.run(fp, gens);
  }

  ////////////////////////////////////////////////////////////////////////
  // Random sampling
  ////////////////////////////////////////////////////////////////////////

  inline constexpr char const* rng_name = "splitmix64-seeded mt19937_64";

  inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  // Generator for stream `stream` of the run seeded with `seed`; streams are
  // independent so samples can be drawn in any order or in parallel.
  inline std::mt19937_64 split_rng(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
  }

  // Uniform integer in [0, n), by rejection so the result does not depend on
  // the standard library's distribution implementation.
  inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t const limit
        = std::numeric_limits<std::uint64_t>::max()
          - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % n;
  }

  // Uniformly random reduced word among all reduced words of length <= m.
  inline Word random_reduced_word(FreeProduct const& fp, std::mt19937_64& rng,
                                  std::size_t m) {
    std::uint64_t const a = fp.a.order() - 1, b = fp.b.order() - 1;
    // count[L][t]: reduced words of length L starting in factor t.
    std::vector<std::array<std::uint64_t, 2>> count(m + 1, {0, 0});
    std::uint64_t                             total = 1;
    for (std::size_t len = 1; len <= m; ++len) {
      std::uint64_t ca = 1, cb = 1;
      for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t const fa = i % 2 == 0 ? a : b;
        std::uint64_t const fb = i % 2 == 0 ? b : a;
        if (ca > (std::uint64_t{1} << 62) / fa
            || cb > (std::uint64_t{1} << 62) / fb) {
          throw input_error("random word length too large");
        }
        ca *= fa;
        cb *= fb;
      }
      count[len] = {ca, cb};
      total += ca + cb;
    }
    std::uint64_t r = uniform_below(rng, total);
    if (r == 0) {
      return {};
    }
    --r;
    for (std::size_t len = 1; len <= m; ++len) {
      for (auto t : both_tags) {
        if (r < count[len][index_of(t)]) {
          Word      w;
          FactorTag cur = t;
          for (std::size_t i = 0; i < len; ++i) {
            auto const k = fp.factor(cur).order() - 1;
            w.push_back({cur, 1 + uniform_below(rng, k)});
            cur = other(cur);
          }
          return w;
        }
        r -= count[len][index_of(t)];
      }
    }
    return {};
  }

  // Uniform random reduced word of exact length `len` (len >= 1).
  inline Word random_word_of_length(FreeProduct const& fp,
                                    std::mt19937_64& rng, std::size_t len) {
    Word      w;
    FactorTag cur = uniform_below(rng, 2) == 0 ? FactorTag::A : FactorTag::B;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back({cur, 1 + uniform_below(rng, fp.factor(cur).order() - 1)});
      cur = other(cur);
    }
    return w;
  }

  struct SampleParams {
    std::size_t   samples            = 1000;
    std::size_t   max_conjugates     = 4;
    std::size_t   max_conjugator_len = 6;
    std::uint64_t seed               = 1;
  };

  struct ClosureSample {
    std::size_t                  index;
    Word                         z;
    std::vector<ConjugateFactor> recipe;  // z = prod w_i g^{6 s_i} w_i^-1
  };

  inline ClosureSample closure_sample(FreeProduct const& fp, Word const& g,
                                      SampleParams const& params,
                                      std::size_t         i) {
    auto              rng = split_rng(params.seed, i);
    std::size_t const k   = 1 + uniform_below(rng, params.max_conjugates);
    ClosureSample     out{i, {}, {}};
    for (std::size_t j = 0; j < k; ++j) {
      int const sign = uniform_below(rng, 2) == 0 ? 1 : -1;
      out.recipe.push_back(
          {random_reduced_word(fp, rng, params.max_conjugator_len), sign});
    }
    out.z = evaluate_conjugate_product(fp, power(fp, g, 6), out.recipe);
    return out;
  }

  inline std::vector<ClosureSample> sample_closure(FreeProduct const&  fp,
                                                   Word const&         g,
                                                   SampleParams const& params) {
    if (g.size() < 2 || !is_cyclically_reduced(g)) {
      throw input_error("sample_closure: g must be cyclically reduced with "
                        "length at least 2");
    }
    std::vector<ClosureSample> out;
    out.reserve(params.samples);
    for (std::size_t i = 0; i < params.samples; ++i) {
      out.push_back(closure_sample(fp, g, params, i));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Spelling check
  ////////////////////////////////////////////////////////////////////////

  // Does some cyclic conjugate of z contain a factor of length 3|g| - 1 that
  // is also a factor of a cyclic conjugate of g^6 or g^-6?  z must be
  // cyclically reduced.  The factors of cyclic conjugates of g^{+-6} of that
  // length are the windows of the periodic word g^{+-1} g^{+-1} ...
  inline bool spelling_check(FreeProduct const& fp, Word const& z,
                             Word const& g) {
    std::size_t const need = 3 * g.size() - 1;
    if (z.size() < need || g.empty()) {
      return false;
    }
    for (Word const& p : {g, invert(fp, g)}) {
      for (std::size_t i = 0; i < z.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
          std::size_t t = 0;
          while (t < need
                 && z[(i + t) % z.size()] == p[(j + t) % p.size()]) {
            ++t;
          }
          if (t == need) {
            return true;
          }
        }
      }
    }
    return false;
  }

}  // namespace kcore

#endif  // KCORE_ORACLE_HPP_
