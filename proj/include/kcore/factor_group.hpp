// Finite groups used as the two factors of a free product A * B.
//
// Elements are indices 0..order-1 with 0 reserved for the identity.  Groups
// are stored as full multiplication tables and validated exhaustively on
// construction, so every later algorithm can treat the tables as trusted.

#ifndef KCORE_FACTOR_GROUP_HPP_
#define KCORE_FACTOR_GROUP_HPP_

#include <algorithm>  // for sort, next_permutation, min
#include <array>      // for array
#include <cstddef>    // for size_t
#include <cstdint>    // for uint8_t
#include <numeric>    // for iota
#include <stdexcept>  // for runtime_error
#include <string>     // for string, to_string
#include <utility>    // for move
#include <vector>     // for vector

namespace kcore {

  using elem_type = std::size_t;

  class input_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  enum class FactorTag : std::uint8_t { A = 0, B = 1 };

  inline constexpr std::array<FactorTag, 2> both_tags = {FactorTag::A,
                                                         FactorTag::B};

  constexpr FactorTag other(FactorTag t) noexcept {
    return t == FactorTag::A ? FactorTag::B : FactorTag::A;
  }

  constexpr std::size_t index_of(FactorTag t) noexcept {
    return static_cast<std::size_t>(t);
  }

  constexpr char letter_of(FactorTag t) noexcept {
    return t == FactorTag::A ? 'a' : 'b';
  }

  // How a group was specified; kept so files can be written back verbatim.
  struct GroupSpec {
    enum class Kind { cyclic, symmetric, table };
    Kind                                 kind   = Kind::cyclic;
    std::size_t                          param  = 0;  // order or degree
    std::vector<std::vector<elem_type>>  table;       // only for Kind::table
  };

  class FactorGroup {
   public:
    FactorGroup() = default;

    // Validates the group axioms; throws input_error naming the failed one.
    FactorGroup(FactorTag tag, std::vector<std::vector<elem_type>> rows,
                GroupSpec spec)
        : _tag(tag), _order(rows.size()), _spec(std::move(spec)) {
      std::string const name = std::string("group ") + letter_of(tag);
      if (_order < 2) {
        throw input_error(name + ": order must be at least 2 (nontrivial)");
      }
      _mul.reserve(_order * _order);
      for (auto const& row : rows) {
        if (row.size() != _order) {
          throw input_error(name + ": table is not square");
        }
        for (auto x : row) {
          if (x >= _order) {
            throw input_error(name + ": closure violated (entry "
                              + std::to_string(x) + " out of range)");
          }
          _mul.push_back(x);
        }
      }
      for (elem_type x = 0; x < _order; ++x) {
        if (mul(0, x) != x || mul(x, 0) != x) {
          throw input_error(name + ": identity axiom violated (element 0 "
                            "is not a two-sided identity)");
        }
      }
      for (elem_type x = 0; x < _order; ++x) {
        for (elem_type y = 0; y < _order; ++y) {
          for (elem_type z = 0; z < _order; ++z) {
            if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
              throw input_error(name + ": associativity violated at ("
                                + std::to_string(x) + "," + std::to_string(y)
                                + "," + std::to_string(z) + ")");
            }
          }
        }
      }
      _inv.assign(_order, _order);
      for (elem_type x = 0; x < _order; ++x) {
        for (elem_type y = 0; y < _order; ++y) {
          if (mul(x, y) == 0 && mul(y, x) == 0) {
            _inv[x] = y;
            break;
          }
        }
        if (_inv[x] == _order) {
          throw input_error(name + ": inverse axiom violated (element "
                            + std::to_string(x) + " has no inverse)");
        }
      }
    }

    [[nodiscard]] FactorTag tag() const noexcept {
      return _tag;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }
    [[nodiscard]] elem_type mul(elem_type x, elem_type y) const noexcept {
      return _mul[x * _order + y];
    }
    [[nodiscard]] elem_type inv(elem_type x) const noexcept {
      return _inv[x];
    }
    [[nodiscard]] GroupSpec const& spec() const noexcept {
      return _spec;
    }
    [[nodiscard]] std::vector<std::vector<elem_type>> table() const {
      std::vector<std::vector<elem_type>> rows(_order);
      for (elem_type x = 0; x < _order; ++x) {
        rows[x].assign(_mul.begin() + x * _order,
                       _mul.begin() + (x + 1) * _order);
      }
      return rows;
    }

   private:
    FactorTag              _tag   = FactorTag::A;
    std::size_t            _order = 0;
    std::vector<elem_type> _mul;
    std::vector<elem_type> _inv;
    GroupSpec              _spec;
  };

  inline FactorGroup cyclic_group(FactorTag tag, std::size_t n) {
    std::vector<std::vector<elem_type>> rows(n, std::vector<elem_type>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        rows[i][j] = (i + j) % n;
      }
    }
    return FactorGroup(tag, std::move(rows), {GroupSpec::Kind::cyclic, n, {}});
  }

  // Permutations of {0..degree-1} in lexicographic order, so index 0 is the
  // identity.  The product x*y applies x first, then y.
  inline FactorGroup symmetric_group(FactorTag tag, std::size_t degree) {
    if (degree < 2 || degree > 5) {
      throw input_error(std::string("group ") + letter_of(tag)
                        + ": symmetric degree must be in [2, 5]");
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(degree);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto index = [&](std::vector<std::size_t> const& q) {
      return static_cast<elem_type>(
          std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::size_t const                   n = perms.size();
    std::vector<std::vector<elem_type>> rows(n, std::vector<elem_type>(n));
    std::vector<std::size_t>            q(degree);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < degree; ++k) {
          q[k] = perms[j][perms[i][k]];
        }
        rows[i][j] = index(q);
      }
    }
    return FactorGroup(
        tag, std::move(rows), {GroupSpec::Kind::symmetric, degree, {}});
  }

  inline FactorGroup table_group(FactorTag                           tag,
                                 std::vector<std::vector<elem_type>> rows) {
    GroupSpec spec{GroupSpec::Kind::table, rows.size(), rows};
    return FactorGroup(tag, std::move(rows), std::move(spec));
  }

  struct Subgroup {
    FactorTag              parent = FactorTag::A;
    std::vector<elem_type> elements;  // sorted, always contains 0

    [[nodiscard]] std::size_t size() const noexcept {
      return elements.size();
    }
    [[nodiscard]] bool is_trivial() const noexcept {
      return elements.size() == 1;
    }
    [[nodiscard]] bool contains(elem_type x) const {
      return std::binary_search(elements.begin(), elements.end(), x);
    }
    friend bool operator==(Subgroup const&, Subgroup const&) = default;
  };

  inline Subgroup trivial_subgroup(FactorGroup const& g) {
    return Subgroup{g.tag(), {0}};
  }

  // Smallest subgroup containing `seed`.
  inline Subgroup subgroup_closure(FactorGroup const&            g,
                                   std::vector<elem_type> const& seed) {
    std::vector<char>      in(g.order(), 0);
    std::vector<elem_type> elems{0};
    in[0] = 1;
    for (auto s : seed) {
      if (s >= g.order()) {
        throw input_error("subgroup seed element " + std::to_string(s)
                          + " out of range");
      }
    }
    std::vector<elem_type> gens;
    for (auto s : seed) {
      if (s != 0) {
        gens.push_back(s);
      }
    }
    // Finite group: closure under multiplication by generators suffices.
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto s : gens) {
        elem_type const y = g.mul(elems[i], s);
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return Subgroup{g.tag(), std::move(elems)};
  }

  // Minimum index in the right coset S*x.
  inline elem_type canonical_coset_rep(FactorGroup const& g,
                                       Subgroup const&    s,
                                       elem_type          x) {
    if (x >= g.order()) {
      throw input_error("element " + std::to_string(x) + " out of range");
    }
    elem_type best = g.order();
    for (auto h : s.elements) {
      best = std::min(best, g.mul(h, x));
    }
    return best;
  }

  // canonical_coset_rep for every element at once.
  inline std::vector<elem_type> coset_rep_table(FactorGroup const& g,
                                                Subgroup const&    s) {
    std::vector<elem_type> rep(g.order(), g.order());
    for (elem_type x = 0; x < g.order(); ++x) {
      if (rep[x] != g.order()) {
        continue;
      }
      // x is the least element of its coset not yet seen, hence the minimum.
      for (auto h : s.elements) {
        rep[g.mul(h, x)] = x;
      }
    }
    return rep;
  }

  // c^-1 * S * c
  inline Subgroup conjugate(FactorGroup const& g, Subgroup const& s,
                            elem_type c) {
    Subgroup out{s.parent, {}};
    out.elements.reserve(s.size());
    for (auto h : s.elements) {
      out.elements.push_back(g.mul(g.mul(g.inv(c), h), c));
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
  }

  struct FreeProduct {
    FactorGroup a;
    FactorGroup b;

    [[nodiscard]] FactorGroup const& factor(FactorTag t) const noexcept {
      return t == FactorTag::A ? a : b;
    }
  };

}  // namespace kcore

#endif  // KCORE_FACTOR_GROUP_HPP_
