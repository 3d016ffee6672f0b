// The partial permutation of core vertices induced by a group element.
//
// v is in dom(g) when the lift of red(g) at v stays inside the core; then
// v -> v.g is a bijection dom(g) -> ran(g) and rank(g) = #dom(g).

#ifndef KCORE_MONODROMY_HPP_
#define KCORE_MONODROMY_HPP_

#include <algorithm>  // for sort
#include <cstddef>    // for size_t
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "core_complex.hpp"

namespace kcore {

  struct PartialVertexPermutation {
    Word                                             word;   // reduced
    std::vector<std::pair<vertex_type, vertex_type>> pairs;  // by domain

    [[nodiscard]] std::size_t rank() const noexcept {
      return pairs.size();
    }
    [[nodiscard]] std::vector<vertex_type> dom() const {
      std::vector<vertex_type> out;
      for (auto [v, w] : pairs) {
        out.push_back(v);
      }
      return out;
    }
    [[nodiscard]] std::vector<vertex_type> ran() const {
      std::vector<vertex_type> out;
      for (auto [v, w] : pairs) {
        out.push_back(w);
      }
      std::sort(out.begin(), out.end());
      return out;
    }
    // Image of v, or no_vertex outside the domain.
    [[nodiscard]] vertex_type operator()(vertex_type v) const {
      auto it = std::lower_bound(
          pairs.begin(), pairs.end(), v,
          [](auto const& p, vertex_type x) { return p.first < x; });
      return it != pairs.end() && it->first == v ? it->second : no_vertex;
    }
  };

  inline PartialVertexPermutation monodromy(CoreComplex const& c,
                                            Word const&        w) {
    PartialVertexPermutation out{reduce(c.free_product(), w), {}};
    for (vertex_type v = 0; v < c.vertex_count(); ++v) {
      vertex_type const end = endpoint(c, v, out.word);
      if (end != no_vertex) {
        out.pairs.emplace_back(v, end);
      }
    }
    return out;
  }

  // Same as monodromy(c, w).rank() without materializing the pairs.
  inline std::size_t rank(CoreComplex const& c, Word const& w) {
    Word const  r     = reduce(c.free_product(), w);
    std::size_t count = 0;
    for (vertex_type v = 0; v < c.vertex_count(); ++v) {
      if (endpoint(c, v, r) != no_vertex) {
        ++count;
      }
    }
    return count;
  }

  inline std::string to_string(PartialVertexPermutation const& p) {
    std::string out = "rank=" + std::to_string(p.rank()) + " pairs=[";
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += std::to_string(p.pairs[i].first) + "->"
             + std::to_string(p.pairs[i].second);
    }
    return out + "]";
  }

}  // namespace kcore

#endif  // KCORE_MONODROMY_HPP_
