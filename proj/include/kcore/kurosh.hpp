// Kurosh rank of H read off its core.
//
// Gamma has one node per A-component and per B-component of the core and one
// edge per core vertex, joining the two components that contain it.  Then
//   krank(H) = rank(pi_1 Gamma) + #{nodes whose stabilizer is nontrivial}.

#ifndef KCORE_KUROSH_HPP_
#define KCORE_KUROSH_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for logic_error
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "core_complex.hpp"

namespace kcore {

  struct GammaNode {
    FactorTag   tag;
    std::size_t component;
    bool        nontrivial_vertex_group;
  };

  struct GammaGraph {
    std::vector<GammaNode>                         nodes;  // A-nodes first
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // one per vertex
  };

  inline GammaGraph gamma_graph(CoreComplex const& c) {
    GammaGraph        out;
    std::size_t const a_nodes = c.components(FactorTag::A).size();
    for (auto t : both_tags) {
      auto const& comps = c.components(t);
      for (std::size_t i = 0; i < comps.size(); ++i) {
        out.nodes.push_back({t, i, !comps[i].stabilizer.is_trivial()});
      }
    }
    for (vertex_type v = 0; v < c.vertex_count(); ++v) {
      out.edges.emplace_back(c.component_of(FactorTag::A, v),
                             a_nodes + c.component_of(FactorTag::B, v));
    }
    return out;
  }

  inline std::size_t connected_components(GammaGraph const& g) {
    detail::UnionFind uf(g.nodes.size());
    std::size_t       count = g.nodes.size();
    for (auto [x, y] : g.edges) {
      if (uf.unite(x, y)) {
        --count;
      }
    }
    return count;
  }

  struct KuroshData {
    std::size_t           graph_rank = 0;
    std::vector<Subgroup> vertex_groups;  // nontrivial ones, A first
    std::size_t           krank      = 0;
  };

  inline KuroshData kurosh_rank(CoreComplex const& c) {
    GammaGraph const g = gamma_graph(c);
    if (connected_components(g) != 1) {
      throw std::logic_error("kurosh_rank: Gamma is not connected");
    }
    KuroshData out;
    out.graph_rank = g.edges.size() + 1 - g.nodes.size();
    for (auto const& node : g.nodes) {
      if (node.nontrivial_vertex_group) {
        out.vertex_groups.push_back(
            c.components(node.tag)[node.component].stabilizer);
      }
    }
    out.krank = out.graph_rank + out.vertex_groups.size();
    return out;
  }

  // "krank=2; graph_rank=0; vertex_groups=[A:order2, A:order2]"
  inline std::string to_string(KuroshData const& k) {
    std::string out = "krank=" + std::to_string(k.krank)
                      + "; graph_rank=" + std::to_string(k.graph_rank)
                      + "; vertex_groups=[";
    for (std::size_t i = 0; i < k.vertex_groups.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += k.vertex_groups[i].parent == FactorTag::A ? "A" : "B";
      out += ":order" + std::to_string(k.vertex_groups[i].size());
    }
    return out + "]";
  }

}  // namespace kcore

#endif  // KCORE_KUROSH_HPP_
