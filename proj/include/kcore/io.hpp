// Group files, core.json and DOT output.

#ifndef KCORE_IO_HPP_
#define KCORE_IO_HPP_

#include <cstddef>   // for size_t
#include <fstream>   // for ifstream, ofstream
#include <memory>    // for make_shared
#include <sstream>   // for ostringstream
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "json.hpp"

#include "core_complex.hpp"
#include "factor_group.hpp"

namespace kcore {

  using json = nlohmann::ordered_json;

  inline FactorGroup group_from_json(FactorTag t, json const& spec) {
    std::string const name = std::string("group ") + letter_of(t);
    if (!spec.is_object() || !spec.contains("kind")
        || !spec["kind"].is_string()) {
      throw input_error(name + ": missing \"kind\"");
    }
    auto const kind = spec["kind"].get<std::string>();
    auto       size = [&](char const* key) {
      if (!spec.contains(key) || !spec[key].is_number_unsigned()) {
        throw input_error(name + ": \"" + key
                          + "\" must be a nonnegative integer");
      }
      return spec[key].get<std::size_t>();
    };
    if (kind == "cyclic") {
      std::size_t const n = size("order");
      if (n < 2 || n > 1000) {
        throw input_error(name + ": cyclic order must be in [2, 1000]");
      }
      return cyclic_group(t, n);
    }
    if (kind == "symmetric") {
      return symmetric_group(t, size("degree"));
    }
    if (kind == "table") {
      std::size_t const n = size("order");
      if (!spec.contains("table") || !spec["table"].is_array()
          || spec["table"].size() != n) {
        throw input_error(name + ": \"table\" must have `order` rows");
      }
      if (n > 200) {
        throw input_error(name + ": table order must be at most 200");
      }
      std::vector<std::vector<elem_type>> rows;
      for (auto const& row : spec["table"]) {
        if (!row.is_array() || row.size() != n) {
          throw input_error(name + ": table is not square");
        }
        std::vector<elem_type> r;
        for (auto const& x : row) {
          if (!x.is_number_unsigned()) {
            throw input_error(name + ": table entries must be indices");
          }
          r.push_back(x.get<elem_type>());
        }
        rows.push_back(std::move(r));
      }
      return table_group(t, std::move(rows));
    }
    throw input_error(name + ": unknown kind \"" + kind + "\"");
  }

  inline json group_to_json(FactorGroup const& g) {
    auto const& s = g.spec();
    switch (s.kind) {
      case GroupSpec::Kind::cyclic:
        return {{"kind", "cyclic"}, {"order", s.param}};
      case GroupSpec::Kind::symmetric:
        return {{"kind", "symmetric"}, {"degree", s.param}};
      case GroupSpec::Kind::table:
        return {{"kind", "table"}, {"order", s.param}, {"table", s.table}};
    }
    return {};
  }

  inline json parse_json_text(std::string const& text,
                              std::string const& what) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw input_error(what + ": invalid JSON (" + e.what() + ")");
    }
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw input_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw input_error("cannot write " + path);
    }
    out << text;
  }

  inline std::shared_ptr<FreeProduct const>
  free_product_from_json(json const& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
      throw input_error("group file: expected an object with keys A and B");
    }
    return std::make_shared<FreeProduct const>(
        FreeProduct{group_from_json(FactorTag::A, j["A"]),
                    group_from_json(FactorTag::B, j["B"])});
  }

  inline json free_product_to_json(FreeProduct const& fp) {
    return {{"A", group_to_json(fp.a)}, {"B", group_to_json(fp.b)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // core.json
  ////////////////////////////////////////////////////////////////////////

  inline json core_to_json(CoreComplex const& c) {
    json j;
    j["base"]     = c.base();
    j["vertices"] = c.vertex_count();
    j["groups"]   = free_product_to_json(c.free_product());
    for (auto t : both_tags) {
      json comps = json::array();
      for (auto const& comp : c.components(t)) {
        json members = json::object();
        for (auto v : comp.members) {
          members[std::to_string(v)] = std::to_string(c.coord(t, v));
        }
        comps.push_back({{"stabilizer", comp.stabilizer.elements},
                         {"members", std::move(members)}});
      }
      j[t == FactorTag::A ? "A_components" : "B_components"]
          = std::move(comps);
    }
    return j;
  }

  namespace detail {

    inline std::size_t parse_index(std::string const& s,
                                   std::string const& what) {
      if (s.empty() || s.size() > 9
          || s.find_first_not_of("0123456789") != std::string::npos) {
        throw input_error("core.json: " + what + " '" + s
                          + "' is not a decimal index");
      }
      return std::stoul(s);
    }

  }  // namespace detail

  inline CoreComplex core_from_json(json const& j) {
    if (!j.is_object() || !j.contains("groups") || !j.contains("vertices")
        || !j.contains("base") || !j.contains("A_components")
        || !j.contains("B_components")) {
      throw input_error("core.json: missing one of groups, vertices, base, "
                        "A_components, B_components");
    }
    auto fp = free_product_from_json(j["groups"]);
    if (!j["vertices"].is_number_unsigned() || !j["base"].is_number_unsigned()) {
      throw input_error("core.json: vertices and base must be indices");
    }
    ComplexDraft d;
    d.vertex_count = j["vertices"].get<std::size_t>();
    d.base         = j["base"].get<std::size_t>();
    if (d.vertex_count == 0 || d.vertex_count > 1'000'000) {
      throw input_error("core.json: vertex count out of range");
    }
    for (auto t : both_tags) {
      auto const  ti    = index_of(t);
      auto const& comps = j[t == FactorTag::A ? "A_components"
                                              : "B_components"];
      if (!comps.is_array()) {
        throw input_error("core.json: components must be an array");
      }
      d.component_of[ti].assign(d.vertex_count, no_vertex);
      d.coord[ti].assign(d.vertex_count, 0);
      for (auto const& comp : comps) {
        if (!comp.is_object() || !comp.contains("stabilizer")
            || !comp.contains("members") || !comp["stabilizer"].is_array()
            || !comp["members"].is_object()) {
          throw input_error("core.json: malformed component");
        }
        Subgroup s{t, {}};
        for (auto const& x : comp["stabilizer"]) {
          if (!x.is_number_unsigned()) {
            throw input_error("core.json: stabilizer entries must be indices");
          }
          s.elements.push_back(x.get<elem_type>());
        }
        for (auto const& [key, value] : comp["members"].items()) {
          std::size_t const v = detail::parse_index(key, "vertex");
          if (v >= d.vertex_count || !value.is_string()) {
            throw input_error("core.json: bad member entry " + key);
          }
          if (d.component_of[ti][v] != no_vertex) {
            throw input_error(std::string("core.json: vertex ") + key
                              + " is in two " + letter_of(t)
                              + "-components");
          }
          d.component_of[ti][v] = d.stabilizer[ti].size();
          d.coord[ti][v]
              = detail::parse_index(value.get<std::string>(), "coordinate");
        }
        d.stabilizer[ti].push_back(std::move(s));
      }
      for (vertex_type v = 0; v < d.vertex_count; ++v) {
        if (d.component_of[ti][v] == no_vertex) {
          throw input_error("core.json: vertex " + std::to_string(v)
                            + " has no " + letter_of(t) + "-component");
        }
      }
    }
    return assemble(std::move(fp), d);
  }

  inline std::string dump(json const& j) {
    return j.dump(2) + "\n";
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT
  ////////////////////////////////////////////////////////////////////////

  inline std::string export_dot(CoreComplex const& c) {
    std::string out = "digraph core {\n";
    for (vertex_type v = 0; v < c.vertex_count(); ++v) {
      out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v)
             + "\", shape="
             + (v == c.base() ? "doublecircle" : "circle") + "];\n";
    }
    for (vertex_type v = 0; v < c.vertex_count(); ++v) {
      for (auto x : all_syllables(c.free_product())) {
        vertex_type const w = c.trans(v, x);
        if (w != no_vertex) {
          out += "  v" + std::to_string(v) + " -> v" + std::to_string(w)
                 + " [label=\"" + to_string(x) + "\"];\n";
        }
      }
    }
    return out + "}\n";
  }

}  // namespace kcore

#endif  // KCORE_IO_HPP_
