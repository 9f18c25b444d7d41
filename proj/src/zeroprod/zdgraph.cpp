#include "zeroprod/zdgraph.hpp"

#include <algorithm>
#include <functional>

#include "zeroprod/error.hpp"
#include "zeroprod/modmath.hpp"
#include "zeroprod/parallel.hpp"

namespace zeroprod::zdgraph {
namespace {

std::string dot_id(const std::string& label) {
  const bool numeral = !label.empty() && std::all_of(label.begin(), label.end(),
                                                     [](char c) { return c >= '0' && c <= '9'; });
  return numeral ? label : "\"" + label + "\"";
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ZeroDivisorGraph build_graph(const ring::RingSpec& spec, const ring::Limits& limits) {
  const Natural order = ring::ring_order(spec);
  if (order > Natural(limits.pair_cap)) {
    fail(ErrorKind::ResourceLimit, "graph construction needs ring order <= " +
                                       std::to_string(limits.pair_cap) + " but " + spec.to_string() +
                                       " has order " + order.to_string());
  }
  ZeroDivisorGraph g{spec, ring::zero_divisor_set(spec, limits), {}, {}, {}};
  const std::size_t count = g.vertices.size();
  const auto moduli = spec.leaf_moduli();
  auto annihilates = [&](const ring::Element& x, const ring::Element& y) {
    for (std::size_t c = 0; c < moduli.size(); ++c) {
      if (detail::mul_mod(x.residues[c], y.residues[c], moduli[c]) != 0) return false;
    }
    return true;
  };
  g.ann_sizes.reserve(count);
  for (const auto& v : g.vertices) g.ann_sizes.push_back(ring::ann_size(spec, v));
  for (std::size_t i = 0; i < count; ++i) {
    if (annihilates(g.vertices[i], g.vertices[i])) {
      g.self_annihilators.push_back(i);
    }
  }

  using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;
  std::vector<EdgeList> partial(detail::chunk_count(count, limits.jobs));
  detail::for_each_chunk(count, limits.jobs, [&](std::uint64_t chunk, std::uint64_t begin,
                                                 std::uint64_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        if (annihilates(g.vertices[i], g.vertices[j])) {
          partial[chunk].emplace_back(i, j);
        }
      }
    }
  });
  for (auto& part : partial) g.edges.insert(g.edges.end(), part.begin(), part.end());
  return g;
}

GraphStats graph_stats(const ZeroDivisorGraph& g) {
  GraphStats s;
  s.vertices = g.vertices.size();
  s.edges = g.edges.size();
  s.self_annihilators = g.self_annihilators.size();
  s.degrees.assign(s.vertices, 0);
  for (const auto& [u, v] : g.edges) {
    ++s.degrees[u];
    ++s.degrees[v];
  }
  std::sort(s.degrees.begin(), s.degrees.end(), std::greater<>());
  return s;
}

std::string export_dot(const ZeroDivisorGraph& g) {
  std::vector<std::string> ids;
  ids.reserve(g.vertices.size());
  for (const auto& v : g.vertices) ids.push_back(dot_id(ring::element_to_string(g.spec, v)));

  std::vector<bool> self(g.vertices.size(), false);
  for (std::size_t i : g.self_annihilators) self[i] = true;

  std::string out = "graph zero_divisors {\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out += "  " + ids[i];
    if (self[i]) out += " [self_annihilating=true, peripheries=2]";
    out += ";\n";
  }
  for (const auto& [u, v] : g.edges) out += "  " + ids[u] + " -- " + ids[v] + ";\n";
  out += "}\n";
  return out;
}

std::string export_edges_csv(const ZeroDivisorGraph& g) {
  std::string out = "u,v\n";
  for (const auto& [u, v] : g.edges) {
    out += csv_field(ring::element_to_string(g.spec, g.vertices[u])) + "," +
           csv_field(ring::element_to_string(g.spec, g.vertices[v])) + "\n";
  }
  return out;
}

std::string export_vertices_csv(const ZeroDivisorGraph& g) {
  std::vector<bool> self(g.vertices.size(), false);
  for (std::size_t i : g.self_annihilators) self[i] = true;
  std::string out = "element,ann_size,self_annihilating\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    out += csv_field(ring::element_to_string(g.spec, g.vertices[i])) + "," +
           g.ann_sizes[i].to_string() + "," + (self[i] ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace zeroprod::zdgraph
