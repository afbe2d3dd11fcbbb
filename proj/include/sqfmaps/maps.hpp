#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqfmaps/factor.hpp"
#include "sqfmaps/perm_group.hpp"
#include "sqfmaps/triples.hpp"

namespace sqf {

// Undirected multigraph without loops. Edges are stored as (u, v), u < v,
// sorted, with parallel edges repeated.
struct MultiGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::vector<std::size_t> degrees() const;
  // Edges in DOT syntax, one line per parallel copy.
  std::string to_dot(const std::string& name = "G") const;
};

// Regular map of a group with a regular triple (x, y, z): vertices, edges and
// faces are the right cosets of <x,y>, <x,z> and <y,z>, incident when they
// intersect.
struct RegularMapModel {
  PermGroup group;
  GeneratingTriple triple;
  PermGroup vertex_stabilizer;
  PermGroup edge_stabilizer;
  PermGroup face_stabilizer;
  std::vector<std::uint32_t> vertex_of;  // coset label per element index
  std::vector<std::uint32_t> edge_of;
  std::vector<std::uint32_t> face_of;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  // For each edge, the vertex cosets and face cosets meeting it (one or two).
  std::vector<std::vector<std::uint32_t>> edge_vertices;
  std::vector<std::vector<std::uint32_t>> edge_faces;

  std::size_t valency() const { return vertex_stabilizer.order() / 2; }
  std::size_t face_length() const { return face_stabilizer.order() / 2; }
};

// Throws InvalidArgument when the triple is not a regular triple of G.
RegularMapModel build_map(const PermGroup& G, const GeneratingTriple& triple);

// |G| / |<x,y>| - |G| / 4 + |G| / |<y,z>|, factored.
FactoredInteger euler_characteristic_closed(const PermGroup& G, const GeneratingTriple& triple);
std::int64_t euler_characteristic_counted(const RegularMapModel& map);

// Vertex cosets joined once per edge coset meeting both. Throws
// VerificationFailure when an edge meets a single vertex (a loop).
MultiGraph underlying_graph(const RegularMapModel& map);

// C_n^(lambda): a cycle of length n >= 3 with every edge repeated lambda
// times. Two vertices joined by 2*lambda parallel edges count as n = 2.
std::optional<std::pair<std::size_t, std::size_t>> is_multicycle(const MultiGraph& g);
// Simple, 4-regular and isomorphic to C_n x C_n (Cartesian product), n >= 3.
std::optional<std::size_t> is_cartesian_square_of_cycle(const MultiGraph& g);

MultiGraph multicycle(std::size_t n, std::size_t lambda);
MultiGraph cartesian_square_of_cycle(std::size_t n);

// "C5^(5)", "C3[]C3" or "other".
std::string graph_tag(const MultiGraph& g);

struct MapSummary {
  std::size_t order = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t valency = 0;
  std::size_t face_length = 0;
  std::int64_t chi = 0;
  std::string chi_factored;
  bool squarefree = false;
  std::string graph;
};

// Builds the map, checks both Euler characteristic computations agree and
// the handshake law, and tags the underlying graph.
MapSummary summarize_map(const PermGroup& G, const GeneratingTriple& triple);
// JSON object with the summary fields.
std::string to_json(const MapSummary& s);

}  // namespace sqf
