#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "staircase/classifier.hpp"
#include "staircase/quiver.hpp"

namespace staircase {

struct ARVertex {
  std::size_t id = 0;
  DimVector dim;
  std::optional<Vertex> projective;  // set on P(i,j)
  std::optional<Vertex> injective;   // set when dim equals the injective I(i,j)
  Vertex tau_orbit;                  // the projective that starts the τ-orbit
  int slice = 0;                     // position within the τ-orbit (0 = projective)
  std::optional<std::size_t> tau;    // id of τX, if X is not projective
};

struct ARArrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const ARArrow&, const ARArrow&) = default;
};

struct ARQuiver {
  Partition lambda;
  std::vector<ARVertex> vertices;
  std::vector<ARArrow> arrows;  // one entry per arrow, multiplicities repeated
  bool complete = false;        // knitting closed up: no vertex left to translate
  std::size_t projectives_inserted = 0;

  bool all_projectives_inserted() const {
    return projectives_inserted == static_cast<std::size_t>(lambda.size());
  }
};

// Knits the preprojective component starting at P(1,1). Each τ-orbit holds at
// most `slice_limit` vertices (0 means 10·n). Throws InvariantError if a mesh
// produces a negative or repeated dimension vector.
ARQuiver knit(const Partition& lambda, int slice_limit = 0);

// Number of indecomposables of a representation-finite A(λ), via positive
// roots. Throws DomainError for other types.
std::size_t count_indecomposables(const Partition& lambda);

// Post-hoc mesh check; returns one message per failing mesh.
std::vector<std::string> mesh_violations(const ARQuiver& ar);

bool has_sincere_preprojective(const ARQuiver& ar);

struct OrbitEdge {
  std::size_t a;
  std::size_t b;  // a < b, indices into OrbitQuiver::nodes
  int multiplicity;
};

struct OrbitQuiver {
  std::vector<Vertex> nodes;  // τ-orbits, named by their projective
  std::vector<OrbitEdge> edges;
  OrbitType recognized_type;
};

// Throws DomainError("orbit quiver undefined on partial component") unless all
// projectives were inserted.
OrbitQuiver orbit_quiver(const ARQuiver& ar);

// Dynkin / Euclidean / wild type of an undirected multigraph, read off its
// unit form Σ x_a² − Σ m_ab x_a x_b.
OrbitType recognize_graph(std::size_t nodes, const std::vector<OrbitEdge>& edges);

// Vertices labeled by dimension vectors, τ as dashed edges.
std::string to_dot(const ARQuiver& ar);
std::string to_dot(const OrbitQuiver& oq);

}  // namespace staircase
