#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "staircase/classifier.hpp"
#include "staircase/linalg.hpp"
#include "staircase/quiver.hpp"

namespace staircase {

// Representation of A(λ): one matrix per arrow of build_quiver(λ), indexed
// like StaircaseQuiver::arrows(). The matrix of s → t is dim t × dim s.
struct Representation {
  Partition lambda;
  DimVector dims;
  std::vector<RationalMatrix> matrices;
};

// All maps zero (correctly shaped).
Representation zero_representation(const Partition& lambda, const DimVector& dims);
Representation simple_representation(const Partition& lambda, Vertex v);
// P(v): K on the rectangle below-left of v, identity along every arrow inside it.
Representation projective_representation(const Partition& lambda, Vertex v);

// Shape errors and failing commutativity squares, one message each.
std::vector<std::string> relation_violations(const Representation& m);

// M'_a = g_t · M_a · g_s⁻¹. Throws DomainError if some g_v is singular or misshaped.
Representation base_change(const Representation& m, const std::vector<RationalMatrix>& g);

// dim Hom(M, N) by exact elimination on the intertwiner equations.
std::size_t hom_dim(const Representation& m, const Representation& n);

// Randomized test for an invertible intertwiner over F_p, p = 2^61 − 1.
// A true answer is always correct; false negatives have probability at most
// (Σ dim)/p per trial.
bool is_isomorphic(const Representation& m, const Representation& n, int trials = 16,
                   std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Bigraded spaces and graded nilpotent pairs.
//
// Component (s,t) sits at quiver vertex (i,j) = (t,s): φ (lowering s) runs
// along V arrows and ψ (lowering t) along H arrows.

using Bidegree = std::pair<int, int>;  // (s, t)

struct BigradedSpace {
  std::map<Bidegree, int> dims;  // zero entries allowed, absent means zero
  int dim(Bidegree st) const;
  int total() const;
};

struct GradedPair {
  BigradedSpace space;
  std::map<Bidegree, RationalMatrix> phi;  // V_{s,t} → V_{s−1,t}
  std::map<Bidegree, RationalMatrix> psi;  // V_{s,t} → V_{s,t−1}
};

struct Shape {
  std::vector<Bidegree> boxes;  // sorted by (t, s)
  Partition lambda;
};

// sh(V) = {(s,t) : V_{p,q} ≠ 0 for some p ≥ s, q ≥ t}; λ(V) lists the row
// lengths of sh(V) from the top row down. Throws DomainError on V = 0.
Shape shape_lambda(const BigradedSpace& v);
DimVector dimension_vector(const BigradedSpace& v);

// Empty iff every map is correctly shaped and every square commutes.
std::vector<std::string> validate_pair(const GradedPair& p);

Representation to_representation(const GradedPair& p);

// True iff graded pairs of shape λ have finitely many Levi orbits.
bool finiteness_partition(const Partition& lambda);

enum class Finiteness { Finite, Infinite, Unknown };
std::string to_string(Finiteness f);

// Finite for representation-finite λ(V); Infinite as soon as dim V dominates a
// zero-extended minimal nullroot of a tame concealed subdiagram; Finite for a
// tame concealed λ(V) without such domination; Unknown otherwise.
Finiteness finiteness_space(const BigradedSpace& v);
// The same decision for a dimension vector on a given diagram (zero entries
// allowed, so the diagram need not be the shape of the support).
Finiteness finiteness_dims(const DimVector& dims);

// ---------------------------------------------------------------------------
// Two-parameter families on minimal wild diagrams.

struct FamilyDescriptor {
  Partition lambda;
  Partition base;  // tame concealed, embedded at offset (0,0)
  Vertex source;   // the one box of λ outside the base
  Vertex target;
  DimVector base_dims;
};

const std::vector<FamilyDescriptor>& bundled_families();
// Throws DomainError if λ has no bundled family.
const FamilyDescriptor& family_for(const Partition& lambda);

// A random brick (End = K) with the descriptor's base dimension vector.
Representation base_module(const FamilyDescriptor& f, std::uint64_t seed);

// base_module extended by K at the source vertex, mapped into the target by
// the column `params`. Throws DomainError on a wrong length or a zero vector.
Representation two_param_family(const FamilyDescriptor& f, const std::vector<Rational>& params,
                                std::uint64_t seed = 0);
// Same, reusing a base module from base_module(f, seed).
Representation two_param_family(const FamilyDescriptor& f, const Representation& base,
                                const std::vector<Rational>& params);

// ---------------------------------------------------------------------------
// Brute-force ground truth over F_2 / F_3.

// Number of orbits of Π GL(d_v) on relation-satisfying tuples over F_p.
// Requires p ∈ {2,3} and Σ_arrows d_s·d_t ≤ 12; throws DomainError otherwise.
std::uint64_t oracle_count_small(const Partition& lambda, const DimVector& d, int field_size);

// Number of multisets of the given vectors summing to d (Krull–Remak–Schmidt
// count when the vectors are the dimension vectors of the indecomposables).
std::uint64_t krs_count(const std::vector<DimVector>& roots, const DimVector& d);

}  // namespace staircase
