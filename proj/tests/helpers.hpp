#pragma once

// Small generators and converters shared by the unit tests.

#include <random>
#include <vector>

#include "staircase/nilpairs.hpp"
#include "staircase/quadform.hpp"

namespace testing {

using namespace staircase;

inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Vec x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

inline IntVector random_int_vector(std::mt19937_64& rng, const Partition& shape, int lo, int hi) {
  const auto n = static_cast<std::size_t>(shape.size());
  return IntVector(shape, random_vec(rng, n, lo, hi));
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Random invertible matrix: unit lower triangular times unit upper triangular
// with a random nonzero diagonal.
inline RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2), nz(1, 3);
  RationalMatrix l = RationalMatrix::identity(n), u = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = nz(rng) * (d(rng) < 0 ? -1 : 1);
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = d(rng);
      u(j, i) = d(rng);
    }
  }
  return l * u;
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  IntVector dims = a.dims + b.dims;
  Representation out = zero_representation(a.lambda, DimVector(dims));
  for (std::size_t k = 0; k < out.matrices.size(); ++k) {
    const auto& x = a.matrices[k];
    const auto& y = b.matrices[k];
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) out.matrices[k](r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) out.matrices[k](x.rows() + r, x.cols() + c) = y(r, c);
  }
  return out;
}

inline std::vector<RationalMatrix> random_base_change(std::mt19937_64& rng, const DimVector& dims) {
  std::vector<RationalMatrix> g;
  for (std::size_t v = 0; v < dims.size(); ++v) g.push_back(random_invertible(rng, static_cast<std::size_t>(dims[v])));
  return g;
}

// Random module built from projectives and simples, hidden by a base change.
inline Representation random_module(std::mt19937_64& rng, const Partition& lambda, int summands) {
  const StaircaseQuiver q(lambda);
  std::uniform_int_distribution<std::size_t> pick(0, q.size() - 1);
  std::bernoulli_distribution projective(0.6);
  Representation m = zero_representation(lambda, DimVector(IntVector(lambda)));
  for (int k = 0; k < summands; ++k) {
    const Vertex v = q.vertices()[pick(rng)];
    m = direct_sum(m, projective(rng) ? projective_representation(lambda, v) : simple_representation(lambda, v));
  }
  return base_change(m, random_base_change(rng, m.dims));
}

// Bigraded space carrying the dimension vector d: component (s,t) = vertex (t,s).
inline BigradedSpace space_of(const IntVector& d) {
  BigradedSpace v;
  const StaircaseQuiver q(d.shape());
  for (const auto& x : q.vertices()) v.dims[{x.j, x.i}] = static_cast<int>(d.at(x));
  return v;
}

// Inverse of to_representation: H arrows give ψ, V arrows give φ.
inline GradedPair pair_of(const Representation& m) {
  GradedPair p;
  p.space = space_of(m.dims);
  const StaircaseQuiver q(m.lambda);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    auto& maps = arrow.kind == ArrowKind::H ? p.psi : p.phi;
    maps[{arrow.source.j, arrow.source.i}] = m.matrices[a];
  }
  return p;
}

}  // namespace testing
