#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "staircase/partition.hpp"

namespace staircase {

// Box (i,j) of Y(λ): i is the row from the bottom, j the column from the left.
struct Vertex {
  int i = 1;
  int j = 1;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  std::string label() const { return std::to_string(i) + "," + std::to_string(j); }
};

// H arrows α_{i,j}: (i,j) → (i-1,j); V arrows β_{i,j}: (i,j) → (i,j-1).
enum class ArrowKind { H, V };

struct Arrow {
  ArrowKind kind;
  Vertex source;
  Vertex target;
  // "a:i,j" for α_{i,j}, "b:i,j" for β_{i,j}.
  std::string id() const;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Commutativity square anchored at its top-right box: both length-two paths
// from `anchor` to (i-1,j-1) agree.
struct Relation {
  Vertex anchor;
  Vertex corner() const { return {anchor.i - 1, anchor.j - 1}; }
  friend bool operator==(const Relation&, const Relation&) = default;
};

class StaircaseQuiver {
 public:
  explicit StaircaseQuiver(Partition lambda);

  const Partition& lambda() const { return lambda_; }
  // Vertices in lexicographic (i,j) order; this is also the storage order of
  // every vertex-indexed vector.
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t size() const { return vertices_.size(); }

  bool contains(Vertex v) const { return lambda_.contains_box(v.i, v.j); }
  // Position of v in vertices(); throws DomainError if v is not a box.
  std::size_t index(Vertex v) const;
  // Index of an arrow by its id; throws DomainError if absent.
  std::size_t arrow_index(const std::string& id) const;

 private:
  Partition lambda_;
  std::vector<Vertex> vertices_;
  std::vector<std::size_t> row_offset_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
};

inline StaircaseQuiver build_quiver(const Partition& lambda) { return StaircaseQuiver(lambda); }

// Vertex-indexed integer vector over Y(λ), stored bottom-up, left to right.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(Partition shape);  // zero vector
  IntVector(Partition shape, std::vector<std::int64_t> values);
  // rows[0] is the bottom row; each row is left-aligned.
  static IntVector from_rows(Partition shape, const std::vector<std::vector<std::int64_t>>& rows);
  static IntVector unit(const Partition& shape, Vertex v);

  const Partition& shape() const { return shape_; }
  std::size_t size() const { return values_.size(); }
  std::span<const std::int64_t> values() const { return values_; }
  std::span<std::int64_t> values() { return values_; }
  std::int64_t operator[](std::size_t k) const { return values_[k]; }
  std::int64_t& operator[](std::size_t k) { return values_[k]; }
  std::int64_t at(Vertex v) const;
  std::int64_t& at(Vertex v);

  std::vector<std::vector<std::int64_t>> rows() const;
  bool is_nonnegative() const;
  bool is_zero() const;
  // Every entry strictly positive.
  bool is_sincere() const;

  // Relabel onto transpose(shape) via (i,j) ↦ (j,i).
  IntVector transposed() const;
  // Zero-extend onto `outer`, placing box (i,j) at (i+off.di, j+off.dj).
  IntVector extended(const Partition& outer, Offset off = {0, 0}) const;

  IntVector& operator+=(const IntVector& other);
  IntVector& operator-=(const IntVector& other);
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(std::int64_t c, IntVector a);
  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector& a, const IntVector& b) { return a.values_ <=> b.values_; }

  std::string to_string() const;  // "[[..],[..]]" rows bottom-up

 private:
  Partition shape_;
  std::vector<std::int64_t> values_;
};

// Dimension vector: an IntVector whose entries are all non-negative.
class DimVector : public IntVector {
 public:
  DimVector() = default;
  explicit DimVector(IntVector v);  // throws DomainError on a negative entry
  static DimVector from_rows(Partition shape, const std::vector<std::vector<std::int64_t>>& rows) {
    return DimVector(IntVector::from_rows(std::move(shape), rows));
  }
};

// Indicator of {(k,l) : k ≤ i, l ≤ j} ∩ Y(λ).
DimVector projective_vector(const StaircaseQuiver& q, Vertex v);
// Indicator of {(k,l) ∈ Y(λ) : k ≥ i, l ≥ j}.
DimVector injective_vector(const StaircaseQuiver& q, Vertex v);
inline DimVector simple_vector(const StaircaseQuiver& q, Vertex v) {
  return DimVector(IntVector::unit(q.lambda(), v));
}

// Graphviz rendering: boxes as "i,j" nodes, arrows solid, squares as dotted
// diagonals from the anchor to its corner.
std::string to_dot(const StaircaseQuiver& q);

}  // namespace staircase
