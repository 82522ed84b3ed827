#pragma once

// Exact linear algebra over Q (GMP rationals) and Z, sized for the small,
// sparse systems that arise from staircase quivers.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace staircase {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q"; throws ParseError.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Row-echelon accumulator for sparse rational rows. Rows are reduced against
// the pivots found so far as they are added; pivots are kept monic.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column, no zeros

  explicit SparseEchelon(std::size_t cols) : cols_(cols), pivot_of_(cols, npos) {}

  // Returns true if the row was independent of the rows added before it.
  bool add(Row row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  // Basis of {x : r·x = 0 for all added rows}, one vector per free column.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t cols_;
  std::vector<std::size_t> pivot_of_;  // column -> index into pivots_
  std::vector<Row> pivots_;
};

std::size_t rank(const RationalMatrix& m);
// Inverse of a square matrix; nullopt if singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Exact PSD decision for a symmetric rational matrix by symmetric Gaussian
// elimination on successive Schur complements.
bool is_positive_semidefinite(const RationalMatrix& m);
bool is_positive_definite(const RationalMatrix& m);

using IntRow = std::vector<std::int64_t>;

// Row Hermite normal form of the lattice spanned by `rows` (zero rows dropped):
// leading entries positive, entries above each pivot reduced into [0, pivot).
std::vector<IntRow> hermite_normal_form(const std::vector<IntRow>& rows);

// Basis of the integer kernel {x ∈ Z^n : A x = 0} of an m×n integer matrix,
// returned in Hermite normal form. The basis spans the full (saturated) lattice.
std::vector<IntRow> integer_kernel(const std::vector<IntRow>& a, std::size_t n);

// Scales a rational vector to the primitive integer vector on the same ray.
IntRow primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace staircase
