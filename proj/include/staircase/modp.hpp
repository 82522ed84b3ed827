#pragma once

// Arithmetic in F_p for the Mersenne prime p = 2^61 - 1, used by the
// randomized isomorphism test.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "staircase/linalg.hpp"

namespace staircase::modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(t & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
  return add(lo, hi);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }

// Image of a rational in F_p; nullopt if p divides the denominator.
std::optional<std::uint64_t> reduce(const Rational& r);

// Rational n/d ≡ a with |n|, d ≤ sqrt(p/2), if one exists.
std::optional<Rational> reconstruct(std::uint64_t a);

// Sparse echelon form over F_p, mirroring SparseEchelon.
class Echelon {
 public:
  using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;  // sorted, no zeros

  explicit Echelon(std::size_t cols) : cols_(cols), pivot_of_(cols, npos) {}
  bool add(Row row);
  std::size_t rank() const { return pivots_.size(); }
  std::vector<std::vector<std::uint64_t>> nullspace() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t cols_;
  std::vector<std::size_t> pivot_of_;
  std::vector<Row> pivots_;
};

// Determinant of a dense k×k matrix (row-major).
std::uint64_t determinant(std::vector<std::uint64_t> m, std::size_t k);

}  // namespace staircase::modp
