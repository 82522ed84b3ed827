#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "staircase/kernels.hpp"
#include "staircase/linalg.hpp"
#include "staircase/quiver.hpp"

namespace staircase {

using Vec = std::vector<std::int64_t>;

// Integral unit form q(x) = Σ x_v² + Σ_{u<v} c_uv x_u x_v on Z^n.
// Forms built from a staircase quiver also carry the diagram shape so that
// results can be returned as IntVector / DimVector.
class UnitForm {
 public:
  struct Term {
    std::size_t u;
    std::size_t v;  // u < v
    std::int64_t c;
  };

  UnitForm(std::size_t n, std::vector<Term> terms, std::optional<Partition> shape = std::nullopt);

  std::size_t size() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<Partition>& shape() const { return shape_; }
  std::int64_t coefficient(std::size_t u, std::size_t v) const;

  std::int64_t eval(const Vec& x) const;
  std::int64_t bilinear(const Vec& x, const Vec& y) const;
  std::int64_t eval(const IntVector& x) const;
  std::int64_t bilinear(const IntVector& x, const IntVector& y) const;

  // Rows of the integer polarization matrix 2G.
  std::vector<IntRow> polarization() const;
  const kernels::FormTerms& kernel_terms() const { return kernel_terms_; }
  const kernels::PolarMatrix& polar_matrix() const { return polar_; }

  // Wraps a raw vector with the form's shape; throws if the form has none.
  IntVector shaped(const Vec& x) const;

 private:
  void check(const IntVector& x) const;

  std::size_t n_;
  std::vector<Term> terms_;
  std::optional<Partition> shape_;
  std::vector<std::int64_t> dense_;  // n×n symmetric coefficient table, diagonal 0
  kernels::FormTerms kernel_terms_;
  kernels::PolarMatrix polar_;
};

// Tits form of A(λ): -1 per arrow, +1 per commutativity square (anchor, corner).
UnitForm tits_form(const StaircaseQuiver& q);

// G with q(x) = xᵀGx: diagonal 1, off-diagonal c_uv / 2.
RationalMatrix gram(const UnitForm& f);
bool is_psd(const UnitForm& f);
bool is_positive_definite(const UnitForm& f);

enum class Decision { Holds, Fails, Inconclusive };
std::string to_string(Decision d);

struct FormVerdict {
  Decision decision = Decision::Inconclusive;
  std::optional<Vec> witness;  // present iff decision == Fails
  std::int64_t witness_value = 0;
  int bound = 0;
};

// Kernel lattice of 2G for a PSD form, in Hermite normal form.
// Throws DomainError if the form is not PSD.
std::vector<Vec> radical_basis_raw(const UnitForm& f);
std::vector<IntVector> radical_basis(const UnitForm& f);

// Weak positivity. Positive roots are grown from the simple roots by adding
// one simple root at a time, level by level in the total degree; a vector with
// q ≤ 0 adjacent to a root is a witness, and a violation of minimal degree is
// always adjacent to a root, so the search is complete. `bound` caps root
// entries (roots of weakly positive unit forms have entries ≤ 6).
FormVerdict is_weakly_positive(const UnitForm& f, int bound = 6);

// Holds if the form is PSD; otherwise an exhaustive search of boxes [0,b]^n,
// b = 1..bound, for q(x) < 0 within `budget` form evaluations; Inconclusive if
// the budget runs out first.
FormVerdict is_weakly_nonnegative(const UnitForm& f, int bound = 18,
                                  std::uint64_t budget = 200'000'000);

// Exhaustive search of [0,bound]^n for a nonzero x with q(x) ≤ threshold.
// Returns the first hit in odometer order, or nullopt when none exists or the
// budget of evaluations is exceeded (`exhausted` tells which).
struct BoxSearchResult {
  std::optional<Vec> hit;
  bool exhausted = false;
  std::uint64_t evaluated = 0;
};
BoxSearchResult box_search(const UnitForm& f, int bound, std::int64_t threshold,
                           std::uint64_t budget);

// All positive roots, sorted by total degree then lexicographically.
// Throws DomainError if the form is not weakly positive.
std::vector<Vec> positive_roots_raw(const UnitForm& f, int bound = 6);
std::vector<DimVector> positive_roots(const UnitForm& f, int bound = 6);

// Dimension of the span of ker(G) ∩ Q_{≥0}^n. Throws if the form is not PSD.
int corank0(const UnitForm& f);

// Primitive positive generator of a rank-one radical. Throws DomainError if
// the radical rank is not one or the generator has mixed signs.
Vec minimal_nullroot_raw(const UnitForm& f);
DimVector minimal_nullroot(const UnitForm& f);

// True iff the two bases span the same sublattice of Z^n.
bool same_lattice(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace staircase
