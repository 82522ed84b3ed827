#include "staircase/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "staircase/errors.hpp"

namespace staircase {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
    throw ParseError("malformed rational '" + text + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
  RationalMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference shape mismatch");
  RationalMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool SparseEchelon::add(Row row) {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    const std::size_t p = pivot_of_[lead];
    if (p == npos) {
      const Rational inv = 1 / row.front().second;
      for (auto& [col, val] : row) val *= inv;
      pivot_of_[lead] = pivots_.size();
      pivots_.push_back(std::move(row));
      return true;
    }
    // row -= row[lead] * pivot, merging two sorted sparse rows.
    const Rational factor = row.front().second;
    const Row& piv = pivots_[p];
    Row merged;
    merged.reserve(row.size() + piv.size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < piv.size()) {
      if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
        merged.push_back(std::move(row[a++]));
      } else if (a == row.size() || piv[b].first < row[a].first) {
        merged.emplace_back(piv[b].first, -factor * piv[b].second);
        ++b;
      } else {
        Rational v = row[a].second - factor * piv[b].second;
        if (sgn(v) != 0) merged.emplace_back(row[a].first, std::move(v));
        ++a;
        ++b;
      }
    }
    row = std::move(merged);
  }
  return false;
}

std::vector<std::vector<Rational>> SparseEchelon::nullspace() const {
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_of_[c] != npos) pivot_cols.push_back(c);
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_of_[f] != npos) continue;
    std::vector<Rational> x(cols_);
    x[f] = 1;
    for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
      const Row& row = pivots_[pivot_of_[*it]];
      Rational acc = 0;
      for (std::size_t k = 1; k < row.size(); ++k) acc -= row[k].second * x[row[k].first];
      x[*it] = acc;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

SparseEchelon echelon_of(const RationalMatrix& m) {
  SparseEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseEchelon::Row row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) != 0) row.emplace_back(c, m(r, c));
    }
    ech.add(std::move(row));
  }
  return ech;
}

// Returns the number of positive pivots taken, or -1 if the matrix is not PSD.
int symmetric_elimination(RationalMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DomainError("PSD test needs a square matrix");
  std::vector<bool> active(n, true);
  int pivots = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (sgn(a(i, i)) < 0) return -1;
      if (sgn(a(i, i)) > 0 && k == n) k = i;
    }
    if (k == n) {
      // Every remaining diagonal entry is zero; PSD forces the block to vanish.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (active[i] && active[j] && sgn(a(i, j)) != 0) return -1;
        }
      }
      return pivots;
    }
    active[k] = false;
    ++pivots;
    const Rational pivot = a(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k) / pivot;
      for (std::size_t j = 0; j < n; ++j) {
        if (active[j] && sgn(a(k, j)) != 0) a(i, j) -= f * a(k, j);
      }
    }
  }
  return pivots;
}

Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw InvariantError("integer overflow in lattice computation");
  return v.get_si();
}

// Unimodular row reduction of `rows` on columns [0, cols): brings the matrix to
// echelon form in place. Returns the pivot columns.
std::vector<std::size_t> integer_echelon(std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (sgn(rows[r][c]) == 0) continue;
        if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
        for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= q * rows[top][k];
        if (sgn(rows[r][c]) != 0) done = false;
      }
      if (done) {
        pivot_cols.push_back(c);
        ++top;
        break;
      }
    }
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return echelon_of(m).rank(); }

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) return std::nullopt;
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    const Rational s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  return echelon_of(m).nullspace();
}

bool is_positive_semidefinite(const RationalMatrix& m) { return symmetric_elimination(m) >= 0; }

bool is_positive_definite(const RationalMatrix& m) {
  return symmetric_elimination(m) == static_cast<int>(m.rows());
}

std::vector<IntRow> hermite_normal_form(const std::vector<IntRow>& rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  std::vector<std::vector<Integer>> work;
  for (const auto& r : rows) {
    if (r.size() != n) throw DomainError("ragged rows in Hermite normal form");
    std::vector<Integer> z;
    for (auto v : r) z.push_back(to_integer(v));
    work.push_back(std::move(z));
  }
  auto pivots = integer_echelon(work, n);
  work.resize(pivots.size());
  for (std::size_t p = 0; p < pivots.size(); ++p) {
    const std::size_t c = pivots[p];
    if (sgn(work[p][c]) < 0) {
      for (auto& x : work[p]) x = -x;
    }
    for (std::size_t r = 0; r < p; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), work[r][c].get_mpz_t(), work[p][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t k = 0; k < n; ++k) work[r][k] -= q * work[p][k];
    }
  }
  std::vector<IntRow> out;
  for (const auto& r : work) {
    IntRow row;
    for (const auto& x : r) row.push_back(to_int64(x));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<IntRow> integer_kernel(const std::vector<IntRow>& a, std::size_t n) {
  const std::size_t m = a.size();
  // Rows of [Aᵀ | I_n]; row reduction on the first m columns.
  std::vector<std::vector<Integer>> work(n, std::vector<Integer>(m + n));
  for (std::size_t r = 0; r < m; ++r) {
    if (a[r].size() != n) throw DomainError("ragged matrix in integer kernel");
    for (std::size_t c = 0; c < n; ++c) work[c][r] = to_integer(a[r][c]);
  }
  for (std::size_t c = 0; c < n; ++c) work[c][m + c] = 1;
  auto pivots = integer_echelon(work, m);
  std::vector<IntRow> kernel;
  for (std::size_t r = pivots.size(); r < n; ++r) {
    IntRow row;
    for (std::size_t c = 0; c < n; ++c) row.push_back(to_int64(work[r][m + c]));
    kernel.push_back(std::move(row));
  }
  return hermite_normal_form(kernel);
}

IntRow primitive_integer_vector(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    Integer z = x.get_num() * (lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  IntRow out;
  for (auto& z : ints) out.push_back(to_int64(sgn(g) == 0 ? z : Integer(z / g)));
  return out;
}

}  // namespace staircase
