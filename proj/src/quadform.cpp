#include "staircase/quadform.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "staircase/errors.hpp"

namespace staircase {

UnitForm::UnitForm(std::size_t n, std::vector<Term> terms, std::optional<Partition> shape)
    : n_(n), terms_(std::move(terms)), shape_(std::move(shape)), dense_(n * n, 0) {
  if (shape_ && static_cast<std::size_t>(shape_->size()) != n_) {
    throw DomainError("unit form size does not match its shape");
  }
  for (auto& t : terms_) {
    if (t.u > t.v) std::swap(t.u, t.v);
    if (t.u == t.v || t.v >= n_) throw DomainError("invalid unit form term");
    dense_[t.u * n_ + t.v] += t.c;
    dense_[t.v * n_ + t.u] += t.c;
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });

  kernel_terms_.n = static_cast<int>(n_);
  kernel_terms_.row_begin.assign(n_ + 1, 0);
  for (std::size_t u = 0; u < n_; ++u) {
    kernel_terms_.row_begin[u] = static_cast<std::int32_t>(kernel_terms_.column.size());
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (dense_[u * n_ + v] == 0) continue;
      kernel_terms_.column.push_back(static_cast<std::int32_t>(v));
      kernel_terms_.coefficient.push_back(static_cast<std::int32_t>(dense_[u * n_ + v]));
    }
  }
  kernel_terms_.row_begin[n_] = static_cast<std::int32_t>(kernel_terms_.column.size());

  polar_.n = static_cast<int>(n_);
  polar_.stride = static_cast<int>((n_ + 7) / 8 * 8);
  polar_.entries.assign(n_ * static_cast<std::size_t>(polar_.stride), 0);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      polar_.entries[u * polar_.stride + v] =
          static_cast<std::int32_t>(u == v ? 2 : dense_[u * n_ + v]);
    }
  }
}

std::int64_t UnitForm::coefficient(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) throw DomainError("vertex index out of range");
  return u == v ? 1 : dense_[u * n_ + v];
}

std::int64_t UnitForm::eval(const Vec& x) const {
  if (x.size() != n_) throw DomainError("vector length does not match the form");
  std::int64_t acc = 0;
  for (auto v : x) acc += v * v;
  for (const auto& t : terms_) acc += t.c * x[t.u] * x[t.v];
  return acc;
}

std::int64_t UnitForm::bilinear(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw DomainError("vector length does not match the form");
  std::int64_t acc = 0;
  for (std::size_t k = 0; k < n_; ++k) acc += 2 * x[k] * y[k];
  for (const auto& t : terms_) acc += t.c * (x[t.u] * y[t.v] + x[t.v] * y[t.u]);
  return acc;
}

void UnitForm::check(const IntVector& x) const {
  if (shape_ && x.shape() != *shape_) {
    throw DomainError("vector shape " + x.shape().to_string() + " does not match form shape " +
                      shape_->to_string());
  }
}

std::int64_t UnitForm::eval(const IntVector& x) const {
  check(x);
  return eval(Vec(x.values().begin(), x.values().end()));
}

std::int64_t UnitForm::bilinear(const IntVector& x, const IntVector& y) const {
  check(x);
  check(y);
  return bilinear(Vec(x.values().begin(), x.values().end()), Vec(y.values().begin(), y.values().end()));
}

std::vector<IntRow> UnitForm::polarization() const {
  std::vector<IntRow> rows(n_, IntRow(n_, 0));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) rows[u][v] = u == v ? 2 : dense_[u * n_ + v];
  }
  return rows;
}

IntVector UnitForm::shaped(const Vec& x) const {
  if (!shape_) throw DomainError("unit form has no diagram shape");
  return IntVector(*shape_, x);
}

UnitForm tits_form(const StaircaseQuiver& q) {
  std::vector<UnitForm::Term> terms;
  for (const Arrow& a : q.arrows()) terms.push_back({q.index(a.source), q.index(a.target), -1});
  for (const Relation& r : q.relations()) terms.push_back({q.index(r.anchor), q.index(r.corner()), 1});
  return UnitForm(q.size(), std::move(terms), q.lambda());
}

RationalMatrix gram(const UnitForm& f) {
  const std::size_t n = f.size();
  RationalMatrix g(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      g(u, v) = u == v ? Rational(1) : Rational(static_cast<long>(f.coefficient(u, v)), 2);
    }
  }
  return g;
}

bool is_psd(const UnitForm& f) { return is_positive_semidefinite(gram(f)); }
bool is_positive_definite(const UnitForm& f) { return is_positive_definite(gram(f)); }

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Holds: return "holds";
    case Decision::Fails: return "fails";
    case Decision::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<Vec> radical_basis_raw(const UnitForm& f) {
  if (!is_psd(f)) throw DomainError("radical defined here only for non-negative forms");
  return integer_kernel(f.polarization(), f.size());
}

std::vector<IntVector> radical_basis(const UnitForm& f) {
  std::vector<IntVector> out;
  for (auto& v : radical_basis_raw(f)) out.push_back(f.shaped(v));
  return out;
}

namespace {

constexpr std::size_t kRootBudget = 5'000'000;

struct RootSearch {
  std::vector<Vec> roots;
  std::optional<Vec> violation;
  std::int64_t violation_value = 0;
  bool budget_hit = false;
};

// Level-by-level growth of positive roots from the simple roots. Stops at the
// first vector x + e_i with q ≤ 0 (minimal total degree).
RootSearch grow_roots(const UnitForm& f, bool collect) {
  const std::size_t n = f.size();
  const auto& polar = f.polar_matrix();
  RootSearch out;
  std::vector<Vec> level;
  for (std::size_t v = 0; v < n; ++v) {
    Vec e(n, 0);
    e[v] = 1;
    level.push_back(std::move(e));
  }
  std::vector<std::int32_t> xbuf(static_cast<std::size_t>(polar.stride), 0);
  std::vector<std::int32_t> pbuf(static_cast<std::size_t>(polar.stride), 0);
  std::size_t seen = 0;
  while (!level.empty()) {
    std::set<Vec> next;
    for (const Vec& x : level) {
      if (collect) out.roots.push_back(x);
      if (++seen > kRootBudget) {
        out.budget_hit = true;
        return out;
      }
      for (std::size_t k = 0; k < n; ++k) xbuf[k] = static_cast<std::int32_t>(x[k]);
      kernels::polar_apply(polar, xbuf.data(), pbuf.data());
      for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t qy = 2 + pbuf[i];
        if (qy == 1 || qy <= 0) {
          Vec y = x;
          ++y[i];
          if (qy <= 0) {
            out.violation = std::move(y);
            out.violation_value = qy;
            return out;
          }
          next.insert(std::move(y));
        }
      }
    }
    level.assign(next.begin(), next.end());
  }
  return out;
}

}  // namespace

FormVerdict is_weakly_positive(const UnitForm& f, int bound) {
  FormVerdict verdict;
  verdict.bound = bound;
  RootSearch search = grow_roots(f, false);
  if (search.violation) {
    verdict.decision = Decision::Fails;
    verdict.witness = std::move(search.violation);
    verdict.witness_value = search.violation_value;
  } else if (search.budget_hit) {
    verdict.decision = Decision::Inconclusive;
  } else {
    verdict.decision = Decision::Holds;
  }
  return verdict;
}

std::vector<Vec> positive_roots_raw(const UnitForm& f, int bound) {
  RootSearch search = grow_roots(f, true);
  if (search.violation || search.budget_hit) {
    throw DomainError("positive roots are enumerated only for weakly positive forms");
  }
  for (const Vec& r : search.roots) {
    if (std::any_of(r.begin(), r.end(), [bound](auto v) { return v > bound; })) {
      throw InvariantError("positive root exceeds the entry bound");
    }
  }
  return search.roots;
}

std::vector<DimVector> positive_roots(const UnitForm& f, int bound) {
  std::vector<DimVector> out;
  for (auto& r : positive_roots_raw(f, bound)) out.emplace_back(f.shaped(r));
  return out;
}

BoxSearchResult box_search(const UnitForm& f, int bound, std::int64_t threshold,
                           std::uint64_t budget) {
  BoxSearchResult result;
  const std::size_t n = f.size();
  if (n == 0 || bound < 1) return result;
  constexpr std::size_t kBatch = 256;
  std::vector<std::int32_t> soa(n * kBatch, 0);
  std::vector<std::int32_t> out(kBatch, 0);
  std::vector<std::int32_t> digits(n, 0);
  bool wrapped = false;
  while (!wrapped) {
    std::size_t count = 0;
    while (count < kBatch && !wrapped) {
      for (std::size_t v = 0; v < n; ++v) soa[v * kBatch + count] = digits[v];
      ++count;
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++digits[pos] <= bound) break;
        digits[pos] = 0;
        if (pos == 0) wrapped = true;
      }
    }
    if (result.evaluated + count > budget) {
      result.exhausted = true;
      return result;
    }
    kernels::eval_batch(f.kernel_terms(), soa.data(), kBatch, count, out.data());
    result.evaluated += count;
    for (std::size_t k = 0; k < count; ++k) {
      if (out[k] > threshold) continue;
      Vec x(n);
      bool nonzero = false;
      for (std::size_t v = 0; v < n; ++v) {
        x[v] = soa[v * kBatch + k];
        nonzero = nonzero || x[v] != 0;
      }
      if (!nonzero) continue;
      result.hit = std::move(x);
      return result;
    }
  }
  return result;
}

FormVerdict is_weakly_nonnegative(const UnitForm& f, int bound, std::uint64_t budget) {
  if (bound < 1) throw DomainError("search bound must be at least 1");
  FormVerdict verdict;
  verdict.bound = bound;
  if (is_psd(f)) {
    verdict.decision = Decision::Holds;
    return verdict;
  }
  std::uint64_t remaining = budget;
  for (int b = 1; b <= bound; ++b) {
    BoxSearchResult r = box_search(f, b, -1, remaining);
    if (r.hit) {
      verdict.decision = Decision::Fails;
      verdict.witness_value = f.eval(*r.hit);
      verdict.witness = std::move(r.hit);
      return verdict;
    }
    if (r.exhausted) break;
    remaining -= r.evaluated;
  }
  verdict.decision = Decision::Inconclusive;
  return verdict;
}

namespace {

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& current,
            std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t s = start; s < n; ++s) {
    current.push_back(s);
    choose(n, k, s + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

int corank0(const UnitForm& f) {
  const std::vector<Vec> kernel = radical_basis_raw(f);
  const std::size_t r = kernel.size();
  const std::size_t n = f.size();
  if (r == 0) return 0;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> current;
  choose(n, r - 1, 0, current, subsets);

  SparseEchelon rays(n);
  for (const auto& tight : subsets) {
    RationalMatrix m(tight.size(), r);
    for (std::size_t a = 0; a < tight.size(); ++a) {
      for (std::size_t k = 0; k < r; ++k) m(a, k) = static_cast<long>(kernel[k][tight[a]]);
    }
    auto dirs = nullspace(m);
    if (dirs.size() != 1) continue;
    std::vector<Rational> x(n);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t c = 0; c < n; ++c) x[c] += dirs[0][k] * static_cast<long>(kernel[k][c]);
    }
    const bool nonneg = std::all_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) >= 0; });
    const bool nonpos = std::all_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) <= 0; });
    if (!nonneg && !nonpos) continue;
    SparseEchelon::Row row;
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(x[c]) != 0) row.emplace_back(c, x[c]);
    }
    rays.add(std::move(row));
  }
  return static_cast<int>(rays.rank());
}

Vec minimal_nullroot_raw(const UnitForm& f) {
  auto basis = radical_basis_raw(f);
  if (basis.size() != 1) {
    throw DomainError("minimal nullroot needs a rank-one radical, found rank " +
                      std::to_string(basis.size()));
  }
  Vec g = basis.front();
  const bool nonneg = std::all_of(g.begin(), g.end(), [](auto v) { return v >= 0; });
  const bool nonpos = std::all_of(g.begin(), g.end(), [](auto v) { return v <= 0; });
  if (!nonneg && !nonpos) throw DomainError("radical generator has mixed signs");
  if (!nonneg) {
    for (auto& v : g) v = -v;
  }
  return g;
}

DimVector minimal_nullroot(const UnitForm& f) { return DimVector(f.shaped(minimal_nullroot_raw(f))); }

bool same_lattice(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  return hermite_normal_form(a) == hermite_normal_form(b);
}

}  // namespace staircase
