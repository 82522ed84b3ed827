#include "staircase/modp.hpp"

namespace staircase::modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> reduce(const Rational& r) {
  const Integer p(static_cast<unsigned long>(kPrime));
  Integer num = r.get_num() % p;
  if (num < 0) num += p;
  Integer den = r.get_den() % p;
  if (den == 0) return std::nullopt;
  return mul(num.get_ui(), inv(den.get_ui()));
}

std::optional<Rational> reconstruct(std::uint64_t a) {
  // Extended Euclid on (p, a), stopped once the remainder drops below the bound.
  constexpr std::int64_t bound = 1'518'500'249;  // floor(sqrt((2^61 - 1) / 2))
  std::int64_t r0 = static_cast<std::int64_t>(kPrime), r1 = static_cast<std::int64_t>(a);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 > bound) {
    const std::int64_t qt = r0 / r1;
    std::int64_t r2 = r0 - qt * r1;
    r0 = r1;
    r1 = r2;
    const __int128 t2 = static_cast<__int128>(t0) - static_cast<__int128>(qt) * t1;
    t0 = t1;
    t1 = static_cast<std::int64_t>(t2);
  }
  if (t1 == 0 || t1 > bound || t1 < -bound) return std::nullopt;
  Rational out(Integer(static_cast<long>(r1)), Integer(static_cast<long>(t1)));
  out.canonicalize();
  return out;
}

bool Echelon::add(Row row) {
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    const std::size_t p = pivot_of_[lead];
    if (p == npos) {
      const std::uint64_t s = inv(row.front().second);
      for (auto& e : row) e.second = mul(e.second, s);
      pivot_of_[lead] = pivots_.size();
      pivots_.push_back(std::move(row));
      return true;
    }
    const std::uint64_t factor = row.front().second;
    const Row& piv = pivots_[p];
    Row merged;
    merged.reserve(row.size() + piv.size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < piv.size()) {
      if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
        merged.push_back(row[a++]);
      } else if (a == row.size() || piv[b].first < row[a].first) {
        merged.emplace_back(piv[b].first, sub(0, mul(factor, piv[b].second)));
        ++b;
      } else {
        const std::uint64_t v = sub(row[a].second, mul(factor, piv[b].second));
        if (v != 0) merged.emplace_back(row[a].first, v);
        ++a;
        ++b;
      }
    }
    row = std::move(merged);
  }
  return false;
}

std::vector<std::vector<std::uint64_t>> Echelon::nullspace() const {
  // One vector per free column: x_f = 1, other free columns 0, pivot columns
  // solved from the last pivot back to the first.
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < cols_; ++c)
    if (pivot_of_[c] != npos) order.push_back(c);
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_of_[f] != npos) continue;
    std::vector<std::uint64_t> x(cols_, 0);
    x[f] = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Row& r = pivots_[pivot_of_[*it]];
      std::uint64_t s = 0;
      for (std::size_t k = 1; k < r.size(); ++k) s = modp::add(s, mul(r[k].second, x[r[k].first]));
      x[*it] = sub(0, s);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::uint64_t determinant(std::vector<std::uint64_t> m, std::size_t k) {
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && m[p * k + c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(m[p * k + j], m[c * k + j]);
      det = sub(0, det);
    }
    det = mul(det, m[c * k + c]);
    const std::uint64_t iv = inv(m[c * k + c]);
    for (std::size_t r = c + 1; r < k; ++r) {
      const std::uint64_t f = mul(m[r * k + c], iv);
      if (f == 0) continue;
      for (std::size_t j = c; j < k; ++j) m[r * k + j] = sub(m[r * k + j], mul(f, m[c * k + j]));
    }
  }
  return det;
}

}  // namespace staircase::modp
