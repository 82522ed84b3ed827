#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "staircase/classifier.hpp"
#include "staircase/errors.hpp"
#include "staircase/quadform.hpp"

using namespace staircase;
using testing::partitions_up_to;

namespace {

UnitForm form_of(const char* text) { return tits_form(build_quiver(Partition::parse(text))); }

IntVector rows(const char* text, std::vector<std::vector<std::int64_t>> r) {
  return IntVector::from_rows(Partition::parse(text), r);
}

Vec raw(const IntVector& x) { return Vec(x.values().begin(), x.values().end()); }

std::size_t idx(const UnitForm& f, Vertex v) { return StaircaseQuiver(*f.shape()).index(v); }

// Naive reference: q(x) from the quiver data, independent of UnitForm.
std::int64_t naive_q(const StaircaseQuiver& q, const IntVector& x) {
  std::int64_t s = 0;
  for (const Vertex& v : q.vertices()) s += x.at(v) * x.at(v);
  for (const Arrow& a : q.arrows()) s -= x.at(a.source) * x.at(a.target);
  for (const Relation& r : q.relations()) s += x.at(r.anchor) * x.at(r.corner());
  return s;
}

// Odometer over [0,b]^n.
template <typename F>
void for_box(std::size_t n, int b, F f) {
  Vec x(n, 0);
  while (true) {
    f(x);
    std::size_t k = 0;
    while (k < n && x[k] == b) x[k++] = 0;
    if (k == n) return;
    ++x[k];
  }
}

}  // namespace

TEST_CASE("tits_form coefficients") {
  const UnitForm a2 = form_of("2");
  CHECK(a2.coefficient(0, 1) == -1);

  const UnitForm f22 = form_of("2,2");
  CHECK(f22.coefficient(idx(f22, {1, 1}), idx(f22, {2, 2})) == 1);
  CHECK(f22.coefficient(idx(f22, {1, 2}), idx(f22, {2, 1})) == 0);
  int arrows = 0;
  for (const auto& t : f22.terms()) arrows += t.c == -1;
  CHECK(arrows == 4);

  const UnitForm f = form_of("1,1,2,3");
  int minus = 0, plus = 0;
  for (const auto& t : f.terms()) {
    minus += t.c == -1;
    plus += t.c == 1;
  }
  CHECK(minus == 7);
  CHECK(plus == 1);
  CHECK(f.coefficient(idx(f, {1, 1}), idx(f, {2, 2})) == 1);
}

TEST_CASE("eval_form on known vectors") {
  CHECK(form_of("4,6").eval(rows("4,6", {{0, 2, 4, 4, 2, 1}, {2, 4, 4, 2}})) == -1);
  CHECK(form_of("2,3,4").eval(rows("2,3,4", {{1, 3, 3, 1}, {2, 4, 2}, {2, 2}})) == -1);
  CHECK(form_of("3^3").eval(rows("3^3", {{0, 1, 1}, {1, 2, 1}, {1, 1, 0}})) == 0);
  CHECK(form_of("3^3").eval(rows("3^3", {{1, 1, 0}, {1, 0, -1}, {0, -1, -1}})) == 0);
  CHECK_THROWS_AS(form_of("3^3").eval(rows("2,2", {{1, 1}, {1, 1}})), DomainError);
}

TEST_CASE("bilinear form") {
  const UnitForm f = form_of("3^3");
  const IntVector u = rows("3^3", {{1, 1, 0}, {1, 0, -1}, {0, -1, -1}});
  const StaircaseQuiver q(Partition::parse("3^3"));
  for (const Vertex& v : q.vertices()) CHECK(f.bilinear(u, IntVector::unit(q.lambda(), v)) == 0);
  for (const Arrow& a : q.arrows())
    CHECK(f.bilinear(IntVector::unit(q.lambda(), a.source), IntVector::unit(q.lambda(), a.target)) == -1);
}

TEST_CASE("gram matrix") {
  const RationalMatrix g = gram(form_of("2"));
  CHECK(g(0, 0) == 1);
  CHECK(g(0, 1) == Rational(-1, 2));
  CHECK(g(1, 0) == Rational(-1, 2));
  CHECK(g(1, 1) == 1);

  const UnitForm f = form_of("3^3");
  const RationalMatrix g3 = gram(f);
  const IntVector u = rows("3^3", {{1, 1, 0}, {1, 0, -1}, {0, -1, -1}});
  for (std::size_t r = 0; r < f.size(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < f.size(); ++c) s += g3(r, c) * static_cast<long>(u[c]);
    CHECK(s == 0);
  }
}

TEST_CASE("is_psd") {
  CHECK(is_psd(form_of("3^3")));
  CHECK_FALSE(is_psd(form_of("2,3,4")));
  CHECK(is_psd(form_of("5")));
  CHECK(is_positive_definite(form_of("5")));
  CHECK_FALSE(is_positive_definite(form_of("3^3")));
}

TEST_CASE("radical lattices") {
  {
    const UnitForm f = form_of("3^3");
    const auto basis = radical_basis_raw(f);
    CHECK(basis.size() == 2);
    const IntVector u = rows("3^3", {{1, 1, 0}, {1, 0, -1}, {0, -1, -1}});
    const IntVector v = rows("3^3", {{0, 1, 1}, {1, 2, 1}, {1, 1, 0}});
    CHECK(same_lattice(basis, {raw(u), raw(v)}));
  }
  {
    const UnitForm f = form_of("5^2");
    const IntVector u = rows("5^2", {{2, 3, 2, 0, -1}, {1, 0, -2, -3, -2}});
    const IntVector v = rows("5^2", {{0, 1, 2, 2, 1}, {1, 2, 2, 1, 0}});
    CHECK(f.eval(u) == 0);
    CHECK(f.eval(v) == 0);
    // These two generate the radical over Q but only an index-2 sublattice
    // over Z: (u - 3v)/2 is integral and also radical.
    const auto basis = radical_basis_raw(f);
    CHECK(basis.size() == 2);
    CHECK(same_lattice(basis, {basis[0], basis[1], raw(u)}));
    CHECK(same_lattice(basis, {basis[0], basis[1], raw(v)}));
    CHECK_FALSE(same_lattice(basis, {raw(u), raw(v)}));
    IntVector half = u - 3 * v;
    for (auto& x : half.values()) {
      CHECK(x % 2 == 0);
      x /= 2;
    }
    CHECK(same_lattice(basis, {raw(half), raw(v)}));
  }
  {
    const auto basis = radical_basis(form_of("3,6"));
    REQUIRE(basis.size() == 1);
    CHECK((basis[0].is_sincere() || (-1 * basis[0]).is_sincere()));
  }
  try {
    radical_basis(form_of("4,6"));
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "radical defined here only for non-negative forms");
  }
}

TEST_CASE("weak positivity") {
  CHECK(is_weakly_positive(form_of("2,2,4")).decision == Decision::Holds);
  const UnitForm f134 = form_of("1,3,4");
  const FormVerdict v = is_weakly_positive(f134);
  REQUIRE(v.decision == Decision::Fails);
  REQUIRE(v.witness);
  CHECK(f134.eval(*v.witness) == v.witness_value);
  CHECK(v.witness_value <= 0);
  CHECK(std::all_of(v.witness->begin(), v.witness->end(), [](std::int64_t x) { return x >= 0; }));
  for (int n = 1; n <= 8; ++n)
    CHECK(is_weakly_positive(tits_form(build_quiver(Partition(std::vector<int>{n})))).decision == Decision::Holds);
}

TEST_CASE("weak non-negativity") {
  CHECK(is_weakly_nonnegative(form_of("3^3")).decision == Decision::Holds);
  CHECK(is_weakly_nonnegative(form_of("1,3,4")).decision == Decision::Holds);
  const UnitForm f = form_of("4,6");
  const FormVerdict v = is_weakly_nonnegative(f);
  REQUIRE(v.decision == Decision::Fails);
  CHECK(f.eval(*v.witness) < 0);
  CHECK(v.witness_value == f.eval(*v.witness));
  // A tiny budget on an indefinite form cannot decide.
  const FormVerdict tight = is_weakly_nonnegative(form_of("4,6"), 18, 5);
  CHECK(tight.decision == Decision::Inconclusive);
}

TEST_CASE("positive roots") {
  CHECK(positive_roots(form_of("4")).size() == 10);
  const auto r22 = positive_roots(form_of("2,2"));
  CHECK(r22.size() == 11);
  CHECK(std::find(r22.begin(), r22.end(), DimVector::from_rows(Partition::parse("2,2"), {{1, 1}, {1, 1}})) != r22.end());
  CHECK_THROWS_AS(positive_roots(form_of("1,3,4")), DomainError);
}

TEST_CASE("corank0 and minimal nullroots") {
  CHECK(corank0(form_of("2,2")) == 0);
  CHECK(corank0(form_of("3,6")) == 1);
  CHECK(corank0(form_of("3^3")) == 1);
  CHECK_THROWS_AS(corank0(form_of("4,6")), DomainError);

  const UnitForm f = form_of("3,6");
  const DimVector root = minimal_nullroot(f);
  CHECK(root.is_sincere());
  CHECK(f.eval(root) == 0);
  CHECK(same_lattice(radical_basis_raw(f), {raw(root)}));
  const DimVector r126 = minimal_nullroot(form_of("1,2,6"));
  CHECK(r126.is_sincere());
  CHECK_THROWS_AS(minimal_nullroot(form_of("3^3")), DomainError);
}

TEST_CASE("oracle: roots and weak positivity against exhaustive boxes") {
  for (const auto& p : partitions_up_to(6)) {
    const StaircaseQuiver q(p);
    const UnitForm f = tits_form(q);
    const std::size_t n = f.size();
    bool violation = false;
    std::set<Vec> roots;
    for_box(n, n <= 5 ? 6 : 3, [&](const Vec& x) {
      if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; })) return;
      const std::int64_t value = naive_q(q, IntVector(p, x));
      if (value <= 0) violation = true;
      if (value == 1) roots.insert(x);
    });
    const FormVerdict v = is_weakly_positive(f);
    CHECK((v.decision == Decision::Fails) == violation);
    if (!violation && n <= 5) {
      const auto computed = positive_roots_raw(f);
      CHECK(std::set<Vec>(computed.begin(), computed.end()) == roots);
    }
  }
}

TEST_CASE("oracle: box search finds exactly the naive hits") {
  const Partition p = Partition::parse("4,6");
  const StaircaseQuiver q(p);
  const UnitForm f = tits_form(q);
  // [0,1]^10 is small enough to scan directly.
  std::optional<Vec> first;
  for_box(f.size(), 1, [&](const Vec& x) {
    if (!first && naive_q(q, IntVector(p, x)) <= -1) first = x;
  });
  const BoxSearchResult r = box_search(f, 1, -1, 1'000'000);
  CHECK(r.hit.has_value() == first.has_value());
  const BoxSearchResult r2 = box_search(f, 4, -1, 100'000'000);
  REQUIRE(r2.hit);
  CHECK(naive_q(q, IntVector(p, *r2.hit)) <= -1);
}

TEST_CASE("property: unit form identities") {
  std::mt19937_64 rng(2024);
  for (const auto& p : partitions_up_to(10)) {
    const StaircaseQuiver q(p);
    const UnitForm f = tits_form(q);
    for (const Vertex& v : q.vertices()) CHECK(f.eval(IntVector::unit(p, v)) == 1);
    const RationalMatrix g = gram(f);
    const UnitForm ft = tits_form(build_quiver(p.transpose()));
    for (int trial = 0; trial < 10; ++trial) {
      const IntVector x = testing::random_int_vector(rng, p, -4, 4);
      const IntVector y = testing::random_int_vector(rng, p, -4, 4);
      const std::int64_t qx = f.eval(x);
      CHECK(qx == naive_q(q, x));
      Rational xgx = 0;
      for (std::size_t r = 0; r < f.size(); ++r)
        for (std::size_t c = 0; c < f.size(); ++c) xgx += g(r, c) * static_cast<long>(x[r] * x[c]);
      CHECK(xgx == qx);
      CHECK(f.bilinear(x, x) == 2 * qx);
      CHECK(f.eval(x + y) == qx + f.bilinear(x, y) + f.eval(y));
      CHECK(f.bilinear(x, y) == f.bilinear(y, x));
      CHECK(ft.eval(x.transposed()) == qx);
    }
  }
}

TEST_CASE("property: PSD forms are weakly non-negative") {
  for (const auto& p : partitions_up_to(9)) {
    const UnitForm f = tits_form(build_quiver(p));
    if (is_psd(f)) CHECK(is_weakly_nonnegative(f).decision == Decision::Holds);
  }
}

TEST_CASE("property: weak positivity matches representation-finiteness up to 8 boxes") {
  const std::set<Partition> exceptions{Partition::parse("1,3,4"), Partition::parse("2,3,3"),
                                       Partition::parse("1,2,2,3"), Partition::parse("1,1,2,4")};
  for (const auto& p : partitions_up_to(8)) {
    const FormVerdict v = is_weakly_positive(tits_form(build_quiver(p)));
    if (exceptions.count(p)) CHECK(v.decision == Decision::Fails);
    else CHECK(v.decision == Decision::Holds);
  }
}

TEST_CASE("property: projectives are positive roots of finite forms") {
  for (const auto& p : partitions_up_to(8)) {
    if (classify(p) != RepType::Finite) continue;
    const StaircaseQuiver q(p);
    const auto roots = positive_roots(tits_form(q));
    for (const Vertex& v : q.vertices())
      CHECK(std::find(roots.begin(), roots.end(), projective_vector(q, v)) != roots.end());
  }
}

TEST_CASE("property: zero extension preserves q") {
  std::mt19937_64 rng(7);
  const auto all = partitions_up_to(8);
  for (const auto& small : all) {
    for (const auto& big : all) {
      if (big.size() <= small.size()) continue;
      const auto offs = embeddings(small, big);
      if (offs.empty()) continue;
      const UnitForm fs = tits_form(build_quiver(small)), fb = tits_form(build_quiver(big));
      const IntVector x = testing::random_int_vector(rng, small, 0, 5);
      for (Offset off : offs) CHECK(fb.eval(x.extended(big, off)) == fs.eval(x));
    }
  }
}
