#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "staircase/errors.hpp"
#include "staircase/quiver.hpp"

using namespace staircase;
using testing::partitions_up_to;

namespace {

std::size_t count_kind(const StaircaseQuiver& q, ArrowKind k) {
  return static_cast<std::size_t>(std::count_if(q.arrows().begin(), q.arrows().end(),
                                                [&](const Arrow& a) { return a.kind == k; }));
}

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

bool connected_support(const IntVector& v) {
  const StaircaseQuiver q(v.shape());
  std::vector<Vertex> support;
  for (const auto& x : q.vertices())
    if (v.at(x) != 0) support.push_back(x);
  if (support.empty()) return false;
  std::set<Vertex> seen{support.front()};
  std::vector<Vertex> stack{support.front()};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : {Vertex{x.i - 1, x.j}, Vertex{x.i + 1, x.j}, Vertex{x.i, x.j - 1}, Vertex{x.i, x.j + 1}}) {
      if (q.contains(y) && v.at(y) != 0 && seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen.size() == support.size();
}

}  // namespace

TEST_CASE("quiver of (1,1,2,3)") {
  const StaircaseQuiver q(Partition::parse("1,1,2,3"));
  CHECK(q.size() == 7);
  std::set<std::string> ids;
  for (const Arrow& a : q.arrows()) ids.insert(a.id());
  CHECK(ids == std::set<std::string>{"a:2,1", "a:3,1", "a:4,1", "a:2,2", "b:1,2", "b:1,3", "b:2,2"});
  REQUIRE(q.relations().size() == 1);
  CHECK(q.relations()[0].anchor == Vertex{2, 2});
  CHECK(q.relations()[0].corner() == Vertex{1, 1});
  CHECK(q.contains({4, 1}));
  CHECK(q.contains({1, 3}));
}

TEST_CASE("single row is a linear quiver") {
  const StaircaseQuiver q(Partition::parse("6"));
  CHECK(q.size() == 6);
  CHECK(count_kind(q, ArrowKind::V) == 5);
  CHECK(count_kind(q, ArrowKind::H) == 0);
  CHECK(q.relations().empty());
}

TEST_CASE("quiver of (3,3)") {
  const StaircaseQuiver q(Partition::parse("3,3"));
  CHECK(q.size() == 6);
  CHECK(count_kind(q, ArrowKind::H) == 3);
  CHECK(count_kind(q, ArrowKind::V) == 4);
  REQUIRE(q.relations().size() == 2);
  CHECK(q.relations()[0].anchor == Vertex{2, 2});
  CHECK(q.relations()[1].anchor == Vertex{2, 3});
}

TEST_CASE("lookup errors") {
  const StaircaseQuiver q(Partition::parse("2,2"));
  CHECK_THROWS_AS(q.index({3, 1}), DomainError);
  CHECK_THROWS_AS(q.arrow_index("a:1,1"), DomainError);
  CHECK_THROWS_AS(projective_vector(q, {1, 3}), DomainError);
}

TEST_CASE("projective and injective vectors") {
  const Partition p333 = Partition::parse("3^3");
  const StaircaseQuiver q(p333);
  CHECK(projective_vector(q, {2, 2}).rows() == std::vector<std::vector<std::int64_t>>{{1, 1, 0}, {1, 1, 0}, {0, 0, 0}});
  CHECK(injective_vector(q, {2, 2}).rows() == std::vector<std::vector<std::int64_t>>{{0, 0, 0}, {0, 1, 1}, {0, 1, 1}});
  CHECK(projective_vector(q, {1, 1}) == simple_vector(q, {1, 1}));
  CHECK(injective_vector(q, {3, 3}) == simple_vector(q, {3, 3}));

  const StaircaseQuiver q1123(Partition::parse("1,1,2,3"));
  CHECK(projective_vector(q1123, {4, 1}).rows() == std::vector<std::vector<std::int64_t>>{{1, 0, 0}, {1, 0}, {1}, {1}});

  const StaircaseQuiver q22(Partition::parse("2,2"));
  CHECK(injective_vector(q22, {1, 1}).rows() == std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 1}});
}

TEST_CASE("property: arrow and relation counts") {
  for (const auto& p : partitions_up_to(10)) {
    const StaircaseQuiver q(p);
    const int n = p.size();
    CHECK(static_cast<int>(q.size()) == n);
    CHECK(static_cast<int>(count_kind(q, ArrowKind::H)) == n - p.parts().back());
    CHECK(static_cast<int>(count_kind(q, ArrowKind::V)) == n - p.length());
    const auto inner = std::count_if(q.vertices().begin(), q.vertices().end(),
                                     [](const Vertex& v) { return v.i >= 2 && v.j >= 2; });
    CHECK(static_cast<long>(q.relations().size()) == inner);
    for (const Arrow& a : q.arrows()) {
      CHECK(q.contains(a.source));
      CHECK(q.contains(a.target));
    }
  }
}

TEST_CASE("property: transposing swaps arrow kinds") {
  for (const auto& p : partitions_up_to(10)) {
    const StaircaseQuiver q(p), t(p.transpose());
    std::set<std::tuple<int, int, int, int, int>> mine, theirs;
    for (const Arrow& a : q.arrows())
      mine.insert({a.kind == ArrowKind::H ? 1 : 0, a.source.j, a.source.i, a.target.j, a.target.i});
    for (const Arrow& a : t.arrows())
      theirs.insert({a.kind == ArrowKind::V ? 1 : 0, a.source.i, a.source.j, a.target.i, a.target.j});
    CHECK(mine == theirs);
    CHECK(q.relations().size() == t.relations().size());
  }
}

TEST_CASE("property: projectives and injectives are connected 0/1 vectors") {
  for (const auto& p : partitions_up_to(9)) {
    const StaircaseQuiver q(p);
    for (const Vertex& v : q.vertices()) {
      for (const DimVector& d : {projective_vector(q, v), injective_vector(q, v)}) {
        for (auto x : d.values()) CHECK((x == 0 || x == 1));
        CHECK(connected_support(d));
        CHECK(d.at(v) == 1);
      }
    }
  }
}

TEST_CASE("IntVector layout, transpose and zero extension") {
  const Partition p = Partition::parse("1,2,4");
  const IntVector x = IntVector::from_rows(p, {{0, 2, 1, 1}, {2, 3}, {1}});
  CHECK(x.at({1, 2}) == 2);
  CHECK(x.at({2, 2}) == 3);
  CHECK(x.to_string() == "[[0,2,1,1],[2,3],[1]]");
  const IntVector t = x.transposed();
  CHECK(t.shape() == p.transpose());
  CHECK(t.at({2, 1}) == 2);
  CHECK(t.transposed() == x);
  const IntVector e = x.extended(Partition::parse("2,3,5"), {0, 1});
  CHECK(e.at({1, 1}) == 0);
  CHECK(e.at({1, 3}) == 2);
  CHECK(e.at({3, 2}) == 1);
  CHECK_THROWS(IntVector::from_rows(p, {{0, 2, 1}, {2, 3}, {1}}));
  CHECK_THROWS_AS(DimVector(IntVector::from_rows(p, {{0, -2, 1, 1}, {2, 3}, {1}})), DomainError);
}

TEST_CASE("dot export") {
  const std::string d2 = to_dot(StaircaseQuiver(Partition::parse("2")));
  CHECK(count_substr(d2, "->") == 1);
  CHECK(count_substr(d2, "label=\"1,") == 2);
  const std::string d22 = to_dot(StaircaseQuiver(Partition::parse("2,2")));
  CHECK(count_substr(d22, "label=\"") >= 4);
  CHECK(count_substr(d22, "dotted") == 1);
  CHECK(count_substr(d22, "->") == 5);  // four arrows plus the diagonal
  CHECK(to_dot(StaircaseQuiver(Partition::parse("2,2"))) == d22);
}
