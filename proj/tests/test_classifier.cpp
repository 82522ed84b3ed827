#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "staircase/classifier.hpp"
#include "staircase/errors.hpp"

using namespace staircase;
using testing::partitions_up_to;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

int rank_class(RepType t) { return t == RepType::Finite ? 0 : is_tame(t) ? 1 : 2; }

// Finite rule written out directly from the shape, independent of the table.
bool finite_rule(const Partition& p) {
  const auto& a = p.parts();
  const int n = p.size(), l = p.length();
  if (l == 1) return true;
  if (std::all_of(a.begin(), a.end() - 1, [](int x) { return x == 1; })) return true;  // (1^k, n-k)
  if (l == 2 && a[0] == 2) return true;
  if (n >= 4 && l == n - 2 && a[l - 1] == 2 && a[l - 2] == 2) return true;  // (1^{n-4}, 2^2)
  static const std::set<Partition> bad{P("1,3,4"), P("2,3,3"), P("1,2,2,3"), P("1,1,2,4")};
  return n <= 8 && !bad.count(p);
}

}  // namespace

TEST_CASE("classify examples") {
  CHECK(classify(P("3,6")) == RepType::TameConcealed);
  CHECK(classify(P("2,3,4")) == RepType::Wild);
  CHECK(classify(P("1,1,1,1,9")) == RepType::Finite);
  CHECK(classify(P("5,5")) == RepType::TameNotConcealed);
  CHECK(to_string(RepType::TameNotConcealed) == "tame-not-concealed");
  CHECK(to_string(RepType::Finite) == "finite");
}

TEST_CASE("tame lists") {
  const std::vector<Partition> concealed{P("3,6"),   P("1,2,6"), P("1,3,4"),     P("2^2,5"),    P("1^2,2,4"),
                                         P("1,2^2,3"), P("1^3,3^2"), P("1^3,2^3"), P("1^4,2,3")};
  const std::vector<Partition> other{P("4,5"), P("5^2"), P("1,4^2"), P("2,3^2"),
                                     P("3^3"), P("2^3,3"), P("1,2^4"), P("2^5")};
  CHECK(std::set<Partition>(tame_concealed_list().begin(), tame_concealed_list().end()) ==
        std::set<Partition>(concealed.begin(), concealed.end()));
  CHECK(std::set<Partition>(tame_not_concealed_list().begin(), tame_not_concealed_list().end()) ==
        std::set<Partition>(other.begin(), other.end()));
  for (const auto& p : concealed) CHECK(classify(p) == RepType::TameConcealed);
  for (const auto& p : other) CHECK(classify(p) == RepType::TameNotConcealed);
}

TEST_CASE("finite rule agrees with classify up to 12 boxes") {
  for (const auto& p : partitions_up_to(12)) CHECK_MESSAGE((classify(p) == RepType::Finite) == finite_rule(p), p.to_string());
}

TEST_CASE("exactly four non-finite partitions of 8") {
  std::set<Partition> nonfinite;
  for (const auto& p : partitions_of(8))
    if (classify(p) != RepType::Finite) nonfinite.insert(p);
  CHECK(nonfinite == std::set<Partition>{P("1,3,4"), P("2,3,3"), P("1,2,2,3"), P("1,1,2,4")});
}

TEST_CASE("property: transpose invariance") {
  for (const auto& p : partitions_up_to(12)) CHECK(classify(p) == classify(p.transpose()));
}

TEST_CASE("property: monotone under subdiagrams") {
  const auto all = partitions_up_to(10);
  for (const auto& small : all)
    for (const auto& big : all) {
      if (small.size() >= big.size() || embeddings(small, big).empty()) continue;
      CHECK(rank_class(classify(small)) <= rank_class(classify(big)));
    }
}

TEST_CASE("orbit types") {
  CHECK(orbit_type(P("1,2,3")).to_string() == "E6");
  CHECK(orbit_type(P("5,5")).to_string() == "E8~");
  CHECK(orbit_type(P("2,6")).to_string() == "D(8)");
  CHECK(orbit_type(P("7")).to_string() == "A(7)");
  CHECK(orbit_type(P("3,6")).to_string() == "E8~");
  CHECK(orbit_type(P("4,6")).is_wild());
}

TEST_CASE("property: orbit type correlates with representation type") {
  for (const auto& p : partitions_up_to(12)) {
    const RepType t = classify(p);
    const OrbitType o = orbit_type(p);
    CHECK(o == orbit_type(p.transpose()));
    if (t == RepType::Finite) CHECK(o.is_dynkin());
    else if (is_tame(t)) CHECK(o.is_euclidean());
    else CHECK(o.is_wild());
  }
}

TEST_CASE("tensor types") {
  CHECK(tensor_type(2, 3) == RepType::Finite);
  CHECK(tensor_type(3, 3) == RepType::TameNotConcealed);
  CHECK(tensor_type(4, 3) == RepType::Wild);
  for (int m = 1; m <= 6; ++m)
    for (int l = 1; l <= 6; ++l) CHECK(tensor_type(m, l) == classify(Partition(std::vector<int>(l, m))));
  CHECK_THROWS_AS(tensor_type(0, 2), DomainError);
}

TEST_CASE("wildness witnesses") {
  {
    const Witness w = wildness_witness(P("3,7"));
    CHECK(w.vector == IntVector::from_rows(P("3,7"), {{2, 6, 8, 6, 4, 2, 1}, {4, 6, 4}}));
    CHECK(w.value == -1);
    CHECK(w.source == "bundled");
  }
  CHECK(wildness_witness(P("2,2,6")).vector == IntVector::from_rows(P("2,2,6"), {{4, 8, 6, 4, 2, 1}, {6, 6}, {4, 2}}));
  CHECK(wildness_witness(P("1,1,2,5")).vector == IntVector::from_rows(P("1,1,2,5"), {{4, 6, 4, 2, 1}, {6, 4}, {4}, {2}}));
  {
    const Witness w = wildness_witness(P("4,7"));
    CHECK(w.source.rfind("zero-extension of 4,6", 0) == 0);
    CHECK(tits_form(build_quiver(P("4,7"))).eval(w.vector) == -1);
  }
  CHECK(wildness_witness(P("1,2,3,3")).source == "bundled-transpose");
  CHECK_THROWS_AS(wildness_witness(P("3,6")), DomainError);
  CHECK_THROWS_AS(wildness_witness(P("2,2,4")), DomainError);
}

TEST_CASE("property: every wild diagram up to 12 boxes has a certified witness") {
  for (const auto& p : partitions_up_to(12)) {
    if (classify(p) != RepType::Wild) continue;
    const Witness w = wildness_witness(p);
    CHECK(w.vector.shape() == p);
    CHECK(w.vector.is_nonnegative());
    CHECK(w.value == -1);
    CHECK(tits_form(build_quiver(p)).eval(w.vector) == -1);
  }
}

TEST_CASE("verify_classification examples") {
  {
    const auto r = verify_classification(P("1,3,4"));
    CHECK(r.claimed == RepType::TameConcealed);
    CHECK(r.consistent);
    CHECK(r.complete);
    auto find = [&](const std::string& name) {
      return std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.criterion == name; });
    };
    REQUIRE(find("weakly-positive") != r.checks.end());
    CHECK(find("weakly-positive")->outcome == Decision::Fails);
    REQUIRE(find("psd") != r.checks.end());
    CHECK(find("psd")->outcome == Decision::Holds);
    REQUIRE(find("radical-rank") != r.checks.end());
    CHECK(find("radical-rank")->detail.find('1') != std::string::npos);
  }
  {
    const auto r = verify_classification(P("2,2,4"));
    CHECK(r.claimed == RepType::Finite);
    CHECK(r.consistent);
    REQUIRE(!r.checks.empty());
    CHECK(r.checks[0].outcome == Decision::Holds);
  }
  {
    const auto r = verify_classification(P("4,6"));
    CHECK(r.claimed == RepType::Wild);
    CHECK(r.consistent);
    const bool certified = std::any_of(r.checks.begin(), r.checks.end(), [](const Check& c) {
      return c.certificate && c.supports_claim && c.criterion == "q=-1 witness";
    });
    CHECK(certified);
  }
  {
    VerifyOptions small;
    small.max_size = 5;
    const auto r = verify_classification(P("4,6"), small);
    CHECK_FALSE(r.complete);
    CHECK(r.consistent);
  }
}

TEST_CASE("property: verification is consistent up to 8 boxes") {
  for (const auto& p : partitions_up_to(8)) {
    const auto r = verify_classification(p);
    CHECK_MESSAGE(r.consistent, p.to_string());
    CHECK_MESSAGE(r.complete, p.to_string());
  }
}

TEST_CASE("tame concealed nullroots") {
  for (const auto& p : tame_concealed_list()) {
    const DimVector r = tame_concealed_nullroot(p);
    const UnitForm f = tits_form(build_quiver(p));
    CHECK(r.is_sincere());
    CHECK(f.eval(r) == 0);
    CHECK(r == minimal_nullroot(f));
  }
  CHECK(tame_concealed_nullroot(P("3,6")) == DimVector::from_rows(P("3,6"), {{1, 3, 4, 3, 2, 1}, {2, 3, 2}}));
  CHECK_THROWS_AS(tame_concealed_nullroot(P("3^3")), DomainError);
}
