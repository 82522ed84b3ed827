#include "staircase/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "staircase/errors.hpp"

namespace staircase {

namespace bundled {
extern const std::string_view kWitnessJson;
}

namespace {

using PartList = std::vector<std::vector<int>>;

bool listed(const Partition& lambda, const PartList& list) {
  for (const auto& parts : list)
    if (lambda.parts() == parts) return true;
  return false;
}

bool listed_up_to_transpose(const Partition& lambda, const PartList& list) {
  return listed(lambda, list) || listed(lambda.transpose(), list);
}

const PartList kFiniteExceptions = {{1, 3, 4}, {2, 3, 3}, {1, 2, 2, 3}, {1, 1, 2, 4}};

const PartList kTameConcealed = {{3, 6},       {1, 2, 6},    {1, 3, 4},
                                 {2, 2, 5},    {1, 1, 2, 4}, {1, 2, 2, 3},
                                 {1, 1, 1, 3, 3}, {1, 1, 1, 2, 2, 2}, {1, 1, 1, 1, 2, 3}};

const PartList kTameNotConcealed = {{4, 5},       {5, 5},          {1, 4, 4},    {2, 3, 3},
                                    {3, 3, 3},    {2, 2, 2, 3},    {1, 2, 2, 2, 2}, {2, 2, 2, 2, 2}};

const PartList kE6 = {{1, 2, 3}, {2, 2, 2}, {3, 3}};
const PartList kE7 = {{1, 1, 2, 3}, {1, 2, 4}, {1, 2, 2, 2}, {3, 4}, {1, 3, 3}, {2, 2, 3}};
const PartList kE8 = {{1, 1, 1, 2, 3}, {1, 2, 5}, {1, 1, 2, 2, 2}, {3, 5},
                      {1, 1, 3, 3},    {2, 2, 4}, {2, 2, 2, 2},    {4, 4}};
const PartList kE7Tilde = {{1, 3, 4}, {1, 2, 2, 3}, {2, 3, 3}, {1, 1, 2, 4},
                           {3, 3, 3}, {1, 4, 4},    {2, 2, 2, 3}};
const PartList kE8Tilde = {{3, 6},          {4, 5},       {1, 2, 6},       {2, 2, 5},
                           {1, 1, 1, 3, 3}, {1, 2, 2, 2, 2}, {1, 1, 1, 1, 2, 3}, {1, 1, 1, 2, 2, 2},
                           {5, 5}};

bool is_hook(const Partition& lambda) {
  const auto& p = lambda.parts();
  return std::all_of(p.begin(), p.end() - 1, [](int x) { return x == 1; });
}

bool is_d_shape(const Partition& lambda) {
  const int n = lambda.size();
  if (n < 4) return false;
  if (lambda.parts() == std::vector<int>{2, n - 2}) return true;
  std::vector<int> ones(static_cast<std::size_t>(n - 4), 1);
  ones.push_back(2);
  ones.push_back(2);
  return lambda.parts() == ones;
}

std::vector<Partition> to_partitions(const PartList& list) {
  std::vector<Partition> out;
  for (const auto& p : list) out.emplace_back(p);
  return out;
}

}  // namespace

std::string to_string(RepType t) {
  switch (t) {
    case RepType::Finite: return "finite";
    case RepType::TameConcealed: return "tame-concealed";
    case RepType::TameNotConcealed: return "tame-not-concealed";
    case RepType::Wild: return "wild";
  }
  return "?";
}

std::string OrbitType::to_string() const {
  switch (kind) {
    case Kind::A: return "A(" + std::to_string(rank) + ")";
    case Kind::D: return "D(" + std::to_string(rank) + ")";
    case Kind::E6: return "E6";
    case Kind::E7: return "E7";
    case Kind::E8: return "E8";
    case Kind::ATilde: return "A~(" + std::to_string(rank) + ")";
    case Kind::DTilde: return "D~(" + std::to_string(rank) + ")";
    case Kind::E6Tilde: return "E6~";
    case Kind::E7Tilde: return "E7~";
    case Kind::E8Tilde: return "E8~";
    case Kind::Wild: return "wild";
  }
  return "?";
}

RepType classify(const Partition& lambda) {
  // The lists are closed under transposition already; no transpose lookup needed.
  if (listed(lambda, kTameConcealed)) return RepType::TameConcealed;
  if (listed(lambda, kTameNotConcealed)) return RepType::TameNotConcealed;
  if (is_hook(lambda) || is_d_shape(lambda)) return RepType::Finite;
  if (lambda.size() <= 8 && !listed(lambda, kFiniteExceptions)) return RepType::Finite;
  return RepType::Wild;
}

OrbitType orbit_type(const Partition& lambda) {
  using K = OrbitType::Kind;
  const int n = lambda.size();
  if (is_hook(lambda) || is_hook(lambda.transpose())) return {K::A, n};
  if (is_d_shape(lambda) || is_d_shape(lambda.transpose())) return {K::D, n};
  if (listed_up_to_transpose(lambda, kE6)) return {K::E6, 6};
  if (listed_up_to_transpose(lambda, kE7)) return {K::E7, 7};
  if (listed_up_to_transpose(lambda, kE8)) return {K::E8, 8};
  if (listed_up_to_transpose(lambda, kE7Tilde)) return {K::E7Tilde, 7};
  if (listed_up_to_transpose(lambda, kE8Tilde)) return {K::E8Tilde, 8};
  return {K::Wild, 0};
}

RepType tensor_type(int m, int l) {
  if (m < 1 || l < 1) throw DomainError("tensor_type needs m, l >= 1");
  return classify(Partition(std::vector<int>(static_cast<std::size_t>(l), m)));
}

const std::vector<Partition>& tame_concealed_list() {
  static const std::vector<Partition> list = to_partitions(kTameConcealed);
  return list;
}

const std::vector<Partition>& tame_not_concealed_list() {
  static const std::vector<Partition> list = to_partitions(kTameNotConcealed);
  return list;
}

const std::vector<BundledWitness>& bundled_witnesses() {
  static const std::vector<BundledWitness> witnesses = [] {
    std::vector<BundledWitness> out;
    const auto doc = nlohmann::json::parse(bundled::kWitnessJson);
    for (const auto& entry : doc.at("witnesses")) {
      Partition lambda = Partition::parse(entry.at("lambda").get<std::string>());
      auto rows = entry.at("rows").get<std::vector<std::vector<std::int64_t>>>();
      out.push_back({lambda, IntVector::from_rows(lambda, rows), entry.at("value").get<std::int64_t>(),
                     entry.at("note").get<std::string>()});
    }
    return out;
  }();
  return witnesses;
}

Witness wildness_witness(const Partition& lambda, std::uint64_t search_budget) {
  if (classify(lambda) != RepType::Wild)
    throw DomainError("no wildness witness: " + lambda.to_string() + " is not wild");
  const UnitForm form = tits_form(build_quiver(lambda));

  for (const auto& w : bundled_witnesses()) {
    if (w.lambda == lambda) return {w.vector, form.eval(w.vector), "bundled"};
    if (w.lambda.transpose() == lambda) {
      IntVector t = w.vector.transposed();
      return {t, form.eval(t), "bundled-transpose"};
    }
  }
  for (const auto& w : bundled_witnesses()) {
    for (const IntVector& source : {w.vector, w.vector.transposed()}) {
      for (Offset off : embeddings(source.shape(), lambda)) {
        IntVector x = source.extended(lambda, off);
        const std::int64_t value = form.eval(x);
        if (value < 0) {
          std::ostringstream how;
          how << "zero-extension of " << source.shape().to_string() << " at +(" << off.di << ","
              << off.dj << ")";
          return {x, value, how.str()};
        }
      }
    }
  }
  for (int bound = 1; bound <= 6; ++bound) {
    BoxSearchResult r = box_search(form, bound, -1, search_budget);
    if (r.hit) {
      IntVector x = form.shaped(*r.hit);
      return {x, form.eval(x), "search"};
    }
    if (r.exhausted) break;
  }
  throw InvariantError("no wildness witness found within budget for " + lambda.to_string());
}

DimVector tame_concealed_nullroot(const Partition& lambda) {
  if (classify(lambda) != RepType::TameConcealed)
    throw DomainError(lambda.to_string() + " is not tame concealed");
  return minimal_nullroot(tits_form(build_quiver(lambda)));
}

ClassificationReport verify_classification(const Partition& lambda, const VerifyOptions& options) {
  ClassificationReport report;
  report.lambda = lambda;
  report.claimed = classify(lambda);

  auto add = [&](Check c) {
    if (c.outcome == Decision::Inconclusive) report.complete = false;
    else if (!c.supports_claim) report.consistent = false;
    report.checks.push_back(std::move(c));
  };

  if (lambda.size() > options.max_size) {
    add({"size-budget", Decision::Inconclusive, false,
         "diagram has " + std::to_string(lambda.size()) + " boxes; budget is " +
             std::to_string(options.max_size),
         std::nullopt});
    return report;
  }

  const UnitForm form = tits_form(build_quiver(lambda));
  const RepType claim = report.claimed;

  {
    FormVerdict v = is_weakly_positive(form);
    Check c{"weakly-positive", v.decision, false, "", std::nullopt};
    if (v.witness) {
      c.certificate = form.shaped(*v.witness);
      c.detail = "q(witness) = " + std::to_string(v.witness_value);
    } else if (v.decision == Decision::Holds) {
      c.detail = "no non-negative vector with q <= 0";
    }
    const bool finite = claim == RepType::Finite;
    c.supports_claim = (v.decision == Decision::Holds) == finite;
    add(std::move(c));
  }

  if (is_tame(claim)) {
    const bool psd = is_psd(form);
    add({"psd", psd ? Decision::Holds : Decision::Fails, psd, "", std::nullopt});
    if (psd) {
      const int c0 = corank0(form);
      add({"corank0<=1", c0 <= 1 ? Decision::Holds : Decision::Fails, c0 <= 1,
           "corank0 = " + std::to_string(c0), std::nullopt});
      const auto radical = radical_basis(form);
      const std::size_t r = radical.size();
      const bool ok = r == 1 || r == 2;
      add({"radical-rank", ok ? Decision::Holds : Decision::Fails, ok,
           "rank = " + std::to_string(r), std::nullopt});
      if (claim == RepType::TameConcealed) {
        Check c{"positive-nullroot", Decision::Fails, false, "", std::nullopt};
        try {
          DimVector root = minimal_nullroot(form);
          c.outcome = Decision::Holds;
          c.supports_claim = root.is_sincere();
          c.detail = root.is_sincere() ? "sincere" : "not sincere";
          c.certificate = root;
        } catch (const DomainError& e) {
          c.detail = e.what();
        }
        add(std::move(c));
      }
    }
  } else if (claim == RepType::Wild) {
    Check c{"q=-1 witness", Decision::Inconclusive, false, "", std::nullopt};
    try {
      Witness w = wildness_witness(lambda, options.search_budget);
      c.outcome = w.value == -1 ? Decision::Holds : Decision::Fails;
      c.supports_claim = w.value == -1;
      c.detail = w.source;
      c.certificate = w.vector;
    } catch (const InvariantError& e) {
      c.detail = e.what();
    }
    add(std::move(c));
  }
  return report;
}

}  // namespace staircase
