#pragma once

#include <optional>
#include <string>
#include <vector>

#include "staircase/partition.hpp"
#include "staircase/quadform.hpp"
#include "staircase/quiver.hpp"

namespace staircase {

enum class RepType { Finite, TameConcealed, TameNotConcealed, Wild };

// "finite", "tame-concealed", "tame-not-concealed", "wild".
std::string to_string(RepType t);
inline bool is_tame(RepType t) { return t == RepType::TameConcealed || t == RepType::TameNotConcealed; }

// Type of a τ-orbit graph. `rank` is the vertex count for A/D and the index m
// of the affine diagrams Ã_m / D̃_m (m + 1 vertices).
struct OrbitType {
  enum class Kind { A, D, E6, E7, E8, ATilde, DTilde, E6Tilde, E7Tilde, E8Tilde, Wild };
  Kind kind = Kind::Wild;
  int rank = 0;

  bool is_dynkin() const { return kind <= Kind::E8; }
  bool is_euclidean() const { return kind >= Kind::ATilde && kind <= Kind::E8Tilde; }
  bool is_wild() const { return kind == Kind::Wild; }
  // "A(5)", "D(8)", "E6", "E7~", "E8~", "D~(4)", "wild", ...
  std::string to_string() const;
  friend bool operator==(const OrbitType&, const OrbitType&) = default;
};

// Closed-form representation type of A(λ).
RepType classify(const Partition& lambda);

// Closed-form orbit type from the case table (transposes included).
OrbitType orbit_type(const Partition& lambda);

// Type of KA_m ⊗ KA_l, the one-step algebra A(m^l).
RepType tensor_type(int m, int l);

struct BundledWitness {
  Partition lambda;
  IntVector vector;
  std::int64_t value;
  std::string note;
};
// Parsed from the bundled witness data file.
const std::vector<BundledWitness>& bundled_witnesses();

struct Witness {
  IntVector vector;
  std::int64_t value;
  // "bundled", "bundled-transpose", "zero-extension of <λ'> at +(di,dj)", "search"
  std::string source;
};

// Non-negative vector with q_λ = -1. Throws DomainError if λ is not wild and
// InvariantError if no witness is found within the search budget.
Witness wildness_witness(const Partition& lambda, std::uint64_t search_budget = 100'000'000);

struct Check {
  std::string criterion;
  Decision outcome = Decision::Inconclusive;
  bool supports_claim = false;
  std::string detail;
  std::optional<IntVector> certificate;
};

struct ClassificationReport {
  Partition lambda;
  RepType claimed = RepType::Wild;
  std::vector<Check> checks;
  bool consistent = true;  // no check contradicts the claim
  bool complete = true;    // every check reached a decision
};

struct VerifyOptions {
  int max_size = 40;  // larger diagrams get a partial, inconclusive report
  std::uint64_t search_budget = 100'000'000;
};

// Independent verification of classify() through the Tits form.
ClassificationReport verify_classification(const Partition& lambda, const VerifyOptions& options = {});

// Minimal nullroot of a tame concealed diagram (rank-one radical generator).
DimVector tame_concealed_nullroot(const Partition& lambda);

// The nine tame concealed and eight tame non-concealed diagrams.
const std::vector<Partition>& tame_concealed_list();
const std::vector<Partition>& tame_not_concealed_list();

}  // namespace staircase
