#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

// An integer partition stored in non-decreasing order (λ_1 ≤ … ≤ λ_l).
// Row i of the Young diagram, counted from the bottom, has row(i) = λ_{l+1-i}
// boxes, so the bottom row is the longest one.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws ParseError if empty or any part is < 1.
  explicit Partition(std::vector<int> parts);

  // Grammar: item ("," item)*, item := INT | INT "^" INT. Whitespace ignored.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int steps() const;

  // Number of boxes in row i (1-based, from the bottom); 0 outside.
  int row(int i) const;
  // Number of boxes in column j (1-based, from the left); 0 outside.
  int column(int j) const;
  int width() const { return parts_.empty() ? 0 : parts_.back(); }
  bool contains_box(int i, int j) const { return j >= 1 && j <= row(i); }

  Partition transpose() const;

  // Potency notation with ascending parts, e.g. "1^2,2^3,6,8^2".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

struct Measures {
  int size;
  int length;
  int steps;
  friend bool operator==(const Measures&, const Measures&) = default;
};

Measures measures(const Partition& p);

inline Partition transpose(const Partition& p) { return p.transpose(); }

// Bottom-left aligned Young diagram containment: Y(lhs) ⊆ Y(rhs).
bool is_subdiagram(const Partition& lhs, const Partition& rhs);

// All partitions of n, in a fixed deterministic order.
std::vector<Partition> partitions_of(int n);

// Offsets (di, dj) such that box (i,j) of `inner` maps to (i+di, j+dj) inside
// `outer`. Every such translate is a convex subquiver of the staircase quiver.
struct Offset {
  int di;
  int dj;
  friend bool operator==(const Offset&, const Offset&) = default;
};
std::vector<Offset> embeddings(const Partition& inner, const Partition& outer);

}  // namespace staircase
