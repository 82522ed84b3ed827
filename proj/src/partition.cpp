#include "staircase/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "staircase/errors.hpp"

namespace staircase {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ParseError("partition must have at least one part");
  for (int v : parts_) {
    if (v < 1) throw ParseError("partition parts must be positive, got " + std::to_string(v));
  }
  std::sort(parts_.begin(), parts_.end());
}

namespace {

int parse_positive(std::string_view token, std::string_view item) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
    throw ParseError("malformed partition item '" + std::string(item) + "'");
  }
  return value;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty partition");

  std::vector<int> parts;
  std::string_view rest(compact);
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto caret = item.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_positive(item, item));
    } else {
      int value = parse_positive(item.substr(0, caret), item);
      int count = parse_positive(item.substr(caret + 1), item);
      parts.insert(parts.end(), count, value);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::steps() const {
  return static_cast<int>(std::set<int>(parts_.begin(), parts_.end()).size());
}

int Partition::row(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[parts_.size() - static_cast<std::size_t>(i)];
}

int Partition::column(int j) const {
  if (j < 1) return 0;
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int v) { return v >= j; }));
}

Partition Partition::transpose() const {
  std::vector<int> cols;
  for (int j = 1; j <= width(); ++j) cols.push_back(column(j));
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size();) {
    std::size_t run = k;
    while (run < parts_.size() && parts_[run] == parts_[k]) ++run;
    if (!out.empty()) out += ',';
    out += std::to_string(parts_[k]);
    if (run - k > 1) out += '^' + std::to_string(run - k);
    k = run;
  }
  return out;
}

Measures measures(const Partition& p) { return {p.size(), p.length(), p.steps()}; }

bool is_subdiagram(const Partition& lhs, const Partition& rhs) {
  if (lhs.length() > rhs.length()) return false;
  for (int i = 1; i <= lhs.length(); ++i) {
    if (lhs.row(i) > rhs.row(i)) return false;
  }
  return true;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    generate(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 1) return out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Offset> embeddings(const Partition& inner, const Partition& outer) {
  std::vector<Offset> out;
  for (int di = 0; di + inner.length() <= outer.length(); ++di) {
    for (int dj = 0; dj + inner.width() <= outer.width(); ++dj) {
      bool fits = true;
      for (int i = 1; i <= inner.length() && fits; ++i) {
        fits = inner.row(i) + dj <= outer.row(i + di);
      }
      if (fits) out.push_back({di, dj});
    }
  }
  return out;
}

}  // namespace staircase
