#include "staircase/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "staircase/errors.hpp"

namespace staircase {

std::string Arrow::id() const {
  return std::string(kind == ArrowKind::H ? "a:" : "b:") + source.label();
}

StaircaseQuiver::StaircaseQuiver(Partition lambda) : lambda_(std::move(lambda)) {
  row_offset_.push_back(0);
  for (int i = 1; i <= lambda_.length(); ++i) {
    for (int j = 1; j <= lambda_.row(i); ++j) vertices_.push_back({i, j});
    row_offset_.push_back(vertices_.size());
  }
  // Rows are weakly decreasing upwards, so (i-1,j) exists whenever (i,j) does.
  for (const Vertex& v : vertices_) {
    if (v.i >= 2) arrows_.push_back({ArrowKind::H, v, {v.i - 1, v.j}});
    if (v.j >= 2) arrows_.push_back({ArrowKind::V, v, {v.i, v.j - 1}});
    if (v.i >= 2 && v.j >= 2) relations_.push_back({v});
  }
}

std::size_t StaircaseQuiver::index(Vertex v) const {
  if (!contains(v)) {
    throw DomainError("vertex (" + v.label() + ") is not a box of " + lambda_.to_string());
  }
  return row_offset_[static_cast<std::size_t>(v.i - 1)] + static_cast<std::size_t>(v.j - 1);
}

std::size_t StaircaseQuiver::arrow_index(const std::string& id) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    if (arrows_[k].id() == id) return k;
  }
  throw DomainError("no arrow '" + id + "' in Q(" + lambda_.to_string() + ")");
}

IntVector::IntVector(Partition shape) : shape_(std::move(shape)) {
  values_.assign(static_cast<std::size_t>(shape_.size()), 0);
}

IntVector::IntVector(Partition shape, std::vector<std::int64_t> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(shape_.size())) {
    throw DomainError("vector of length " + std::to_string(values_.size()) +
                      " does not match shape " + shape_.to_string());
  }
}

IntVector IntVector::from_rows(Partition shape, const std::vector<std::vector<std::int64_t>>& rows) {
  if (static_cast<int>(rows.size()) != shape.length()) {
    throw DomainError("expected " + std::to_string(shape.length()) + " rows for shape " +
                      shape.to_string());
  }
  std::vector<std::int64_t> flat;
  for (int i = 1; i <= shape.length(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != shape.row(i)) {
      throw DomainError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                        " entries, shape " + shape.to_string() + " needs " +
                        std::to_string(shape.row(i)));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return IntVector(std::move(shape), std::move(flat));
}

IntVector IntVector::unit(const Partition& shape, Vertex v) {
  IntVector out(shape);
  out.at(v) = 1;
  return out;
}

namespace {

std::size_t offset_of(const Partition& shape, Vertex v) {
  if (!shape.contains_box(v.i, v.j)) {
    throw DomainError("vertex (" + v.label() + ") is not a box of " + shape.to_string());
  }
  std::size_t off = 0;
  for (int i = 1; i < v.i; ++i) off += static_cast<std::size_t>(shape.row(i));
  return off + static_cast<std::size_t>(v.j - 1);
}

}  // namespace

std::int64_t IntVector::at(Vertex v) const { return values_[offset_of(shape_, v)]; }
std::int64_t& IntVector::at(Vertex v) { return values_[offset_of(shape_, v)]; }

std::vector<std::vector<std::int64_t>> IntVector::rows() const {
  std::vector<std::vector<std::int64_t>> out;
  std::size_t k = 0;
  for (int i = 1; i <= shape_.length(); ++i) {
    auto len = static_cast<std::size_t>(shape_.row(i));
    out.emplace_back(values_.begin() + static_cast<std::ptrdiff_t>(k),
                     values_.begin() + static_cast<std::ptrdiff_t>(k + len));
    k += len;
  }
  return out;
}

bool IntVector::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](auto x) { return x >= 0; });
}
bool IntVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](auto x) { return x == 0; });
}
bool IntVector::is_sincere() const {
  return std::all_of(values_.begin(), values_.end(), [](auto x) { return x > 0; });
}

IntVector IntVector::transposed() const {
  IntVector out(shape_.transpose());
  for (int i = 1; i <= shape_.length(); ++i) {
    for (int j = 1; j <= shape_.row(i); ++j) out.at({j, i}) = at({i, j});
  }
  return out;
}

IntVector IntVector::extended(const Partition& outer, Offset off) const {
  IntVector out(outer);
  for (int i = 1; i <= shape_.length(); ++i) {
    for (int j = 1; j <= shape_.row(i); ++j) out.at({i + off.di, j + off.dj}) = at({i, j});
  }
  return out;
}

IntVector& IntVector::operator+=(const IntVector& other) {
  if (shape_ != other.shape_) throw DomainError("shape mismatch in vector sum");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& other) {
  if (shape_ != other.shape_) throw DomainError("shape mismatch in vector difference");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

IntVector operator*(std::int64_t c, IntVector a) {
  for (auto& x : a.values_) x *= c;
  return a;
}

std::string IntVector::to_string() const {
  std::ostringstream os;
  os << '[';
  bool first_row = true;
  for (const auto& row : rows()) {
    if (!first_row) os << ',';
    first_row = false;
    os << '[';
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
    os << ']';
  }
  os << ']';
  return os.str();
}

DimVector::DimVector(IntVector v) : IntVector(std::move(v)) {
  if (!is_nonnegative()) throw DomainError("dimension vector has a negative entry: " + to_string());
}

DimVector projective_vector(const StaircaseQuiver& q, Vertex v) {
  q.index(v);
  IntVector out(q.lambda());
  for (const Vertex& w : q.vertices()) {
    if (w.i <= v.i && w.j <= v.j) out.at(w) = 1;
  }
  return DimVector(std::move(out));
}

DimVector injective_vector(const StaircaseQuiver& q, Vertex v) {
  q.index(v);
  IntVector out(q.lambda());
  for (const Vertex& w : q.vertices()) {
    if (w.i >= v.i && w.j >= v.j) out.at(w) = 1;
  }
  return DimVector(std::move(out));
}

std::string to_dot(const StaircaseQuiver& q) {
  std::ostringstream os;
  os << "digraph \"Q(" << q.lambda().to_string() << ")\" {\n";
  os << "  node [shape=circle];\n";
  for (const Vertex& v : q.vertices()) {
    os << "  \"" << v.label() << "\" [label=\"" << v.label() << "\"];\n";
  }
  for (const Arrow& a : q.arrows()) {
    os << "  \"" << a.source.label() << "\" -> \"" << a.target.label() << "\" [label=\""
       << (a.kind == ArrowKind::H ? "alpha" : "beta") << "_" << a.source.label() << "\"];\n";
  }
  for (const Relation& r : q.relations()) {
    os << "  \"" << r.anchor.label() << "\" -> \"" << r.corner().label()
       << "\" [style=dotted, arrowhead=none, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace staircase
