#include "staircase/arquiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "staircase/errors.hpp"
#include "staircase/quadform.hpp"

namespace staircase {

namespace {

using Key = std::vector<std::int64_t>;

Key key_of(const IntVector& v) { return Key(v.values().begin(), v.values().end()); }

class Knitter {
 public:
  Knitter(const Partition& lambda, int slice_limit)
      : quiver_(lambda), slice_limit_(slice_limit) {
    ar_.lambda = lambda;
    for (const Vertex& v : quiver_.vertices()) {
      DimVector p = projective_vector(quiver_, v);
      IntVector rad = p - IntVector::unit(lambda, v);
      if (rad.is_zero()) roots_.push_back(v);
      else pending_.emplace(key_of(rad), v);
      injective_.emplace(key_of(injective_vector(quiver_, v)), v);
    }
  }

  ARQuiver run() {
    for (const Vertex& v : roots_) insert_projective(v, std::nullopt);
    bool progress = true;
    while (progress && !overflow_) {
      progress = false;
      for (std::size_t id = 0; id < ar_.vertices.size() && !overflow_; ++id) {
        if (ready(id)) {
          translate(id);
          progress = true;
        }
      }
    }
    ar_.complete = !overflow_ && std::none_of(ar_.vertices.begin(), ar_.vertices.end(), [&](const ARVertex& x) {
      return !x.injective && !translated_[x.id];
    });
    return std::move(ar_);
  }

 private:
  std::size_t add_vertex(IntVector dim, Vertex orbit, int slice, std::optional<std::size_t> tau) {
    if (!dim.is_nonnegative() || dim.is_zero())
      throw InvariantError("knitting produced the non-positive dimension vector " + dim.to_string());
    Key key = key_of(dim);
    if (by_dim_.count(key))
      throw InvariantError("knitting produced the dimension vector " + dim.to_string() + " twice");
    ARVertex x;
    x.id = ar_.vertices.size();
    x.dim = DimVector(std::move(dim));
    x.tau_orbit = orbit;
    x.slice = slice;
    x.tau = tau;
    if (auto it = injective_.find(key); it != injective_.end()) x.injective = it->second;
    by_dim_.emplace(key, x.id);
    ar_.vertices.push_back(std::move(x));
    translated_.push_back(false);
    return ar_.vertices.back().id;
  }

  // A projective enters as soon as the vertex carrying its radical exists.
  void on_new_vertex(std::size_t id) {
    auto range = pending_.equal_range(key_of(ar_.vertices[id].dim));
    std::vector<Vertex> due;
    for (auto it = range.first; it != range.second; ++it) due.push_back(it->second);
    pending_.erase(range.first, range.second);
    std::sort(due.begin(), due.end());
    for (const Vertex& v : due) insert_projective(v, id);
  }

  void insert_projective(Vertex v, std::optional<std::size_t> radical) {
    const std::size_t id = add_vertex(projective_vector(quiver_, v), v, 0, std::nullopt);
    ar_.vertices[id].projective = v;
    ++ar_.projectives_inserted;
    if (radical) ar_.arrows.push_back({*radical, id});
    out_.resize(ar_.vertices.size());
    in_.resize(ar_.vertices.size());
    if (radical) {
      out_[*radical].push_back(id);
      in_[id].push_back(*radical);
    }
    on_new_vertex(id);
  }

  bool ready(std::size_t id) const {
    const ARVertex& x = ar_.vertices[id];
    if (translated_[id] || x.injective) return false;
    if (x.slice + 1 >= slice_limit_) return false;
    for (std::size_t w : in_[id]) {
      if (!ar_.vertices[w].injective && !translated_[w]) return false;
    }
    return true;
  }

  // τ⁻X has dimension Σ dim(successors of X) − dim X; its predecessors are
  // exactly the successors of X.
  void translate(std::size_t id) {
    translated_[id] = true;
    IntVector dim(ar_.lambda);
    for (std::size_t y : out_[id]) {
      for (std::size_t k = 0; k < dim.size(); ++k) {
        if (__builtin_add_overflow(dim[k], ar_.vertices[y].dim[k], &dim[k])) {
          overflow_ = true;
          return;
        }
      }
    }
    dim -= ar_.vertices[id].dim;
    const std::vector<std::size_t> middle = out_[id];
    const std::size_t z = add_vertex(std::move(dim), ar_.vertices[id].tau_orbit, ar_.vertices[id].slice + 1, id);
    out_.resize(ar_.vertices.size());
    in_.resize(ar_.vertices.size());
    for (std::size_t y : middle) {
      ar_.arrows.push_back({y, z});
      out_[y].push_back(z);
      in_[z].push_back(y);
    }
    on_new_vertex(z);
  }

  StaircaseQuiver quiver_;
  int slice_limit_;
  ARQuiver ar_;
  std::vector<Vertex> roots_;
  std::multimap<Key, Vertex> pending_;
  std::map<Key, Vertex> injective_;
  std::map<Key, std::size_t> by_dim_;
  std::vector<bool> translated_;
  std::vector<std::vector<std::size_t>> out_, in_;
  bool overflow_ = false;
};

std::vector<int> arm_lengths(std::size_t center, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<int> arms;
  for (std::size_t start : adj[center]) {
    int len = 1;
    std::size_t prev = center, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    if (adj[cur].size() > 2) return {};  // reached another branch point
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

}  // namespace

ARQuiver knit(const Partition& lambda, int slice_limit) {
  if (slice_limit < 0) throw DomainError("slice limit must be positive");
  if (slice_limit == 0) slice_limit = 10 * lambda.size();
  return Knitter(lambda, slice_limit).run();
}

std::size_t count_indecomposables(const Partition& lambda) {
  if (classify(lambda) != RepType::Finite)
    throw DomainError(lambda.to_string() + " is not representation-finite");
  return positive_roots_raw(tits_form(build_quiver(lambda))).size();
}

std::vector<std::string> mesh_violations(const ARQuiver& ar) {
  std::vector<std::string> out;
  const std::size_t n = ar.vertices.size();
  std::vector<std::vector<std::size_t>> succ(n), pred(n);
  for (const ARArrow& a : ar.arrows) {
    succ[a.source].push_back(a.target);
    pred[a.target].push_back(a.source);
  }
  for (const ARVertex& z : ar.vertices) {
    if (!z.tau) continue;
    const ARVertex& x = ar.vertices[*z.tau];
    IntVector lhs = x.dim + z.dim;
    IntVector from_x(ar.lambda), into_z(ar.lambda);
    for (std::size_t y : succ[x.id]) from_x += ar.vertices[y].dim;
    for (std::size_t y : pred[z.id]) into_z += ar.vertices[y].dim;
    if (lhs != from_x || lhs != into_z)
      out.push_back("mesh ending at " + z.dim.to_string() + " is not additive");
  }
  return out;
}

bool has_sincere_preprojective(const ARQuiver& ar) {
  return std::any_of(ar.vertices.begin(), ar.vertices.end(),
                     [](const ARVertex& x) { return x.dim.is_sincere(); });
}

OrbitType recognize_graph(std::size_t n, const std::vector<OrbitEdge>& edges) {
  using K = OrbitType::Kind;
  std::vector<UnitForm::Term> terms;
  std::vector<std::vector<std::size_t>> adj(n);
  bool multi = false;
  for (const OrbitEdge& e : edges) {
    terms.push_back({std::min(e.a, e.b), std::max(e.a, e.b), -static_cast<std::int64_t>(e.multiplicity)});
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
    multi = multi || e.multiplicity > 1;
  }
  const UnitForm form(n, terms);
  const int nodes = static_cast<int>(n);

  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v)
    if (adj[v].size() > 2) branch.push_back(v);

  if (is_positive_definite(form)) {
    if (branch.empty()) return {K::A, nodes};
    const std::vector<int> arms = arm_lengths(branch.front(), adj);
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return {K::D, nodes};
    if (arms == std::vector<int>{1, 2, 2}) return {K::E6, 6};
    if (arms == std::vector<int>{1, 2, 3}) return {K::E7, 7};
    if (arms == std::vector<int>{1, 2, 4}) return {K::E8, 8};
    throw InvariantError("positive definite graph of unknown Dynkin shape");
  }
  if (is_psd(form) && radical_basis_raw(form).size() == 1) {
    if (branch.empty()) return {K::ATilde, nodes - 1};  // cycle, or a double edge
    if (branch.size() == 1 && !multi) {
      const std::vector<int> arms = arm_lengths(branch.front(), adj);
      if (arms == std::vector<int>{2, 2, 2}) return {K::E6Tilde, 6};
      if (arms == std::vector<int>{1, 3, 3}) return {K::E7Tilde, 7};
      if (arms == std::vector<int>{1, 2, 5}) return {K::E8Tilde, 8};
    }
    return {K::DTilde, nodes - 1};
  }
  return {K::Wild, 0};
}

OrbitQuiver orbit_quiver(const ARQuiver& ar) {
  if (!ar.all_projectives_inserted()) throw DomainError("orbit quiver undefined on partial component");
  OrbitQuiver oq;
  const StaircaseQuiver q(ar.lambda);
  oq.nodes = q.vertices();
  std::map<std::pair<std::size_t, std::size_t>, int> between;  // (X, Y) vertex ids -> #arrows
  for (const ARArrow& a : ar.arrows) ++between[{a.source, a.target}];
  std::map<std::pair<std::size_t, std::size_t>, int> mult;
  for (const auto& [pair, count] : between) {
    std::size_t a = q.index(ar.vertices[pair.first].tau_orbit);
    std::size_t b = q.index(ar.vertices[pair.second].tau_orbit);
    if (a == b) continue;
    auto key = std::minmax(a, b);
    int& m = mult[{key.first, key.second}];
    m = std::max(m, count);
  }
  for (const auto& [pair, m] : mult) oq.edges.push_back({pair.first, pair.second, m});
  oq.recognized_type = recognize_graph(oq.nodes.size(), oq.edges);
  return oq;
}

std::string to_dot(const ARQuiver& ar) {
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n  node [shape=box, fontsize=10];\n";
  for (const ARVertex& x : ar.vertices) {
    os << "  m" << x.id << " [label=\"" << x.dim.to_string() << "\"";
    if (x.projective) os << ", color=blue";
    if (x.injective) os << ", style=bold";
    os << "];\n";
  }
  for (const ARArrow& a : ar.arrows) os << "  m" << a.source << " -> m" << a.target << ";\n";
  for (const ARVertex& x : ar.vertices)
    if (x.tau) os << "  m" << x.id << " -> m" << *x.tau << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const OrbitQuiver& oq) {
  std::ostringstream os;
  os << "graph orbits {\n  label=\"" << oq.recognized_type.to_string() << "\";\n";
  for (std::size_t k = 0; k < oq.nodes.size(); ++k)
    os << "  o" << k << " [label=\"" << oq.nodes[k].label() << "\"];\n";
  for (const OrbitEdge& e : oq.edges) {
    os << "  o" << e.a << " -- o" << e.b;
    if (e.multiplicity > 1) os << " [label=\"" << e.multiplicity << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace staircase
