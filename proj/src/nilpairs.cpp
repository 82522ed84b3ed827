#include "staircase/nilpairs.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "staircase/errors.hpp"
#include "staircase/modp.hpp"
#include "staircase/quadform.hpp"

namespace staircase {

namespace bundled {
extern const std::string_view kFamilyJson;
}

namespace {

std::size_t dim_at(const Representation& m, const StaircaseQuiver& q, Vertex v) {
  return static_cast<std::size_t>(m.dims[q.index(v)]);
}

std::string shape_text(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

std::string bideg(Bidegree st) { return "(" + std::to_string(st.first) + "," + std::to_string(st.second) + ")"; }

// Intertwiner equations f_t M_a − N_a f_s = 0 over the unknown blocks f_v
// (dim N_v × dim M_v, row-major), handed to `emit` one sparse row at a time.
template <typename Emit>
std::size_t intertwiner_rows(const Representation& m, const Representation& n, Emit emit) {
  if (m.lambda != n.lambda) throw DomainError("representations live on different diagrams");
  const StaircaseQuiver q(m.lambda);
  const std::size_t nv = q.size();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dims[v] * m.dims[v]);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    const std::size_t s = q.index(arrow.source), t = q.index(arrow.target);
    const std::size_t ms = m.dims[s], mt = m.dims[t], ns = n.dims[s], nt = n.dims[t];
    const RationalMatrix& ma = m.matrices[a];
    const RationalMatrix& na = n.matrices[a];
    for (std::size_t r = 0; r < nt; ++r) {
      for (std::size_t c = 0; c < ms; ++c) {
        std::map<std::size_t, Rational> row;
        for (std::size_t k = 0; k < mt; ++k)
          if (sgn(ma(k, c)) != 0) row[offset[t] + r * mt + k] += ma(k, c);
        for (std::size_t k = 0; k < ns; ++k)
          if (sgn(na(r, k)) != 0) row[offset[s] + k * ms + c] -= na(r, k);
        emit(row);
      }
    }
  }
  return offset[nv];
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::int64_t small(int lo, int hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine); }
  std::uint64_t field() { return std::uniform_int_distribution<std::uint64_t>(0, modp::kPrime - 1)(engine); }
};

}  // namespace

Representation zero_representation(const Partition& lambda, const DimVector& dims) {
  if (dims.shape() != lambda) throw DomainError("dimension vector does not match the diagram");
  const StaircaseQuiver q(lambda);
  Representation m{lambda, dims, {}};
  for (const Arrow& a : q.arrows())
    m.matrices.emplace_back(dims[q.index(a.target)], dims[q.index(a.source)]);
  return m;
}

Representation simple_representation(const Partition& lambda, Vertex v) {
  return zero_representation(lambda, simple_vector(StaircaseQuiver(lambda), v));
}

Representation projective_representation(const Partition& lambda, Vertex v) {
  const StaircaseQuiver q(lambda);
  Representation m = zero_representation(lambda, projective_vector(q, v));
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    if (m.dims.at(arrow.source) == 1 && m.dims.at(arrow.target) == 1) m.matrices[a](0, 0) = 1;
  }
  return m;
}

std::vector<std::string> relation_violations(const Representation& m) {
  std::vector<std::string> out;
  const StaircaseQuiver q(m.lambda);
  if (m.dims.shape() != m.lambda) return {"dimension vector does not match the diagram"};
  if (m.matrices.size() != q.arrows().size()) return {"wrong number of arrow matrices"};
  bool shapes_ok = true;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    const std::size_t r = dim_at(m, q, arrow.target), c = dim_at(m, q, arrow.source);
    if (m.matrices[a].rows() != r || m.matrices[a].cols() != c) {
      out.push_back("arrow " + arrow.id() + " has shape " + shape_text(m.matrices[a].rows(), m.matrices[a].cols()) +
                    ", expected " + shape_text(r, c));
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;
  for (const Relation& rel : q.relations()) {
    const Vertex x = rel.anchor;
    const auto& alpha = m.matrices[q.arrow_index("a:" + x.label())];
    const auto& beta = m.matrices[q.arrow_index("b:" + x.label())];
    const auto& beta_below = m.matrices[q.arrow_index("b:" + Vertex{x.i - 1, x.j}.label())];
    const auto& alpha_left = m.matrices[q.arrow_index("a:" + Vertex{x.i, x.j - 1}.label())];
    if (!(beta_below * alpha == alpha_left * beta))
      out.push_back("square anchored at (" + x.label() + ") does not commute");
  }
  return out;
}

Representation base_change(const Representation& m, const std::vector<RationalMatrix>& g) {
  const StaircaseQuiver q(m.lambda);
  if (g.size() != q.size()) throw DomainError("one base change per vertex expected");
  std::vector<RationalMatrix> inv(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    const std::size_t d = m.dims[v];
    if (g[v].rows() != d || g[v].cols() != d) throw DomainError("base change at " + q.vertices()[v].label() + " is misshaped");
    auto i = inverse(g[v]);
    if (!i) throw DomainError("base change at " + q.vertices()[v].label() + " is singular");
    inv[v] = std::move(*i);
  }
  Representation out = m;
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    out.matrices[a] = g[q.index(arrow.target)] * m.matrices[a] * inv[q.index(arrow.source)];
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  std::vector<SparseEchelon::Row> rows;
  const std::size_t unknowns = intertwiner_rows(m, n, [&](const std::map<std::size_t, Rational>& row) {
    SparseEchelon::Row r;
    for (const auto& [col, val] : row)
      if (sgn(val) != 0) r.emplace_back(col, val);
    if (!r.empty()) rows.push_back(std::move(r));
  });

  // Rank mod p never exceeds the rank over Q. If the mod-p kernel basis lifts
  // to rational vectors that solve the system exactly, the two ranks agree.
  modp::Echelon ech_p(unknowns);
  bool reducible = true;
  for (const auto& r : rows) {
    modp::Echelon::Row rp;
    for (const auto& [col, val] : r) {
      auto x = modp::reduce(val);
      if (!x) {
        reducible = false;
        break;
      }
      if (*x != 0) rp.emplace_back(col, *x);
    }
    if (!reducible) break;
    if (!rp.empty()) ech_p.add(std::move(rp));
  }
  if (reducible) {
    bool certified = true;
    for (const auto& xp : ech_p.nullspace()) {
      std::vector<Rational> x(unknowns);
      for (std::size_t k = 0; k < unknowns && certified; ++k) {
        auto lifted = modp::reconstruct(xp[k]);
        if (!lifted) certified = false;
        else x[k] = *lifted;
      }
      for (std::size_t r = 0; r < rows.size() && certified; ++r) {
        Rational dot = 0;
        for (const auto& [col, val] : rows[r]) dot += val * x[col];
        certified = sgn(dot) == 0;
      }
      if (!certified) break;
    }
    if (certified) return unknowns - ech_p.rank();
  }

  // Short rows first keeps fill-in down.
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  SparseEchelon ech(unknowns);
  for (auto& r : rows) ech.add(std::move(r));
  return unknowns - ech.rank();
}

bool is_isomorphic(const Representation& m, const Representation& n, int trials, std::uint64_t seed) {
  if (m.lambda != n.lambda) throw DomainError("representations live on different diagrams");
  if (m.dims != n.dims) return false;
  if (m.dims.is_zero()) return true;
  // Cheapest refutation first: an isomorphism is in particular a nonzero map.
  const std::size_t hom_mn = hom_dim(m, n);
  if (hom_mn == 0 || hom_dim(m, m) != hom_mn || hom_dim(n, n) != hom_mn) return false;

  modp::Echelon ech(0);
  std::vector<modp::Echelon::Row> rows;
  const std::size_t unknowns = intertwiner_rows(m, n, [&](const std::map<std::size_t, Rational>& row) {
    modp::Echelon::Row r;
    for (const auto& [col, val] : row) {
      auto x = modp::reduce(val);
      if (!x) throw DomainError("matrix entry not reducible modulo the sampling prime");
      if (*x != 0) r.emplace_back(col, *x);
    }
    if (!r.empty()) rows.push_back(std::move(r));
  });
  ech = modp::Echelon(unknowns);
  for (auto& r : rows) ech.add(std::move(r));
  const auto basis = ech.nullspace();
  if (basis.empty()) return false;

  const StaircaseQuiver q(m.lambda);
  std::vector<std::size_t> offset(q.size() + 1, 0);
  for (std::size_t v = 0; v < q.size(); ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(m.dims[v] * m.dims[v]);

  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::uint64_t> f(unknowns, 0);
    for (const auto& b : basis) {
      const std::uint64_t c = rng.field();
      for (std::size_t k = 0; k < unknowns; ++k) f[k] = modp::add(f[k], modp::mul(c, b[k]));
    }
    bool invertible = true;
    for (std::size_t v = 0; v < q.size() && invertible; ++v) {
      const std::size_t d = m.dims[v];
      if (d == 0) continue;
      std::vector<std::uint64_t> block(f.begin() + static_cast<std::ptrdiff_t>(offset[v]),
                                       f.begin() + static_cast<std::ptrdiff_t>(offset[v + 1]));
      invertible = modp::determinant(std::move(block), d) != 0;
    }
    if (invertible) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

int BigradedSpace::dim(Bidegree st) const {
  auto it = dims.find(st);
  return it == dims.end() ? 0 : it->second;
}

int BigradedSpace::total() const {
  int sum = 0;
  for (const auto& [st, d] : dims) sum += d;
  return sum;
}

Shape shape_lambda(const BigradedSpace& v) {
  int height = 0;
  for (const auto& [st, d] : v.dims) {
    if (d < 0) throw DomainError("negative dimension at " + bideg(st));
    if (d > 0 && (st.first < 1 || st.second < 1)) throw DomainError("bidegree " + bideg(st) + " outside the positive quadrant");
    if (d > 0) height = std::max(height, st.second);
  }
  if (height == 0) throw DomainError("the zero space has no shape");
  // Row t of sh(V) reaches as far right as any nonzero component at height ≥ t.
  std::vector<int> row(static_cast<std::size_t>(height) + 1, 0);
  for (const auto& [st, d] : v.dims)
    if (d > 0)
      for (int t = 1; t <= st.second; ++t) row[t] = std::max(row[t], st.first);
  Shape shape;
  std::vector<int> parts;
  for (int t = 1; t <= height; ++t) {
    for (int s = 1; s <= row[t]; ++s) shape.boxes.emplace_back(s, t);
    parts.push_back(row[t]);
  }
  shape.lambda = Partition(parts);
  return shape;
}

DimVector dimension_vector(const BigradedSpace& v) {
  const Shape shape = shape_lambda(v);
  IntVector out(shape.lambda);
  for (const auto& [s, t] : shape.boxes) out.at(Vertex{t, s}) = v.dim({s, t});
  return DimVector(std::move(out));
}

std::vector<std::string> validate_pair(const GradedPair& p) {
  std::vector<std::string> out;
  for (const auto& [st, d] : p.space.dims)
    if (d < 0) out.push_back("negative dimension at " + bideg(st));
  if (!out.empty()) return out;

  auto check_maps = [&](const std::map<Bidegree, RationalMatrix>& maps, const char* name, bool lowers_s) {
    for (const auto& [st, mat] : maps) {
      const Bidegree to = lowers_s ? Bidegree{st.first - 1, st.second} : Bidegree{st.first, st.second - 1};
      const std::size_t r = p.space.dim(to), c = p.space.dim(st);
      if (to.first < 1 || to.second < 1) {
        if (!mat.is_zero() || mat.rows() != 0) out.push_back(std::string(name) + " at " + bideg(st) + " maps outside the grading");
        continue;
      }
      if (mat.rows() != r || mat.cols() != c)
        out.push_back(std::string(name) + " at " + bideg(st) + " has shape " + shape_text(mat.rows(), mat.cols()) +
                      ", expected " + shape_text(r, c));
    }
  };
  check_maps(p.phi, "phi", true);
  check_maps(p.psi, "psi", false);
  if (!out.empty()) return out;

  auto get = [&](const std::map<Bidegree, RationalMatrix>& maps, Bidegree st, Bidegree to) {
    auto it = maps.find(st);
    return it != maps.end() ? it->second : RationalMatrix(p.space.dim(to), p.space.dim(st));
  };
  int max_s = 0, max_t = 0;
  for (const auto& [st, d] : p.space.dims) {
    max_s = std::max(max_s, st.first);
    max_t = std::max(max_t, st.second);
  }
  for (int t = 2; t <= max_t; ++t) {
    for (int s = 2; s <= max_s; ++s) {
      const RationalMatrix left = get(p.psi, {s - 1, t}, {s - 1, t - 1}) * get(p.phi, {s, t}, {s - 1, t});
      const RationalMatrix right = get(p.phi, {s, t - 1}, {s - 1, t - 1}) * get(p.psi, {s, t}, {s, t - 1});
      if (!(left == right)) out.push_back("square " + bideg({s, t}) + " does not commute");
    }
  }
  return out;
}

Representation to_representation(const GradedPair& p) {
  const auto violations = validate_pair(p);
  if (!violations.empty()) throw DomainError("invalid graded pair: " + violations.front());
  const DimVector dims = dimension_vector(p.space);
  const StaircaseQuiver q(dims.shape());
  Representation m = zero_representation(dims.shape(), dims);
  for (std::size_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    const Bidegree st{arrow.source.j, arrow.source.i};
    const auto& maps = arrow.kind == ArrowKind::H ? p.psi : p.phi;
    if (auto it = maps.find(st); it != maps.end()) m.matrices[a] = it->second;
  }
  return m;
}

bool finiteness_partition(const Partition& lambda) { return classify(lambda) == RepType::Finite; }

std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return "finite";
    case Finiteness::Infinite: return "infinite";
    case Finiteness::Unknown: return "unknown";
  }
  return "?";
}

Finiteness finiteness_space(const BigradedSpace& v) { return finiteness_dims(dimension_vector(v)); }

Finiteness finiteness_dims(const DimVector& dims) {
  const Partition& lambda = dims.shape();
  if (classify(lambda) == RepType::Finite) return Finiteness::Finite;

  static const std::vector<DimVector> nullroots = [] {
    std::vector<DimVector> out;
    for (const Partition& tc : tame_concealed_list()) out.push_back(tame_concealed_nullroot(tc));
    return out;
  }();
  for (const DimVector& root : nullroots) {
    for (Offset off : embeddings(root.shape(), lambda)) {
      const IntVector lifted = root.extended(lambda, off);
      bool dominated = true;
      for (std::size_t k = 0; k < lifted.size() && dominated; ++k) dominated = dims[k] >= lifted[k];
      if (dominated) return Finiteness::Infinite;
    }
  }
  if (classify(lambda) == RepType::TameConcealed) return Finiteness::Finite;
  return Finiteness::Unknown;
}

// ---------------------------------------------------------------------------

const std::vector<FamilyDescriptor>& bundled_families() {
  static const std::vector<FamilyDescriptor> families = [] {
    std::vector<FamilyDescriptor> out;
    const auto doc = nlohmann::json::parse(bundled::kFamilyJson);
    for (const auto& e : doc.at("families")) {
      FamilyDescriptor f;
      f.lambda = Partition::parse(e.at("lambda").get<std::string>());
      f.base = Partition::parse(e.at("base").get<std::string>());
      const auto src = e.at("source").get<std::vector<int>>();
      const auto tgt = e.at("target").get<std::vector<int>>();
      f.source = {src.at(0), src.at(1)};
      f.target = {tgt.at(0), tgt.at(1)};
      f.base_dims = DimVector::from_rows(f.base, e.at("base_rows").get<std::vector<std::vector<std::int64_t>>>());
      out.push_back(std::move(f));
    }
    return out;
  }();
  return families;
}

const FamilyDescriptor& family_for(const Partition& lambda) {
  for (const auto& f : bundled_families())
    if (f.lambda == lambda) return f;
  throw DomainError("no bundled family for " + lambda.to_string());
}

Representation base_module(const FamilyDescriptor& f, std::uint64_t seed) {
  const StaircaseQuiver q(f.base);
  Rng rng(seed);
  auto d = [&](Vertex v) { return static_cast<std::size_t>(f.base_dims.at(v)); };

  for (int attempt = 0; attempt < 64; ++attempt) {
    Representation m = zero_representation(f.base, f.base_dims);
    for (const Vertex& v : q.vertices()) {
      const bool has_alpha = v.i >= 2, has_beta = v.j >= 2;
      const std::size_t dv = d(v);
      const std::size_t ra = has_alpha ? d({v.i - 1, v.j}) : 0;
      const std::size_t rb = has_beta ? d({v.i, v.j - 1}) : 0;
      const std::size_t na = ra * dv, nb = rb * dv;  // unknowns: α (ra×dv) then β (rb×dv)
      if (na + nb == 0) continue;

      std::vector<std::vector<Rational>> basis;
      if (has_alpha && has_beta) {
        // β_{i-1,j} α_{i,j} = α_{i,j-1} β_{i,j}
        const auto& bb = m.matrices[q.arrow_index("b:" + Vertex{v.i - 1, v.j}.label())];
        const auto& al = m.matrices[q.arrow_index("a:" + Vertex{v.i, v.j - 1}.label())];
        SparseEchelon ech(na + nb);
        for (std::size_t r = 0; r < bb.rows(); ++r) {
          for (std::size_t c = 0; c < dv; ++c) {
            std::map<std::size_t, Rational> row;
            for (std::size_t k = 0; k < ra; ++k)
              if (sgn(bb(r, k)) != 0) row[k * dv + c] += bb(r, k);
            for (std::size_t k = 0; k < rb; ++k)
              if (sgn(al(r, k)) != 0) row[na + k * dv + c] -= al(r, k);
            SparseEchelon::Row sr;
            for (auto& [col, val] : row)
              if (sgn(val) != 0) sr.emplace_back(col, val);
            if (!sr.empty()) ech.add(std::move(sr));
          }
        }
        basis = ech.nullspace();
      } else {
        for (std::size_t k = 0; k < na + nb; ++k) {
          std::vector<Rational> e(na + nb);
          e[k] = 1;
          basis.push_back(std::move(e));
        }
      }
      std::vector<Rational> x(na + nb);
      for (const auto& b : basis) {
        const IntRow prim = primitive_integer_vector(b);
        const std::int64_t c = rng.small(-3, 3);
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += Rational(static_cast<long>(c * prim[k]));
      }
      if (has_alpha) {
        auto& alpha = m.matrices[q.arrow_index("a:" + v.label())];
        for (std::size_t r = 0; r < ra; ++r)
          for (std::size_t c = 0; c < dv; ++c) alpha(r, c) = x[r * dv + c];
      }
      if (has_beta) {
        auto& beta = m.matrices[q.arrow_index("b:" + v.label())];
        for (std::size_t r = 0; r < rb; ++r)
          for (std::size_t c = 0; c < dv; ++c) beta(r, c) = x[na + r * dv + c];
      }
    }
    if (hom_dim(m, m) == 1) return m;
  }
  throw InvariantError("could not sample a brick with dimension vector " + f.base_dims.to_string());
}

Representation two_param_family(const FamilyDescriptor& f, const std::vector<Rational>& params,
                                std::uint64_t seed) {
  return two_param_family(f, base_module(f, seed), params);
}

Representation two_param_family(const FamilyDescriptor& f, const Representation& base,
                                const std::vector<Rational>& params) {
  if (base.lambda != f.base || base.dims != f.base_dims) throw DomainError("base module does not match the family");
  const std::size_t dy = static_cast<std::size_t>(f.base_dims.at(f.target));
  if (params.size() != dy)
    throw DomainError("family on " + f.lambda.to_string() + " takes " + std::to_string(dy) + " parameters");
  if (std::all_of(params.begin(), params.end(), [](const Rational& r) { return sgn(r) == 0; }))
    throw DomainError("the parameter vector must be nonzero");

  IntVector dims = f.base_dims.extended(f.lambda);
  dims.at(f.source) = 1;
  Representation m = zero_representation(f.lambda, DimVector(dims));
  const StaircaseQuiver big(f.lambda), small(f.base);
  for (std::size_t a = 0; a < small.arrows().size(); ++a)
    m.matrices[big.arrow_index(small.arrows()[a].id())] = base.matrices[a];
  const char* kind = f.source.i == f.target.i ? "b:" : "a:";
  RationalMatrix& embed = m.matrices[big.arrow_index(kind + f.source.label())];
  for (std::size_t r = 0; r < dy; ++r) embed(r, 0) = params[r];
  return m;
}

// ---------------------------------------------------------------------------

std::uint64_t oracle_count_small(const Partition& lambda, const DimVector& d, int field_size) {
  if (field_size != 2 && field_size != 3) throw DomainError("oracle field size must be 2 or 3");
  if (d.shape() != lambda) throw DomainError("dimension vector does not match the diagram");
  const StaircaseQuiver q(lambda);
  const int p = field_size;

  struct Block {
    std::size_t s, t, rows, cols, offset;
  };
  std::vector<Block> blocks;
  std::size_t entries = 0;
  for (const Arrow& a : q.arrows()) {
    Block b{q.index(a.source), q.index(a.target), 0, 0, entries};
    b.rows = d[b.t];
    b.cols = d[b.s];
    entries += b.rows * b.cols;
    blocks.push_back(b);
  }
  if (entries > 12) throw DomainError("oracle limited to 12 matrix entries, got " + std::to_string(entries));
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < entries; ++k) total *= static_cast<std::uint64_t>(p);

  auto decode = [&](std::uint64_t code, std::vector<int>& x) {
    x.assign(entries, 0);
    for (std::size_t k = 0; k < entries; ++k) {
      x[k] = static_cast<int>(code % p);
      code /= p;
    }
  };
  auto encode = [&](const std::vector<int>& x) {
    std::uint64_t code = 0;
    for (std::size_t k = entries; k-- > 0;) code = code * p + static_cast<std::uint64_t>(x[k]);
    return code;
  };
  auto entry = [&](const std::vector<int>& x, std::size_t a, std::size_t r, std::size_t c) {
    return x[blocks[a].offset + r * blocks[a].cols + c];
  };

  std::vector<std::array<std::size_t, 4>> squares;  // α, β, β_below, α_left
  for (const Relation& rel : q.relations()) {
    const Vertex x = rel.anchor;
    squares.push_back({q.arrow_index("a:" + x.label()), q.arrow_index("b:" + x.label()),
                       q.arrow_index("b:" + Vertex{x.i - 1, x.j}.label()),
                       q.arrow_index("a:" + Vertex{x.i, x.j - 1}.label())});
  }
  auto satisfies = [&](const std::vector<int>& x) {
    for (const auto& [al, be, bb, alf] : squares) {
      for (std::size_t r = 0; r < blocks[bb].rows; ++r) {
        for (std::size_t c = 0; c < blocks[al].cols; ++c) {
          int lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < blocks[al].rows; ++k) lhs += entry(x, bb, r, k) * entry(x, al, k, c);
          for (std::size_t k = 0; k < blocks[be].rows; ++k) rhs += entry(x, alf, r, k) * entry(x, be, k, c);
          if ((lhs - rhs) % p != 0) return false;
        }
      }
    }
    return true;
  };

  // Generators of Π GL(d_v): elementary transvections and one-coordinate
  // scalings by a primitive root. Each acts on arrows at v: M ↦ gM at the
  // target, M ↦ Mg⁻¹ at the source.
  struct Gen {
    std::size_t v;
    std::vector<int> g, ginv;  // d_v × d_v
  };
  std::vector<Gen> gens;
  for (std::size_t v = 0; v < q.size(); ++v) {
    const std::size_t n = d[v];
    auto ident = [&] {
      std::vector<int> m(n * n, 0);
      for (std::size_t k = 0; k < n; ++k) m[k * n + k] = 1;
      return m;
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Gen g{v, ident(), ident()};
        g.g[i * n + j] = 1;
        g.ginv[i * n + j] = p - 1;
        gens.push_back(std::move(g));
      }
      if (p == 3) {
        Gen g{v, ident(), ident()};
        g.g[i * n + i] = 2;
        g.ginv[i * n + i] = 2;
        gens.push_back(std::move(g));
      }
    }
  }

  std::vector<std::uint64_t> parent(total);
  std::iota(parent.begin(), parent.end(), std::uint64_t{0});
  std::function<std::uint64_t(std::uint64_t)> find = [&](std::uint64_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<bool> valid(total, false);
  std::vector<int> x, y;
  for (std::uint64_t code = 0; code < total; ++code) {
    decode(code, x);
    valid[code] = satisfies(x);
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!valid[code]) continue;
    decode(code, x);
    for (const Gen& g : gens) {
      y = x;
      const std::size_t n = d[g.v];
      for (std::size_t a = 0; a < blocks.size(); ++a) {
        const Block& b = blocks[a];
        if (b.t == g.v) {
          for (std::size_t r = 0; r < b.rows; ++r)
            for (std::size_t c = 0; c < b.cols; ++c) {
              int s = 0;
              for (std::size_t k = 0; k < n; ++k) s += g.g[r * n + k] * entry(x, a, k, c);
              y[b.offset + r * b.cols + c] = s % p;
            }
        }
      }
      const std::vector<int> mid = y;
      for (std::size_t a = 0; a < blocks.size(); ++a) {
        const Block& b = blocks[a];
        if (b.s == g.v) {
          for (std::size_t r = 0; r < b.rows; ++r)
            for (std::size_t c = 0; c < b.cols; ++c) {
              int s = 0;
              for (std::size_t k = 0; k < n; ++k) s += entry(mid, a, r, k) * g.ginv[k * n + c];
              y[b.offset + r * b.cols + c] = s % p;
            }
        }
      }
      const std::uint64_t other = encode(y);
      if (!valid[other]) throw InvariantError("base change left the relation variety");
      parent[find(code)] = find(other);
    }
  }
  std::uint64_t orbits = 0;
  for (std::uint64_t code = 0; code < total; ++code)
    if (valid[code] && find(code) == code) ++orbits;
  return orbits;
}

std::uint64_t krs_count(const std::vector<DimVector>& roots, const DimVector& d) {
  std::vector<Vec> rs;
  for (const auto& r : roots) {
    if (r.shape() != d.shape()) throw DomainError("root shape differs from the dimension vector");
    if (!r.is_zero()) rs.emplace_back(r.values().begin(), r.values().end());
  }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  std::map<std::pair<Vec, std::size_t>, std::uint64_t> memo;
  std::function<std::uint64_t(const Vec&, std::size_t)> count = [&](const Vec& rest, std::size_t start) -> std::uint64_t {
    if (std::all_of(rest.begin(), rest.end(), [](std::int64_t v) { return v == 0; })) return 1;
    auto key = std::make_pair(rest, start);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t k = start; k < rs.size(); ++k) {
      Vec next = rest;
      bool fits = true;
      for (std::size_t i = 0; i < next.size() && fits; ++i) fits = (next[i] -= rs[k][i]) >= 0;
      if (fits) total += count(next, k);
    }
    memo.emplace(key, total);
    return total;
  };
  return count(Vec(d.values().begin(), d.values().end()), 0);
}

}  // namespace staircase
