#include "staircase/json_io.hpp"

#include "staircase/errors.hpp"

namespace staircase::json {

namespace {

Bidegree parse_bidegree(const std::string& key) {
  const auto comma = key.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(key);
    std::size_t used = 0;
    const int s = std::stoi(key.substr(0, comma), &used);
    const int t = std::stoi(key.substr(comma + 1));
    return {s, t};
  } catch (const std::exception&) {
    throw ParseError("bad bidegree key \"" + key + "\"; expected \"s,t\"");
  }
}

std::string key_of(Bidegree st) { return std::to_string(st.first) + "," + std::to_string(st.second); }

Partition decode_lambda(const json& j) {
  if (j.is_string()) return Partition::parse(j.get<std::string>());
  return Partition(j.get<std::vector<int>>());
}

Rational decode_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw ParseError("matrix entries must be integers or rational strings");
}

template <typename F>
auto guarded(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

std::map<Bidegree, RationalMatrix> decode_maps(const json& j, const BigradedSpace& space, bool lowers_s) {
  std::map<Bidegree, RationalMatrix> out;
  for (const auto& [key, value] : j.items()) {
    const Bidegree st = parse_bidegree(key);
    const Bidegree to = lowers_s ? Bidegree{st.first - 1, st.second} : Bidegree{st.first, st.second - 1};
    out.emplace(st, decode_matrix(value, space.dim(to), space.dim(st)));
  }
  return out;
}

json encode_maps(const std::map<Bidegree, RationalMatrix>& maps) {
  json out = json::object();
  for (const auto& [st, m] : maps) out[key_of(st)] = encode(m);
  return out;
}

}  // namespace

json parse(const std::string& text) {
  return guarded([&] { return json::parse(text); });
}

json encode(const IntVector& v) { return {{"lambda", v.shape().parts()}, {"rows", v.rows()}}; }

IntVector decode_int_vector(const json& j) {
  return guarded([&] {
    return IntVector::from_rows(decode_lambda(j.at("lambda")),
                                j.at("rows").get<std::vector<std::vector<std::int64_t>>>());
  });
}

json encode(const FormVerdict& v, const UnitForm& f) {
  json out = {{"decision", to_string(v.decision)}, {"bound", v.bound}};
  if (v.witness) {
    out["witness"] = encode(f.shaped(*v.witness));
    out["value"] = v.witness_value;
  } else {
    out["witness"] = nullptr;
    out["value"] = nullptr;
  }
  return out;
}

json encode(const ClassificationReport& r) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    json item = {{"criterion", c.criterion},
                 {"verdict", to_string(c.outcome)},
                 {"supports_claim", c.supports_claim},
                 {"detail", c.detail}};
    item["certificate"] = c.certificate ? encode(*c.certificate) : json(nullptr);
    checks.push_back(std::move(item));
  }
  return {{"lambda", r.lambda.parts()},
          {"claimed", to_string(r.claimed)},
          {"consistent", r.consistent},
          {"complete", r.complete},
          {"checks", checks}};
}

json encode(const ARQuiver& ar) {
  json vertices = json::array();
  for (const ARVertex& x : ar.vertices) {
    vertices.push_back({{"id", x.id},
                        {"rows", x.dim.rows()},
                        {"projective", x.projective ? json(x.projective->label()) : json(nullptr)},
                        {"injective", x.injective ? json(x.injective->label()) : json(nullptr)},
                        {"tau_orbit", x.tau_orbit.label()},
                        {"slice", x.slice},
                        {"tau", x.tau ? json(*x.tau) : json(nullptr)}});
  }
  json arrows = json::array();
  for (const ARArrow& a : ar.arrows) arrows.push_back({a.source, a.target});
  return {{"lambda", ar.lambda.parts()},
          {"complete", ar.complete},
          {"projectives_inserted", ar.projectives_inserted},
          {"vertices", vertices},
          {"arrows", arrows}};
}

json encode(const OrbitQuiver& oq) {
  json nodes = json::array();
  for (const Vertex& v : oq.nodes) nodes.push_back(v.label());
  json edges = json::array();
  for (const OrbitEdge& e : oq.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"multiplicity", e.multiplicity}});
  return {{"nodes", nodes}, {"edges", edges}, {"type", oq.recognized_type.to_string()}};
}

json encode(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix decode_matrix(const json& j, std::size_t rows, std::size_t cols) {
  return guarded([&] {
    if (!j.is_array()) throw ParseError("a matrix must be an array of rows");
    if (j.empty()) return RationalMatrix(0, rows == 0 ? cols : 0);
    const std::size_t r = j.size();
    const std::size_t c = j.at(0).size();
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (!j.at(i).is_array() || j.at(i).size() != c) throw ParseError("matrix rows have different lengths");
      for (std::size_t k = 0; k < c; ++k) m(i, k) = decode_rational(j.at(i).at(k));
    }
    return m;
  });
}

json encode(const BigradedSpace& v) {
  json dims = json::object();
  for (const auto& [st, d] : v.dims) dims[key_of(st)] = d;
  return {{"dims", dims}};
}

BigradedSpace decode_space(const json& j) {
  return guarded([&] {
    BigradedSpace v;
    for (const auto& [key, value] : j.at("dims").items()) v.dims[parse_bidegree(key)] = value.get<int>();
    return v;
  });
}

json encode(const GradedPair& p) {
  json out = encode(p.space);
  out["phi"] = encode_maps(p.phi);
  out["psi"] = encode_maps(p.psi);
  return out;
}

GradedPair decode_pair(const json& j) {
  return guarded([&] {
    GradedPair p;
    p.space = decode_space(j);
    if (j.contains("phi")) p.phi = decode_maps(j.at("phi"), p.space, true);
    if (j.contains("psi")) p.psi = decode_maps(j.at("psi"), p.space, false);
    return p;
  });
}

json encode(const Representation& m) {
  const StaircaseQuiver q(m.lambda);
  json out = encode(static_cast<const IntVector&>(m.dims));
  json mats = json::object();
  for (std::size_t a = 0; a < q.arrows().size(); ++a) mats[q.arrows()[a].id()] = encode(m.matrices[a]);
  out["matrices"] = mats;
  return out;
}

Representation decode_representation(const json& j) {
  return guarded([&] {
    const DimVector dims(decode_int_vector(j));
    Representation m = zero_representation(dims.shape(), dims);
    const StaircaseQuiver q(dims.shape());
    if (j.contains("matrices")) {
      for (const auto& [id, value] : j.at("matrices").items()) {
        const std::size_t a = q.arrow_index(id);
        const Arrow& arrow = q.arrows()[a];
        m.matrices[a] = decode_matrix(value, dims.at(arrow.target), dims.at(arrow.source));
      }
    }
    return m;
  });
}

}  // namespace staircase::json
