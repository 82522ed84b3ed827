// staircase — command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 domain or validation error,
// 3 inconclusive (search budget or slice limit reached).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "staircase/arquiver.hpp"
#include "staircase/classifier.hpp"
#include "staircase/errors.hpp"
#include "staircase/json_io.hpp"
#include "staircase/nilpairs.hpp"
#include "staircase/quadform.hpp"

using namespace staircase;
using Json = nlohmann::json;
namespace sj = staircase::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDomain = 2;
constexpr int kInconclusive = 3;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json rows_json(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(sj::encode(v));
  return out;
}

int run_classify(const Partition& lambda, bool verify, bool as_json) {
  if (!verify) {
    const RepType t = classify(lambda);
    if (as_json) emit({{"lambda", lambda.parts()}, {"type", to_string(t)}});
    else std::cout << to_string(t) << '\n';
    return kOk;
  }
  const ClassificationReport r = verify_classification(lambda);
  if (as_json) {
    emit(sj::encode(r));
  } else {
    std::cout << to_string(r.claimed) << '\n';
    for (const Check& c : r.checks)
      std::cout << "  " << c.criterion << ": " << to_string(c.outcome) << (c.supports_claim ? "" : " (against claim)")
                << (c.detail.empty() ? "" : " — " + c.detail) << '\n';
    std::cout << (r.consistent ? "consistent" : "INCONSISTENT") << (r.complete ? "" : ", incomplete") << '\n';
  }
  if (!r.consistent) return kDomain;
  return r.complete ? kOk : kInconclusive;
}

struct FormFlags {
  std::string eval_path;
  bool gram = false, radical = false, psd = false, roots = false, corank = false, nullroot = false;
  bool weakly_positive = false, weakly_nonnegative = false;
};

int run_form(const Partition& lambda, const FormFlags& f) {
  const UnitForm form = tits_form(build_quiver(lambda));
  if (!f.eval_path.empty()) {
    IntVector x = sj::decode_int_vector(sj::parse(slurp(f.eval_path)));
    emit({{"q", form.eval(x)}});
  } else if (f.gram) {
    emit(sj::encode(gram(form)));
  } else if (f.radical) {
    const auto basis = radical_basis(form);
    emit({{"rank", basis.size()}, {"basis", rows_json(basis)}});
  } else if (f.psd) {
    emit({{"psd", is_psd(form)}});
  } else if (f.roots) {
    std::vector<IntVector> roots;
    for (const auto& r : positive_roots(form)) roots.push_back(r);
    emit({{"count", roots.size()}, {"roots", rows_json(roots)}});
  } else if (f.corank) {
    emit({{"corank0", corank0(form)}});
  } else if (f.nullroot) {
    emit(sj::encode(minimal_nullroot(form)));
  } else if (f.weakly_positive || f.weakly_nonnegative) {
    const FormVerdict v = f.weakly_positive ? is_weakly_positive(form) : is_weakly_nonnegative(form);
    emit(sj::encode(v, form));
    if (v.decision == Decision::Inconclusive) return kInconclusive;
  } else {
    throw CLI::ValidationError("form", "choose one of --eval, --gram, --radical, --psd, --roots, --corank0, --nullroot");
  }
  return kOk;
}

int run_knit(const Partition& lambda, int limit, bool dot, bool orbit) {
  const ARQuiver ar = knit(lambda, limit);
  if (orbit) {
    const OrbitQuiver oq = orbit_quiver(ar);
    if (dot) std::cout << to_dot(oq);
    else emit(sj::encode(oq));
    return kOk;
  }
  if (dot) std::cout << to_dot(ar);
  else emit(sj::encode(ar));
  return ar.complete ? kOk : kInconclusive;
}

int run_nilpair(const std::string& action, const std::string& path) {
  const Json doc = sj::parse(slurp(path));
  if (action == "validate") {
    const auto violations = validate_pair(sj::decode_pair(doc));
    emit({{"valid", violations.empty()}, {"violations", violations}});
    return violations.empty() ? kOk : kDomain;
  }
  if (action == "to-rep") {
    emit(sj::encode(to_representation(sj::decode_pair(doc))));
    return kOk;
  }
  const BigradedSpace space = sj::decode_space(doc);
  const Finiteness f = finiteness_space(space);
  emit({{"lambda", shape_lambda(space).lambda.parts()}, {"finiteness", to_string(f)}});
  return f == Finiteness::Unknown ? kInconclusive : kOk;
}

int run_family(const Partition& lambda, const std::string& params_text, std::uint64_t seed) {
  std::vector<Rational> params;
  std::stringstream ss(params_text);
  for (std::string item; std::getline(ss, item, ',');) params.push_back(parse_rational(item));
  const Representation m = two_param_family(family_for(lambda), params, seed);
  Json out = sj::encode(m);
  out["q"] = tits_form(build_quiver(lambda)).eval(m.dims);
  emit(out);
  return kOk;
}

int run_hierarchy(int max_n, bool dot) {
  std::vector<Partition> all;
  for (int n = 1; n <= max_n; ++n)
    for (auto& p : partitions_of(n)) all.push_back(p);
  // Covers in the subdiagram order add exactly one box.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b)
      if (all[b].size() == all[a].size() + 1 && is_subdiagram(all[a], all[b])) edges.emplace_back(a, b);

  if (dot) {
    auto color = [](RepType t) {
      switch (t) {
        case RepType::Finite: return "palegreen";
        case RepType::TameConcealed: return "gold";
        case RepType::TameNotConcealed: return "orange";
        case RepType::Wild: return "tomato";
      }
      return "white";
    };
    std::cout << "digraph hierarchy {\n  node [style=filled, shape=box, fontsize=10];\n";
    for (std::size_t k = 0; k < all.size(); ++k)
      std::cout << "  p" << k << " [label=\"" << all[k].to_string() << "\", fillcolor=" << color(classify(all[k]))
                << "];\n";
    for (const auto& [a, b] : edges) std::cout << "  p" << a << " -> p" << b << ";\n";
    std::cout << "}\n";
    return kOk;
  }
  Json nodes = Json::array();
  for (const auto& p : all) nodes.push_back({{"lambda", p.to_string()}, {"type", to_string(classify(p))}});
  Json arcs = Json::array();
  for (const auto& [a, b] : edges) arcs.push_back({all[a].to_string(), all[b].to_string()});
  emit({{"nodes", nodes}, {"edges", arcs}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Staircase algebras: representation type, Tits forms, AR knitting, graded nilpotent pairs"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for randomized operations");

  std::string lambda_text;
  bool verify = false, as_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "Representation type of A(λ)");
  classify_cmd->add_option("lambda", lambda_text, "Partition, e.g. 1^2,2,4")->required();
  classify_cmd->add_flag("--verify", verify, "Cross-check through the Tits form");
  classify_cmd->add_flag("--json", as_json, "JSON output");

  FormFlags form_flags;
  auto* form_cmd = app.add_subcommand("form", "Tits form queries");
  form_cmd->add_option("lambda", lambda_text)->required();
  form_cmd->add_option("--eval", form_flags.eval_path, "Evaluate q on a vector JSON file ('-' for stdin)");
  form_cmd->add_flag("--gram", form_flags.gram, "Gram matrix");
  form_cmd->add_flag("--radical", form_flags.radical, "Radical lattice basis");
  form_cmd->add_flag("--psd", form_flags.psd, "Positive semidefiniteness");
  form_cmd->add_flag("--roots", form_flags.roots, "Positive roots");
  form_cmd->add_flag("--corank0", form_flags.corank, "Isotropic corank");
  form_cmd->add_flag("--nullroot", form_flags.nullroot, "Minimal positive nullroot");
  form_cmd->add_flag("--weakly-positive", form_flags.weakly_positive, "Weak positivity verdict");
  form_cmd->add_flag("--weakly-nonnegative", form_flags.weakly_nonnegative, "Weak non-negativity verdict");

  auto* witness_cmd = app.add_subcommand("witness", "Vector with q = -1 on a wild diagram");
  witness_cmd->add_option("lambda", lambda_text)->required();

  int limit = 0;
  bool dot = false, orbit = false;
  auto* knit_cmd = app.add_subcommand("knit", "Knit the preprojective component");
  knit_cmd->add_option("lambda", lambda_text)->required();
  knit_cmd->add_option("--limit", limit, "Vertices per τ-orbit (default 10n)")->check(CLI::NonNegativeNumber);
  knit_cmd->add_flag("--dot", dot, "Graphviz output");
  knit_cmd->add_flag("--orbit", orbit, "Orbit quiver instead of the component");

  auto* orbit_cmd = app.add_subcommand("orbit-type", "Orbit type from the case table");
  orbit_cmd->add_option("lambda", lambda_text)->required();

  int m = 0, l = 0;
  auto* tensor_cmd = app.add_subcommand("tensor", "Type of KA_m ⊗ KA_l");
  tensor_cmd->add_option("m", m)->required()->check(CLI::PositiveNumber);
  tensor_cmd->add_option("l", l)->required()->check(CLI::PositiveNumber);

  std::string action, path;
  auto* nilpair_cmd = app.add_subcommand("nilpair", "Graded nilpotent pairs");
  nilpair_cmd->add_option("action", action)->required()->check(CLI::IsMember({"validate", "to-rep", "finite"}));
  nilpair_cmd->add_option("file", path, "Pair or space JSON ('-' for stdin)")->required();

  std::string params;
  auto* family_cmd = app.add_subcommand("family", "Member of a two-parameter family");
  family_cmd->add_option("lambda", lambda_text)->required();
  family_cmd->add_option("--params", params, "Comma-separated scalars")->required();

  int max_n = 0;
  auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Subdiagram order colored by representation type");
  hierarchy_cmd->add_option("--max-n", max_n)->required()->check(CLI::Range(1, 20));
  hierarchy_cmd->add_flag("--dot", dot, "Graphviz output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    auto lambda = [&] { return Partition::parse(lambda_text); };
    if (*classify_cmd) return run_classify(lambda(), verify, as_json);
    if (*form_cmd) return run_form(lambda(), form_flags);
    if (*witness_cmd) {
      const Witness w = wildness_witness(lambda());
      Json out = sj::encode(w.vector);
      out["q"] = w.value;
      out["source"] = w.source;
      emit(out);
      return kOk;
    }
    if (*knit_cmd) return run_knit(lambda(), limit, dot, orbit);
    if (*orbit_cmd) {
      std::cout << orbit_type(lambda()).to_string() << '\n';
      return kOk;
    }
    if (*tensor_cmd) {
      std::cout << to_string(tensor_type(m, l)) << '\n';
      return kOk;
    }
    if (*nilpair_cmd) return run_nilpair(action, path);
    if (*family_cmd) return run_family(lambda(), params, seed);
    if (*hierarchy_cmd) return run_hierarchy(max_n, dot);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}
