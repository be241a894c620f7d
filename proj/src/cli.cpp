#include "toricq/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toricq/errors.hpp"
#include "toricq/io.hpp"
#include "toricq/pipeline.hpp"

namespace toricq {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kHypothesis = 1;
constexpr int kMalformed = 2;

std::string text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

// Text mode prints "key: value" lines in insertion order of `keys`.
void emit(std::ostream& out, bool as_json, const json& doc, const std::vector<std::string>& keys) {
  if (as_json) {
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& k : keys)
    if (doc.contains(k)) out << k << ": " << text(doc.at(k)) << '\n';
}

json torsion_json(const std::vector<Integer>& t) {
  json out = json::array();
  for (const auto& x : t) out.push_back(io::integer_to_json(x));
  return out;
}

json class_group_json(const CokernelInvariants& inv) {
  return json{{"free", inv.free_rank}, {"torsion", torsion_json(inv.torsion)}};
}

json degree_json(const ClassGroupElement& d) {
  return json{{"free", io::vector_to_json(d.free_part)}, {"torsion", io::vector_to_json(d.torsion_part)}};
}

json rational_vector_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(q.get_den() == 1 ? io::integer_to_json(q.get_num()) : io::rational_to_json(q));
  return out;
}

int cmd_validate(const std::string& path, bool as_json, std::ostream& out) {
  Fan f = io::fan_from_json(io::parse_json_file(path));
  json doc{{"valid", true},
           {"rank", f.rank()},
           {"rays", f.ray_count()},
           {"max_cones", f.max_cones().size()},
           {"cones", f.cones().size()}};
  emit(out, as_json, doc, {"valid", "rank", "rays", "max_cones", "cones"});
  return kOk;
}

int cmd_properties(const std::string& path, bool as_json, std::ostream& out) {
  Fan f = io::fan_from_json(io::parse_json_file(path));
  ConvexSupportReport support = convex_support_report(f);
  bool simplicial = std::all_of(f.max_cones().begin(), f.max_cones().end(),
                                [](const FanCone& c) { return is_simplicial(c.cone); });
  json convex = support.verdict == SupportVerdict::not_certified
                    ? json("not-certified")
                    : json(support.verdict == SupportVerdict::convex);
  json doc{{"nondegenerate", is_nondegenerate(f)},
           {"complete", is_complete(f)},
           {"convex_support", convex},
           {"smooth", variety_is_smooth(f)},
           {"simplicial", simplicial}};
  if (support.witness) doc["convex_support_witness"] = rational_vector_json(*support.witness);
  emit(out, as_json, doc,
       {"nondegenerate", "complete", "convex_support", "convex_support_witness", "smooth", "simplicial"});
  return kOk;
}

int cmd_cox(const std::string& path, bool as_json, std::ostream& out) {
  Fan f = io::fan_from_json(io::parse_json_file(path));
  CoxPresentation p = cox_presentation(f);
  SubgroupDecomposition h = decompose_subgroup(p.kernel_group);
  const std::size_t codim = complement_codim(p);
  json doc{{"m", p.ray_count()},
           {"q", io::matrix_to_json(p.q_matrix)},
           {"sigma", io::fan_to_json(p.sigma)},
           {"kernel_group",
            {{"relations", io::matrix_to_json(p.kernel_group.relations())},
             {"torus_rank", h.torus_rank},
             {"cyclic_orders", torsion_json(h.cyclic_orders)}}},
           {"complement_codim", codim},
           {"complement_empty", codim == p.ray_count() + 1},
           {"acts_freely", acts_freely(p)},
           {"smooth", variety_is_smooth(f)}};
  int code = kOk;
  if (is_nondegenerate(f)) {
    doc["class_group"] = class_group_json(class_group(p));
  } else {
    doc["class_group"] = nullptr;
    code = kHypothesis;
  }
  emit(out, as_json, doc,
       {"m", "q", "sigma", "kernel_group", "class_group", "complement_codim", "complement_empty", "acts_freely",
        "smooth"});
  return code;
}

int cmd_classgroup(const std::string& path, bool as_json, std::ostream& out) {
  Fan f = io::fan_from_json(io::parse_json_file(path));
  CoxPresentation p = cox_presentation(f);
  CokernelInvariants inv = class_group(p);
  json degrees = json::array();
  for (std::size_t i = 0; i < p.ray_count(); ++i) {
    IntVector e(p.ray_count());
    e[i] = 1;
    degrees.push_back(degree_json(degree_of_monomial(p, e)));
  }
  json doc{{"class_group", class_group_json(inv)}, {"degrees", degrees}};
  emit(out, as_json, doc, {"class_group", "degrees"});
  return kOk;
}

int cmd_lift(const std::string& path, const std::string& iota_arg, bool as_json, std::ostream& out) {
  Fan f = io::fan_from_json(io::parse_json_file(path));
  CoxPresentation p = cox_presentation(f);
  IntMatrix iota = io::matrix_from_json(io::parse_json_argument(iota_arg));
  SubtorusLift lift = lift_subtorus(p, iota);
  json doc{{"degree", io::integer_to_json(lift.degree)},
           {"weights", io::matrix_to_json(lift.weights)},
           {"effective", lift.effective}};
  emit(out, as_json, doc, {"degree", "weights", "effective"});
  return kOk;
}

int cmd_diag(const std::string& path, bool as_json, std::ostream& out) {
  json input = io::parse_json_file(path);
  WeightAction w = io::weights_from_json(input);
  DiagonalizableSubgroup g0 = subgroup_from_weights(w);
  json doc{{"effective", is_effective(w)},
           {"dimension", g0.dimension()},
           {"relations", io::matrix_to_json(g0.relations())}};
  int code = kOk;
  std::optional<IntVector> exponents;
  try {
    QuotientKind kind = classify_quotient(g0);
    if (auto* mono = std::get_if<QuotientMonomial>(&kind)) {
      exponents = mono->exponents;
      doc["quotient"] = json{{"kind", "monomial"}, {"exponents", io::vector_to_json(mono->exponents)}};
    } else {
      doc["quotient"] = json{{"kind", "point"}};
    }
  } catch (const HypothesisError& e) {
    doc["quotient"] = json{{"kind", "not-applicable"}, {"reason", e.what()}};
    code = kHypothesis;
  }
  json reports = json::array();
  if (input.is_object() && input.contains("monomial_matrices")) {
    for (const auto& jm : input.at("monomial_matrices")) {
      MonomialMatrix g = io::monomial_from_json(jm);
      json rep = io::monomial_to_json(g);
      rep["commutes"] = commutes_with_torus(g, g0);
      rep["centralizes"] = centralizes(g, g0);
      if (exponents) {
        HyperplaneReport h = hyperplane_permutation_report(g, *exponents);
        rep["pi"] = h.pi;
        rep["fixes_zero_support"] = h.fixes_zero_support;
        rep["permutes_positive_support"] = h.permutes_positive_support;
      }
      reports.push_back(rep);
    }
  }
  doc["monomial_matrices"] = reports;
  emit(out, as_json, doc, {"effective", "dimension", "relations", "quotient", "monomial_matrices"});
  return code;
}

int cmd_pipeline(const std::string& path, const std::string& weights_arg, bool as_json, std::ostream& out) {
  Fan f = io::fan_from_json(io::parse_json_file(path));
  WeightAction w = io::weights_from_json(io::parse_json_argument(weights_arg));
  PipelineReport r = theorem_pipeline(f, w);
  emit(out, as_json, to_json(r),
       {"nondegenerate", "no_small_holes_certified", "cox_data", "input_torus_rank", "effective",
        "combined_dimension", "image", "hypotheses_met", "embedding", "saturated_embedding", "isogeny_degree",
        "diagnostics"});
  return r.hypotheses_met ? kOk : kHypothesis;
}

int cmd_snf(const std::string& path, bool as_json, std::ostream& out) {
  IntMatrix a = io::matrix_from_json(io::parse_json_file(path));
  SnfResult s = smith_normal_form(a);
  json doc{{"rank", s.rank()},
           {"invariant_factors", torsion_json(s.invariant_factors())},
           {"d", io::matrix_to_json(s.d)},
           {"u", io::matrix_to_json(s.u)},
           {"v", io::matrix_to_json(s.v)}};
  emit(out, as_json, doc, {"rank", "invariant_factors", "d", "u", "v"});
  return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cox presentations and torus actions on toric varieties", "toricq"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string file;
  std::string iota;
  std::string weights;
  std::function<int()> action;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  auto sub = [&](const char* name, const char* help, const char* what) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("file", file, what)->required();
    s->add_flag("--json", as_json, "Machine-readable JSON output");
    return s;
  };

  sub("validate", "Check the fan axioms", "Fan JSON file")->callback([&] {
    action = [&] { return cmd_validate(file, as_json, out); };
  });
  sub("properties", "Nondegenerate, complete, convex support, smooth", "Fan JSON file")->callback([&] {
    action = [&] { return cmd_properties(file, as_json, out); };
  });
  sub("cox", "Cox presentation: Q, Sigma, H, class group, complement codimension", "Fan JSON file")
      ->callback([&] { action = [&] { return cmd_cox(file, as_json, out); }; });
  sub("classgroup", "Class group and degrees of the Cox coordinates", "Fan JSON file")->callback([&] {
    action = [&] { return cmd_classgroup(file, as_json, out); };
  });
  auto* lift = sub("lift", "Lift a subtorus of T_X to the Cox coordinates", "Fan JSON file");
  lift->add_option("--iota", iota, "Cocharacter matrix (n x r), inline JSON or file")->required();
  lift->callback([&] { action = [&] { return cmd_lift(file, iota, as_json, out); }; });
  sub("diag", "Quotient classification and hyperplane reports", "Weights JSON file")->callback([&] {
    action = [&] { return cmd_diag(file, as_json, out); };
  });
  auto* pipe = sub("pipeline", "Realize a codimension-one torus inside the big torus", "Fan JSON file");
  pipe->add_option("--weights", weights, "Weight matrix (r x m), inline JSON or file")->required();
  pipe->callback([&] { action = [&] { return cmd_pipeline(file, weights, as_json, out); }; });
  sub("snf", "Smith normal form of an integer matrix", "Matrix JSON file")->callback([&] {
    action = [&] { return cmd_snf(file, as_json, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kMalformed;
  }

  try {
    return action();
  } catch (const HypothesisError& e) {
    err << "hypothesis failed: " << e.what() << '\n';
    return kHypothesis;
  } catch (const UnsupportedShapeError& e) {
    err << "not certified: " << e.what() << '\n';
    return kHypothesis;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kMalformed;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kMalformed;
  }
}

}  // namespace toricq
