#include "expinterp/problem_spec.hpp"

#include <json.hpp>

#include "expinterp/errors.hpp"

namespace expinterp {

namespace {

using Json = nlohmann::ordered_json;

Complex parse_complex(const Json& v, const char* what) {
  if (v.is_number()) return Complex(v.get<double>());
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw Error(std::string(what) + " must be a number or an [re, im] pair");
}

Json dump_complex(Complex z) { return Json::array({z.real(), z.imag()}); }

std::vector<double> parse_real_array(const Json& v, const char* what) {
  if (!v.is_array()) throw Error(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number()) throw Error(std::string(what) + " must contain numbers only");
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

ProblemSpec parse_problem_spec(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("problem spec must be a JSON object");

  ProblemSpec spec;
  if (doc.contains("operator")) {
    const Json& jop = doc["operator"];
    if (!jop.is_object()) throw Error("operator must be an object");
    OperatorInput input;
    const bool has_coeffs = jop.contains("coefficients");
    const bool has_roots = jop.contains("roots");
    if (has_coeffs == has_roots)
      throw Error("operator needs exactly one of 'coefficients' or 'roots'");
    if (has_coeffs) {
      if (!jop["coefficients"].is_array()) throw Error("operator coefficients must be an array");
      for (const auto& e : jop["coefficients"])
        input.coefficients.push_back(parse_complex(e, "operator coefficient"));
    } else {
      if (!jop["roots"].is_array()) throw Error("operator roots must be an array");
      for (const auto& e : jop["roots"]) {
        if (!e.is_object() || !e.contains("lambda") || !e.contains("multiplicity"))
          throw Error("each root needs 'lambda' and 'multiplicity'");
        if (!e["multiplicity"].is_number_integer())
          throw Error("root multiplicity must be an integer");
        input.roots.push_back(
            RootCluster{parse_complex(e["lambda"], "root lambda"), e["multiplicity"].get<int>()});
      }
    }
    spec.op = std::move(input);
  }

  if (doc.contains("system")) {
    const Json& jsys = doc["system"];
    if (!jsys.is_object() || !jsys.contains("nodes") || !jsys.contains("multiplicities"))
      throw Error("system needs 'nodes' and 'multiplicities'");
    spec.nodes = parse_real_array(jsys["nodes"], "system nodes");
    if (!jsys["multiplicities"].is_array()) throw Error("system multiplicities must be an array");
    std::vector<int> mults;
    for (const auto& e : jsys["multiplicities"]) {
      if (!e.is_number_integer()) throw Error("system multiplicities must be integers");
      mults.push_back(e.get<int>());
    }
    spec.multiplicities = std::move(mults);
  }

  if (doc.contains("function")) {
    const Json& jf = doc["function"];
    if (!jf.is_object()) throw Error("function must be an object");
    FunctionInput fn;
    if (jf.contains("data")) {
      fn.kind = "tabulated";
      if (!jf["data"].is_array()) throw Error("function data must be an array of arrays");
      for (const auto& row : jf["data"]) fn.data.push_back(parse_real_array(row, "function data row"));
    } else {
      if (!jf.contains("kind") || !jf["kind"].is_string())
        throw Error("function needs a string 'kind' (or tabulated 'data')");
      fn.kind = jf["kind"].get<std::string>();
      if (jf.contains("sigma")) {
        if (!jf["sigma"].is_number()) throw Error("function sigma must be a number");
        fn.sigma = jf["sigma"].get<double>();
      }
      if (jf.contains("poly")) fn.poly = parse_real_array(jf["poly"], "function poly");
    }
    spec.function = std::move(fn);
  }

  if (doc.contains("eval_points"))
    spec.eval_points = parse_real_array(doc["eval_points"], "eval_points");
  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number()) throw Error("tolerance must be a number");
    spec.tolerance = doc["tolerance"].get<double>();
  }
  return spec;
}

std::string serialize_problem_spec(const ProblemSpec& spec) {
  Json doc = Json::object();
  if (spec.op) {
    Json jop = Json::object();
    if (!spec.op->coefficients.empty()) {
      Json arr = Json::array();
      for (const Complex& ck : spec.op->coefficients) arr.push_back(dump_complex(ck));
      jop["coefficients"] = std::move(arr);
    } else {
      Json arr = Json::array();
      for (const RootCluster& r : spec.op->roots)
        arr.push_back(Json{{"lambda", dump_complex(r.lambda)}, {"multiplicity", r.multiplicity}});
      jop["roots"] = std::move(arr);
    }
    doc["operator"] = std::move(jop);
  }
  if (spec.nodes || spec.multiplicities) {
    Json jsys = Json::object();
    jsys["nodes"] = spec.nodes.value_or(std::vector<double>{});
    jsys["multiplicities"] = spec.multiplicities.value_or(std::vector<int>{});
    doc["system"] = std::move(jsys);
  }
  if (spec.function) {
    Json jf = Json::object();
    if (spec.function->is_tabulated()) {
      jf["data"] = spec.function->data;
    } else {
      jf["kind"] = spec.function->kind;
      jf["sigma"] = spec.function->sigma;
      jf["poly"] = spec.function->poly;
    }
    doc["function"] = std::move(jf);
  }
  doc["eval_points"] = spec.eval_points;
  doc["tolerance"] = spec.tolerance;
  return doc.dump(2) + "\n";
}

ResolvedOperator resolve_operator(const OperatorInput& input) {
  if (!input.roots.empty()) {
    // Expand the factored form, pairing exact conjugates first so real
    // operators come out with exactly real coefficients.
    std::vector<RootCluster> roots = input.roots;
    std::vector<bool> used(roots.size(), false);
    std::vector<double> real_poly{1.0};
    bool all_paired = true;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (used[i]) continue;
      if (roots[i].lambda.imag() == 0.0) {
        used[i] = true;
        for (int m = 0; m < roots[i].multiplicity; ++m)
          real_poly = poly_mul_linear(real_poly, roots[i].lambda.real());
        continue;
      }
      bool paired = false;
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        if (used[j]) continue;
        if (roots[j].lambda == std::conj(roots[i].lambda) &&
            roots[j].multiplicity == roots[i].multiplicity) {
          const double re = roots[i].lambda.real();
          const double mag2 = std::norm(roots[i].lambda);
          for (int m = 0; m < roots[i].multiplicity; ++m)
            real_poly = poly_mul(real_poly, {mag2, -2.0 * re, 1.0});
          used[i] = used[j] = true;
          paired = true;
          break;
        }
      }
      if (!paired) {
        all_paired = false;
        break;
      }
    }

    std::vector<Complex> coeffs;
    if (all_paired) {
      coeffs.assign(real_poly.begin(), real_poly.end());
    } else {
      std::vector<Complex> prod{Complex(1.0)};
      for (const auto& r : input.roots)
        for (int m = 0; m < r.multiplicity; ++m) prod = poly_mul_linear(prod, r.lambda);
      coeffs = std::move(prod);
    }
    DifferentialOperatorSpec op = make_operator(std::move(coeffs));
    return ResolvedOperator{op, find_roots(op, input.roots)};
  }
  DifferentialOperatorSpec op = make_operator(input.coefficients);
  return ResolvedOperator{op, find_roots(op)};
}

}  // namespace expinterp
