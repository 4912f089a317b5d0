#include "symcub/serialization.hpp"

#include <json.hpp>

#include "symcub/error.hpp"
#include "symcub/version.hpp"

namespace symcub {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

// Runs a decoding step, translating nlohmann's type and key errors.
template <typename F>
auto decode(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("invalid ") + what + ": " + e.what());
  }
}

json encode_poles(const std::vector<std::complex<double>>& poles) {
  json arr = json::array();
  for (const auto& a : poles) arr.push_back(json::array({a.real(), a.imag()}));
  return arr;
}

std::vector<std::complex<double>> decode_poles(const json& arr) {
  std::vector<std::complex<double>> poles;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw InvalidArgument("a pole must be [re, im]");
    poles.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return poles;
}

json encode(const BSParams& params) {
  json j;
  j["eps_plus"] = params.eps_plus();
  j["eps_minus"] = params.eps_minus();
  j["poles"] = encode_poles(params.poles());
  if (params.allow_zero_poles()) j["allow_zero_poles"] = true;
  return j;
}

BSParams decode_bs(const json& j) {
  return BSParams(j.at("eps_plus").get<int>(), j.at("eps_minus").get<int>(),
                  decode_poles(j.at("poles")), j.value("allow_zero_poles", false));
}

json encode(const OrthoFamily& f) {
  json j;
  switch (f.kind()) {
    case FamilyKind::hermite: j["kind"] = "hermite"; break;
    case FamilyKind::laguerre:
      j["kind"] = "laguerre";
      j["alpha"] = f.alpha();
      break;
    case FamilyKind::jacobi:
      j["kind"] = "jacobi";
      j["alpha"] = f.alpha();
      j["beta"] = f.beta();
      break;
    case FamilyKind::bernstein_szego:
      j["kind"] = "bernstein_szego";
    {
      const json params = encode(f.bs());
      for (const auto& [k, v] : params.items()) j[k] = v;
    }
      break;
  }
  return j;
}

OrthoFamily decode_family(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "hermite") return OrthoFamily::hermite();
  if (kind == "laguerre") return OrthoFamily::laguerre(j.at("alpha").get<double>());
  if (kind == "jacobi") {
    return OrthoFamily::jacobi(j.at("alpha").get<double>(), j.at("beta").get<double>());
  }
  if (kind == "bernstein_szego") return OrthoFamily::bernstein_szego(decode_bs(j));
  throw InvalidArgument("unknown family kind '" + kind + "'");
}

Variable decode_variable(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "x") return Variable::x;
  if (s == "xi") return Variable::xi;
  throw InvalidArgument("variable must be \"x\" or \"xi\"");
}

Partition decode_partition(const json& j) { return Partition(j.get<std::vector<int>>()); }

}  // namespace

const char* to_string(Variable v) { return v == Variable::x ? "x" : "xi"; }

const char* to_string(WeightConvention c) {
  return c == WeightConvention::full ? "full" : "inverse_H";
}

std::string to_json(const Partition& p) {
  return dump(json(std::vector<int>(p.parts().begin(), p.parts().end())));
}

Partition partition_from_json(std::string_view text) {
  const auto j = parse(text);
  return decode("partition", [&] { return decode_partition(j); });
}

std::string to_json(const BSParams& params) { return dump(encode(params)); }

BSParams bs_params_from_json(std::string_view text) {
  const auto j = parse(text);
  return decode("Bernstein-Szego parameters", [&] { return decode_bs(j); });
}

std::string to_json(const OrthoFamily& family) { return dump(encode(family)); }

OrthoFamily family_from_json(std::string_view text) {
  const auto j = parse(text);
  return decode("family", [&] { return decode_family(j); });
}

std::string to_json(const OrthoFamily& family, const QuadratureRule1D& rule) {
  json j;
  j["family"] = encode(family);
  j["degree"] = rule.degree;
  j["nodes"] = rule.nodes;
  j["weights"] = rule.weights;
  j["variable"] = to_string(rule.variable);
  return dump(j);
}

QuadratureRule1D quadrature_from_json(std::string_view text) {
  const auto j = parse(text);
  return decode("quadrature rule", [&] {
    QuadratureRule1D r;
    r.degree = j.at("degree").get<int>();
    r.nodes = j.at("nodes").get<std::vector<double>>();
    r.weights = j.at("weights").get<std::vector<double>>();
    r.variable = decode_variable(j.at("variable"));
    if (r.nodes.size() != static_cast<std::size_t>(r.degree) || r.weights.size() != r.nodes.size()) {
      throw InvalidArgument("quadrature rule arrays do not match its degree");
    }
    return r;
  });
}

std::string to_json(const CubatureRule& rule) {
  json j;
  j["family"] = encode(rule.family);
  j["m"] = rule.m;
  j["n"] = rule.n;
  json labels = json::array();
  json nodes = json::array();
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto parts = rule.labels[i].parts();
    labels.push_back(std::vector<int>(parts.begin(), parts.end()));
    const auto row = rule.node(i);
    nodes.push_back(std::vector<double>(row.begin(), row.end()));
  }
  j["labels"] = std::move(labels);
  j["nodes"] = std::move(nodes);
  j["weights"] = rule.weights;
  j["weight_convention"] = to_string(rule.weight_convention);
  j["variable"] = to_string(rule.variable);
  j["version"] = rule.version;
  return dump(j);
}

CubatureRule cubature_from_json(std::string_view text) {
  const auto j = parse(text);
  return decode("cubature rule", [&] {
    CubatureRule r;
    r.family = decode_family(j.at("family"));
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    if (r.m < 0 || r.n < 1) throw InvalidArgument("cubature rule needs m >= 0 and n >= 1");
    const auto& labels = j.at("labels");
    const auto& nodes = j.at("nodes");
    r.weights = j.at("weights").get<std::vector<double>>();
    if (labels.size() != nodes.size() || labels.size() != r.weights.size()) {
      throw InvalidArgument("cubature rule arrays differ in length");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto lam = decode_partition(labels[i]);
      auto row = nodes[i].get<std::vector<double>>();
      if (lam.size() != r.n || static_cast<int>(row.size()) != r.n) {
        throw InvalidArgument("cubature rule entry " + std::to_string(i) + " does not have n parts");
      }
      r.labels.push_back(std::move(lam));
      r.nodes.insert(r.nodes.end(), row.begin(), row.end());
    }
    const auto conv = j.at("weight_convention").get<std::string>();
    if (conv == "full") {
      r.weight_convention = WeightConvention::full;
    } else if (conv == "inverse_H") {
      r.weight_convention = WeightConvention::inverse_H;
    } else {
      throw InvalidArgument("weight_convention must be \"full\" or \"inverse_H\"");
    }
    r.variable = decode_variable(j.at("variable"));
    if (r.variable != r.family.variable()) {
      throw InvalidArgument("rule variable does not match its family");
    }
    if ((r.weight_convention == WeightConvention::inverse_H) !=
        (r.family.kind() == FamilyKind::bernstein_szego)) {
      throw InvalidArgument("weight_convention does not match the family");
    }
    r.version = j.value("version", std::string(kVersion));
    return r;
  });
}

std::string to_json(const IntegrandSpec& spec) {
  json j;
  json terms = json::array();
  for (const auto& t : spec.terms()) {
    json term;
    term["partition"] = std::vector<int>(t.partition.parts().begin(), t.partition.parts().end());
    term["coeff"] = t.coeff;
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  if (spec.poles()) j["poles"] = encode_poles(*spec.poles());
  j["variable"] = "x";
  return dump(j);
}

IntegrandSpec integrand_from_json(std::string_view text) {
  const auto j = parse(text);
  return decode("integrand spec", [&] {
    if (j.contains("variable") && j.at("variable").get<std::string>() != "x") {
      throw InvalidArgument("integrand specs are written in the x variable");
    }
    std::vector<MonomialTerm> terms;
    for (const auto& t : j.at("terms")) {
      terms.push_back({decode_partition(t.at("partition")), t.at("coeff").get<double>()});
    }
    std::optional<std::vector<std::complex<double>>> poles;
    if (j.contains("poles")) poles = decode_poles(j.at("poles"));
    return IntegrandSpec(std::move(terms), std::move(poles));
  });
}

}  // namespace symcub
