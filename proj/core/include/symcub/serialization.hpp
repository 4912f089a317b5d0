#pragma once

#include <string>
#include <string_view>

#include "symcub/bernstein_szego.hpp"
#include "symcub/integrand.hpp"
#include "symcub/orthopoly.hpp"
#include "symcub/partitions.hpp"
#include "symcub/quadrature_rule.hpp"
#include "symcub/schur_cubature.hpp"

// JSON encoding of the library's value types. Output uses a fixed key order,
// two-space indentation, a trailing newline and shortest round-trip doubles,
// so equal values always produce identical bytes. Parsers throw
// InvalidArgument on malformed input.
namespace symcub {

std::string to_json(const Partition& p);
Partition partition_from_json(std::string_view text);

std::string to_json(const BSParams& params);
BSParams bs_params_from_json(std::string_view text);

std::string to_json(const OrthoFamily& family);
OrthoFamily family_from_json(std::string_view text);

std::string to_json(const OrthoFamily& family, const QuadratureRule1D& rule);
QuadratureRule1D quadrature_from_json(std::string_view text);

std::string to_json(const CubatureRule& rule);
CubatureRule cubature_from_json(std::string_view text);

std::string to_json(const IntegrandSpec& spec);
IntegrandSpec integrand_from_json(std::string_view text);

const char* to_string(Variable v);
const char* to_string(WeightConvention c);

}  // namespace symcub
