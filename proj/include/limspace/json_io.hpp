#ifndef LIMSPACE_JSON_IO_HPP
#define LIMSPACE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "limspace/dual_norm.hpp"
#include "limspace/functionals.hpp"
#include "limspace/grid_function.hpp"
#include "limspace/hilbert.hpp"
#include "limspace/lim_function.hpp"
#include "limspace/signed_measure.hpp"

namespace limspace {

using json = nlohmann::json;

// Serialization keeps the wire formats stable:
//   measure   {"domain": "half|line|finite", "atoms": [{"loc": num|"inf"|"-inf", "w": [..]}],
//              "density": {"breaks": [..], "values": [[..]]}}
//   function  {"breaks": [..], "values": [[..]], "limit": [..]} (+ "limit_neg" on the line)
//   functionals mirror those plus their "alpha" fields.

json to_json(const ExtendedReal& t);
ExtendedReal extended_real_from_json(const json& j);

json to_json(const StepFunction& f);
StepFunction step_function_from_json(const json& j);

json to_json(const GridFunction& f);
GridFunction grid_function_from_json(const json& j);

json to_json(const SignedMeasure& mu);
SignedMeasure measure_from_json(const json& j);

json to_json(const LimFunctionHalf& x);
LimFunctionHalf lim_half_from_json(const json& j);

json to_json(const LimFunctionLine& x);
LimFunctionLine lim_line_from_json(const json& j);

json to_json(const MeasureFunctionalHalf& f);
MeasureFunctionalHalf measure_functional_from_json(const json& j);

json to_json(const DensityFunctionalHalf& f);
DensityFunctionalHalf density_functional_from_json(const json& j);

json to_json(const SequenceFunctional& f);
SequenceFunctional sequence_functional_from_json(const json& j);

json to_json(const Coefficients& c);

json to_json(const DualNormReport& r);

// Deterministic rendering: keys sorted (nlohmann maps are ordered) and every
// double printed with 17 significant digits, so reports are byte-stable.
std::string canonical_dump(const json& j, int indent = 2);

}  // namespace limspace

#endif
