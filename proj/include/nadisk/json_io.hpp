#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nadisk/mag.hpp"
#include "nadisk/prescribe.hpp"
#include "nadisk/rational.hpp"
#include "nadisk/scalar.hpp"
#include "nadisk/semlab.hpp"
#include "nadisk/series.hpp"

namespace nadisk::io {

// Key order is insertion order, so reports render identically run to run.
using Json = nlohmann::ordered_json;

// Malformed text becomes SchemaError.
Json parse(std::string_view text);

// Exponents and coefficients travel as strings "p" or "p/q".
Json to_json(const Rational& r);
Rational rational_from(const Json& j, const std::string& where);
mpq_class coefficient_from(const Json& j, const std::string& where);

// {"terms": [{"q": "1/2", "a": "-3"}, ...], "trunc": "5" | null}
Json to_json(const Scalar& x);
Scalar scalar_from(const Json& j, const std::string& where);

// {"kind": "finite", "q": "1/3"} for 2^(-1/3), or {"kind": "zero"}
Json to_json(const Mag& m);
Mag mag_from(const Json& j, const std::string& where);

// {"coeffs": [Scalar, ...], "gauss_tail": Mag | null}, or a zero profile
// {"unit": Mag, "origin_order": n, "zeros": [{"z": Scalar, "m": n}, ...]}.
Json to_json(const PowerSeries& f);
PowerSeries series_from(const Json& j, const std::string& where);

// {"targets": [{"center": Scalar, "eps": Mag}, ...]} or the bare array.
Json to_json(const std::vector<Target>& targets);
std::vector<Target> targets_from(const Json& j, const std::string& where);

// {"centers": [Scalar, ...], "weights": [n, ...], "base_r": Mag}
DiskFamily family_from(const Json& j, const std::string& where);
Json to_json(const DiskFamily& fam);

Json to_json(const NewtonData& d);
Json to_json(const StagePlan& plan);
Json to_json(const StageAudit& a);
Json to_json(const VerifyReport& r);
Json to_json(const StageReport& r);

// Member lookup that raises SchemaError when absent.
const Json& member(const Json& j, const char* key, const std::string& where);

} // namespace nadisk::io
