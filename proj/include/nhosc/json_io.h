#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "nhosc/gram.h"
#include "nhosc/jordan.h"
#include "nhosc/report.h"
#include "nhosc/states.h"

namespace nhosc {

/// Insertion-ordered JSON: together with the canonical term order of
/// LaurentBiPoly this makes every dump byte-deterministic.
using Json = nlohmann::ordered_json;

inline constexpr const char* kCellsFormat = "nhosc-cells/1";
inline constexpr const char* kPiUnit = "×π";

// All from_json functions throw ParseError on malformed input.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"re": "num/den", "im": "num/den"}
Json complex_to_json(const ComplexRational& c);
ComplexRational complex_from_json(const Json& j);

/// [{"zPow", "zbarPow", "re", "im"}, ...] in ascending (zPow, zbarPow) order.
Json poly_to_json(const LaurentBiPoly& p);
LaurentBiPoly poly_from_json(const Json& j);

/// {"lambda", "F": [{re, im} per z̄-power], "b", "omega"}; b and omega are
/// null unless the params are quartic.
Json params_to_json(const ModelParams& p);
ModelParams params_from_json(const Json& j);

Json ansatz_to_json(const AnsatzFn& f);
AnsatzFn ansatz_from_json(const Json& j);

Json constants_to_json(const ConstantsRecord& c);
ConstantsRecord constants_from_json(const Json& j);

/// {"n", "energy", "p", "chain": [AnsatzFn], "constants"}
Json cell_to_json(const JordanCell& cell);
JordanCell cell_from_json(const Json& j);

/// {"format", "params", "cells": [...]}. Reading checks that every chain
/// function carries the file-level params.
Json cells_file_to_json(const std::vector<JordanCell>& cells);
std::vector<JordanCell> cells_file_from_json(const Json& j);

Json spectrum_to_json(const ModelParams& params, const std::vector<EnergyLevel>& levels);

/// {"re", "im", "unit": "×π"}
Json pi_rational_to_json(const PiRational& v);
Json gram_matrix_to_json(const GramMatrix& g);

Json report_to_json(const VerificationReport& report);

/// Canonical text form: two-space indent, trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

}  // namespace nhosc
