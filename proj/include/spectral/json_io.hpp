#pragma once

#include <json.hpp>

#include "spectral/horn.hpp"
#include "spectral/numeric.hpp"
#include "spectral/schubert.hpp"
#include "spectral/spectral_inequalities.hpp"
#include "spectral/symmetric_functions.hpp"

namespace spectral {

using Json = nlohmann::ordered_json;

/// {"basis":"s","terms":[{"partition":[2],"num":6,"den":1},...]}, terms in
/// descending lexicographic order. Integers beyond 64 bits are strings.
Json to_json(const SymExpansion& x);
SymExpansion expansion_from_json(const Json& j);

/// {"k":..,"n":..,"basis":"s","terms":[...]}.
Json to_json(const CohomologyClass& x);
CohomologyClass class_from_json(const Json& j);

/// {"lhs":[0,1,0],"rhs":[1,0,1,0,0,0],"sense":"le"}.
Json to_json(const SpectralInequality& q);
SpectralInequality inequality_from_json(const Json& j);

/// Inequality fields plus "text" and the generating data.
Json to_json(const Candidate& c);

/// {"d_A":..,"d_B":..,"trace":true,"inequalities":[...]}.
Json to_json(const InequalitySystem& S);
InequalitySystem system_from_json(const Json& j);

/// {"r":1,"I":[2],"J":[2],"K":[3]}.
Json to_json(const HornTriple& t);
HornTriple horn_triple_from_json(const Json& j);

Json to_json(const TrialRecord& r);

/// Accepts a bare array or {"values":[...]}. Order is left to the caller:
/// Spectrum rejects unsorted values, Spectrum::from_unsorted sorts them.
std::vector<double> values_from_json(const Json& j);

}  // namespace spectral
