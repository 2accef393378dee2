#pragma once

#include "json.hpp"

#include "troposign/cones.hpp"
#include "troposign/lift.hpp"
#include "troposign/poly.hpp"
#include "troposign/polar.hpp"
#include "troposign/quadratic.hpp"
#include "troposign/sat.hpp"

// JSON encodings. Indices in emitted documents are 1-based.
//   signed scalar  {"s": "+"|"-"|"o"|"z"|"top"|"bot", "m": "1.5"}
//   tropical       "1.5" or "-inf"
// Magnitudes print as decimals when the expansion terminates, else as "p/q".
// Readers also accept plain numbers (as Pos / finite values) and the text
// forms printed by to_string ("𝟘", "⊖3", "3•").
namespace troposign::io {

using Json = nlohmann::ordered_json;

std::string decimal_string(const Rational& q);

Json to_json(const Rational& q);
Json to_json(const TropNum& x);
Json to_json(const SignedTrop& x);
Json to_json(const TropVec& v);
Json to_json(const SignedVec& v);
Json to_json(const TropMat& m);
Json to_json(const SignedMat& m);
Json to_json(const SignedPair& p);
Json to_json(const ConeVerdict& v);
Json to_json(const OptResult& r, const std::vector<SignedTrop>& roots);
Json to_json(const QuadSolution& s);
Json to_json(const CopositiveQp& q);
Json to_json(const QuadSystem& sys);
Json to_json(const Feasibility& f, const QuadSystem& sys);
Json to_json(const VerifyReport& r);
Json to_json(const BendReport& r);
Json to_json(const LiftedPsd& l);

Rational rational_from_json(const Json& j);
TropNum trop_from_json(const Json& j);
SignedTrop signed_from_json(const Json& j);
SignedTrop parse_signed(const std::string& text);
TropVec trop_vec_from_json(const Json& j);
SignedVec signed_vec_from_json(const Json& j);
// Accepts a bare array of rows or {"matrix": rows}.
SignedMat signed_mat_from_json(const Json& j);
TropMat trop_mat_from_json(const Json& j);
SignedPair pair_from_json(const Json& j);
// Accepts an array of points or {"points": [...]}.
FinitePointSet point_set_from_json(const Json& j);
FinitePairSet pair_set_from_json(const Json& j);
ConeVerdict verdict_from_json(const Json& j);
// Coefficients a₀..aₙ: a bare array or {"coeffs": [...]}.
SignedPoly poly_from_json(const Json& j);
OptResult opt_result_from_json(const Json& j);
QuadProblem quad_problem_from_json(const Json& j);
QuadSolution quad_solution_from_json(const Json& j);
QuadSystem quad_system_from_json(const Json& j);
VerifyReport verify_report_from_json(const Json& j);

// Parses text, reporting malformed JSON as troposign::Error.
Json parse(const std::string& text);
Json read_file(const std::string& path);

}  // namespace troposign::io
