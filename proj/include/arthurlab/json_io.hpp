#pragma once

#include <json.hpp>

#include "arthurlab/endoscopy.hpp"
#include "arthurlab/intertwining.hpp"
#include "arthurlab/levi_diagram.hpp"
#include "arthurlab/matrix.hpp"
#include "arthurlab/parameters.hpp"
#include "arthurlab/weil_real.hpp"

// JSON is the single interchange format of the toolkit.  Exact rationals
// travel as numerator/denominator strings so the algebraic fixtures
// round-trip without float loss.

namespace arthurlab::json_io {

using nlohmann::json;

json rational_to_json(const Rational& r);
json gaussian_to_json(const GaussianRational& z);   // [re, im] pair of strings
json matrix_to_json(const Matrix& m);

// {"components":[{"label","dim","selfdual","mult","su2"}]}
params::LocalParameter parameter_from_json(const json& j);
json parameter_to_json(const params::LocalParameter& p);

json centralizer_to_json(const params::CentralizerShape& s);
json group_element_to_json(const params::ComponentGroupElement& v);

// {"alphabet":[{label,dim,selfdual}],
//  "gl_blocks":[{"e",N,"entries":[{label,mult,dual_mult}]}],
//  "so_block":{"entries":[{label,mult}]}}
levi::LeviShape shape_from_json(const json& j);
json diagram_report_to_json(const levi::DiagramReport& r);

// {"one":[{"eps","t"}],"two":[{"l","t"}]}; t numeric (constant in lambda)
weil::WeilRealRep rep_from_json(const json& j);
json rep_to_json(const weil::WeilRealRep& r);

// [{"label","plus","minus"}]
endoscopy::SemisimpleSignature signature_from_json(const json& j);

json identity_report_to_json(const intertwining::IdentityReport& r);

}  // namespace arthurlab::json_io
