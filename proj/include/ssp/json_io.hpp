#pragma once

#include <json.hpp>

#include "ssp/affine_weyl.hpp"
#include "ssp/finite_geometry.hpp"
#include "ssp/global_forms.hpp"
#include "ssp/lattice.hpp"
#include "ssp/mass.hpp"
#include "ssp/padic.hpp"

namespace ssp {

using nlohmann::json;

// Rationals travel as "num/den" strings ("num" when den = 1); square classes
// as one of "square", "nonsquare", "p*square", "p*nonsquare"; signs as
// integers +1 / -1.  The full format reference lives in the README.

json form_to_json(const DiagonalForm& form);
DiagonalForm form_from_json(const json& j);

json gram_to_json(const Mat& gram);
Mat gram_from_json(const json& j);

json square_class_to_json(const SquareClass& c);
SquareClass square_class_from_json(const json& j, const Int& p);

json place_to_json(const Place& place);
Place place_from_json(const json& j);

json local_invariants_to_json(const LocalInvariants& inv);

json jordan_to_json(const JordanDecomposition& jd);
json vertex_report_to_json(const VertexReport& rep);

json profile_to_json(const InvariantProfile& prof);
InvariantProfile profile_from_json(const json& j);

json subspace_to_json(const Subspace& s, const FiniteField& F);

json weyl_element_to_json(const CoxeterDatum& datum, const WeylElement& x);

json mass_output_to_json(const MassOutput& out);

}  // namespace ssp
