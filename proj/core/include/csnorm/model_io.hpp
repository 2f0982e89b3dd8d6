#pragma once

#include <iosfwd>
#include <string>

#include "csnorm/norm_model.hpp"

namespace csnorm {

// Model documents are JSON (conventionally *.csn.json) with every rational
// kept textual:
//
//   {
//     "name": "example",
//     "hyperbolic": true,
//     "h1_z2_is_z2": true,
//     "ideal_slopes": [ { "slope": "16", "weight": "2" }, ... ],
//     "fibre_slopes": [ "0" ],
//     "exceptional": [
//       { "slope": "1/0", "kind": "cyclic" },
//       { "slope": "17", "kind": "finite", "finite_type": "I" },
//       { "slope": "-1", "kind": "seifert", "A": 10, "strict": false }
//     ]
//   }
//
// Malformed documents raise InputError ("parse_error") naming the field;
// documents that parse but violate a model invariant raise ValidationError
// listing every violation.

NormModel load_model(std::istream& in, const std::string& origin = "<stream>");
NormModel load_model_file(const std::string& path);

// Canonical form: slopes reduced, rationals reduced, lists sorted by slope.
// load(save(m)) is structurally equal to m.
void save_model(const NormModel& model, std::ostream& out);
void save_model_file(const NormModel& model, const std::string& path);
std::string save_model_text(const NormModel& model);

}  // namespace csnorm
