#pragma once

#include <string>

#include "json.hpp"
#include "liepair/model.hpp"

namespace cli {

// Model file schema (all structure functions as polynomial strings):
//
//   {
//     "n": 0, "r": 1, "rprime": 1,
//     "rho": [[poly, ...], ...],          // (r + rprime) rows of n entries
//     "c": [[i, j, k, poly], ...],        // all nonzero c_ij^k, 1-based
//     "name": "..."
//   }
//
// model_to_json emits the canonical form: keys in the order above and the c
// entries sorted lexicographically by (i, j, k) with both orientations
// present, so parse -> serialize -> parse is the identity.
liepair::LiePairModel model_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json model_to_json(const liepair::LiePairModel& m);

// Reads, parses, and validates a model file. Throws ParseError on I/O,
// syntax, or schema problems and liepair::ModelError (carrying the
// validation report) when the structure equations fail.
liepair::LiePairModel load_model(const std::string& path);

// Same, but without validating the structure equations; `check` uses this so
// that an invalid model is reported rather than rejected.
liepair::LiePairModel load_model_raw(const std::string& path);

}  // namespace cli
