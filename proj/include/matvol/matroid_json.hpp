#ifndef MATVOL_MATROID_JSON_HPP
#define MATVOL_MATROID_JSON_HPP

// Matroid documents:
//   {"ground_size": m, "bases": [[...], ...]}
//   {"constructor": "uniform",       "params": {"rank": r, "ground_size": m}}
//   {"constructor": "schubert",      "params": {"bits": "11010"}}
//   {"constructor": "graphic",       "params": {"vertices": v, "edges": [[a, b], ...]}}
//   {"constructor": "sparse_paving", "params": {"n": n, "d": d,
//                                               "circuit_hyperplanes": [[...], ...]}}

#include <json.hpp>

#include "matvol/matroid.hpp"

namespace matvol {

// Throws InvalidInput on schema or matroid-axiom violations.
Matroid matroid_from_json(const nlohmann::json& doc);
// Always the explicit basis form.
nlohmann::ordered_json matroid_to_json(const Matroid& m);

}  // namespace matvol

#endif  // MATVOL_MATROID_JSON_HPP
