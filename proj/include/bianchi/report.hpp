#pragma once

#include <json.hpp>

#include "bianchi/bredon.hpp"

namespace bianchi {

using json = nlohmann::json;

json to_json(const GaussianInt& z);          // {"re": ..., "im": ...}
json to_json(const FgAbGroup& g);            // {"free_rank": r, "torsion": [...]}
json to_json(const IntMatrix& m);            // [[...], ...]
json to_json(const ProjectiveMatrix& m);     // [[a,b],[c,d]] of Gaussian objects
json to_json(const CharacterTable& t);       // classes + zeta_12 coordinate vectors
json to_json(const GCWModel& model);         // cells, stabilizers, boundary triples

// {"homology": [...], "cohomology": [...], "k_groups": {...}} for a model;
// hecke_report adds the "hecke" object for the base group at level p.
json groups_report(const GCWModel& model);
json hecke_report(const GaussianPrime& p);

}  // namespace bianchi
