#ifndef POWSGP_IO_HPP
#define POWSGP_IO_HPP

#include "json.hpp"
#include "powsgp/autosearch.hpp"
#include "powsgp/lemmas.hpp"
#include "powsgp/numsgp.hpp"
#include "powsgp/pset.hpp"

namespace powsgp {

// JSON forms used by the CLI; every top-level payload carries "schema":"1".

nlohmann::json to_json(const NumericalSemigroup& s);
nlohmann::json to_json(const PSet& x);  // {"head":[...],"threshold":int|null}
PSet pset_from_json(const PSet::Ground& ground, const nlohmann::json& j);
nlohmann::json to_json(const WitnessReport& r);
nlohmann::json to_json(const TruncatedPowerMonoid& m);
nlohmann::json to_json(const AutomorphismSearchResult& r);
nlohmann::json to_json(const ProofPipelineReport& r);

}  // namespace powsgp

#endif  // POWSGP_IO_HPP
