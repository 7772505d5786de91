#include "powsgp/io.hpp"

#include "powsgp/errors.hpp"

namespace powsgp {

nlohmann::json to_json(const NumericalSemigroup& s) {
  return {{"generators", s.generators()},
          {"includes_zero", s.includes_zero()},
          {"frobenius", s.frobenius()}};
}

nlohmann::json to_json(const PSet& x) {
  nlohmann::json j;
  j["head"] = x.head_values();
  if (x.is_tail()) {
    j["threshold"] = x.threshold();
  } else {
    j["threshold"] = nullptr;
  }
  return j;
}

PSet pset_from_json(const PSet::Ground& ground, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("head")) throw input_error("set JSON needs a head array");
  std::vector<std::int64_t> head = j.at("head").get<std::vector<std::int64_t>>();
  if (j.contains("threshold") && !j.at("threshold").is_null()) {
    return PSet::with_tail(ground, head, j.at("threshold").get<std::int64_t>());
  }
  return PSet::finite(ground, head);
}

nlohmann::json to_json(const WitnessReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const PSet& w : r.witnesses) witnesses.push_back(to_json(w));
  return {{"witnesses", witnesses},
          {"verified", r.verified},
          {"bound_claimed", r.bound_claimed},
          {"distinct_count", r.distinct_count}};
}

nlohmann::json to_json(const TruncatedPowerMonoid& m) {
  nlohmann::json elements = nlohmann::json::array();
  for (std::uint32_t i = 0; i < m.size(); ++i) elements.push_back(m.element_values(i));
  return {{"window", m.window()},
          {"variant", m.variant() == Variant::P0 ? "p0" : "p"},
          {"members", m.member_values()},
          {"elements", elements}};
}

nlohmann::json to_json(const AutomorphismSearchResult& r) {
  return {{"automorphisms", r.automorphisms}, {"complete", r.complete}};
}

nlohmann::json to_json(const ProofPipelineReport& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const PipelineStep& s : r.steps) {
    steps.push_back({{"name", s.name},
                     {"passed", s.passed},
                     {"checked", s.checked},
                     {"witness", s.witness}});
  }
  return {{"steps", steps}, {"all_passed", r.all_passed()}};
}

}  // namespace powsgp
