// JSON views of the report types, with stable field names. Bigraded
// degrees serialize as [a, b] pairs, single degrees as plain integers.
#pragma once

#include "json.hpp"
#include "spbw/gradings.hpp"
#include "spbw/koszul.hpp"
#include "spbw/parse.hpp"

namespace spbw {

using nlohmann::json;

inline void to_json(json& j, const ClassificationReport& r) {
  j = json{{"constant", r.constant},
           {"pre_commutative", r.pre_commutative},
           {"quasi_commutative", r.quasi_commutative},
           {"endomorphism_type", r.endomorphism_type},
           {"derivation_type", r.derivation_type},
           {"semi_commutative", r.semi_commutative},
           {"r_augmented", r.r_augmented},
           {"augmented_over_K", r.augmented_over_K},
           {"bijective", to_string(r.bijective)}};
  if (!r.bijective_detail.empty()) j["bijective_detail"] = r.bijective_detail;
}

inline void to_json(json& j, const OverlapWitness& w) {
  j = json{{"indices", w.indices}, {"lhs", w.lhs}, {"rhs", w.rhs}};
  if (w.with_base_generator) j["base_generator"] = w.base_generator;
}

inline void to_json(json& j, const PresentationReport& r) {
  j = json{{"ok", r.ok},
           {"errors", r.errors},
           {"warnings", r.warnings},
           {"spot_checks", r.spot_checks},
           {"seed", r.seed}};
  if (r.overlap) j["overlap"] = *r.overlap;
}

inline void to_json(json& j, const RelationLedgerRow& r) {
  j = json{{"relation", r.relation},
           {"degrees", r.degrees},
           {"homogeneous", r.homogeneous}};
}

inline void to_json(json& j, const CompatibleWitness& w) {
  j = json{{"generators", w.generators}, {"relations", w.relations}};
}

inline void to_json(json& j, const HomogeneityReport& r) {
  j = json{{"grading", to_string(r.kind)},
           {"homogeneous", r.homogeneous},
           {"rows", r.rows}};
  if (r.compatible) j["compatible"] = *r.compatible;
}

inline void to_json(json& j, const GradedDims& d) {
  j = json{{"grading", to_string(d.kind)}, {"bigraded", d.bigraded}};
  if (d.bigraded) {
    json dims = json::array();
    for (const auto& [a, b, dim] : d.pairs) dims.push_back({a, b, dim});
    j["dims"] = std::move(dims);
  } else {
    json dims = json::array();
    for (const auto& [deg, dim] : d.single) dims.push_back({deg, dim});
    j["dims"] = std::move(dims);
  }
}

inline void to_json(json& j, const RadicalCommutationReport& r) {
  j = json{{"ok", r.ok}, {"detail", r.detail}};
}

inline void to_json(json& j, const KoszulCertificate& c) {
  bool bigraded = c.mode == ResolutionMode::RAugmented;
  json steps = json::array();
  for (const StepSummary& s : c.steps) {
    json gens = json::array();
    for (const GenSummary& g : s.gens) {
      json deg = bigraded ? json::array({g.degree.a, g.degree.b}) : json(g.degree.a);
      gens.push_back({{"degree", std::move(deg)}, {"count", g.count}});
    }
    steps.push_back({{"i", s.index}, {"generators", std::move(gens)}});
  }
  j = json{{"mode", to_string(c.mode)},
           {"bounds", {{"H", c.H}, {"D", c.D}}},
           {"steps", std::move(steps)},
           {"verdict", to_string(c.verdict)},
           {"witness", c.witness},
           {"notes", c.notes}};
}

inline void to_json(json& j, const TensorCheckReport& r) {
  j = json{{"ok", r.ok}, {"detail", r.detail}, {"notes", r.notes}};
}

inline void to_json(json& j, const AbarReport& r) {
  j = json{{"generalized", r.generalized},
           {"classical", r.classical},
           {"agree", r.agree}};
}

}  // namespace spbw
