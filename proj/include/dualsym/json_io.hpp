#pragma once

// JSON export for the machine-readable surfaces: closure tables, partial
// injections, the representation report and the CS-maximality report.

#include <json.hpp>

#include "dualsym/enumeration.hpp"
#include "dualsym/morphisms.hpp"
#include "dualsym/partial_injection.hpp"
#include "dualsym/representation.hpp"

namespace dualsym {

inline nlohmann::json to_json(const ClosureTable& t) {
  nlohmann::json j;
  j["degree"] = t.degree;
  j["generators"] = nlohmann::json::array();
  for (const Partition& g : t.generators)
    j["generators"].push_back(g.to_string());
  j["elements"] = nlohmann::json::array();
  for (const Partition& e : t.elements) j["elements"].push_back(e.to_string());
  j["edges"] = t.edges;
  return j;
}

inline nlohmann::json to_json(const PartialInjection& s) {
  nlohmann::json map = nlohmann::json::array();
  for (int v : s.images()) {
    if (v == 0)
      map.push_back(nullptr);
    else
      map.push_back(v);
  }
  return nlohmann::json{{"degree", s.degree()}, {"map", map}};
}

inline nlohmann::json to_json(const FaithfulnessReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const RepresentationCase& c : r.cases) {
    nlohmann::json jc{{"subgroup_size", c.subgroup.size()},
                      {"idempotent_rank", c.idempotent_rank},
                      {"points", c.points},
                      {"faithful", c.faithful}};
    if (c.equivalent_to_canonical)
      jc["equivalent_to_canonical"] = *c.equivalent_to_canonical;
    else
      jc["equivalent_to_canonical"] = nullptr;
    cases.push_back(std::move(jc));
  }
  return nlohmann::json{{"degree", r.degree}, {"cases", cases}};
}

inline nlohmann::json to_json(const CsMaximalityReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const CsMaximalityWitness& w : r.witnesses)
    witnesses.push_back(nlohmann::json{{"adjoined", w.adjoined},
                                       {"violation", w.violation},
                                       {"detail", w.detail}});
  return nlohmann::json{{"degree", r.degree},
                        {"base_size", r.base_size},
                        {"base_closed", r.base_closed},
                        {"base_inverse", r.base_inverse},
                        {"outside_count", r.outside_count},
                        {"witnesses", witnesses}};
}

inline nlohmann::json to_json(const EmbeddingObstruction& o) {
  return nlohmann::json{{"degree", o.degree},
                        {"ip_d_classes", o.ip_d_classes},
                        {"is_d_classes", o.is_d_classes}};
}

}  // namespace dualsym
