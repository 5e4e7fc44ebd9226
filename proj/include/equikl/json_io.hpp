#pragma once
/* JSON serialization.  Schemas:
 *   Matroid            {"ground": [labels], "bases": [[labels]...]}
 *   VirtualRep         {"group": [[labels]...],
 *                       "terms": [{"parts": [[partition]...], "mult": n}...]}
 *   GradedVirtualRep   same as VirtualRep with "degree" added per term.
 * All emitters use insertion-ordered objects so output is stable. */

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "matroid.hpp"
#include "rep.hpp"
#include "text.hpp"
#include "young.hpp"

namespace equikl {

using ordered_json = nlohmann::ordered_json;

inline ordered_json matroid_to_json(const Matroid& m) {
  ordered_json j;
  j["ground"] = m.ground();
  ordered_json bases = ordered_json::array();
  for (Mask b : m.bases_masks()) bases.push_back(m.labels_of(b));
  j["bases"] = std::move(bases);
  return j;
}

inline Matroid matroid_from_json(const ordered_json& j) {
  try {
    const std::vector<int> ground = j.at("ground").get<std::vector<int>>();
    const auto bases = j.at("bases").get<std::vector<std::vector<int>>>();
    return Matroid::from_bases(ground, bases);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed matroid JSON: ") + e.what());
  }
}

namespace detail {

inline ordered_json blocks_to_json(const YoungGroup& g) {
  ordered_json out = ordered_json::array();
  for (const auto& b : g.blocks()) out.push_back(b);
  return out;
}

inline ordered_json parts_to_json(const MultiPartition& mp) {
  ordered_json parts = ordered_json::array();
  for (const Partition& p : mp) parts.push_back(p.parts());
  return parts;
}

}  // namespace detail

inline ordered_json rep_to_json(const VirtualRep& r) {
  ordered_json j;
  j["group"] = detail::blocks_to_json(r.group());
  ordered_json terms = ordered_json::array();
  for (const auto& [mp, c] : r.terms()) {
    ordered_json t;
    t["parts"] = detail::parts_to_json(mp);
    t["mult"] = c;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline ordered_json graded_to_json(const GradedVirtualRep& f) {
  ordered_json j;
  j["group"] = detail::blocks_to_json(f.group());
  ordered_json terms = ordered_json::array();
  for (const auto& [d, r] : f.terms())
    for (const auto& [mp, c] : r.terms()) {
      ordered_json t;
      t["degree"] = d;
      t["parts"] = detail::parts_to_json(mp);
      t["mult"] = c;
      terms.push_back(std::move(t));
    }
  j["terms"] = std::move(terms);
  return j;
}

/* A matroid given either as a family spec (see parse_matroid_spec) or as a
 * path to a JSON file in the schema above. */
inline Matroid matroid_from_spec_or_file(const std::string& spec) {
  if (looks_like_matroid_spec(spec)) return parse_matroid_spec(spec);
  std::ifstream in(spec);
  if (!in) throw parse_error("cannot open matroid file '" + spec + "'");
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("cannot parse '" + spec + "' as JSON: " + e.what());
  }
  return matroid_from_json(j);
}

}  // namespace equikl
