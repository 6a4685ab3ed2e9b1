#pragma once

#include <string>

#include <json.hpp>

#include "ordtop/classifiers.hpp"
#include "ordtop/powerspace.hpp"
#include "ordtop/zoo/claims.hpp"

namespace ordtop {

using json = nlohmann::json; // std::map-backed: object keys serialize sorted

/// 64-bit FNV-1a, hex-encoded; used as the input digest of reports.
std::string fnv1a_hex(const std::string& bytes);

json set_to_json(const finite_space& x, subset s);
json family_to_json(const finite_space& x, const std::vector<subset>& fam);

json poset_to_json(const finite_poset& p);
json space_to_json(const finite_space& x);

json report_to_json(const property_report& r);
json checks_to_json(const std::vector<check_result>& checks);

/// Space descriptors: finite-poset (elements + pairs), finite-space
/// (carrier + opens), zoo (space id).
struct space_descriptor {
  enum class kind { finite_poset, finite_space, zoo } k = kind::finite_poset;
  finite_poset poset = finite_poset::from_pairs({"x"}, {});
  bool has_explicit_space = false;
  std::vector<std::string> carrier;
  std::vector<std::vector<std::string>> opens;
  zoo::space_id zoo_id = zoo::space_id::cofinite_nat;
};

space_descriptor parse_space_descriptor(const json& j);
finite_space descriptor_space(const space_descriptor& d);

json claim_to_json(const zoo::claim& c);
zoo::claim claim_from_json(const json& j);

json curated_to_json(const std::vector<zoo::curated_entry>& entries);

} // namespace ordtop
