#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordtop/zoo/space.hpp"

namespace ordtop::zoo {

/// Parametric family of sets: one template in a natural parameter, checked
/// concretely up to sample_bound next to the symbolic analysis.
struct family_spec {
  sym_expr member;
  long sample_bound = 64;

  bool operator==(const family_spec&) const = default;
};

enum class claim_kind {
  not_well_filtered, // filtered compact family escaping an open
  not_strong_d,      // point sequence and point whose up-set meets escape an open
  not_coherent,      // compact pair whose meet has an open cover without finite subcover
  not_sober,         // irreducible closed set that is no point closure
  rudin_member,      // closed set minimal over a filtered compact family
  irr_fragment,      // co-finite space: size >= 2 finite sets reducible, the whole space irreducible
};

const char* claim_kind_name(claim_kind k);
claim_kind parse_claim_kind(const std::string& name);

struct claim {
  space_id space = space_id::cofinite_nat;
  claim_kind kind = claim_kind::not_well_filtered;

  std::optional<family_spec> family; // not_well_filtered, rudin_member, cover of not_coherent
  std::optional<set_expr> open_u;    // not_well_filtered, not_strong_d
  std::optional<sym_atom> point_seq; // not_strong_d: d(n)
  std::optional<zoo_point> point_x;  // not_strong_d
  std::optional<set_expr> k1, k2;    // not_coherent
  std::optional<set_expr> closed_a;  // rudin_member, not_sober
  long sample_bound = 64;            // concrete stage checks for point-sequence claims
  std::string derived_by;            // inference note when produced by a transfer

  bool operator==(const claim&) const = default;
};

enum class verdict_kind { verified, refuted, not_decidable };

struct verdict {
  verdict_kind kind = verdict_kind::not_decidable;
  std::string detail;

  bool verified() const { return kind == verdict_kind::verified; }
};

/// Checks every sub-condition of the claim symbolically plus on concrete
/// stages up to the family's sample bound. Verified only when everything
/// passes; a failed check refutes, an undecidable one reports itself.
verdict verify_claim(const claim& c);

/// A strong-d refutation for an upper topology transfers to any finer
/// topology on the same order whose opens include the witness open. Throws
/// not_coarser when the claim's open is not open in the coarser space, and
/// bad_input for mismatched carriers.
claim strong_d_transfer(const claim& verified_upper, space_id finer);

struct curated_entry {
  std::string description;
  bool verified = false;       // backed by a replayed claim; otherwise assumed from the source
  std::optional<claim> backing;
  std::string note;            // citation note for assumed entries, inference note for derived ones
};

/// Statement table for one space. Every verified entry replays its backing
/// claim; assumed entries are never premises of verified ones (checked).
std::vector<curated_entry> curated_results(space_id s);

/// The standard shipped claims (the ones backing the curated tables).
std::vector<claim> shipped_claims();

} // namespace ordtop::zoo
