#pragma once

#include <string>
#include <vector>

#include "ordtop/poset.hpp"

namespace ordtop {

/// Finite T0 space with an explicit open-set family.
///
/// Finite topologies coincide with the upper-set families of their
/// specialization orders; the family is still stored and validated in full so
/// that the coincidence itself stays a checked invariant rather than an
/// assumption.
class finite_space {
public:
  /// Validates: empty set and carrier present, family closed under pairwise
  /// union/intersection, T0, and opens = upper sets of the specialization
  /// order.
  static finite_space from_opens(std::vector<std::string> carrier, std::vector<subset> opens);

  /// Upper Alexandroff space of a poset (all upper sets open). Size-guarded.
  static finite_space alexandroff(const finite_poset& p);

  int size() const { return static_cast<int>(names_.size()); }
  subset carrier() const { return full_mask(size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& id) const;

  const std::vector<subset>& opens() const { return opens_; }
  std::vector<subset> closed_sets() const;
  bool is_open(subset s) const;
  bool is_closed(subset s) const { return is_open(carrier() & ~s); }

  /// x <= y iff x lies in the closure of {y}.
  const finite_poset& specialization() const { return order_; }

  subset closure(subset s) const;
  subset interior(subset s) const;
  subset saturate(subset s) const;

  /// Not covered by two closed sets without lying inside one; checked against
  /// every pair of closed sets.
  bool is_irreducible(subset a) const; // throws empty_set

  /// Same predicate through the pairwise upper-bound criterion: a set is
  /// irreducible iff every two of its points see a common point of the set in
  /// both their minimal neighborhoods.
  bool is_irreducible_fast(subset a) const;

  std::vector<subset> irreducible_closed() const;

  /// Nonempty compact saturated subsets; each member re-verified by the
  /// cover-based compactness check.
  std::vector<subset> compact_saturated() const;

  /// Every open cover drawn from the minimal-neighborhood base has a finite
  /// subcover (covers from the full family reduce to base covers).
  bool is_compact(subset s) const;

  bool is_sober() const;

  /// Subspace on the given carrier subset, induced opens.
  finite_space subspace(subset sub) const;

  bool operator==(const finite_space& o) const { return names_ == o.names_ && opens_ == o.opens_; }

private:
  finite_space(std::vector<std::string> names, std::vector<subset> opens, finite_poset order);

  std::vector<std::string> names_;
  std::vector<subset> opens_; // sorted ascending as masks
  finite_poset order_;        // specialization order
};

/// Closes a generating family under pairwise union and intersection.
/// Throws size_limit past the cap.
std::vector<subset> generate_set_family(std::vector<subset> gens, std::size_t cap = 20000);

/// Point map between spaces; continuity = preimage of opens open.
bool is_continuous(const std::vector<int>& assignment, const finite_space& x, const finite_space& y);

subset map_image(const std::vector<int>& assignment, subset s);
subset map_preimage(const std::vector<int>& assignment, int src_size, subset t);

/// f restricted to opens is a homeomorphism onto its image.
bool is_topological_embedding(const std::vector<int>& assignment, const finite_space& x, const finite_space& y);

bool are_homeomorphic(const finite_space& x, const finite_space& y);

} // namespace ordtop
