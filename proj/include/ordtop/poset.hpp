#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordtop/bits.hpp"
#include "ordtop/error.hpp"

namespace ordtop {

/// Finite poset over opaque string identifiers.
///
/// Elements are stored in lexicographic order; every enumeration and every
/// reported set follows that order. The relation is kept as per-element
/// up-set masks and is reflexive, transitive and antisymmetric by
/// construction.
class finite_poset {
public:
  /// Builds the poset whose order is the reflexive-transitive closure of
  /// base_pairs. Throws duplicate_id / unknown_element / cycle_detected.
  static finite_poset from_pairs(std::vector<std::string> elements,
                                 const std::vector<std::pair<std::string, std::string>>& base_pairs);

  /// Relation given directly as up-set masks (must already be a valid order).
  static finite_poset from_up_masks(std::vector<std::string> elements, std::vector<subset> up);

  int size() const { return static_cast<int>(names_.size()); }
  subset carrier() const { return full_mask(size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& id) const; // throws unknown_element

  bool leq(int a, int b) const { return has_bit(up_[static_cast<std::size_t>(a)], b); }
  subset up_of(int a) const { return up_[static_cast<std::size_t>(a)]; }
  subset down_of(int a) const { return down_[static_cast<std::size_t>(a)]; }

  subset down_set(subset s) const;
  subset up_set(subset s) const;

  /// Nonempty and every two members share an upper bound inside the set.
  bool is_directed(subset s) const;

  subset maximal_in(subset s) const; // throws empty_set
  subset minimal_in(subset s) const; // throws empty_set

  /// Least upper bound of s if it exists.
  std::optional<int> sup_of(subset s) const;
  std::optional<int> inf_of(subset s) const;

  struct property_d_result {
    bool holds = true;
    subset counterexample = 0; // lower-bounded set whose principal-down intersection is not directed
  };

  /// Every lower-bounded nonempty subset has a directed intersection of
  /// principal down-sets. Enumerates all 2^n - 1 subsets; size-guarded.
  property_d_result property_d() const;

  struct lattice_flags {
    bool sup_semilattice = false;
    bool inf_semilattice = false;
    bool bounded_complete = false;
    bool complete_semilattice = false;
  };

  lattice_flags lattice_structure() const;

  bool operator==(const finite_poset& o) const { return names_ == o.names_ && up_ == o.up_; }

private:
  finite_poset(std::vector<std::string> names, std::vector<subset> up);

  std::vector<std::string> names_;
  std::vector<subset> up_;   // up_[i] = {j : i <= j}
  std::vector<subset> down_; // down_[i] = {j : j <= i}
};

/// Total order-preserving assignment between two posets.
struct monotone_map {
  static monotone_map make(const finite_poset& src, const finite_poset& dst,
                           std::vector<int> assignment); // throws bad_input if not monotone

  static bool is_monotone(const finite_poset& src, const finite_poset& dst,
                          const std::vector<int>& assignment);

  std::vector<int> to; // to[i] = image index in dst

  subset image(subset s) const;
};

} // namespace ordtop
