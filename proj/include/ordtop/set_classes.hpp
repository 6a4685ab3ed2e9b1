#pragma once

#include <optional>
#include <vector>

#include "ordtop/space.hpp"

namespace ordtop {

/// Nonempty family of compact saturated sets in which every two members
/// contain a common member.
struct filtered_family {
  static filtered_family make(const finite_space& x, std::vector<subset> members);
  static bool is_filtered(const std::vector<subset>& members);

  std::vector<subset> members; // sorted, unique

  subset intersection() const;
  /// Finite filtered families have a least member.
  subset least_member() const;
};

/// Default bound on |K(X)| for the exhaustive subfamily enumeration.
inline constexpr int rudin_family_limit = 16;

/// Point closures.
std::vector<subset> point_closures(const finite_space& x);

/// Closures of directed subsets; enumerates all directed subsets.
std::vector<subset> directed_closures(const finite_space& x);

/// Rudin sets by the definition: minimal closed sets meeting every member of
/// some filtered subfamily of K(X), over all 2^|K(X)| subfamilies.
std::vector<subset> rudin_sets(const finite_space& x, int family_size_limit = rudin_family_limit);

/// Same family through the least-member reduction: every finite filtered
/// family has a least member, so principal subfamilies suffice.
std::vector<subset> rudin_sets_reduced(const finite_space& x);

/// Closed sets meeting every member of the family.
std::vector<subset> meets_all_family(const finite_space& x, const std::vector<subset>& members);

/// A is a minimal closed set meeting every member of k.
bool rudin_witness_check(const finite_space& x, subset a, const filtered_family& k);

struct wd_refutation {
  std::vector<std::string> target_carrier;
  std::vector<subset> target_opens;
  std::vector<int> assignment;
  subset image_closure = 0;
};

/// Searches continuous maps into finite T0 spaces (identity target plus all
/// labeled posets up to max_target_size, deduplicated) for one whose image
/// closure is not a point closure.
std::optional<wd_refutation> wd_refute(const finite_space& x, subset a, int max_target_size = 3);

/// Well-filtered determined closed sets of a finite space: equals the point
/// closures because finite spaces are well-filtered.
std::vector<subset> wd_sets(const finite_space& x);

struct push_forward_result {
  bool a_rudin = false;
  bool image_rudin = false;
  bool rudin_preserved = true;
  bool a_wd = false;
  bool image_wd = false;
  bool wd_preserved = true;
};

/// Image closures of Rudin / wd sets stay in the class.
push_forward_result push_forward_class_check(const std::vector<int>& f, const finite_space& x,
                                             const finite_space& y, subset a);

/// Directed D inside the down-set of A with closure(D) = A; least witness in
/// canonical set order. Requires A irreducible closed; the space must be
/// locally hypercompact (verified).
subset extract_directed_dense(const finite_space& x, subset a);

/// All K in K(X) whose interior meets A; requires A irreducible closed and
/// local compactness (verified). The result is nonempty, filtered, and has A
/// minimal among closed sets meeting every member.
filtered_family build_lc_rudin_family(const finite_space& x, subset a);

struct singleton_image_result {
  bool holds = false;
  int point = -1; // index in y
};

/// Image closure of a Rudin set under a continuous map into a finite
/// (well-filtered) space is the closure of a unique point.
singleton_image_result singleton_image_check(const std::vector<int>& f, const finite_space& x,
                                             subset a, const finite_space& y);

bool is_locally_compact(const finite_space& x);
bool is_locally_hypercompact(const finite_space& x);

} // namespace ordtop
