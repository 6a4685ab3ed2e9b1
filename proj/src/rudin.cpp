#include "ordtop/rudin.hpp"

#include <algorithm>

namespace ordtop {

bool is_irreducible_smyth(const finite_space& x, const std::vector<subset>& family) {
  if (family.empty()) fail(errc::bad_input, "family must be nonempty");
  auto kx = x.compact_saturated();
  for (subset k : family)
    if (!std::binary_search(kx.begin(), kx.end(), k))
      fail(errc::not_compact_saturated, "family member is not compact saturated");

  auto smy = smyth(x);
  auto pow = alexandroff_power(x);
  subset in_smy = 0, in_pow = 0;
  for (subset k : family) {
    in_smy |= subset{1} << smy.point_index(k);
    in_pow |= subset{1} << pow.point_index(k);
  }
  bool a = smy.space.is_irreducible(in_smy);
  bool b = pow.space.is_irreducible(in_pow);
  bool c = pow.space.is_irreducible(pow.space.closure(in_pow));
  if (a != b || b != c) fail(errc::bad_input, "irreducibility answers disagree across power spaces");
  return a;
}

subset minimal_irr_closed(const finite_space& x, const std::vector<subset>& family, subset c) {
  // In the upper space a family is irreducible exactly when every two
  // members contain a common member: the specialization order there is
  // refinement, so pairwise bounds inside the family are common refinements.
  // (The three-route computation in is_irreducible_smyth agrees with this;
  // checked in the tests.)
  if (family.empty()) fail(errc::bad_input, "family must be nonempty");
  auto kx = x.compact_saturated();
  for (subset k : family)
    if (!std::binary_search(kx.begin(), kx.end(), k))
      fail(errc::not_compact_saturated, "family member is not compact saturated");
  if (!filtered_family::is_filtered(family))
    fail(errc::not_irreducible_family, "family is not irreducible in the upper space");
  if (!x.is_closed(c)) fail(errc::not_closed, "search space must be closed");
  for (subset k : family)
    if ((c & k) == 0) fail(errc::misses_member, "closed set misses a family member");

  auto meets_all = [&](subset s) {
    for (subset k : family)
      if ((s & k) == 0) return false;
    return true;
  };

  std::vector<subset> candidates;
  for (subset cl : x.closed_sets())
    if (is_subset(cl, c) && meets_all(cl)) candidates.push_back(cl);

  std::vector<subset> minimal;
  for (subset a : candidates) {
    bool is_min = true;
    for (subset b : candidates)
      if (b != a && is_subset(b, a)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(a);
  }
  if (minimal.empty()) fail(errc::bad_input, "no minimal candidate"); // c itself qualifies, cannot happen

  bool some_irreducible = false;
  subset best = 0;
  for (subset a : minimal) // ascending canonical order
    if (x.is_irreducible(a)) {
      if (!some_irreducible) best = a;
      some_irreducible = true;
    }
  if (!some_irreducible) fail(errc::bad_input, "no minimal candidate is irreducible");
  return best;
}

subset poset_rudin(const finite_poset& p, const std::vector<subset>& upper_family, subset c) {
  if (upper_family.empty()) fail(errc::bad_input, "family must be nonempty");
  for (subset f : upper_family) {
    if (f == 0 || p.up_set(f) != f) fail(errc::bad_input, "family member is not a nonempty upper set");
    if ((f & c) == 0) fail(errc::misses_member, "lower set misses a family member");
  }
  if (!filtered_family::is_filtered(upper_family)) fail(errc::not_filtered, "family is not filtered");
  if (p.down_set(c) != c || c == 0) fail(errc::bad_input, "search set must be a nonempty lower set");

  auto x = finite_space::alexandroff(p);
  subset a = minimal_irr_closed(x, upper_family, c);

  // minimal irreducible closed sets of finite spaces are principal down-sets
  subset max_pts = p.maximal_in(a);
  if (popcount(max_pts) != 1 || p.down_set(max_pts) != a)
    fail(errc::bad_input, "minimal irreducible closed set is not a principal down-set");

  subset d = max_pts;
  if (!p.is_directed(d) || !is_subset(d, c)) fail(errc::bad_input, "extracted generator invalid");
  for (subset f : upper_family)
    if ((p.down_set(d) & f) == 0) fail(errc::bad_input, "extracted generator misses a member");
  return d;
}

} // namespace ordtop
