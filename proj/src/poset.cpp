#include "ordtop/poset.hpp"

#include <algorithm>
#include <map>

namespace ordtop {

std::vector<int> bits_of(subset s) {
  std::vector<int> out;
  while (s) {
    int i = std::countr_zero(s);
    out.push_back(i);
    s &= s - 1;
  }
  return out;
}

finite_poset::finite_poset(std::vector<std::string> names, std::vector<subset> up)
    : names_(std::move(names)), up_(std::move(up)) {
  down_.assign(names_.size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j : bits_of(up_[static_cast<std::size_t>(i)]))
      down_[static_cast<std::size_t>(j)] |= subset{1} << i;
}

finite_poset finite_poset::from_pairs(std::vector<std::string> elements,
                                      const std::vector<std::pair<std::string, std::string>>& base_pairs) {
  if (elements.empty()) fail(errc::bad_input, "poset needs at least one element");
  if (elements.size() > 64) fail(errc::size_limit, "carrier exceeds 64 elements");
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 1; i < elements.size(); ++i)
    if (elements[i] == elements[i - 1]) fail(errc::duplicate_id, "duplicate element '" + elements[i] + "'");

  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) idx[elements[i]] = static_cast<int>(i);

  const int n = static_cast<int>(elements.size());
  std::vector<subset> up(elements.size());
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = subset{1} << i;
  for (const auto& [a, b] : base_pairs) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) fail(errc::unknown_element, "unknown element '" + a + "' in order pair");
    if (ib == idx.end()) fail(errc::unknown_element, "unknown element '" + b + "' in order pair");
    up[static_cast<std::size_t>(ia->second)] |= subset{1} << ib->second;
  }

  // reflexive-transitive closure (Warshall on up-masks)
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (has_bit(up[static_cast<std::size_t>(i)], k)) up[static_cast<std::size_t>(i)] |= up[static_cast<std::size_t>(k)];

  for (int i = 0; i < n; ++i)
    for (int j : bits_of(up[static_cast<std::size_t>(i)]))
      if (j != i && has_bit(up[static_cast<std::size_t>(j)], i))
        fail(errc::cycle_detected, "antisymmetry fails between '" + elements[static_cast<std::size_t>(i)] +
                                       "' and '" + elements[static_cast<std::size_t>(j)] + "'");

  return finite_poset(std::move(elements), std::move(up));
}

finite_poset finite_poset::from_up_masks(std::vector<std::string> elements, std::vector<subset> up) {
  if (elements.size() != up.size() || elements.empty()) fail(errc::bad_input, "mismatched carrier and relation");
  if (!std::is_sorted(elements.begin(), elements.end())) fail(errc::bad_input, "carrier not in canonical order");
  const int n = static_cast<int>(elements.size());
  for (int i = 0; i < n; ++i) {
    if (!has_bit(up[static_cast<std::size_t>(i)], i)) fail(errc::bad_input, "relation not reflexive");
    for (int j : bits_of(up[static_cast<std::size_t>(i)])) {
      if (!is_subset(up[static_cast<std::size_t>(j)], up[static_cast<std::size_t>(i)]))
        fail(errc::bad_input, "relation not transitive");
      if (j != i && has_bit(up[static_cast<std::size_t>(j)], i)) fail(errc::cycle_detected, "relation not antisymmetric");
    }
  }
  return finite_poset(std::move(elements), std::move(up));
}

int finite_poset::index_of(const std::string& id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) fail(errc::unknown_element, "unknown element '" + id + "'");
  return static_cast<int>(it - names_.begin());
}

subset finite_poset::down_set(subset s) const {
  if (!is_subset(s, carrier())) fail(errc::unknown_element, "set not within carrier");
  subset out = 0;
  for (int i : bits_of(s)) out |= down_[static_cast<std::size_t>(i)];
  return out;
}

subset finite_poset::up_set(subset s) const {
  if (!is_subset(s, carrier())) fail(errc::unknown_element, "set not within carrier");
  subset out = 0;
  for (int i : bits_of(s)) out |= up_[static_cast<std::size_t>(i)];
  return out;
}

bool finite_poset::is_directed(subset s) const {
  if (!is_subset(s, carrier())) fail(errc::unknown_element, "set not within carrier");
  if (s == 0) return false;
  for (int a : bits_of(s))
    for (int b : bits_of(s)) {
      if (b < a) continue;
      if ((up_[static_cast<std::size_t>(a)] & up_[static_cast<std::size_t>(b)] & s) == 0) return false;
    }
  return true;
}

subset finite_poset::maximal_in(subset s) const {
  if (!is_subset(s, carrier())) fail(errc::unknown_element, "set not within carrier");
  if (s == 0) fail(errc::empty_set, "maximal_in of empty set");
  subset out = 0;
  for (int a : bits_of(s))
    if ((up_[static_cast<std::size_t>(a)] & s & ~(subset{1} << a)) == 0) out |= subset{1} << a;
  return out;
}

subset finite_poset::minimal_in(subset s) const {
  if (!is_subset(s, carrier())) fail(errc::unknown_element, "set not within carrier");
  if (s == 0) fail(errc::empty_set, "minimal_in of empty set");
  subset out = 0;
  for (int a : bits_of(s))
    if ((down_[static_cast<std::size_t>(a)] & s & ~(subset{1} << a)) == 0) out |= subset{1} << a;
  return out;
}

std::optional<int> finite_poset::sup_of(subset s) const {
  subset ub = carrier();
  for (int a : bits_of(s)) ub &= up_[static_cast<std::size_t>(a)];
  if (ub == 0) return std::nullopt;
  for (int m : bits_of(ub))
    if (is_subset(ub, up_[static_cast<std::size_t>(m)])) return m;
  return std::nullopt;
}

std::optional<int> finite_poset::inf_of(subset s) const {
  subset lb = carrier();
  for (int a : bits_of(s)) lb &= down_[static_cast<std::size_t>(a)];
  if (lb == 0) return std::nullopt;
  for (int m : bits_of(lb))
    if (is_subset(lb, down_[static_cast<std::size_t>(m)])) return m;
  return std::nullopt;
}

finite_poset::property_d_result finite_poset::property_d() const {
  check_subset_enum(names_.size(), "property_d");
  property_d_result r;
  for_each_submask(carrier(), [&](subset s) {
    if (!r.holds || s == 0) return;
    subset common = carrier();
    for (int a : bits_of(s)) common &= down_[static_cast<std::size_t>(a)];
    if (common == 0) return; // no lower bound: set not in scope
    if (!is_directed(common)) {
      r.holds = false;
      r.counterexample = s;
    }
  });
  return r;
}

finite_poset::lattice_flags finite_poset::lattice_structure() const {
  check_subset_enum(names_.size(), "lattice_structure");
  lattice_flags f;
  f.sup_semilattice = true;
  f.inf_semilattice = true;
  for (int a = 0; a < size() && (f.sup_semilattice || f.inf_semilattice); ++a)
    for (int b = a; b < size(); ++b) {
      subset pair = (subset{1} << a) | (subset{1} << b);
      if (!sup_of(pair)) f.sup_semilattice = false;
      if (!inf_of(pair)) f.inf_semilattice = false;
    }

  // bounded complete: every subset bounded above has a least upper bound;
  // the empty set is bounded above, so a least element is required.
  f.bounded_complete = true;
  for_each_submask(carrier(), [&](subset s) {
    if (!f.bounded_complete) return;
    subset ub = carrier();
    for (int a : bits_of(s)) ub &= up_[static_cast<std::size_t>(a)];
    if (ub == 0) return; // unbounded: exempt
    if (!sup_of(s)) f.bounded_complete = false;
  });

  // complete semilattice: dcpo (automatic here) + every nonempty subset has an inf.
  f.complete_semilattice = true;
  for_each_submask(carrier(), [&](subset s) {
    if (s == 0 || !f.complete_semilattice) return;
    if (!inf_of(s)) f.complete_semilattice = false;
  });
  return f;
}

monotone_map monotone_map::make(const finite_poset& src, const finite_poset& dst, std::vector<int> assignment) {
  if (assignment.size() != static_cast<std::size_t>(src.size())) fail(errc::bad_input, "assignment size mismatch");
  for (int v : assignment)
    if (v < 0 || v >= dst.size()) fail(errc::unknown_element, "assignment target out of range");
  if (!is_monotone(src, dst, assignment)) fail(errc::bad_input, "assignment is not monotone");
  return monotone_map{std::move(assignment)};
}

bool monotone_map::is_monotone(const finite_poset& src, const finite_poset& dst, const std::vector<int>& assignment) {
  for (int a = 0; a < src.size(); ++a)
    for (int b : bits_of(src.up_of(a)))
      if (!dst.leq(assignment[static_cast<std::size_t>(a)], assignment[static_cast<std::size_t>(b)])) return false;
  return true;
}

subset monotone_map::image(subset s) const {
  subset out = 0;
  for (int i : bits_of(s)) out |= subset{1} << to[static_cast<std::size_t>(i)];
  return out;
}

} // namespace ordtop
