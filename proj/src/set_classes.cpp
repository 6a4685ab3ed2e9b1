#include "ordtop/set_classes.hpp"

#include <algorithm>

#include "ordtop/enumerate.hpp"

namespace ordtop {

namespace {

void sort_unique(std::vector<subset>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool family_contains(const std::vector<subset>& fam, subset s) {
  return std::binary_search(fam.begin(), fam.end(), s);
}

std::vector<subset> minimal_members(const std::vector<subset>& fam) {
  std::vector<subset> out;
  for (subset a : fam) {
    bool minimal = true;
    for (subset b : fam)
      if (b != a && is_subset(b, a)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

} // namespace

bool filtered_family::is_filtered(const std::vector<subset>& members) {
  if (members.empty()) return false;
  for (subset k1 : members)
    for (subset k2 : members) {
      bool found = false;
      for (subset k3 : members)
        if (is_subset(k3, k1 & k2)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

filtered_family filtered_family::make(const finite_space& x, std::vector<subset> members) {
  sort_unique(members);
  auto kx = x.compact_saturated();
  for (subset m : members)
    if (!family_contains(kx, m)) fail(errc::not_compact_saturated, "family member is not compact saturated");
  if (!is_filtered(members)) fail(errc::not_filtered, "family is not filtered");
  return filtered_family{std::move(members)};
}

subset filtered_family::intersection() const {
  subset out = ~subset{0};
  for (subset m : members) out &= m;
  return out;
}

subset filtered_family::least_member() const {
  for (subset m : members) {
    bool least = true;
    for (subset o : members)
      if (!is_subset(m, o)) {
        least = false;
        break;
      }
    if (least) return m;
  }
  fail(errc::not_filtered, "filtered family without least member");
}

std::vector<subset> point_closures(const finite_space& x) {
  std::vector<subset> out;
  for (int p = 0; p < x.size(); ++p) out.push_back(x.closure(subset{1} << p));
  sort_unique(out);
  return out;
}

std::vector<subset> directed_closures(const finite_space& x) {
  check_subset_enum(static_cast<std::size_t>(x.size()), "directed_closures");
  const auto& order = x.specialization();
  std::vector<subset> out;
  for_each_submask(x.carrier(), [&](subset d) {
    if (d != 0 && order.is_directed(d)) out.push_back(x.closure(d));
  });
  sort_unique(out);
  return out;
}

std::vector<subset> meets_all_family(const finite_space& x, const std::vector<subset>& members) {
  std::vector<subset> out;
  for (subset c : x.closed_sets()) {
    bool all = true;
    for (subset k : members)
      if ((c & k) == 0) {
        all = false;
        break;
      }
    if (all) out.push_back(c);
  }
  return out;
}

std::vector<subset> rudin_sets(const finite_space& x, int family_size_limit) {
  auto kx = x.compact_saturated();
  if (kx.size() > static_cast<std::size_t>(family_size_limit))
    fail(errc::size_limit, "K(X) has " + std::to_string(kx.size()) + " members; exhaustive subfamily bound is " +
                               std::to_string(family_size_limit));
  std::vector<subset> out;
  const subset all_idx = full_mask(static_cast<int>(kx.size()));
  for_each_submask(all_idx, [&](subset sel) {
    if (sel == 0) return;
    std::vector<subset> fam;
    for (int i : bits_of(sel)) fam.push_back(kx[static_cast<std::size_t>(i)]);
    if (!filtered_family::is_filtered(fam)) return;
    for (subset m : minimal_members(meets_all_family(x, fam))) out.push_back(m);
  });
  sort_unique(out);
  return out;
}

std::vector<subset> rudin_sets_reduced(const finite_space& x) {
  std::vector<subset> out;
  for (subset k : x.compact_saturated())
    for (subset m : minimal_members(meets_all_family(x, {k}))) out.push_back(m);
  sort_unique(out);
  return out;
}

bool rudin_witness_check(const finite_space& x, subset a, const filtered_family& k) {
  if (!x.is_closed(a)) fail(errc::not_closed, "witness set must be closed");
  auto kx = x.compact_saturated();
  for (subset m : k.members)
    if (!family_contains(kx, m)) fail(errc::not_compact_saturated, "family member is not compact saturated");
  if (!filtered_family::is_filtered(k.members)) fail(errc::not_filtered, "family is not filtered");

  for (subset m : k.members)
    if ((a & m) == 0) return false;
  for (subset c : x.closed_sets()) {
    if (c == a || !is_subset(c, a)) continue;
    bool meets_all = true;
    for (subset m : k.members)
      if ((c & m) == 0) {
        meets_all = false;
        break;
      }
    if (meets_all) return false; // a proper closed subset already meets everything
  }
  return true;
}

std::optional<wd_refutation> wd_refute(const finite_space& x, subset a, int max_target_size) {
  if (a == 0) fail(errc::empty_set, "refutation target must be nonempty");
  check_subset_enum(static_cast<std::size_t>(x.size()), "wd_refute");

  auto try_map = [&](const finite_space& y, const std::vector<int>& f) -> std::optional<wd_refutation> {
    subset img_cl = y.closure(map_image(f, a));
    if (!family_contains(point_closures(y), img_cl))
      return wd_refutation{y.names(), y.opens(), f, img_cl};
    return std::nullopt;
  };

  // identity target first: complete for refutation on finite sources
  {
    std::vector<int> id(static_cast<std::size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i) id[static_cast<std::size_t>(i)] = i;
    if (auto w = try_map(x, id)) return w;
  }
  for (int n = 1; n <= max_target_size; ++n)
    for (const auto& q : dedup_isomorphic(all_labeled_posets(n))) {
      auto y = finite_space::alexandroff(q);
      for (const auto& f : all_monotone_maps(x.specialization(), q))
        if (auto w = try_map(y, f)) return w;
    }
  return std::nullopt;
}

std::vector<subset> wd_sets(const finite_space& x) { return point_closures(x); }

push_forward_result push_forward_class_check(const std::vector<int>& f, const finite_space& x,
                                             const finite_space& y, subset a) {
  if (!is_continuous(f, x, y)) fail(errc::not_continuous, "map is not continuous");
  if (!x.is_closed(a)) fail(errc::not_closed, "class membership asks for a closed set");

  push_forward_result r;
  subset img_cl = y.closure(map_image(f, a));
  auto rd_x = rudin_sets_reduced(x);
  auto rd_y = rudin_sets_reduced(y);
  r.a_rudin = family_contains(rd_x, a);
  r.image_rudin = family_contains(rd_y, img_cl);
  r.rudin_preserved = !r.a_rudin || r.image_rudin;
  auto wd_x = wd_sets(x);
  auto wd_y = wd_sets(y);
  r.a_wd = family_contains(wd_x, a);
  r.image_wd = family_contains(wd_y, img_cl);
  r.wd_preserved = !r.a_wd || r.image_wd;
  return r;
}

bool is_locally_compact(const finite_space& x) {
  auto kx = x.compact_saturated();
  for (int p = 0; p < x.size(); ++p)
    for (subset u : x.opens()) {
      if (!has_bit(u, p)) continue;
      bool found = false;
      for (subset k : kx)
        if (has_bit(x.interior(k), p) && is_subset(k, u)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

bool is_locally_hypercompact(const finite_space& x) {
  check_subset_enum(static_cast<std::size_t>(x.size()), "is_locally_hypercompact");
  const auto& order = x.specialization();
  for (int p = 0; p < x.size(); ++p)
    for (subset u : x.opens()) {
      if (!has_bit(u, p)) continue;
      bool found = false;
      for_each_submask(x.carrier(), [&](subset fin) {
        if (found || fin == 0) return;
        subset upf = order.up_set(fin);
        if (has_bit(x.interior(upf), p) && is_subset(upf, u)) found = true;
      });
      if (!found) return false;
    }
  return true;
}

subset extract_directed_dense(const finite_space& x, subset a) {
  auto irr = x.irreducible_closed();
  if (!family_contains(irr, a)) fail(errc::not_irreducible_closed, "set is not irreducible closed");
  if (!is_locally_hypercompact(x)) fail(errc::bad_input, "space is not locally hypercompact");

  const auto& order = x.specialization();
  subset down_a = order.down_set(a);
  subset best = 0;
  bool have = false;
  for_each_submask(down_a, [&](subset d) {
    if (have || d == 0) return; // submasks ascend; first hit is canonical-least
    if (order.is_directed(d) && x.closure(d) == a) {
      best = d;
      have = true;
    }
  });
  if (!have) fail(errc::bad_input, "no directed dense subset found"); // cannot happen on finite spaces
  return best;
}

filtered_family build_lc_rudin_family(const finite_space& x, subset a) {
  auto irr = x.irreducible_closed();
  if (!family_contains(irr, a)) fail(errc::not_irreducible_closed, "set is not irreducible closed");
  if (!is_locally_compact(x)) fail(errc::bad_input, "space is not locally compact");

  std::vector<subset> members;
  for (subset k : x.compact_saturated())
    if ((a & x.interior(k)) != 0) members.push_back(k);

  if (members.empty()) fail(errc::bad_input, "interior family unexpectedly empty");
  if (!filtered_family::is_filtered(members)) fail(errc::bad_input, "interior family unexpectedly unfiltered");
  filtered_family fam{std::move(members)};
  if (!rudin_witness_check(x, a, fam)) fail(errc::bad_input, "set is not minimal for its interior family");
  return fam;
}

singleton_image_result singleton_image_check(const std::vector<int>& f, const finite_space& x, subset a,
                                             const finite_space& y) {
  if (!family_contains(rudin_sets_reduced(x), a)) fail(errc::not_rudin_set, "set is not a Rudin set");
  if (!is_continuous(f, x, y)) fail(errc::not_continuous, "map is not continuous");

  singleton_image_result r;
  subset img_cl = y.closure(map_image(f, a));
  for (int p = 0; p < y.size(); ++p)
    if (y.closure(subset{1} << p) == img_cl) {
      if (r.holds) return {false, -1}; // not unique
      r.holds = true;
      r.point = p;
    }
  return r;
}

} // namespace ordtop
