#include "ordtop/powerspace.hpp"

#include <algorithm>
#include <numeric>

namespace ordtop {

namespace {

std::string set_name(const finite_space& base, subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : bits_of(s)) {
    if (!first) out += ",";
    out += base.name(i);
    first = false;
  }
  return out + "}";
}

/// Assemble a power space from carrier subsets and subset-indexed opens
/// (opens given as masks over the points vector order).
power_space assemble(const finite_space& base, power_kind kind, std::vector<subset> points,
                     std::vector<subset> opens_over_points) {
  // sort carrier names lexicographically, permuting masks alongside
  std::vector<std::string> raw_names;
  raw_names.reserve(points.size());
  for (subset s : points) raw_names.push_back(set_name(base, s));
  std::vector<int> perm(points.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return raw_names[static_cast<std::size_t>(a)] < raw_names[static_cast<std::size_t>(b)]; });
  std::vector<int> pos(points.size());
  for (std::size_t i = 0; i < perm.size(); ++i) pos[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);

  std::vector<std::string> names(points.size());
  std::vector<subset> pts(points.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    names[i] = raw_names[static_cast<std::size_t>(perm[i])];
    pts[i] = points[static_cast<std::size_t>(perm[i])];
  }
  std::vector<subset> opens;
  opens.reserve(opens_over_points.size());
  for (subset u : opens_over_points) {
    subset moved = 0;
    for (int i : bits_of(u)) moved |= subset{1} << pos[static_cast<std::size_t>(i)];
    opens.push_back(moved);
  }
  return power_space{base, kind, finite_space::from_opens(std::move(names), std::move(opens)), std::move(pts)};
}

std::vector<subset> box_opens(const finite_space& base, const std::vector<subset>& points) {
  std::vector<subset> gens;
  for (subset u : base.opens()) {
    subset box = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (is_subset(points[i], u)) box |= subset{1} << i;
    gens.push_back(box);
  }
  gens.push_back(0);
  gens.push_back(full_mask(static_cast<int>(points.size())));
  return gens;
}

std::vector<subset> diamond_opens(const finite_space& base, const std::vector<subset>& points) {
  std::vector<subset> gens;
  for (subset u : base.opens()) {
    subset dia = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      if ((points[i] & u) != 0) dia |= subset{1} << i;
    gens.push_back(dia);
  }
  gens.push_back(0);
  gens.push_back(full_mask(static_cast<int>(points.size())));
  return gens;
}

void check_carrier_fits(std::size_t members, const char* what) {
  if (members == 0) fail(errc::bad_input, std::string(what) + " would have an empty carrier");
  if (members > 60) fail(errc::size_limit, std::string(what) + " carrier too large");
}

} // namespace

const char* power_kind_name(power_kind k) {
  switch (k) {
    case power_kind::smyth: return "smyth";
    case power_kind::hoare: return "hoare";
    case power_kind::alex_power: return "alexandroff-power";
    case power_kind::sobrification: return "sobrification";
  }
  return "?";
}

int power_space::point_index(subset base_set) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == base_set) return static_cast<int>(i);
  fail(errc::unknown_element, "subset is not a carrier point of the power space");
}

power_space smyth(const finite_space& x) {
  auto points = x.compact_saturated();
  check_carrier_fits(points.size(), "upper space");
  auto ps = assemble(x, power_kind::smyth, points, generate_set_family(box_opens(x, points)));

  // specialization order must be reverse inclusion
  const auto& ord = ps.space.specialization();
  for (int i = 0; i < ps.space.size(); ++i)
    for (int j = 0; j < ps.space.size(); ++j)
      if (ord.leq(i, j) != is_subset(ps.points[static_cast<std::size_t>(j)], ps.points[static_cast<std::size_t>(i)]))
        fail(errc::bad_input, "upper-space order is not reverse inclusion");
  return ps;
}

power_space hoare(const finite_space& x) {
  std::vector<subset> points;
  for (subset c : x.closed_sets())
    if (c != 0) points.push_back(c);
  check_carrier_fits(points.size(), "lower space");
  auto ps = assemble(x, power_kind::hoare, points, generate_set_family(diamond_opens(x, points)));
  if (!ps.space.is_sober()) fail(errc::bad_input, "lower space failed its sobriety check");
  return ps;
}

power_space alexandroff_power(const finite_space& x) {
  std::vector<subset> points;
  for (subset u : x.opens()) // upper sets of a finite space are its opens
    if (u != 0) points.push_back(u);
  check_carrier_fits(points.size(), "Alexandroff power space");
  auto ps = assemble(x, power_kind::alex_power, points, generate_set_family(box_opens(x, points)));

  // the upper space embeds as a subspace on the compact saturated members
  auto smy = smyth(x);
  subset sub = 0;
  for (subset k : smy.points) sub |= subset{1} << ps.point_index(k);
  if (!(ps.space.subspace(sub) == smy.space)) fail(errc::bad_input, "upper space is not a subspace of the power space");
  return ps;
}

power_space sobrification(const finite_space& x) {
  auto points = x.irreducible_closed();
  check_carrier_fits(points.size(), "sobrification");
  return assemble(x, power_kind::sobrification, points, generate_set_family(diamond_opens(x, points)));
}

std::vector<int> eta_map(const finite_space& x, const power_space& sob) {
  std::vector<int> f(static_cast<std::size_t>(x.size()));
  for (int p = 0; p < x.size(); ++p) f[static_cast<std::size_t>(p)] = sob.point_index(x.closure(subset{1} << p));
  if (!is_topological_embedding(f, x, sob.space)) fail(errc::bad_input, "point-closure map is not an embedding");
  return f;
}

std::vector<int> xi_map(const finite_space& x, const power_space& smy) {
  std::vector<int> f(static_cast<std::size_t>(x.size()));
  for (int p = 0; p < x.size(); ++p) f[static_cast<std::size_t>(p)] = smy.point_index(x.saturate(subset{1} << p));
  if (!is_topological_embedding(f, x, smy.space)) fail(errc::bad_input, "point-saturation map is not an embedding");
  return f;
}

bool intersection_closure_check(const finite_space& x, const std::vector<subset>& family) {
  if (family.empty()) fail(errc::bad_input, "family must be nonempty");
  subset direct = x.carrier();
  for (subset k : family) direct &= k;

  for (const power_space& ps : {smyth(x), alexandroff_power(x)}) {
    subset pts = 0;
    for (subset k : family) pts |= subset{1} << ps.point_index(k);
    subset closed_pts = ps.space.closure(pts);
    subset through_closure = x.carrier();
    for (int i : bits_of(closed_pts)) through_closure &= ps.points[static_cast<std::size_t>(i)];
    if (through_closure != direct) return false;
  }
  return true;
}

bool smyth_sober_iff_check(const finite_space& x) {
  return x.is_sober() == smyth(x).space.is_sober();
}

} // namespace ordtop
