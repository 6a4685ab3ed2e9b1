#include "ordtop/classifiers.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ordtop/enumerate.hpp"

namespace ordtop {

namespace {

std::vector<std::string> element_names(const finite_space& x, subset s) {
  std::vector<std::string> out;
  for (int i : bits_of(s)) out.push_back(x.name(i));
  return out;
}

std::string set_to_string(const finite_space& x, subset s) {
  std::string out = "{";
  bool first = true;
  for (int i : bits_of(s)) {
    if (!first) out += ",";
    out += x.name(i);
    first = false;
  }
  return out + "}";
}

std::vector<subset> directed_subsets(const finite_poset& p) {
  std::vector<subset> out;
  for_each_submask(p.carrier(), [&](subset d) {
    if (d != 0 && p.is_directed(d)) out.push_back(d);
  });
  return out;
}

subset up_intersection(const finite_poset& p, subset d) {
  subset out = p.carrier();
  for (int e : bits_of(d)) out &= p.up_of(e);
  return out;
}

std::vector<subset> scott_opens(const finite_poset& p) {
  check_subset_enum(static_cast<std::size_t>(p.size()), "scott_opens");
  auto dirs = directed_subsets(p);
  std::vector<subset> out;
  for_each_submask(p.carrier(), [&](subset u) {
    if (p.up_set(u) != u) return;
    for (subset d : dirs) {
      auto sup = p.sup_of(d);
      if (sup && has_bit(u, *sup) && (d & u) == 0) return;
    }
    out.push_back(u);
  });
  return out;
}

bool family_eq(const std::vector<subset>& a, const std::vector<subset>& b) { return a == b; }

// ---- the five equivalent monotone-convergence conditions ----

bool d_cond_dcpo_scott(const finite_space& x) {
  const auto& p = x.specialization();
  for (subset d : directed_subsets(p))
    if (!p.sup_of(d)) return false; // dcpo
  auto sigma = scott_opens(p);
  for (subset u : x.opens())
    if (!std::binary_search(sigma.begin(), sigma.end(), u)) return false;
  return true;
}

bool d_cond_closure_families(const finite_space& x) {
  return family_eq(directed_closures(x), point_closures(x));
}

bool d_cond_open_absorption(const finite_space& x) {
  const auto& p = x.specialization();
  for (subset d : directed_subsets(p)) {
    subset inter = up_intersection(p, d);
    for (subset u : x.opens())
      if (is_subset(inter, u) && (d & u) == 0) return false;
  }
  return true;
}

bool d_cond_closed_meets(const finite_space& x) {
  const auto& p = x.specialization();
  auto closed = x.closed_sets();
  for (subset d : directed_subsets(p)) {
    subset inter = up_intersection(p, d);
    for (subset a : closed)
      if (is_subset(d, a) && (a & inter) == 0) return false;
  }
  return true;
}

bool d_cond_closure_meets(const finite_space& x) {
  const auto& p = x.specialization();
  for (subset d : directed_subsets(p))
    if ((x.closure(d) & up_intersection(p, d)) == 0) return false;
  return true;
}

struct strong_d_outcome {
  bool holds = true;
  subset d = 0, f = 0, u = 0;
};

strong_d_outcome strong_d_definitional(const finite_space& x) {
  const auto& p = x.specialization();
  for (subset d : directed_subsets(p)) {
    subset inter = up_intersection(p, d);
    for (int pt = 0; pt < x.size(); ++pt) {
      subset upx = p.up_of(pt);
      for (subset u : x.opens()) {
        if (!is_subset(inter & upx, u)) continue;
        bool some = false;
        for (int e : bits_of(d))
          if (is_subset(p.up_of(e) & upx, u)) {
            some = true;
            break;
          }
        if (!some) return {false, d, subset{1} << pt, u};
      }
    }
  }
  return {};
}

strong_d_outcome strong_d_finite_sets(const finite_space& x) {
  check_subset_enum(static_cast<std::size_t>(x.size()), "strong_d_finite_sets");
  const auto& p = x.specialization();
  auto dirs = directed_subsets(p);
  strong_d_outcome out;
  for_each_submask(x.carrier(), [&](subset f) {
    if (f == 0 || !out.holds) return;
    subset upf = p.up_set(f);
    for (subset d : dirs) {
      subset inter = up_intersection(p, d);
      for (subset u : x.opens()) {
        if (!is_subset(inter & upf, u)) continue;
        bool some = false;
        for (int e : bits_of(d))
          if (is_subset(p.up_of(e) & upf, u)) {
            some = true;
            break;
          }
        if (!some) {
          out = {false, d, f, u};
          return;
        }
      }
    }
  });
  return out;
}

struct wf_outcome {
  bool holds = true;
  std::vector<subset> family;
  subset open = 0;
};

wf_outcome well_filtered_bruteforce(const finite_space& x, int family_limit) {
  auto kx = x.compact_saturated();
  if (kx.size() > static_cast<std::size_t>(family_limit))
    fail(errc::size_limit, "K(X) too large for the exhaustive well-filteredness check");
  wf_outcome out;
  for_each_submask(full_mask(static_cast<int>(kx.size())), [&](subset sel) {
    if (sel == 0 || !out.holds) return;
    std::vector<subset> fam;
    for (int i : bits_of(sel)) fam.push_back(kx[static_cast<std::size_t>(i)]);
    if (!filtered_family::is_filtered(fam)) return;
    subset inter = x.carrier();
    for (subset k : fam) inter &= k;
    for (subset u : x.opens()) {
      if (!is_subset(inter, u)) continue;
      bool some = false;
      for (subset k : fam)
        if (is_subset(k, u)) {
          some = true;
          break;
        }
      if (!some) {
        out = {false, fam, u};
        return;
      }
    }
  });
  return out;
}

/// Finite filtered families have least members, so principal subfamilies
/// decide the condition.
wf_outcome well_filtered_reduced(const finite_space& x) {
  for (subset k : x.compact_saturated())
    for (subset u : x.opens())
      if (is_subset(k, u) && !is_subset(k, u)) return {false, {k}, u};
  return {};
}

} // namespace

property_report classify(const finite_space& x) {
  property_report r;
  const auto& p = x.specialization();

  r.t1 = true;
  for (int a = 0; a < x.size() && r.t1; ++a)
    for (int b = 0; b < x.size(); ++b)
      if (a != b && p.leq(a, b)) {
        r.t1 = false;
        r.witnesses.push_back({"t1",
                               "distinct comparable points",
                               {{"lower", {x.name(a)}}, {"upper", {x.name(b)}}}});
        break;
      }

  bool c1 = d_cond_dcpo_scott(x);
  bool c2 = d_cond_closure_families(x);
  bool c3 = d_cond_open_absorption(x);
  bool c4 = d_cond_closed_meets(x);
  bool c5 = d_cond_closure_meets(x);
  if (c1 != c2 || c2 != c3 || c3 != c4 || c4 != c5)
    fail(errc::bad_input, "the five monotone-convergence conditions disagree");
  r.d_space = c1;
  if (!r.d_space) r.witnesses.push_back({"d_space", "monotone-convergence conditions fail", {}});

  auto sd = strong_d_definitional(x);
  auto sd2 = strong_d_finite_sets(x);
  if (sd.holds != sd2.holds) fail(errc::bad_input, "strong-d characterizations disagree");
  r.strong_d = sd.holds;
  if (!r.strong_d)
    r.witnesses.push_back({"strong_d",
                           "directed set, point and open violating the strong condition",
                           {{"directed", element_names(x, sd.d)},
                            {"point", element_names(x, sd.f)},
                            {"open", element_names(x, sd.u)}}});

  auto kx = x.compact_saturated();
  wf_outcome wf = kx.size() <= rudin_family_limit ? well_filtered_bruteforce(x, rudin_family_limit)
                                                  : well_filtered_reduced(x);
  if (kx.size() <= rudin_family_limit) {
    auto wf2 = well_filtered_reduced(x);
    if (wf.holds != wf2.holds) fail(errc::bad_input, "well-filteredness routes disagree");
  }
  r.well_filtered = wf.holds;
  if (!r.well_filtered) {
    flag_witness w{"well_filtered", "filtered family escaping an open", {}};
    for (subset k : wf.family) w.parts.push_back({"member", element_names(x, k)});
    w.parts.push_back({"open", element_names(x, wf.open)});
    r.witnesses.push_back(std::move(w));
  }

  r.sober = x.is_sober();
  if (!r.sober) {
    for (subset a : x.irreducible_closed()) {
      int generic = -1;
      bool unique = true;
      for (int pt = 0; pt < x.size(); ++pt)
        if (x.closure(subset{1} << pt) == a) {
          if (generic >= 0) unique = false;
          generic = pt;
        }
      if (generic < 0 || !unique) {
        r.witnesses.push_back({"sober", "irreducible closed set without a unique generic point", {{"set", element_names(x, a)}}});
        break;
      }
    }
  }

  r.coherent = true;
  for (std::size_t i = 0; i < kx.size() && r.coherent; ++i)
    for (std::size_t j = i; j < kx.size(); ++j) {
      subset inter = kx[i] & kx[j];
      if (!x.is_compact(inter)) {
        r.coherent = false;
        r.witnesses.push_back({"coherent",
                               "compact saturated pair with non-compact intersection",
                               {{"first", element_names(x, kx[i])}, {"second", element_names(x, kx[j])}}});
        break;
      }
    }

  r.locally_compact = is_locally_compact(x);
  if (!r.locally_compact) r.witnesses.push_back({"locally_compact", "point without compact neighborhoods inside some open", {}});
  r.locally_hypercompact = is_locally_hypercompact(x);
  if (!r.locally_hypercompact)
    r.witnesses.push_back({"locally_hypercompact", "point without finitely generated neighborhoods inside some open", {}});

  // consistency of the report with the known implication arrows
  if (r.t1 && !r.strong_d) fail(errc::bad_input, "report violates: t1 implies strong d");
  if (r.sober && !r.well_filtered) fail(errc::bad_input, "report violates: sober implies well-filtered");
  if (r.well_filtered && !r.d_space) fail(errc::bad_input, "report violates: well-filtered implies d-space");
  if (r.strong_d && !r.d_space) fail(errc::bad_input, "report violates: strong d implies d-space");
  if (r.coherent && r.well_filtered && !r.strong_d)
    fail(errc::bad_input, "report violates: coherent well-filtered implies strong d");
  return r;
}

namespace {

bool down_closure_condition(const finite_space& x, const std::vector<subset>& as, const std::vector<subset>& ks,
                            bool require_max, std::string* detail) {
  const auto& p = x.specialization();
  for (subset a : as) {
    if (require_max && a != 0 && p.maximal_in(a) == 0) {
      if (detail) *detail = "closed set without maximal points: " + set_to_string(x, a);
      return false;
    }
    for (subset k : ks)
      if (!x.is_closed(p.down_set(a & k))) {
        if (detail)
          *detail = "lower closure of " + set_to_string(x, a) + " meet " + set_to_string(x, k) + " is not closed";
        return false;
      }
  }
  return true;
}

std::vector<subset> nonempty_upper_sets(const finite_space& x) {
  std::vector<subset> out;
  for (subset u : x.opens()) // opens of a finite space are exactly its upper sets
    if (u != 0) out.push_back(u);
  return out;
}

} // namespace

std::vector<check_result> wf_characterization_check(const finite_space& x) {
  bool wf = classify(x).well_filtered;
  auto wd = wd_sets(x);
  auto rd = rudin_sets_reduced(x);
  auto up = nonempty_upper_sets(x);
  auto kx = x.compact_saturated();

  std::vector<check_result> out;
  auto run = [&](const std::string& id, const std::vector<subset>& as, const std::vector<subset>& ks, bool require_max) {
    std::string detail;
    bool cond = down_closure_condition(x, as, ks, require_max, &detail);
    bool pass = (cond == wf);
    out.push_back({id, pass, pass ? "" : detail});
  };
  run("wf-wd-upper", wd, up, true);
  run("wf-rd-upper", rd, up, true);
  run("wf-wd-compact", wd, kx, true);
  run("wf-rd-compact", rd, kx, true);

  // d-space variants drop the maximal-point requirement
  bool d = classify(x).d_space;
  auto run_d = [&](const std::string& id, const std::vector<subset>& as, const std::vector<subset>& ks) {
    std::string detail;
    bool cond = down_closure_condition(x, as, ks, false, &detail);
    bool pass = !d || (cond == wf);
    out.push_back({id, pass, pass ? "" : detail});
  };
  run_d("wf-d-wd-upper", wd, up);
  run_d("wf-d-rd-upper", rd, up);
  run_d("wf-d-wd-compact", wd, kx);
  run_d("wf-d-rd-compact", rd, kx);
  return out;
}

namespace {

bool is_filter_in(const std::vector<subset>& ground, const std::vector<subset>& psi) {
  if (psi.empty()) return false;
  for (subset k : psi)
    for (subset g : ground)
      if (is_subset(k, g) && !std::binary_search(psi.begin(), psi.end(), g)) return false; // upward closed
  for (subset k1 : psi) {
    for (subset k2 : psi) {
      bool found = false;
      for (subset k3 : psi)
        if (is_subset(k3, k1 & k2)) {
          found = true;
          break;
        }
      if (!found) return false; // downward directed
    }
  }
  return true;
}

} // namespace

std::vector<check_result> sober_characterization_check(const finite_space& x) {
  bool sober = x.is_sober();
  const auto& p = x.specialization();
  auto irr = x.irreducible_closed();

  std::vector<check_result> out;
  auto run = [&](const std::string& id, const std::vector<subset>& ground) {
    bool cond = true;
    std::string detail;
    for (subset a : irr) {
      std::vector<subset> psi;
      for (subset k : ground)
        if ((k & a) != 0) psi.push_back(k);
      if (!is_filter_in(ground, psi)) {
        cond = false;
        detail = "meeting family of " + set_to_string(x, a) + " is not a filter";
        break;
      }
      if (p.maximal_in(a) == 0) {
        cond = false;
        detail = "irreducible closed set without maximal points";
        break;
      }
      for (subset k : ground)
        if (!x.is_closed(p.down_set(a & k))) {
          cond = false;
          detail = "lower closure of " + set_to_string(x, a) + " meet " + set_to_string(x, k) + " not closed";
          break;
        }
      if (!cond) break;
    }
    bool pass = (cond == sober);
    out.push_back({id, pass, pass ? "" : detail});
  };
  run("sober-upper-filter", nonempty_upper_sets(x));
  run("sober-compact-filter", x.compact_saturated());
  return out;
}

bool strongly_scott_open(const finite_poset& p, subset u) {
  if (p.up_set(u) != u) fail(errc::not_upper_set, "strong Scott openness asks for an upper set");
  for (subset d : directed_subsets(p)) {
    subset inter = up_intersection(p, d);
    for (int x = 0; x < p.size(); ++x) {
      subset upx = p.up_of(x);
      if (!is_subset(inter & upx, u)) continue;
      bool some = false;
      for (int e : bits_of(d))
        if (is_subset(p.up_of(e) & upx, u)) {
          some = true;
          break;
        }
      if (!some) return false;
    }
  }
  return true;
}

strong_scott_result strong_scott_topology(const finite_poset& p) {
  check_subset_enum(static_cast<std::size_t>(p.size()), "strong_scott_topology");
  strong_scott_result r;
  for_each_submask(p.carrier(), [&](subset u) {
    if (p.up_set(u) == u && strongly_scott_open(p, u)) r.base.push_back(u);
  });
  // the base is intersection-stable; generation only adds unions
  for (subset u : r.base)
    for (subset v : r.base)
      if (std::find(r.base.begin(), r.base.end(), u & v) == r.base.end())
        fail(errc::bad_input, "strongly Scott open sets are not intersection-stable");
  r.topology = generate_set_family(r.base);

  auto topo = topologies(p);
  auto contains_all = [](const std::vector<subset>& big, const std::vector<subset>& small) {
    for (subset s : small)
      if (!std::binary_search(big.begin(), big.end(), s)) return false;
    return true;
  };
  if (!contains_all(r.topology, topo.upper) || !contains_all(topo.scott, r.topology))
    fail(errc::bad_input, "strong Scott topology escapes its bounding topologies");
  return r;
}

topology_record topologies(const finite_poset& p) {
  check_subset_enum(static_cast<std::size_t>(p.size()), "topologies");
  topology_record t;

  std::vector<subset> upper_gens{0, p.carrier()};
  for_each_submask(p.carrier(), [&](subset f) {
    if (f != 0) upper_gens.push_back(p.carrier() & ~p.down_set(f));
  });
  t.upper = generate_set_family(std::move(upper_gens));

  t.scott = scott_opens(p);

  std::vector<subset> lower_gens{0, p.carrier()};
  for (int x = 0; x < p.size(); ++x) lower_gens.push_back(p.carrier() & ~p.up_of(x));
  t.lower = generate_set_family(std::move(lower_gens));

  std::vector<subset> lawson_gens = t.scott;
  lawson_gens.insert(lawson_gens.end(), t.lower.begin(), t.lower.end());
  t.lawson = generate_set_family(std::move(lawson_gens));

  for_each_submask(p.carrier(), [&](subset u) {
    if (p.up_set(u) == u) t.alexandroff.push_back(u);
  });

  if (t.upper != t.scott || t.scott != t.alexandroff)
    fail(errc::bad_input, "upper, Scott and Alexandroff topologies differ on a finite poset");
  if (t.lawson.size() != (std::size_t{1} << p.size()))
    fail(errc::bad_input, "Lawson topology of a finite poset is not discrete");
  return t;
}

// ---------------------------------------------------------------------------
// theorem-instance catalog

namespace {

struct suite_context {
  const finite_poset& p;
  finite_space x;
  property_report rep;
  std::vector<subset> closed;
  std::vector<subset> kx;
  std::vector<subset> wd;
  std::vector<subset> rd;
  std::vector<subset> dc;
  std::vector<subset> irr;
  finite_space lawson_space;
  std::map<subset, property_report> retract_cache;

  explicit suite_context(const finite_poset& poset)
      : p(poset),
        x(finite_space::alexandroff(poset)),
        rep(classify(x)),
        closed(x.closed_sets()),
        kx(x.compact_saturated()),
        wd(wd_sets(x)),
        rd(rudin_sets_reduced(x)),
        dc(directed_closures(x)),
        irr(x.irreducible_closed()),
        lawson_space(finite_space::from_opens(poset.names(), topologies(poset).lawson)) {}

  const property_report& classify_subspace(subset sub) {
    auto it = retract_cache.find(sub);
    if (it == retract_cache.end()) it = retract_cache.emplace(sub, classify(x.subspace(sub))).first;
    return it->second;
  }
};

check_result entry_d_space_max_point(suite_context& c) {
  if (c.rep.d_space)
    for (subset a : c.closed)
      if (a != 0 && c.p.maximal_in(a) == 0)
        return {"d-space-max-point", false, "closed set without maximal point " + set_to_string(c.x, a)};
  return {"d-space-max-point", true, ""};
}

check_result entry_wf_implies_d(suite_context& c) {
  return {"wf-implies-d", !c.rep.well_filtered || c.rep.d_space, ""};
}

check_result entry_wf_retract(suite_context& c) {
  if (!c.rep.well_filtered) return {"wf-retract", true, ""};
  const int n = c.x.size();
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  // enumerate all self-maps; keep continuous idempotents
  while (true) {
    bool idempotent = true;
    for (int i = 0; i < n && idempotent; ++i) {
      int v = f[static_cast<std::size_t>(i)];
      if (f[static_cast<std::size_t>(v)] != v) idempotent = false;
    }
    if (idempotent && monotone_map::is_monotone(c.p, c.p, f)) {
      subset image = 0;
      for (int v : f) image |= subset{1} << v;
      if (!c.classify_subspace(image).well_filtered)
        return {"wf-retract", false, "retract onto " + set_to_string(c.x, image) + " is not well-filtered"};
    }
    int i = 0;
    while (i < n && f[static_cast<std::size_t>(i)] == n - 1) f[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++f[static_cast<std::size_t>(i)];
  }
  return {"wf-retract", true, ""};
}

check_result entry_lc_wf_sober(suite_context& c) {
  return {"lc-wf-sober", !(c.rep.locally_compact && c.rep.well_filtered) || c.rep.sober, ""};
}

check_result entry_lawson_compact_downset(suite_context& c) {
  // premise: the order is upper semiclosed for the Lawson topology
  for (int e = 0; e < c.p.size(); ++e)
    if (!c.lawson_space.is_closed(c.p.up_of(e))) return {"lawson-compact-downset-closed", true, ""};
  auto sigma = scott_opens(c.p);
  bool pass = true;
  std::string detail;
  for_each_submask(c.p.carrier(), [&](subset a) {
    if (!pass || !c.lawson_space.is_compact(a)) return;
    subset down = c.p.down_set(a);
    if (!std::binary_search(sigma.begin(), sigma.end(), c.p.carrier() & ~down)) {
      pass = false;
      detail = "lower set of compact " + set_to_string(c.x, a) + " not Scott closed";
    }
  });
  return {"lawson-compact-downset-closed", pass, detail};
}

check_result entry_downset_union_decomposition(suite_context& c) {
  if (!c.rep.d_space) return {"downset-meet-union", true, ""};
  for (subset a : c.closed) {
    bool premise = true;
    for (int e = 0; e < c.p.size() && premise; ++e)
      if (!c.x.is_closed(c.p.down_set(c.p.up_of(e) & a))) premise = false;
    if (!premise) continue;
    for (subset k : c.kx) {
      subset whole = c.p.down_set(k & a);
      subset pieces = 0;
      for (int e : bits_of(k)) pieces |= c.p.down_set(c.p.up_of(e) & a);
      if (whole != pieces || !c.x.is_closed(whole))
        return {"downset-meet-union", false,
                "decomposition fails for closed " + set_to_string(c.x, a) + " and compact " + set_to_string(c.x, k)};
    }
  }
  return {"downset-meet-union", true, ""};
}

check_result entry_weak_semicompact_wf(suite_context& c) {
  bool premise = true;
  for (int e = 0; e < c.p.size() && premise; ++e)
    for (subset a : c.irr)
      if (!c.lawson_space.is_compact(c.p.up_of(e) & a)) {
        premise = false;
        break;
      }
  return {"weak-semicompact-lawson-wf", !premise || c.rep.well_filtered, ""};
}

check_result entry_semicompact_wf(suite_context& c) {
  bool premise = true;
  for (int e = 0; e < c.p.size() && premise; ++e)
    if (!c.lawson_space.is_compact(c.p.up_of(e))) premise = false;
  return {"semicompact-lawson-wf", !premise || c.rep.well_filtered, ""};
}

check_result entry_strong_d_strong_scott(suite_context& c) {
  auto ss = strong_scott_topology(c.p);
  bool opens_inside = true;
  for (subset u : c.x.opens())
    if (!std::binary_search(ss.topology.begin(), ss.topology.end(), u)) {
      opens_inside = false;
      break;
    }
  if (c.rep.strong_d && !(c.rep.d_space && opens_inside))
    return {"strong-d-strong-scott-opens", false, "strong d-space whose opens escape the strong Scott topology"};
  if (c.p.lattice_structure().sup_semilattice && (c.rep.d_space && opens_inside) != c.rep.strong_d)
    return {"strong-d-strong-scott-opens", false, "equivalence fails on a sup semilattice"};
  return {"strong-d-strong-scott-opens", true, ""};
}

std::vector<subset> meet_closure_of_down_values(const finite_poset& p) {
  std::vector<subset> vals;
  for_each_submask(p.carrier(), [&](subset f) {
    if (f != 0) vals.push_back(p.down_set(f));
  });
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  // close under pairwise intersection
  std::vector<subset> fam = vals;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<subset> add;
    for (subset a : fam)
      for (subset b : fam) {
        subset m = a & b;
        if (!std::binary_search(fam.begin(), fam.end(), m) && !std::binary_search(add.begin(), add.end(), m)) {
          add.insert(std::lower_bound(add.begin(), add.end(), m), m);
        }
      }
    if (!add.empty()) {
      grew = true;
      fam.insert(fam.end(), add.begin(), add.end());
      std::sort(fam.begin(), fam.end());
    }
  }
  return fam;
}

check_result entry_upper_strong_d_iff(suite_context& c) {
  // the upper topology of a finite poset is its Alexandroff space, so the
  // left-hand side is the strong-d flag of x
  auto sigma = scott_opens(c.p);
  bool rhs = true;
  for (subset lower : meet_closure_of_down_values(c.p)) {
    for (int e = 0; e < c.p.size(); ++e) {
      subset down = c.p.down_set(c.p.up_of(e) & lower);
      if (!std::binary_search(sigma.begin(), sigma.end(), c.p.carrier() & ~down)) {
        rhs = false;
        break;
      }
    }
    if (!rhs) break;
  }
  bool lhs = c.rep.strong_d; // finite posets are dcpos
  return {"upper-strong-d-iff-meets-closed", lhs == rhs, lhs == rhs ? "" : "equivalence fails"};
}

check_result entry_scott_strong_d_iff(suite_context& c) {
  bool rhs = true;
  for (subset a : c.closed) {
    for (int e = 0; e < c.p.size(); ++e)
      if (!c.x.is_closed(c.p.down_set(c.p.up_of(e) & a))) {
        rhs = false;
        break;
      }
    if (!rhs) break;
  }
  return {"scott-strong-d-iff-caps-closed", c.rep.strong_d == rhs, ""};
}

check_result entry_property_d_strong_d(suite_context& c) {
  if (!c.p.property_d().holds) return {"property-d-upper-strong-d", true, ""};
  return {"property-d-upper-strong-d", c.rep.strong_d, c.rep.strong_d ? "" : "property D without strong d"};
}

check_result entry_property_d_distributivity(suite_context& c) {
  // chain: property D => the meet distributivity => monotone convergence for
  // the upper topology; families of up to three finitely generated down-sets
  std::vector<subset> downs;
  for_each_submask(c.p.carrier(), [&](subset f) {
    if (f != 0) downs.push_back(c.p.down_set(f));
  });
  std::sort(downs.begin(), downs.end());
  downs.erase(std::unique(downs.begin(), downs.end()), downs.end());

  bool distributive = true;
  std::string detail;
  auto check_family = [&](const std::vector<subset>& fi) {
    for (int e = 0; e < c.p.size(); ++e) {
      subset upx = c.p.up_of(e);
      subset meet_first = c.p.carrier();
      for (subset f : fi) meet_first &= f;
      subset lhs = c.p.down_set(upx & meet_first);
      subset rhs = c.p.carrier();
      for (subset f : fi) rhs &= c.p.down_set(upx & f);
      if (lhs != rhs) {
        distributive = false;
        detail = "distributivity fails at point " + c.x.name(e);
        return;
      }
    }
  };
  for (std::size_t i = 0; i < downs.size() && distributive; ++i) {
    check_family({downs[i]});
    for (std::size_t j = i; j < downs.size() && distributive; ++j) {
      check_family({downs[i], downs[j]});
      for (std::size_t k = j; k < downs.size() && distributive; ++k) check_family({downs[i], downs[j], downs[k]});
    }
  }

  if (c.p.property_d().holds && !distributive) return {"property-d-distributivity-chain", false, detail};
  if (distributive && !c.rep.d_space) return {"property-d-distributivity-chain", false, "distributive but not a d-space"};
  return {"property-d-distributivity-chain", true, ""};
}

check_result entry_closed_upcap_strong_d(suite_context& c) {
  bool premise = c.rep.d_space;
  for (int e = 0; e < c.p.size() && premise; ++e)
    for (subset a : c.closed)
      if (!c.x.is_closed(c.p.down_set(c.p.up_of(e) & a))) {
        premise = false;
        break;
      }
  return {"closed-upcap-strong-d", !premise || c.rep.strong_d, ""};
}

check_result entry_class_max_sat_wf_strong_d(suite_context& c, const std::string& id, const std::vector<subset>& cls) {
  bool premise = true;
  for (subset b : cls)
    if (b != 0 && c.p.maximal_in(b) == 0) premise = false;
  for (subset a : c.closed) {
    if (!premise) break;
    for (subset k : c.kx)
      if (!c.x.is_closed(c.p.down_set(a & k))) {
        premise = false;
        break;
      }
  }
  return {id, !premise || (c.rep.well_filtered && c.rep.strong_d), ""};
}

check_result entry_d_sat_closure_wf_strong_d(suite_context& c) {
  bool premise = c.rep.d_space;
  for (subset a : c.closed) {
    if (!premise) break;
    for (subset k : c.kx)
      if (!c.x.is_closed(c.p.down_set(a & k))) {
        premise = false;
        break;
      }
  }
  return {"d-sat-closure-wf-strong-d", !premise || (c.rep.well_filtered && c.rep.strong_d), ""};
}

check_result entry_semicompact_strong_d(suite_context& c) {
  bool premise = true;
  for (int e = 0; e < c.p.size() && premise; ++e)
    if (!c.lawson_space.is_compact(c.p.up_of(e))) premise = false;
  return {"semicompact-lawson-strong-d", !premise || c.rep.strong_d, ""};
}

check_result entry_hypercompact_collapse(suite_context& c) {
  if (!c.rep.locally_hypercompact) return {"hypercompact-class-collapse", true, ""};
  bool eq = (c.irr == c.wd) && (c.wd == c.rd) && (c.rd == c.dc);
  return {"hypercompact-class-collapse", eq, eq ? "" : "set classes do not collapse"};
}

} // namespace

std::vector<std::string> theorem_suite_ids() {
  return {"d-space-max-point",
          "wf-implies-d",
          "wf-retract",
          "lc-wf-sober",
          "lawson-compact-downset-closed",
          "downset-meet-union",
          "weak-semicompact-lawson-wf",
          "semicompact-lawson-wf",
          "strong-d-strong-scott-opens",
          "upper-strong-d-iff-meets-closed",
          "scott-strong-d-iff-caps-closed",
          "property-d-upper-strong-d",
          "property-d-distributivity-chain",
          "closed-upcap-strong-d",
          "wd-max-sat-wf-strong-d",
          "rd-max-sat-wf-strong-d",
          "d-sat-closure-wf-strong-d",
          "semicompact-lawson-strong-d",
          "hypercompact-class-collapse"};
}

std::vector<check_result> theorem_suite(const finite_poset& p) {
  if (p.size() > 7) fail(errc::size_limit, "the retract entry enumerates all self-maps; carrier limit is 7");
  suite_context c(p);
  std::vector<check_result> out;
  out.push_back(entry_d_space_max_point(c));
  out.push_back(entry_wf_implies_d(c));
  out.push_back(entry_wf_retract(c));
  out.push_back(entry_lc_wf_sober(c));
  out.push_back(entry_lawson_compact_downset(c));
  out.push_back(entry_downset_union_decomposition(c));
  out.push_back(entry_weak_semicompact_wf(c));
  out.push_back(entry_semicompact_wf(c));
  out.push_back(entry_strong_d_strong_scott(c));
  out.push_back(entry_upper_strong_d_iff(c));
  out.push_back(entry_scott_strong_d_iff(c));
  out.push_back(entry_property_d_strong_d(c));
  out.push_back(entry_property_d_distributivity(c));
  out.push_back(entry_closed_upcap_strong_d(c));
  out.push_back(entry_class_max_sat_wf_strong_d(c, "wd-max-sat-wf-strong-d", c.wd));
  out.push_back(entry_class_max_sat_wf_strong_d(c, "rd-max-sat-wf-strong-d", c.rd));
  out.push_back(entry_d_sat_closure_wf_strong_d(c));
  out.push_back(entry_semicompact_strong_d(c));
  out.push_back(entry_hypercompact_collapse(c));
  return out;
}

} // namespace ordtop
