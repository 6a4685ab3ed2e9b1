#include "ordtop/zoo/claims.hpp"

#include <algorithm>

namespace ordtop::zoo {

namespace {

verdict refuted(std::string why) { return {verdict_kind::refuted, std::move(why)}; }
verdict undecidable(std::string why) { return {verdict_kind::not_decidable, std::move(why)}; }
verdict verified() { return {verdict_kind::verified, ""}; }

zoo_point point_at(grammar_id g, const sym_atom& a, long n) {
  switch (a.kind) {
    case sym_kind::fin_pt: return nat_point{a.t.at(n)};
    case sym_kind::g_pt: return grid_point{a.col, a.t.at(n)};
    case sym_kind::g_pt_omega: return grid_point{a.col, omega_height};
    case sym_kind::a_pt: return fan_point{fan_part::a, a.t.at(n)};
    case sym_kind::b_pt: return fan_point{fan_part::b, 0};
    case sym_kind::w0_pt: return fan_point{fan_part::w0, 0};
    case sym_kind::w_pt: return fan_point{fan_part::w, a.t.at(n)};
    default: fail(errc::bad_input, "expected a point atom");
  }
  (void)g;
}

/// Compactness of every instantiation, decided by grammar-level rules plus
/// concrete stages.
std::optional<verdict> members_compact_saturated(space_id s, const family_spec& f) {
  grammar_id g = grammar_of(s);
  if (g == grammar_id::cofinite) {
    if (s == space_id::cofinite_nat) {
      if (!always_nonempty(f.member)) return refuted("a family member is empty");
    } else {
      if (!always_nonempty(f.member)) return refuted("a family member is empty");
      if (!always_finite(f.member)) return refuted("an infinite member is not compact in the co-countable space");
    }
  } else {
    if (!is_constant(f.member))
      return undecidable("member compactness is decided symbolically only on the co-finite grammars");
  }
  for (long n = 1; n <= f.sample_bound; ++n)
    if (!is_compact_saturated(s, substitute(f.member, n)))
      return refuted("stage " + std::to_string(n) + " is not compact saturated");
  return std::nullopt;
}

void stage_limit_coherence(const family_spec& f, const set_expr& limit) {
  for (long n = 1; n <= std::min<long>(f.sample_bound, 32); ++n)
    if (!subset_of(limit, substitute(f.member, n)))
      fail(errc::bad_input, "family limit escapes a sampled member");
}

verdict verify_not_well_filtered(const claim& c) {
  if (!c.family || !c.open_u) fail(errc::bad_input, "claim needs a family and an open set");
  check_grammar(c.space, *c.open_u);
  if (!is_open(c.space, *c.open_u)) return refuted("the witness set is not open");
  check_decreasing(c.family->member); // throws non_monotone_family
  if (auto v = members_compact_saturated(c.space, *c.family)) return *v;

  set_expr limit = family_limit(c.family->member);
  stage_limit_coherence(*c.family, limit);
  if (!subset_of(limit, *c.open_u)) return refuted("the full intersection escapes the open");
  if (!never_subset_of(c.family->member, *c.open_u)) return refuted("some member already fits inside the open");
  for (long n = 1; n <= c.family->sample_bound; ++n)
    if (subset_of(substitute(c.family->member, n), *c.open_u))
      return refuted("stage " + std::to_string(n) + " fits inside the open");
  return verified();
}

verdict verify_not_strong_d(const claim& c) {
  if (!c.point_seq || !c.point_x || !c.open_u) fail(errc::bad_input, "claim needs a point sequence, a point and an open set");
  check_grammar(c.space, *c.open_u);
  if (!is_open(c.space, *c.open_u)) return refuted("the witness set is not open");
  if (!is_chain_sym(c.space, *c.point_seq)) return refuted("the point sequence is not a chain");

  sym_expr stage;
  try {
    stage = up_meet_template(c.space, *c.point_seq, *c.point_x);
  } catch (const error& e) {
    if (e.code() == errc::unrepresentable_set) return undecidable(e.what());
    throw;
  }
  set_expr limit = family_limit(stage);
  if (!subset_of(limit, *c.open_u)) return refuted("the full up-set intersection escapes the open");
  if (!never_subset_of(stage, *c.open_u)) return refuted("some stage already fits inside the open");

  grammar_id g = grammar_of(c.space);
  for (long n = 1; n <= c.sample_bound; ++n) {
    set_expr direct = intersect(up_point(c.space, point_at(g, *c.point_seq, n)), up_point(c.space, *c.point_x));
    if (!(direct == substitute(stage, n))) fail(errc::bad_input, "symbolic stage disagrees with the concrete meet");
    if (subset_of(direct, *c.open_u)) return refuted("stage " + std::to_string(n) + " fits inside the open");
  }
  return verified();
}

verdict verify_not_coherent(const claim& c) {
  if (!c.k1 || !c.k2 || !c.family) fail(errc::bad_input, "claim needs two compact sets and a cover family");
  check_grammar(c.space, *c.k1);
  check_grammar(c.space, *c.k2);
  if (!is_compact_saturated(c.space, *c.k1)) return refuted("the first set is not compact saturated");
  if (!is_compact_saturated(c.space, *c.k2)) return refuted("the second set is not compact saturated");

  set_expr meet = intersect(*c.k1, *c.k2);
  if (finite_card(meet)) return refuted("the intersection is finite, hence compact");

  // every cover member open: sampled stages plus a pattern rule
  for (long n = 1; n <= c.family->sample_bound; ++n)
    if (!is_open(c.space, substitute(c.family->member, n)))
      return refuted("cover stage " + std::to_string(n) + " is not open");
  bool pattern_stable = is_constant(c.family->member);
  if (!pattern_stable) {
    // openness of the shipped covers is threshold-independent: isolated
    // maximal points of the fan and isolated tops of the grid
    for (const auto& a : c.family->member.atoms)
      if (a.kind != sym_kind::w_pt && a.kind != sym_kind::g_pt_omega && !a.t.is_const())
        return undecidable("cover openness beyond isolated maximal points is not decided symbolically");
  }

  set_expr swept;
  try {
    swept = swept_union(c.family->member);
  } catch (const error& e) {
    if (e.code() == errc::unrepresentable_set) return undecidable(e.what());
    throw;
  }
  if (!subset_of(meet, swept)) return refuted("the cover misses part of the intersection");
  if (!always_finite(c.family->member))
    return undecidable("finite-subcover analysis needs finite cover members");
  // each finite prefix covers finitely many points of an infinite set
  return verified();
}

verdict verify_rudin_member(const claim& c) {
  if (!c.closed_a || !c.family) fail(errc::bad_input, "claim needs a closed set and a family");
  check_grammar(c.space, *c.closed_a);
  if (grammar_of(c.space) != grammar_id::cofinite)
    return undecidable("minimality is quantified over closed sets only on the co-finite grammars");
  if (!is_closed(c.space, *c.closed_a)) return refuted("the candidate is not closed");
  check_decreasing(c.family->member);
  if (auto v = members_compact_saturated(c.space, *c.family)) return *v;

  set_expr limit = family_limit(c.family->member);
  stage_limit_coherence(*c.family, limit);

  if (is_all(*c.closed_a)) {
    if (!always_nonempty(c.family->member)) return refuted("an empty member misses the whole space");
    // a decreasing family is missed by every finite closed set exactly when
    // the full intersection is empty
    if (!is_empty(limit)) return refuted("a point survives in every member; its singleton is a smaller closed set");
    return verified();
  }
  long card = 0;
  if (!finite_card(*c.closed_a, &card)) return refuted("a proper closed set of these spaces is finite");
  set_expr meet_limit = intersect(*c.closed_a, limit);
  if (is_empty(meet_limit)) return refuted("the candidate misses some member of the decreasing family");
  if (card > 1) return refuted("a surviving point gives a smaller closed set meeting every member");
  return verified();
}

verdict verify_not_sober(const claim& c) {
  if (!c.closed_a) fail(errc::bad_input, "claim needs a closed set");
  check_grammar(c.space, *c.closed_a);
  if (!is_closed(c.space, *c.closed_a)) return refuted("the candidate is not closed");
  bool irr;
  try {
    irr = is_irreducible(c.space, *c.closed_a);
  } catch (const error& e) {
    if (e.code() == errc::unrepresentable_set) return undecidable(e.what());
    throw;
  }
  if (!irr) return refuted("the candidate is reducible");
  long card = 0;
  if (finite_card(*c.closed_a, &card) && card == 1) return refuted("the candidate is a point closure");
  // point closures of the T1-type spaces are singletons
  return verified();
}

verdict verify_irr_fragment(const claim& c) {
  if (grammar_of(c.space) != grammar_id::cofinite) fail(errc::wrong_grammar, "fragment claim lives on the co-finite grammars");
  // the whole space is irreducible: two proper closed sets are finite (or
  // countable) and cannot cover it
  if (!is_irreducible(c.space, all_expr(grammar_id::cofinite))) return refuted("the whole space is reducible");
  for (long half = 1; half <= 16; ++half) {
    cofin_set f1, f2;
    for (long v = 0; v < half; ++v) f1.pts.push_back(v);
    for (long v = half; v < 2 * half; ++v) f2.pts.push_back(v);
    if (subset_of(all_expr(grammar_id::cofinite), unite(set_expr{f1}, set_expr{f2})))
      return refuted("two finite closed sets cover the space");
  }
  // every finite closed set with at least two points splits into a singleton
  // and the closed rest
  for (long size = 2; size <= 8; ++size) {
    cofin_set s;
    for (long v = 0; v < size; ++v) s.pts.push_back(3 * v + 1);
    set_expr whole{s};
    if (is_irreducible(c.space, whole)) return refuted("a finite set with two points came out irreducible");
    set_expr one = cofin_set{false, {s.pts.front()}};
    set_expr rest = cofin_set{false, std::vector<long>(s.pts.begin() + 1, s.pts.end())};
    if (!is_closed(c.space, one) || !is_closed(c.space, rest)) return refuted("a finite set is not closed");
    if (!(unite(one, rest) == whole) || subset_of(whole, one) || subset_of(whole, rest))
      return refuted("the splitting pair does not witness reducibility");
  }
  return verified();
}

} // namespace

const char* claim_kind_name(claim_kind k) {
  switch (k) {
    case claim_kind::not_well_filtered: return "not-well-filtered";
    case claim_kind::not_strong_d: return "not-strong-d";
    case claim_kind::not_coherent: return "not-coherent";
    case claim_kind::not_sober: return "not-sober";
    case claim_kind::rudin_member: return "rudin-member";
    case claim_kind::irr_fragment: return "irr-fragment";
  }
  return "?";
}

claim_kind parse_claim_kind(const std::string& name) {
  for (claim_kind k : {claim_kind::not_well_filtered, claim_kind::not_strong_d, claim_kind::not_coherent,
                       claim_kind::not_sober, claim_kind::rudin_member, claim_kind::irr_fragment})
    if (name == claim_kind_name(k)) return k;
  fail(errc::bad_input, "unknown claim kind '" + name + "'");
}

verdict verify_claim(const claim& c) {
  switch (c.kind) {
    case claim_kind::not_well_filtered: return verify_not_well_filtered(c);
    case claim_kind::not_strong_d: return verify_not_strong_d(c);
    case claim_kind::not_coherent: return verify_not_coherent(c);
    case claim_kind::not_sober: return verify_not_sober(c);
    case claim_kind::rudin_member: return verify_rudin_member(c);
    case claim_kind::irr_fragment: return verify_irr_fragment(c);
  }
  fail(errc::bad_input, "unknown claim kind");
}

claim strong_d_transfer(const claim& verified_upper, space_id finer) {
  if (verified_upper.kind != claim_kind::not_strong_d) fail(errc::bad_input, "only strong-d refutations transfer");
  bool pair_ok = (verified_upper.space == space_id::johnstone_upper && finer == space_id::johnstone_scott) ||
                 (verified_upper.space == space_id::omega_fan_upper && finer == space_id::omega_fan_scott);
  if (!pair_ok) fail(errc::bad_input, "transfer needs the upper topology and a finer topology on the same order");
  if (!verified_upper.open_u) fail(errc::bad_input, "claim has no witness open");
  if (!is_open(verified_upper.space, *verified_upper.open_u))
    fail(errc::not_coarser, "the witness open is not open in the claimed coarser topology");
  if (!verify_claim(verified_upper).verified()) fail(errc::bad_input, "the coarser-topology claim does not verify");

  claim out = verified_upper;
  out.space = finer;
  out.derived_by = "upper-topology strong-d refutation transfers to every finer topology on the same order";
  return out;
}

// ---------------------------------------------------------------------------
// shipped claims and curated tables

namespace {

claim cofinite_nwf_claim() {
  claim c;
  c.space = space_id::cofinite_nat;
  c.kind = claim_kind::not_well_filtered;
  c.family = family_spec{parse_sym_expr(grammar_id::cofinite, "cofin-range(0,n)"), 100};
  c.open_u = empty_expr(grammar_id::cofinite);
  return c;
}

claim cofinite_rudin_claim() {
  claim c;
  c.space = space_id::cofinite_nat;
  c.kind = claim_kind::rudin_member;
  c.closed_a = all_expr(grammar_id::cofinite);
  c.family = family_spec{parse_sym_expr(grammar_id::cofinite, "cofin-range(0,n)"), 100};
  return c;
}

claim cofinite_irr_claim() {
  claim c;
  c.space = space_id::cofinite_nat;
  c.kind = claim_kind::irr_fragment;
  return c;
}

claim cofinite_not_sober_claim() {
  claim c;
  c.space = space_id::cofinite_nat;
  c.kind = claim_kind::not_sober;
  c.closed_a = all_expr(grammar_id::cofinite);
  return c;
}

claim cocountable_not_sober_claim() {
  claim c;
  c.space = space_id::cocountable;
  c.kind = claim_kind::not_sober;
  c.closed_a = all_expr(grammar_id::cofinite);
  return c;
}

claim johnstone_nsd_claim(space_id s) {
  claim c;
  c.space = s;
  c.kind = claim_kind::not_strong_d;
  c.point_seq = parse_sym_point(grammar_id::johnstone, "pt(1,n)");
  c.point_x = grid_point{2, 1};
  c.open_u = empty_expr(grammar_id::johnstone);
  c.sample_bound = 100;
  return c;
}

claim fan_nsd_claim(space_id s) {
  claim c;
  c.space = s;
  c.kind = claim_kind::not_strong_d;
  c.point_seq = parse_sym_point(grammar_id::omega_fan, "a(n)");
  c.point_x = fan_point{fan_part::b, 0};
  c.open_u = empty_expr(grammar_id::omega_fan);
  c.sample_bound = 100;
  return c;
}

claim fan_not_coherent_claim() {
  claim c;
  c.space = space_id::omega_fan_scott;
  c.kind = claim_kind::not_coherent;
  c.k1 = parse_expr(grammar_id::omega_fan, "atail(1) | w0 | wtail(1)"); // up-set of a_1
  c.k2 = parse_expr(grammar_id::omega_fan, "b | wtail(1)");             // up-set of b
  c.family = family_spec{parse_sym_expr(grammar_id::omega_fan, "w(n)"), 100};
  return c;
}

curated_entry verified_entry(std::string description, claim c, std::string note = "") {
  if (!verify_claim(c).verified()) fail(errc::bad_input, "curated entry failed to replay: " + description);
  return curated_entry{std::move(description), true, std::move(c), std::move(note)};
}

curated_entry assumed_entry(std::string description, std::string note) {
  return curated_entry{std::move(description), false, std::nullopt, std::move(note)};
}

} // namespace

std::vector<claim> shipped_claims() {
  return {cofinite_nwf_claim(),
          cofinite_rudin_claim(),
          cofinite_irr_claim(),
          cofinite_not_sober_claim(),
          cocountable_not_sober_claim(),
          johnstone_nsd_claim(space_id::johnstone_upper),
          johnstone_nsd_claim(space_id::johnstone_scott),
          fan_nsd_claim(space_id::omega_fan_upper),
          fan_nsd_claim(space_id::omega_fan_scott),
          fan_not_coherent_claim()};
}

std::vector<curated_entry> curated_results(space_id s) {
  std::vector<curated_entry> out;
  switch (s) {
    case space_id::cofinite_nat:
      out.push_back(verified_entry("not well-filtered", cofinite_nwf_claim()));
      out.push_back(verified_entry("the whole space is a Rudin set", cofinite_rudin_claim()));
      out.push_back(verified_entry("irreducible closed sets: the whole space and the singletons", cofinite_irr_claim()));
      out.push_back(verified_entry("not sober", cofinite_not_sober_claim()));
      out.push_back(assumed_entry("locally compact", "every nonempty subset is compact; stated for the source example"));
      out.push_back(assumed_entry("T1, hence a strong d-space", "finite sets are closed; stated for the source example"));
      break;
    case space_id::cocountable:
      out.push_back(verified_entry("not sober", cocountable_not_sober_claim()));
      out.push_back(assumed_entry("well-filtered", "quantifies over all filtered families of an uncountable space; "
                                                   "only the representable fragment is machine-checked"));
      out.push_back(assumed_entry("Rudin and well-filtered-determined sets collapse to point closures",
                                  "same uncountable quantification; fragment-level evidence only"));
      break;
    case space_id::johnstone_scott: {
      claim direct = johnstone_nsd_claim(space_id::johnstone_scott);
      claim transferred = strong_d_transfer(johnstone_nsd_claim(space_id::johnstone_upper), space_id::johnstone_scott);
      if (!verify_claim(transferred).verified()) fail(errc::bad_input, "transferred claim failed to replay");
      out.push_back(verified_entry("not a strong d-space", direct,
                                   "verified directly and again by transfer from the upper topology"));
      out.push_back(assumed_entry("not well-filtered", "cited to an external exercise; no witness is given in the source"));
      out.push_back(assumed_entry("not sober", "follows from non-well-filteredness, which is itself assumed"));
      out.push_back(assumed_entry("a monotone convergence space", "the grid order is directed complete"));
      break;
    }
    case space_id::johnstone_upper:
      out.push_back(verified_entry("not a strong d-space", johnstone_nsd_claim(space_id::johnstone_upper)));
      break;
    case space_id::omega_fan_scott: {
      out.push_back(verified_entry("not coherent", fan_not_coherent_claim()));
      claim transferred = strong_d_transfer(fan_nsd_claim(space_id::omega_fan_upper), space_id::omega_fan_scott);
      if (!verify_claim(transferred).verified()) fail(errc::bad_input, "transferred claim failed to replay");
      out.push_back(verified_entry("not a strong d-space", fan_nsd_claim(space_id::omega_fan_scott),
                                   "verified directly and again by transfer from the upper topology; the strong "
                                   "Scott topology sits between the two, so it fails as well"));
      out.push_back(assumed_entry("sober", "the order is a continuous dcpo; stated for the source example"));
      break;
    }
    case space_id::omega_fan_upper:
      out.push_back(verified_entry("not a strong d-space", fan_nsd_claim(space_id::omega_fan_upper)));
      break;
  }
  return out;
}

} // namespace ordtop::zoo
