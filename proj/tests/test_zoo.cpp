#include <doctest.h>

#include "ordtop/zoo/claims.hpp"

using namespace ordtop;
using namespace ordtop::zoo;

namespace {

set_expr parse_cof(const std::string& s) { return parse_expr(grammar_id::cofinite, s); }
set_expr parse_grid(const std::string& s) { return parse_expr(grammar_id::johnstone, s); }
set_expr parse_fan(const std::string& s) { return parse_expr(grammar_id::omega_fan, s); }

} // namespace

TEST_SUITE("zoo-expr") {
  TEST_CASE("normal forms absorb covered points and merge tails") {
    auto e = unite(parse_grid("pt(2,w)"), parse_grid("omegatail(1)"));
    CHECK(expr_to_string(e) == "omegatail(1)");
    auto f = unite(parse_grid("coltail(1,5)"), parse_grid("coltail(1,2)"));
    CHECK(expr_to_string(f) == "coltail(1,2)");
    auto g = unite(parse_grid("pt(3,w)"), parse_grid("omegatail(4)"));
    CHECK(expr_to_string(g) == "omegatail(3)"); // adjacent top extends the tail
    auto g2 = unite(parse_grid("pt(2,w)"), parse_grid("omegatail(4)"));
    CHECK(expr_to_string(g2) == "pt(2,w) | omegatail(4)");
    auto h = unite(parse_grid("pt(1,4)"), parse_grid("pt(2,w) | omegatail(3)"));
    CHECK(expr_to_string(h) == "pt(1,4) | omegatail(2)"); // the isolated top joins the tail
  }

  TEST_CASE("boolean structure of the co-finite fragment") {
    auto fin = parse_cof("fin(3,5)");
    auto cof = parse_cof("cofin(0,3)");
    CHECK(expr_to_string(intersect(fin, cof)) == "fin(5)");
    CHECK(expr_to_string(unite(fin, cof)) == "cofin(0)");
    CHECK(expr_to_string(complement(cof)) == "fin(0,3)");
    CHECK(subset_of(fin, parse_cof("fin(1,3,5)")));
    CHECK_FALSE(subset_of(cof, fin));
    CHECK(subset_of(parse_cof("empty"), fin));
    CHECK(subset_of(fin, parse_cof("all")));
  }

  TEST_CASE("fan complements stay representable") {
    auto e = parse_fan("atail(3) | b | w(2)");
    auto c = complement(e);
    CHECK(expr_to_string(c) == "a(1) | a(2) | w0 | w(1) | wtail(3)");
    CHECK(is_empty(intersect(e, c)));
    CHECK(is_all(unite(e, c)));
  }

  TEST_CASE("membership sampling agrees with the set algebra") {
    for (grammar_id g : {grammar_id::cofinite, grammar_id::johnstone, grammar_id::omega_fan}) {
      std::vector<set_expr> exprs;
      switch (g) {
        case grammar_id::cofinite:
          exprs = {parse_cof("fin(0,4,9)"), parse_cof("cofin(1,2)"), parse_cof("empty"), parse_cof("all")};
          break;
        case grammar_id::johnstone:
          exprs = {parse_grid("coltail(2,3) | omegatail(5)"), parse_grid("pt(1,1) | pt(4,w)"),
                   parse_grid("all"), parse_grid("coltail(2,7)")};
          break;
        case grammar_id::omega_fan:
          exprs = {parse_fan("atail(2) | w0"), parse_fan("b | wtail(4)"), parse_fan("a(1) | w(3)"),
                   parse_fan("all")};
          break;
      }
      auto pts = sample_points(g, 100);
      for (const auto& e1 : exprs)
        for (const auto& e2 : exprs) {
          auto u = unite(e1, e2);
          auto m = intersect(e1, e2);
          for (const auto& p : pts) {
            CHECK(contains(u, p) == (contains(e1, p) || contains(e2, p)));
            CHECK(contains(m, p) == (contains(e1, p) && contains(e2, p)));
          }
          bool sub = subset_of(e1, e2);
          bool sampled_sub = true;
          for (const auto& p : pts)
            if (contains(e1, p) && !contains(e2, p)) sampled_sub = false;
          if (sub) CHECK(sampled_sub);
        }
    }
  }

  TEST_CASE("canonical print/parse round trip is bit-exact") {
    std::vector<std::pair<grammar_id, std::string>> canon = {
        {grammar_id::cofinite, "fin(1,2,9)"},
        {grammar_id::cofinite, "cofin(0,5)"},
        {grammar_id::cofinite, "empty"},
        {grammar_id::cofinite, "all"},
        {grammar_id::johnstone, "pt(1,3) | coltail(2,1) | pt(4,w) | omegatail(6)"},
        {grammar_id::johnstone, "all"},
        {grammar_id::omega_fan, "a(2) | atail(5) | b | w0 | w(1) | wtail(4)"},
    };
    for (const auto& [g, text] : canon) {
      auto e = parse_expr(g, text);
      CHECK(expr_to_string(e) == text);
      CHECK(parse_expr(g, expr_to_string(e)) == e);
    }
    // symbolic round trips
    for (const auto& [g, text] : std::vector<std::pair<grammar_id, std::string>>{
             {grammar_id::cofinite, "cofin-range(0,n)"},
             {grammar_id::johnstone, "coltail(1,n) | omegatail(n+2)"},
             {grammar_id::omega_fan, "w(2n+1)"},
         }) {
      auto e = parse_sym_expr(g, text);
      CHECK(sym_to_string(e) == text);
      CHECK(parse_sym_expr(g, sym_to_string(e)) == e);
    }
  }

  TEST_CASE("family limits: diverging atoms vanish, constant atoms persist") {
    auto fam = parse_sym_expr(grammar_id::cofinite, "cofin-range(0,n)");
    CHECK(is_empty(family_limit(fam)));
    auto constant = parse_sym_expr(grammar_id::cofinite, "fin(7)");
    CHECK(expr_to_string(family_limit(constant)) == "fin(7)");
    auto mixed = parse_sym_expr(grammar_id::johnstone, "omegatail(n) | coltail(3,2)");
    CHECK(expr_to_string(family_limit(mixed)) == "coltail(3,2)");
    CHECK_THROWS_AS(check_decreasing(parse_sym_expr(grammar_id::johnstone, "pt(1,n)")), error);
  }

  TEST_CASE("closure outputs contain their inputs, are idempotent and closed") {
    std::vector<std::pair<space_id, set_expr>> cases = {
        {space_id::cofinite_nat, parse_cof("fin(1,5)")},
        {space_id::cofinite_nat, parse_cof("cofin(2)")},
        {space_id::cocountable, parse_cof("fin(9)")},
        {space_id::johnstone_scott, parse_grid("pt(2,3) | pt(1,1)")},
        {space_id::johnstone_upper, parse_grid("coltail(2,5)")},
        {space_id::omega_fan_scott, parse_fan("atail(4) | w(2)")},
        {space_id::omega_fan_upper, parse_fan("a(3) | b")},
    };
    for (const auto& [s, e] : cases) {
      auto cl = closure(s, e);
      CHECK(subset_of(e, cl));
      CHECK(closure(s, cl) == cl);
      CHECK(is_closed(s, cl));
      for (const auto& p : sample_points(grammar_of(s), 60))
        if (contains(e, p)) CHECK(contains(cl, p));
    }
  }

  TEST_CASE("stage/limit coherence on sampled members") {
    auto fam = parse_sym_expr(grammar_id::johnstone, "omegatail(2n+1)");
    auto limit = family_limit(fam);
    for (long n = 1; n <= 50; ++n) {
      CHECK(subset_of(limit, substitute(fam, n)));
      CHECK(subset_of(substitute(fam, n + 1), substitute(fam, n)));
    }
  }
}

TEST_SUITE("zoo-space") {
  TEST_CASE("closed sets of the co-finite space are the finite sets and the whole space") {
    CHECK(is_closed(space_id::cofinite_nat, parse_cof("fin(3,5)")));
    CHECK(is_closed(space_id::cofinite_nat, parse_cof("all")));
    CHECK(is_closed(space_id::cofinite_nat, parse_cof("empty")));
    CHECK_FALSE(is_closed(space_id::cofinite_nat, parse_cof("cofin(3)")));
    CHECK(is_open(space_id::cofinite_nat, parse_cof("cofin(3)")));
    CHECK_FALSE(is_open(space_id::cofinite_nat, parse_cof("fin(3)")));
  }

  TEST_CASE("co-countable compacts are the nonempty finite sets") {
    CHECK(is_compact_saturated(space_id::cocountable, parse_cof("fin(1,2)")));
    CHECK_FALSE(is_compact_saturated(space_id::cocountable, parse_cof("cofin(1)")));
    CHECK_FALSE(is_compact_saturated(space_id::cocountable, parse_cof("empty")));
    CHECK(is_compact_saturated(space_id::cofinite_nat, parse_cof("cofin(1)")));
  }

  TEST_CASE("grid up-sets follow the stage identity") {
    auto up21 = up_point(space_id::johnstone_scott, grid_point{2, 1});
    CHECK(expr_to_string(up21) == "coltail(2,1) | omegatail(1)");
    auto uptop = up_point(space_id::johnstone_scott, grid_point{3, omega_height});
    CHECK(expr_to_string(uptop) == "pt(3,w)");

    for (long n = 1; n <= 100; ++n) {
      auto stage = intersect(up_point(space_id::johnstone_scott, grid_point{1, n}), up21);
      grid_set expect;
      expect.omega_tail = n;
      CHECK(stage == set_expr{expect});
    }
  }

  TEST_CASE("fan up-sets follow the stage identity") {
    auto upb = up_point(space_id::omega_fan_scott, fan_point{fan_part::b, 0});
    CHECK(expr_to_string(upb) == "b | wtail(1)");
    for (long n = 1; n <= 100; ++n) {
      auto stage = intersect(up_point(space_id::omega_fan_scott, fan_point{fan_part::a, n}), upb);
      fan_set expect;
      expect.w_tail = n;
      CHECK(stage == set_expr{expect});
    }
  }

  TEST_CASE("Scott-openness rules on the fan") {
    CHECK(is_scott_open_symbolic(space_id::omega_fan_scott, parse_fan("w(3)")));
    CHECK_FALSE(is_scott_open_symbolic(space_id::omega_fan_scott, parse_fan("w0")));
    CHECK(is_scott_open_symbolic(space_id::omega_fan_scott, parse_fan("atail(4) | w0 | wtail(4)")));
    CHECK_FALSE(is_scott_open_symbolic(space_id::omega_fan_scott, parse_fan("a(1)"))); // not upper
    CHECK(is_scott_open_symbolic(space_id::omega_fan_scott, parse_fan("empty")));
    CHECK(is_scott_open_symbolic(space_id::omega_fan_scott, parse_fan("all")));
  }

  TEST_CASE("Scott-openness rules on the grid") {
    CHECK(is_scott_open_symbolic(space_id::johnstone_scott, parse_grid("all")));
    CHECK(is_scott_open_symbolic(space_id::johnstone_scott, parse_grid("empty")));
    // a bare tail of tops never opens, nor does an uncovered isolated top
    CHECK_FALSE(is_scott_open_symbolic(space_id::johnstone_scott, parse_grid("omegatail(2)")));
    CHECK_FALSE(is_scott_open_symbolic(space_id::johnstone_scott, parse_grid("pt(1,w)")));
    CHECK_FALSE(is_scott_open_symbolic(space_id::johnstone_scott, parse_grid("coltail(1,1) | omegatail(1)")));
    CHECK_THROWS_AS(is_scott_open_symbolic(space_id::johnstone_upper, parse_grid("all")), error);
  }

  TEST_CASE("upper-topology opens") {
    CHECK(is_open(space_id::johnstone_upper, parse_grid("empty")));
    CHECK(is_open(space_id::johnstone_upper, parse_grid("all")));
    CHECK_FALSE(is_open(space_id::johnstone_upper, parse_grid("omegatail(1)")));

    CHECK(is_open(space_id::omega_fan_upper, parse_fan("wtail(1)"))); // complement is the chain plus b
    CHECK_FALSE(is_open(space_id::omega_fan_upper, parse_fan("w(5)")));
    CHECK(is_open(space_id::omega_fan_upper, parse_fan("atail(3) | b | w0 | wtail(1)")));
    CHECK(is_scott_open_symbolic(space_id::omega_fan_scott, parse_fan("w(5)"))); // finer than upper
  }

  TEST_CASE("closures") {
    CHECK(expr_to_string(closure(space_id::cofinite_nat, parse_cof("fin(2)"))) == "fin(2)");
    CHECK(is_all(closure(space_id::cofinite_nat, parse_cof("cofin(2)"))));
    CHECK(expr_to_string(closure(space_id::johnstone_scott, parse_grid("pt(2,3)"))) ==
          "pt(2,1) | pt(2,2) | pt(2,3)");
    CHECK(is_all(closure(space_id::johnstone_upper, parse_grid("coltail(1,4)"))));
    CHECK_THROWS_AS(closure(space_id::johnstone_scott, parse_grid("pt(1,w)")), error);
    CHECK(expr_to_string(closure(space_id::omega_fan_scott, parse_fan("atail(3)"))) == "atail(1) | w0");
    CHECK(expr_to_string(closure(space_id::omega_fan_scott, parse_fan("w(2)"))) ==
          "a(1) | a(2) | b | w(2)");
    CHECK(is_all(closure(space_id::omega_fan_upper, parse_fan("wtail(1)"))));
  }

  TEST_CASE("compact saturation on the grid and the fan") {
    CHECK(is_compact_saturated(space_id::omega_fan_scott, parse_fan("atail(1) | w0 | wtail(1)"))); // up a_1
    CHECK(is_compact_saturated(space_id::omega_fan_scott, parse_fan("b | wtail(1)")));             // up b
    CHECK_FALSE(is_compact_saturated(space_id::omega_fan_scott, parse_fan("wtail(1)")));
    CHECK(is_compact_saturated(space_id::johnstone_scott, parse_grid("coltail(1,5) | omegatail(2)")));
    CHECK_FALSE(is_compact_saturated(space_id::johnstone_scott, parse_grid("omegatail(1)")));
    CHECK_FALSE(is_compact_saturated(space_id::johnstone_scott, parse_grid("all")));
  }

  TEST_CASE("openness and closedness are complementary on the boolean fragments") {
    // systematic batch over the fan fragment shape space
    std::vector<set_expr> fans;
    for (int at : {-1, 2})
      for (int ap : {-1, 1, 3})
        for (int bb : {0, 1})
          for (int ww0 : {0, 1})
            for (int wt : {-1, 4})
              for (int wp : {-1, 2}) {
                fan_set f;
                if (at > 0) f.a_tail = at;
                if (ap > 0) f.a_pts = {ap};
                f.b = bb;
                f.w0 = ww0;
                if (wt > 0) f.w_tail = wt;
                if (wp > 0) f.w_pts = {wp};
                fans.push_back(normalize(set_expr{f}));
              }
    for (const auto& e : fans) {
      auto c = complement(e);
      CHECK(is_open(space_id::omega_fan_upper, e) == is_closed(space_id::omega_fan_upper, c));
      CHECK(is_open(space_id::omega_fan_scott, e) == is_closed(space_id::omega_fan_scott, c));
    }

    std::vector<set_expr> cofs = {parse_cof("empty"), parse_cof("all"), parse_cof("fin(0)"),
                                  parse_cof("fin(2,4)"), parse_cof("cofin(1)"), parse_cof("cofin(0,9)")};
    for (const auto& e : cofs) {
      auto c = complement(e);
      CHECK(is_open(space_id::cofinite_nat, e) == is_closed(space_id::cofinite_nat, c));
      CHECK(is_open(space_id::cocountable, e) == is_closed(space_id::cocountable, c));
    }
  }

  TEST_CASE("point order agrees with up-set membership") {
    CHECK(point_leq(space_id::johnstone_scott, grid_point{1, 2}, grid_point{1, 5}));
    CHECK(point_leq(space_id::johnstone_scott, grid_point{1, 2}, grid_point{7, omega_height}));
    CHECK_FALSE(point_leq(space_id::johnstone_scott, grid_point{1, 2}, grid_point{1, omega_height}));
    CHECK(point_leq(space_id::omega_fan_scott, fan_point{fan_part::a, 2}, fan_point{fan_part::w0, 0}));
    CHECK(point_leq(space_id::omega_fan_scott, fan_point{fan_part::b, 0}, fan_point{fan_part::w, 9}));
    CHECK_FALSE(point_leq(space_id::omega_fan_scott, fan_point{fan_part::w0, 0}, fan_point{fan_part::w, 1}));
  }
}

TEST_SUITE("zoo-claims") {
  TEST_CASE("shipped claims all verify") {
    for (const auto& c : shipped_claims()) {
      auto v = verify_claim(c);
      INFO(space_id_name(c.space), " ", claim_kind_name(c.kind), ": ", v.detail);
      CHECK(v.verified());
    }
  }

  TEST_CASE("tampered claims are refuted") {
    auto claims = shipped_claims();
    // widen the open set of the non-well-filtered certificate to the whole
    // space: members now sit inside it
    claim tampered = claims[0];
    tampered.open_u = all_expr(grammar_id::cofinite);
    auto v = verify_claim(tampered);
    CHECK(v.kind == verdict_kind::refuted);

    // claim the whole grid as compact in the coherence certificate
    claim bad_k = claims[9];
    REQUIRE(bad_k.kind == claim_kind::not_coherent);
    bad_k.k1 = parse_fan("wtail(1)");
    CHECK(verify_claim(bad_k).kind == verdict_kind::refuted);

    // a singleton is a point closure, so it cannot witness non-sobriety
    claim bad_sober;
    bad_sober.space = space_id::cocountable;
    bad_sober.kind = claim_kind::not_sober;
    bad_sober.closed_a = parse_cof("fin(3)");
    CHECK(verify_claim(bad_sober).kind == verdict_kind::refuted);
  }

  TEST_CASE("non-monotone families are rejected as malformed") {
    claim c;
    c.space = space_id::cofinite_nat;
    c.kind = claim_kind::not_well_filtered;
    c.family = family_spec{parse_sym_expr(grammar_id::cofinite, "fin(n)"), 16};
    c.open_u = parse_cof("empty");
    CHECK_THROWS_AS(verify_claim(c), error);
  }

  TEST_CASE("grammar mismatches are rejected") {
    claim c;
    c.space = space_id::johnstone_scott;
    c.kind = claim_kind::not_sober;
    c.closed_a = parse_cof("all");
    CHECK_THROWS_AS(verify_claim(c), error);
  }

  TEST_CASE("strong-d refutations transfer from the upper to the Scott topology") {
    auto claims = shipped_claims();
    claim upper = claims[5];
    REQUIRE(upper.space == space_id::johnstone_upper);
    claim moved = strong_d_transfer(upper, space_id::johnstone_scott);
    CHECK(moved.space == space_id::johnstone_scott);
    CHECK_FALSE(moved.derived_by.empty());
    CHECK(verify_claim(moved).verified()); // replays in the finer topology

    claim fan_upper = claims[7];
    REQUIRE(fan_upper.space == space_id::omega_fan_upper);
    CHECK(verify_claim(strong_d_transfer(fan_upper, space_id::omega_fan_scott)).verified());
  }

  TEST_CASE("transfer guards") {
    auto claims = shipped_claims();
    CHECK_THROWS_AS(strong_d_transfer(claims[0], space_id::johnstone_scott), error); // wrong kind

    claim not_nu_open = claims[5];
    not_nu_open.open_u = parse_grid("pt(5,w)"); // not open in the upper topology
    try {
      strong_d_transfer(not_nu_open, space_id::johnstone_scott);
      FAIL("expected a coarseness error");
    } catch (const error& e) {
      CHECK(e.code() == errc::not_coarser);
    }
  }

  TEST_CASE("curated tables replay and separate verified from assumed") {
    auto cof = curated_results(space_id::cofinite_nat);
    int verified = 0, assumed = 0;
    for (const auto& e : cof) {
      if (e.verified) {
        REQUIRE(e.backing.has_value());
        ++verified;
      } else {
        CHECK_FALSE(e.backing.has_value()); // assumed entries carry no machine premise
        CHECK_FALSE(e.note.empty());
        ++assumed;
      }
    }
    CHECK(verified == 4);
    CHECK(assumed == 2);

    auto coc = curated_results(space_id::cocountable);
    bool wf_assumed = false;
    for (const auto& e : coc)
      if (e.description == "well-filtered" && !e.verified) wf_assumed = true;
    CHECK(wf_assumed);

    for (space_id s : {space_id::johnstone_scott, space_id::johnstone_upper, space_id::omega_fan_scott,
                       space_id::omega_fan_upper})
      CHECK_FALSE(curated_results(s).empty());
  }
}
