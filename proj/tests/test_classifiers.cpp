#include <doctest.h>

#include <algorithm>

#include "ordtop/classifiers.hpp"
#include "ordtop/enumerate.hpp"

using namespace ordtop;

namespace {

finite_poset p3() { return finite_poset::from_pairs({"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}}); }
finite_poset m4() {
  return finite_poset::from_pairs({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}
finite_poset c2() { return finite_poset::from_pairs({"0", "1"}, {{"0", "1"}}); }

subset pos_names(const finite_poset& p, const std::vector<std::string>& names) {
  subset s = 0;
  for (const auto& n : names) s |= subset{1} << p.index_of(n);
  return s;
}

bool all_pass(const std::vector<check_result>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const check_result& c) { return c.pass; });
}

} // namespace

TEST_SUITE("classifiers") {
  TEST_CASE("classification of the three-point fan") {
    auto rep = classify(finite_space::alexandroff(p3()));
    CHECK_FALSE(rep.t1);
    CHECK(rep.d_space);
    CHECK(rep.strong_d);
    CHECK(rep.well_filtered);
    CHECK(rep.sober);
    CHECK(rep.coherent);
    CHECK(rep.locally_compact);
    CHECK(rep.locally_hypercompact);
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].flag == "t1");
  }

  TEST_CASE("classification of the discrete pair and the Sierpinski space") {
    auto discrete = classify(finite_space::alexandroff(finite_poset::from_pairs({"a", "b"}, {})));
    CHECK(discrete.t1);
    CHECK(discrete.sober);
    CHECK(discrete.strong_d);

    auto sier = classify(finite_space::from_opens({"0", "1"}, {0b00, 0b10, 0b11}));
    CHECK_FALSE(sier.t1);
    CHECK(sier.d_space);
    CHECK(sier.sober);
  }

  TEST_CASE("well-filtered and sober characterizations match the flags") {
    auto x = finite_space::alexandroff(p3());
    CHECK(all_pass(wf_characterization_check(x)));
    CHECK(all_pass(sober_characterization_check(x)));
    auto one = finite_space::alexandroff(finite_poset::from_pairs({"x"}, {}));
    CHECK(all_pass(wf_characterization_check(one)));
    CHECK(all_pass(sober_characterization_check(one)));
  }

  TEST_CASE("strongly Scott open sets") {
    auto m = m4();
    CHECK(strongly_scott_open(m, pos_names(m, {"c", "d"})));
    CHECK(strongly_scott_open(m, 0));
    CHECK_THROWS_AS(strongly_scott_open(m, pos_names(m, {"a"})), error); // not an upper set

    auto p = p3();
    auto ss = strong_scott_topology(p);
    // on a finite poset the strong Scott topology is the upper-set family
    std::vector<subset> uppers;
    for_each_submask(p.carrier(), [&](subset u) {
      if (p.up_set(u) == u) uppers.push_back(u);
    });
    CHECK(ss.topology == uppers);
  }

  TEST_CASE("strongly Scott open sets are intersection stable") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : dedup_isomorphic(all_labeled_posets(n))) {
        auto ss = strong_scott_topology(p); // construction asserts stability
        for (subset u : ss.base)
          for (subset v : ss.base) CHECK(std::find(ss.base.begin(), ss.base.end(), u & v) != ss.base.end());
      }
  }

  TEST_CASE("topology families of small posets") {
    auto t = topologies(c2());
    CHECK(t.lawson.size() == 4); // discrete
    CHECK(t.scott == t.upper);
    CHECK(t.scott == t.alexandroff);

    auto t3 = topologies(p3());
    CHECK(t3.scott.size() == 5);
    auto one = topologies(finite_poset::from_pairs({"x"}, {}));
    CHECK(one.scott.size() == 2);
  }

  TEST_CASE("catalog ids are stable and complete") {
    auto ids = theorem_suite_ids();
    auto checks = theorem_suite(p3());
    REQUIRE(checks.size() == ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) CHECK(checks[i].id == ids[i]);
  }

  TEST_CASE("catalog passes on the named examples") {
    CHECK(all_pass(theorem_suite(p3())));
    CHECK(all_pass(theorem_suite(m4())));
    CHECK(all_pass(theorem_suite(c2())));
    CHECK(all_pass(theorem_suite(finite_poset::from_pairs({"x"}, {}))));
  }

  TEST_CASE("property: catalog, characterizations and flag implications, exhaustively to size 3") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : all_labeled_posets(n)) {
        auto x = finite_space::alexandroff(p);
        auto rep = classify(x); // implication arrows revalidated inside
        CHECK(rep.d_space);
        CHECK(all_pass(theorem_suite(p)));
        CHECK(all_pass(wf_characterization_check(x)));
        CHECK(all_pass(sober_characterization_check(x)));
      }
  }

  TEST_CASE("property: five-way agreement survives random larger instances") {
    rng r(11);
    for (int round = 0; round < 12; ++round) {
      auto p = random_poset(5, r);
      auto rep = classify(finite_space::alexandroff(p)); // throws if any route disagrees
      CHECK(rep.d_space);
      CHECK(rep.well_filtered);
      CHECK(rep.sober);
    }
  }
}
