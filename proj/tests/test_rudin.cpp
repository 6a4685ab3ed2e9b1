#include <doctest.h>

#include <algorithm>

#include "ordtop/enumerate.hpp"
#include "ordtop/rudin.hpp"

using namespace ordtop;

namespace {

finite_poset p3() { return finite_poset::from_pairs({"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}}); }
finite_poset a2() { return finite_poset::from_pairs({"a", "b"}, {}); }
finite_poset c2() { return finite_poset::from_pairs({"0", "1"}, {{"0", "1"}}); }

subset of_names(const finite_space& x, const std::vector<std::string>& names) {
  subset s = 0;
  for (const auto& n : names) s |= subset{1} << x.index_of(n);
  return s;
}

subset pos_names(const finite_poset& p, const std::vector<std::string>& names) {
  subset s = 0;
  for (const auto& n : names) s |= subset{1} << p.index_of(n);
  return s;
}

// exhaustive minimality oracle: no strictly smaller closed subset of c meets
// every member
bool confirmed_minimal(const finite_space& x, const std::vector<subset>& fam, subset c, subset a) {
  auto meets_all = [&](subset s) {
    for (subset k : fam)
      if ((s & k) == 0) return false;
    return true;
  };
  if (!is_subset(a, c) || !meets_all(a) || !x.is_closed(a)) return false;
  for (subset cl : x.closed_sets())
    if (cl != a && is_subset(cl, a) && meets_all(cl)) return false;
  return true;
}

} // namespace

TEST_SUITE("rudin") {
  TEST_CASE("family irreducibility in the upper space") {
    auto x = finite_space::alexandroff(p3());
    subset up_bot = of_names(x, {"bot", "a", "b"});
    subset up_a = of_names(x, {"a"});
    subset up_b = of_names(x, {"b"});
    CHECK(is_irreducible_smyth(x, {up_bot, up_a}));   // a chain in the refinement order
    CHECK_FALSE(is_irreducible_smyth(x, {up_a, up_b}));
    CHECK(is_irreducible_smyth(x, {up_a}));
    CHECK_THROWS_AS(is_irreducible_smyth(x, {of_names(x, {"bot"})}), error); // not saturated
  }

  TEST_CASE("minimal irreducible closed subset extraction") {
    auto x = finite_space::alexandroff(p3());
    subset up_bot = of_names(x, {"bot", "a", "b"});
    subset up_a = of_names(x, {"a"});
    CHECK(minimal_irr_closed(x, {up_bot, up_a}, x.carrier()) == of_names(x, {"bot", "a"}));

    auto d = finite_space::alexandroff(a2());
    CHECK(minimal_irr_closed(d, {of_names(d, {"a"})}, of_names(d, {"a"})) == of_names(d, {"a"}));

    CHECK_THROWS_AS(minimal_irr_closed(x, {up_a, of_names(x, {"b"})}, x.carrier()), error);
    try {
      minimal_irr_closed(x, {up_a, of_names(x, {"b"})}, x.carrier());
    } catch (const error& e) {
      CHECK(e.code() == errc::not_irreducible_family);
    }
    CHECK_THROWS_AS(minimal_irr_closed(x, {up_a}, of_names(x, {"bot", "b"})), error); // misses the member
  }

  TEST_CASE("poset-level extraction") {
    auto p = p3();
    auto x = finite_space::alexandroff(p);
    subset up_bot = pos_names(p, {"bot", "a", "b"});
    subset up_a = pos_names(p, {"a"});
    CHECK(poset_rudin(p, {up_bot, up_a}, p.down_set(pos_names(p, {"a"}))) == pos_names(p, {"a"}));

    auto c = c2();
    CHECK(poset_rudin(c, {pos_names(c, {"0", "1"})}, c.carrier()) == pos_names(c, {"0"}));

    auto one = finite_poset::from_pairs({"x"}, {});
    CHECK(poset_rudin(one, {subset{1}}, subset{1}) == subset{1});
    (void)x;
  }

  TEST_CASE("property: the three irreducibility routes match the refinement criterion, size <= 3") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : dedup_isomorphic(all_labeled_posets(n))) {
        auto x = finite_space::alexandroff(p);
        auto kx = x.compact_saturated();
        for_each_submask(full_mask(static_cast<int>(kx.size())), [&](subset sel) {
          if (sel == 0) return;
          std::vector<subset> fam;
          for (int i : bits_of(sel)) fam.push_back(kx[static_cast<std::size_t>(i)]);
          CHECK(is_irreducible_smyth(x, fam) == filtered_family::is_filtered(fam));
        });
      }
  }

  TEST_CASE("property: extracted sets are minimal and irreducible, exhaustively to size 4") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : dedup_isomorphic(all_labeled_posets(n))) {
        auto x = finite_space::alexandroff(p);
        auto kx = x.compact_saturated();
        auto closed = x.closed_sets();
        for_each_submask(full_mask(static_cast<int>(kx.size())), [&](subset sel) {
          if (sel == 0) return;
          std::vector<subset> fam;
          for (int i : bits_of(sel)) fam.push_back(kx[static_cast<std::size_t>(i)]);
          if (!filtered_family::is_filtered(fam)) return; // = irreducible in the upper space
          for (subset c : closed) {
            bool meets = true;
            for (subset k : fam)
              if ((c & k) == 0) meets = false;
            if (!meets) continue;
            subset a = minimal_irr_closed(x, fam, c);
            CHECK(confirmed_minimal(x, fam, c, a));
            CHECK(x.is_irreducible(a));
            // on finite spaces minimal extractions are point closures
            CHECK(popcount(p.maximal_in(a)) == 1);
          }
        });
      }
  }

  TEST_CASE("property: poset extraction postconditions over all posets up to size 4") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : dedup_isomorphic(all_labeled_posets(n))) {
        auto x = finite_space::alexandroff(p);
        auto kx = x.compact_saturated(); // = all finitely generated upper sets here
        for_each_submask(full_mask(static_cast<int>(kx.size())), [&](subset sel) {
          if (sel == 0) return;
          std::vector<subset> fam;
          for (int i : bits_of(sel)) fam.push_back(kx[static_cast<std::size_t>(i)]);
          if (!filtered_family::is_filtered(fam)) return;
          for (subset c : x.closed_sets()) {
            if (c == 0 || p.down_set(c) != c) continue;
            bool meets = true;
            for (subset k : fam)
              if ((c & k) == 0) meets = false;
            if (!meets) continue;
            subset d = poset_rudin(p, fam, c);
            CHECK(p.is_directed(d));
            CHECK(is_subset(d, c));
            for (subset k : fam) CHECK((p.down_set(d) & k) != 0);
          }
        });
      }
  }
}
