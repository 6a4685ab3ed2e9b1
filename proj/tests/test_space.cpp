#include <doctest.h>

#include <algorithm>

#include "ordtop/enumerate.hpp"
#include "ordtop/space.hpp"

using namespace ordtop;

namespace {

finite_poset p3() { return finite_poset::from_pairs({"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}}); }

finite_poset a2() { return finite_poset::from_pairs({"a", "b"}, {}); }

finite_space sierpinski() { return finite_space::from_opens({"0", "1"}, {0b00, 0b10, 0b11}); }

subset of_names(const finite_space& x, const std::vector<std::string>& names) {
  subset s = 0;
  for (const auto& n : names) s |= subset{1} << x.index_of(n);
  return s;
}

} // namespace

TEST_SUITE("space") {
  TEST_CASE("alexandroff open counts") {
    CHECK(finite_space::alexandroff(finite_poset::from_pairs({"0", "1"}, {{"0", "1"}})).opens().size() == 3);
    CHECK(finite_space::alexandroff(p3()).opens().size() == 5);
    CHECK(finite_space::alexandroff(a2()).opens().size() == 4);
  }

  TEST_CASE("validation rejects broken families") {
    CHECK_THROWS_AS(finite_space::from_opens({"a", "b"}, {0b00, 0b01}), error);          // carrier missing
    CHECK_THROWS_AS(finite_space::from_opens({"a", "b"}, {0b00, 0b01, 0b10}), error);    // union missing
    CHECK_THROWS_AS(finite_space::from_opens({"a", "b"}, {0b00, 0b11}), error);          // not T0
  }

  TEST_CASE("specialization round trip") {
    auto s = sierpinski();
    auto p = s.specialization();
    CHECK(p.leq(p.index_of("0"), p.index_of("1")));
    CHECK_FALSE(p.leq(p.index_of("1"), p.index_of("0")));

    auto x = finite_space::alexandroff(p3());
    CHECK(finite_space::alexandroff(x.specialization()) == x);

    auto d2 = finite_space::alexandroff(a2());
    auto q = d2.specialization();
    CHECK_FALSE(q.leq(0, 1));
    CHECK_FALSE(q.leq(1, 0));
  }

  TEST_CASE("closure, interior, saturation on p3") {
    auto x = finite_space::alexandroff(p3());
    CHECK(x.closure(of_names(x, {"a"})) == of_names(x, {"bot", "a"}));
    CHECK(x.saturate(of_names(x, {"bot"})) == of_names(x, {"bot", "a", "b"}));
    CHECK(x.interior(of_names(x, {"bot", "a"})) == of_names(x, {"a"}));
  }

  TEST_CASE("irreducibility on p3") {
    auto x = finite_space::alexandroff(p3());
    CHECK(x.is_irreducible(of_names(x, {"bot", "a"})));
    CHECK_FALSE(x.is_irreducible(of_names(x, {"bot", "a", "b"})));
    CHECK(x.is_irreducible(of_names(x, {"b"})));
    CHECK_THROWS_AS(x.is_irreducible(0), error);
  }

  TEST_CASE("irreducible closed families") {
    auto x = finite_space::alexandroff(p3());
    std::vector<subset> expect{of_names(x, {"bot"}), of_names(x, {"bot", "a"}), of_names(x, {"bot", "b"})};
    std::sort(expect.begin(), expect.end());
    CHECK(x.irreducible_closed() == expect);

    auto d = finite_space::alexandroff(a2());
    std::vector<subset> exp2{of_names(d, {"a"}), of_names(d, {"b"})};
    std::sort(exp2.begin(), exp2.end());
    CHECK(d.irreducible_closed() == exp2);

    auto one = finite_space::alexandroff(finite_poset::from_pairs({"x"}, {}));
    CHECK(one.irreducible_closed() == std::vector<subset>{1});
  }

  TEST_CASE("compact saturated sets") {
    auto x = finite_space::alexandroff(p3());
    CHECK(x.compact_saturated().size() == 4);
    auto d = finite_space::alexandroff(a2());
    std::vector<subset> exp{of_names(d, {"a"}), of_names(d, {"b"}), of_names(d, {"a", "b"})};
    std::sort(exp.begin(), exp.end());
    CHECK(d.compact_saturated() == exp);
    auto one = finite_space::alexandroff(finite_poset::from_pairs({"x"}, {}));
    CHECK(one.compact_saturated() == std::vector<subset>{1});
  }

  TEST_CASE("cover compactness") {
    auto x = finite_space::alexandroff(p3());
    CHECK(x.is_compact(of_names(x, {"a", "b"})));
    CHECK(x.is_compact(0));
    // agreement with compact_saturated membership for nonempty saturated sets
    auto kx = x.compact_saturated();
    for_each_submask(x.carrier(), [&](subset s) {
      if (s == 0 || x.saturate(s) != s) return;
      CHECK(std::binary_search(kx.begin(), kx.end(), s) == x.is_compact(s));
    });
  }

  TEST_CASE("continuity equals monotonicity on these spaces") {
    auto x = finite_space::alexandroff(p3());
    std::vector<int> id{0, 1, 2};
    CHECK(is_continuous(id, x, x));
    std::vector<int> constant{2, 2, 2};
    CHECK(is_continuous(constant, x, x));

    auto s = sierpinski();
    std::vector<int> swap{1, 0};
    CHECK_FALSE(is_continuous(swap, s, s));

    for (int n = 1; n <= 3; ++n)
      for (const auto& p : all_labeled_posets(n))
        for (const auto& q : all_labeled_posets(n)) {
          auto xs = finite_space::alexandroff(p);
          auto ys = finite_space::alexandroff(q);
          std::vector<int> f(static_cast<std::size_t>(n), 0);
          while (true) {
            CHECK(is_continuous(f, xs, ys) == monotone_map::is_monotone(p, q, f));
            int i = 0;
            while (i < n && f[static_cast<std::size_t>(i)] == n - 1) f[static_cast<std::size_t>(i++)] = 0;
            if (i == n) break;
            ++f[static_cast<std::size_t>(i)];
          }
        }
  }

  TEST_CASE("property: subspace invariance of irreducibility") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : all_labeled_posets(n)) {
        auto x = finite_space::alexandroff(p);
        for_each_submask(x.carrier(), [&](subset y) {
          if (y == 0) return;
          auto sub = x.subspace(y);
          auto idx = bits_of(y);
          for_each_submask(y, [&](subset a) {
            if (a == 0) return;
            subset a_in_sub = 0;
            for (std::size_t k = 0; k < idx.size(); ++k)
              if (has_bit(a, idx[k])) a_in_sub |= subset{1} << k;
            bool in_sub = sub.is_irreducible_fast(a_in_sub);
            bool in_x = x.is_irreducible_fast(a);
            bool closure_in_x = x.is_irreducible_fast(x.closure(a));
            CHECK(in_sub == in_x);
            CHECK(in_x == closure_in_x);
          });
        });
      }
  }

  TEST_CASE("property: continuous images of irreducible sets are irreducible") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : all_labeled_posets(n))
        for (const auto& q : all_labeled_posets(n)) {
          auto x = finite_space::alexandroff(p);
          auto y = finite_space::alexandroff(q);
          for (const auto& f : all_monotone_maps(p, q))
            for_each_submask(x.carrier(), [&](subset a) {
              if (a == 0 || !x.is_irreducible_fast(a)) return;
              CHECK(y.is_irreducible_fast(map_image(f, a)));
            });
        }
  }

  TEST_CASE("property: directed sets are irreducible") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : all_labeled_posets(n)) {
        auto x = finite_space::alexandroff(p);
        for_each_submask(p.carrier(), [&](subset d) {
          if (d != 0 && p.is_directed(d)) CHECK(x.is_irreducible_fast(d));
        });
      }
  }

  TEST_CASE("property: the two irreducibility routes agree") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : all_labeled_posets(n)) {
        auto x = finite_space::alexandroff(p);
        for_each_submask(x.carrier(), [&](subset a) {
          if (a != 0) CHECK(x.is_irreducible(a) == x.is_irreducible_fast(a));
        });
      }
  }

  TEST_CASE("property: irreducible closed sets are the point closures (finite sobriety)") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : all_labeled_posets(n)) {
        auto x = finite_space::alexandroff(p);
        std::vector<subset> pts;
        for (int e = 0; e < x.size(); ++e) pts.push_back(x.closure(subset{1} << e));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        CHECK(x.irreducible_closed() == pts);
        CHECK(x.is_sober());
      }
  }
}
