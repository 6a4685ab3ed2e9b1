#include "ordtop/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace ordtop {

std::vector<std::string> generated_names(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

std::vector<finite_poset> all_labeled_posets(int n) {
  if (n < 1 || n > 5) fail(errc::size_limit, "labeled poset enumeration supports sizes 1..5");
  auto names = generated_names(n);
  std::vector<std::pair<int, int>> off_diag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) off_diag.emplace_back(i, j);

  std::vector<finite_poset> out;
  const std::uint64_t total = std::uint64_t{1} << off_diag.size();
  for (std::uint64_t bitsel = 0; bitsel < total; ++bitsel) {
    std::vector<subset> up(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = subset{1} << i;
    for (std::size_t k = 0; k < off_diag.size(); ++k)
      if ((bitsel >> k) & 1u) up[static_cast<std::size_t>(off_diag[k].first)] |= subset{1} << off_diag[k].second;

    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (!has_bit(up[static_cast<std::size_t>(i)], j)) continue;
        if (i != j && has_bit(up[static_cast<std::size_t>(j)], i)) ok = false; // antisymmetry
        else if (!is_subset(up[static_cast<std::size_t>(j)], up[static_cast<std::size_t>(i)])) ok = false; // transitivity
      }
    if (ok) out.push_back(finite_poset::from_up_masks(names, std::move(up)));
  }
  return out;
}

std::vector<std::uint8_t> canonical_form(const finite_poset& p) {
  const int n = p.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  do {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
            p.leq(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1 : 0;
    if (best.empty() || m < best) best = std::move(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<finite_poset> dedup_isomorphic(const std::vector<finite_poset>& ps) {
  std::vector<finite_poset> out;
  std::vector<std::vector<std::uint8_t>> seen;
  for (const auto& p : ps) {
    auto cf = canonical_form(p);
    if (std::find(seen.begin(), seen.end(), cf) == seen.end()) {
      seen.push_back(std::move(cf));
      out.push_back(p);
    }
  }
  return out;
}

finite_poset random_poset(int n, rng& r) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(r.below(i + 1))]);

  auto names = generated_names(n);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (r.coin())
        pairs.emplace_back(names[static_cast<std::size_t>(order[static_cast<std::size_t>(a)])],
                           names[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])]);
  return finite_poset::from_pairs(names, pairs);
}

namespace {

void extend_maps(const finite_poset& src, const finite_poset& dst, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == src.size()) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v < dst.size(); ++v) {
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      if (src.leq(j, i) && !dst.leq(cur[static_cast<std::size_t>(j)], v)) ok = false;
      if (src.leq(i, j) && !dst.leq(v, cur[static_cast<std::size_t>(j)])) ok = false;
    }
    if (ok) {
      cur.push_back(v);
      extend_maps(src, dst, cur, out);
      cur.pop_back();
    }
  }
}

} // namespace

std::vector<std::vector<int>> all_monotone_maps(const finite_poset& src, const finite_poset& dst) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  extend_maps(src, dst, cur, out);
  return out;
}

} // namespace ordtop
