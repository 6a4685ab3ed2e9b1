#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ordtop/poset.hpp"

namespace ordtop {

/// Canonical carrier names for generated posets: "p1", "p2", ...
std::vector<std::string> generated_names(int n);

/// All labeled posets on n points (n <= 5 kept practical; the n = 1..4
/// counts are 1, 3, 19, 219).
std::vector<finite_poset> all_labeled_posets(int n);

/// Lexicographically least relation matrix over all relabelings.
std::vector<std::uint8_t> canonical_form(const finite_poset& p);

/// Deduplicate up to isomorphism via canonical forms, preserving first
/// occurrences in order.
std::vector<finite_poset> dedup_isomorphic(const std::vector<finite_poset>& ps);

/// Deterministic engine; all randomized suites derive their draws from it
/// with plain modulo reduction so results do not depend on the standard
/// library's distribution internals.
class rng {
public:
  explicit rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool coin() { return next() & 1u; }

private:
  std::mt19937_64 eng_;
};

/// Random labeled poset: random strict pairs i<j in a shuffled ordering,
/// each kept with probability 1/2, then transitively closed.
finite_poset random_poset(int n, rng& r);

/// All monotone assignments src -> dst.
std::vector<std::vector<int>> all_monotone_maps(const finite_poset& src, const finite_poset& dst);

} // namespace ordtop
