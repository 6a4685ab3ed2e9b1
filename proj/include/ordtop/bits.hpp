#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ordtop {

/// Subset of a carrier in canonical element order: bit i = i-th element.
/// Canonical set order = ascending numeric value of the mask.
using subset = std::uint64_t;

constexpr subset full_mask(int n) { return n >= 64 ? ~subset{0} : (subset{1} << n) - 1; }

constexpr bool has_bit(subset s, int i) { return (s >> i) & 1u; }

constexpr int popcount(subset s) { return std::popcount(s); }

constexpr bool is_subset(subset a, subset b) { return (a & ~b) == 0; }

/// Elements of a mask in ascending index order.
std::vector<int> bits_of(subset s);

/// Invokes f(sub) for every subset of mask, ascending numeric order.
template <typename F>
void for_each_submask(subset mask, F&& f) {
  subset sub = 0;
  while (true) {
    f(sub);
    if (sub == mask) break;
    sub = (sub - mask) & mask; // next subset of mask
  }
}

} // namespace ordtop
