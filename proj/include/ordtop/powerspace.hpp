#pragma once

#include <vector>

#include "ordtop/space.hpp"

namespace ordtop {

enum class power_kind { smyth, hoare, alex_power, sobrification };

const char* power_kind_name(power_kind k);

/// A space whose points are subsets of a base space. points[i] is the base
/// subset carried by the i-th carrier element of space (aligned with the
/// canonical element order of space).
struct power_space {
  finite_space base;
  power_kind kind;
  finite_space space;
  std::vector<subset> points;

  int point_index(subset base_set) const; // throws unknown_element
};

/// Upper space on K(X): opens generated by { boxU : U open }, boxU = members
/// inside U. Specialization order is reverse inclusion (checked).
power_space smyth(const finite_space& x);

/// Lower space on the nonempty closed sets: opens generated by the subbasis
/// { diamondU }, diamondU = members meeting U. Always sober (checked).
power_space hoare(const finite_space& x);

/// Upper-Vietoris space on all nonempty upper sets.
power_space alexandroff_power(const finite_space& x);

/// Diamond topology on the irreducible closed sets.
power_space sobrification(const finite_space& x);

/// x -> closure{x} into the sobrification; a topological embedding, and for
/// finite spaces a homeomorphism onto it.
std::vector<int> eta_map(const finite_space& x, const power_space& sob);

/// x -> saturation{x} into the upper space; a topological embedding.
std::vector<int> xi_map(const finite_space& x, const power_space& smy);

/// The intersection of a family of compact saturated sets equals the
/// intersection of its closure taken in the upper space, and likewise in the
/// Alexandroff power space.
bool intersection_closure_check(const finite_space& x, const std::vector<subset>& family);

/// Sobriety transfers between a space and its upper space.
bool smyth_sober_iff_check(const finite_space& x);

} // namespace ordtop
