#pragma once

#include <vector>

#include "ordtop/powerspace.hpp"
#include "ordtop/set_classes.hpp"

namespace ordtop {

/// Irreducibility of a family of compact saturated sets, computed in the
/// upper space, in the Alexandroff power space, and through the closure in
/// the latter; the three answers must agree.
bool is_irreducible_smyth(const finite_space& x, const std::vector<subset>& family);

/// Minimal irreducible closed subset of c meeting every member of an
/// irreducible family; ties broken by canonical set order. Every minimal
/// candidate is checked irreducible.
subset minimal_irr_closed(const finite_space& x, const std::vector<subset>& family, subset c);

/// Directed extraction on a poset: for a filtered family of finitely
/// generated upper sets all meeting a lower set c, produces a directed
/// d inside c whose down-closure meets every member.
subset poset_rudin(const finite_poset& p, const std::vector<subset>& upper_family, subset c);

} // namespace ordtop
