#pragma once

#include "ordtop/zoo/expr.hpp"

namespace ordtop::zoo {

/// Exact decision procedures on the representable fragment of one of the
/// infinite spaces. Inputs outside the fragment raise unrepresentable_set
/// rather than guessing.

bool is_open(space_id s, const set_expr& e);
bool is_closed(space_id s, const set_expr& e);

/// Smallest closed superset. Throws unrepresentable_set when the closure
/// leaves the fragment (grid sets touching column tops).
set_expr closure(space_id s, const set_expr& e);

/// Up-set of a point in the specialization order.
set_expr up_point(space_id s, const zoo_point& p);

/// Up-set of a representable set (union of point up-sets; exact).
set_expr up_expr(space_id s, const set_expr& e);

bool is_upper(space_id s, const set_expr& e);

bool point_leq(space_id s, const zoo_point& a, const zoo_point& b);

/// Compact saturated sets: every nonempty set (co-finite space), the
/// nonempty finite sets (co-countable space), or saturations of finite point
/// sets (grid and fan spaces).
bool is_compact_saturated(space_id s, const set_expr& e);

bool is_irreducible(space_id s, const set_expr& e);

/// Symbolic up-set of a parametric point atom.
sym_expr up_point_sym(space_id s, const sym_atom& point);

/// The point sequence is a chain (nondecreasing in the parameter).
bool is_chain_sym(space_id s, const sym_atom& point);

/// Exact stage formula: up(d(n)) meet up(x) as a template in n. Throws
/// unrepresentable_set when the meet is not expressible with affine atoms.
sym_expr up_meet_template(space_id s, const sym_atom& moving, const zoo_point& fixed);

/// Intersection of a symbolic template with a concrete set, staying a
/// template.
sym_expr intersect_sym(const sym_expr& e, const set_expr& c);

/// Scott-openness on the representable fragment of the Scott-topology
/// spaces. For the grid: upper, no omega tail unless the whole space, and
/// every isolated top covered by a same-column tail. For the fan: upper, and
/// the chain top forces an a-tail.
bool is_scott_open_symbolic(space_id s, const set_expr& e);

} // namespace ordtop::zoo
