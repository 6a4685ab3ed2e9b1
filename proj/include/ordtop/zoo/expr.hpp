#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordtop/error.hpp"

namespace ordtop::zoo {

enum class space_id {
  cofinite_nat,    // countably infinite carrier, co-finite topology
  cocountable,     // uncountable carrier, co-countable topology
  johnstone_scott, // grid N x (N u {w}), Scott topology
  johnstone_upper, // same order, upper topology
  omega_fan_scott, // chain with top w0, extra bottom b, fan of maximal w_n
  omega_fan_upper,
};

enum class grammar_id { cofinite, johnstone, omega_fan };

grammar_id grammar_of(space_id s);
const char* space_id_name(space_id s);
space_id parse_space_id(const std::string& name);

// ---------------------------------------------------------------------------
// concrete set expressions (normal forms)

/// Finite or co-finite set of naturals. For the co-countable space the
/// naturals name the countable point pool of an otherwise anonymous
/// uncountable carrier.
struct cofin_set {
  bool cofinite = false;
  std::vector<long> pts; // sorted unique; the excluded points when cofinite

  bool operator==(const cofin_set&) const = default;
};

/// Column content of a grid set: isolated finite heights plus an optional
/// upward tail of heights.
struct grid_col {
  std::vector<long> pts;
  std::optional<long> tail;

  bool operator==(const grid_col&) const = default;
};

/// Subset of the grid N x (N u {w}). Tails absorb the points they cover; the
/// whole space is representable only through the dedicated flag because no
/// finite union of atoms reaches every column.
struct grid_set {
  bool all = false;
  std::map<long, grid_col> cols; // finite heights per column
  std::vector<long> omega_pts;   // isolated top points (m, w)
  std::optional<long> omega_tail;

  bool operator==(const grid_set&) const = default;
};

/// Subset of the fan space: an ascending chain a_1 < a_2 < ... with top w0,
/// an extra point b, and maximal points w_1, w_2, ... with b < w_n and
/// a_m < w_n for m <= n.
struct fan_set {
  std::vector<long> a_pts;
  std::optional<long> a_tail;
  bool b = false;
  bool w0 = false;
  std::vector<long> w_pts;
  std::optional<long> w_tail;

  bool operator==(const fan_set&) const = default;
};

using set_expr = std::variant<cofin_set, grid_set, fan_set>;

grammar_id grammar_of(const set_expr& e);
void check_grammar(space_id s, const set_expr& e);

set_expr empty_expr(grammar_id g);
set_expr all_expr(grammar_id g);
bool is_empty(const set_expr& e);
bool is_all(const set_expr& e);

set_expr normalize(set_expr e);
set_expr unite(const set_expr& a, const set_expr& b);
set_expr intersect(const set_expr& a, const set_expr& b);
bool subset_of(const set_expr& a, const set_expr& b);

/// Complement. Total for the cofinite and fan grammars; throws
/// unrepresentable_set for grid sets (other columns cannot be listed).
set_expr complement(const set_expr& e);

/// True when the set has finitely many points; fills out when given.
bool finite_card(const set_expr& e, long* out = nullptr);

// ---------------------------------------------------------------------------
// concrete points

struct nat_point {
  long v = 0;
  bool operator==(const nat_point&) const = default;
};
struct grid_point {
  long col = 0;
  long height = 0; // omega_height for the top of a column
  bool operator==(const grid_point&) const = default;
};
inline constexpr long omega_height = -1;
enum class fan_part { a, b, w0, w };
struct fan_point {
  fan_part part = fan_part::a;
  long idx = 0; // for a and w
  bool operator==(const fan_point&) const = default;
};

using zoo_point = std::variant<nat_point, grid_point, fan_point>;

bool contains(const set_expr& e, const zoo_point& p);
std::string point_to_string(const zoo_point& p);

/// Deterministic sample of concrete points with indices up to bound.
std::vector<zoo_point> sample_points(grammar_id g, long bound);

// ---------------------------------------------------------------------------
// symbolic layer: atoms whose thresholds are affine in one natural parameter

struct affine {
  long slope = 0;
  long offset = 0;

  long at(long n) const { return slope * n + offset; }
  bool is_const() const { return slope == 0; }
  bool operator==(const affine&) const = default;
};

/// a(n) >= b(n) for every n >= 1.
bool dominates(const affine& a, const affine& b);

enum class sym_kind {
  fin_pt,       // cofinite: the point t
  cofin_prefix, // cofinite: complement of {0..t}
  g_pt,         // grid: (col, t), finite height
  g_pt_omega,   // grid: (col, w); t unused
  col_tail,     // grid: heights >= t in col
  omega_tail,   // grid: tops (m, w), m >= t
  a_pt,         // fan: a_t
  b_pt,         // fan: b
  w0_pt,        // fan: w0
  w_pt,         // fan: w_t
  a_tail,       // fan: a_m, m >= t
  w_tail,       // fan: w_m, m >= t
};

struct sym_atom {
  sym_kind kind = sym_kind::fin_pt;
  long col = 0; // grid column where applicable
  affine t;

  bool operator==(const sym_atom&) const = default;
};

struct sym_expr {
  grammar_id g = grammar_id::cofinite;
  bool all = false;
  std::vector<sym_atom> atoms;

  bool operator==(const sym_expr&) const = default;
};

set_expr substitute(const sym_expr& e, long n);

/// Template is constant in the parameter.
bool is_constant(const sym_expr& e);

/// member(n+1) subseteq member(n) for every n >= 1: every atom is constant or
/// a shrinking atom (tail or prefix) with nondecreasing threshold. Throws
/// non_monotone_family otherwise.
void check_decreasing(const sym_expr& e);

/// Exact full intersection of a decreasing family: atoms with diverging
/// thresholds vanish, constant atoms persist.
set_expr family_limit(const sym_expr& e);

/// Exact union over all n >= 1 of a family of point atoms whose indices have
/// slope one (each sweeps out a full tail) or are constant. Throws
/// unrepresentable_set for other shapes.
set_expr swept_union(const sym_expr& e);

/// No instantiation of the template is contained in u.
bool never_subset_of(const sym_expr& e, const set_expr& u);

/// Every instantiation is nonempty.
bool always_nonempty(const sym_expr& e);

/// Every instantiation has finitely many points.
bool always_finite(const sym_expr& e);

// ---------------------------------------------------------------------------
// text grammar (canonical print and parse round-trip bit-exactly)

std::string expr_to_string(const set_expr& e);
set_expr parse_expr(grammar_id g, const std::string& text);

std::string sym_to_string(const sym_expr& e);
sym_expr parse_sym_expr(grammar_id g, const std::string& text);

std::string sym_atom_to_string(const sym_atom& a);
sym_atom parse_sym_point(grammar_id g, const std::string& text); // a single point atom

std::string affine_to_string(const affine& a);

zoo_point parse_point(grammar_id g, const std::string& text);

} // namespace ordtop::zoo
