#include "ordtop/zoo/space.hpp"

#include <algorithm>

namespace ordtop::zoo {

namespace {

// ---- grid order (column clause at finite heights, tops reached through the
// cross clause k <= m): up(j,k) = {(j,h) : h >= k} u {(m,w) : m >= k},
// up(j,w) = {(j,w)} ----

set_expr grid_up_point(const grid_point& p) {
  grid_set out;
  if (p.height == omega_height) {
    out.omega_pts = {p.col};
  } else {
    out.cols[p.col] = {{}, p.height};
    out.omega_tail = p.height;
  }
  return normalize(out);
}

set_expr fan_up_point(const fan_point& p) {
  fan_set out;
  switch (p.part) {
    case fan_part::a:
      out.a_tail = p.idx;
      out.w0 = true;
      out.w_tail = p.idx;
      break;
    case fan_part::b:
      out.b = true;
      out.w_tail = 1;
      break;
    case fan_part::w0: out.w0 = true; break;
    case fan_part::w: out.w_pts = {p.idx}; break;
  }
  return normalize(out);
}

// down of a_k = {a_1..a_k}; down of an a-tail = every a; down of w0 = the
// chain; down of b = {b}; down of w_n = {w_n, b, a_1..a_n}
set_expr fan_down_set(const fan_set& f) {
  fan_set out;
  out.w0 = f.w0;
  out.b = f.b || f.w_tail.has_value() || !f.w_pts.empty();
  out.w_pts = f.w_pts;
  out.w_tail = f.w_tail;
  if (f.a_tail || f.w0 || f.w_tail) {
    out.a_tail = 1;
  } else {
    long max_a = f.a_pts.empty() ? 0 : f.a_pts.back();
    long max_w = f.w_pts.empty() ? 0 : f.w_pts.back();
    for (long i = 1; i <= std::max(max_a, max_w); ++i) out.a_pts.push_back(i);
  }
  return normalize(out);
}

} // namespace

set_expr up_point(space_id s, const zoo_point& p) {
  switch (grammar_of(s)) {
    case grammar_id::cofinite: {
      auto* np = std::get_if<nat_point>(&p);
      if (!np) fail(errc::wrong_grammar, "point grammar mismatch");
      return cofin_set{false, {np->v}}; // T1: specialization is equality
    }
    case grammar_id::johnstone: {
      auto* gp = std::get_if<grid_point>(&p);
      if (!gp) fail(errc::wrong_grammar, "point grammar mismatch");
      return grid_up_point(*gp);
    }
    case grammar_id::omega_fan: {
      auto* fp = std::get_if<fan_point>(&p);
      if (!fp) fail(errc::wrong_grammar, "point grammar mismatch");
      return fan_up_point(*fp);
    }
  }
  fail(errc::bad_input, "unknown grammar");
}

bool point_leq(space_id s, const zoo_point& a, const zoo_point& b) { return contains(up_point(s, a), b); }

set_expr up_expr(space_id s, const set_expr& e) {
  check_grammar(s, e);
  switch (grammar_of(s)) {
    case grammar_id::cofinite: return e;
    case grammar_id::johnstone: {
      const auto& g = std::get<grid_set>(e);
      if (g.all) return e;
      set_expr out = e;
      for (const auto& [j, col] : g.cols) {
        grid_set piece;
        long least = col.tail ? *col.tail : col.pts.front();
        if (!col.pts.empty()) least = std::min(least, col.pts.front());
        piece.cols[j] = {{}, least};
        piece.omega_tail = least;
        out = unite(out, normalize(piece));
      }
      return out;
    }
    case grammar_id::omega_fan: {
      const auto& f = std::get<fan_set>(e);
      set_expr out = e;
      std::optional<long> least_a;
      if (f.a_tail) least_a = *f.a_tail;
      if (!f.a_pts.empty()) least_a = std::min(least_a.value_or(f.a_pts.front()), f.a_pts.front());
      if (least_a) out = unite(out, fan_up_point(fan_point{fan_part::a, *least_a}));
      if (f.b) out = unite(out, fan_up_point(fan_point{fan_part::b, 0}));
      return out;
    }
  }
  fail(errc::bad_input, "unknown grammar");
}

bool is_upper(space_id s, const set_expr& e) { return up_expr(s, e) == e; }

bool is_scott_open_symbolic(space_id s, const set_expr& e) {
  check_grammar(s, e);
  if (s == space_id::johnstone_scott) {
    const auto& g = std::get<grid_set>(e);
    if (g.all || is_empty(e)) return true;
    if (!is_upper(s, e)) return false;
    if (g.omega_tail) return false; // infinitely many tops, finitely many column tails
    for (long m : g.omega_pts) {
      auto it = g.cols.find(m);
      if (it == g.cols.end() || !it->second.tail) return false; // a top needs its column tail
    }
    return true;
  }
  if (s == space_id::omega_fan_scott) {
    const auto& f = std::get<fan_set>(e);
    if (is_empty(e)) return true;
    if (!is_upper(s, e)) return false;
    if (f.w0 && !f.a_tail) return false; // the chain converges to its top
    return true;
  }
  fail(errc::wrong_grammar, "Scott-openness rule applies to the Scott-topology spaces");
}

bool is_open(space_id s, const set_expr& e) {
  check_grammar(s, e);
  switch (s) {
    case space_id::cofinite_nat: {
      const auto& c = std::get<cofin_set>(e);
      return c.cofinite || c.pts.empty();
    }
    case space_id::cocountable: {
      const auto& c = std::get<cofin_set>(e);
      return c.cofinite || c.pts.empty(); // finite exclusions are countable
    }
    case space_id::johnstone_scott: return is_scott_open_symbolic(s, e);
    case space_id::johnstone_upper:
      // nonempty proper opens of the upper topology meet all but finitely
      // many columns at finite heights; no finite atom union does
      return is_empty(e) || is_all(e);
    case space_id::omega_fan_scott: return is_scott_open_symbolic(s, e);
    case space_id::omega_fan_upper: {
      // closed sets: finite down-sets, the chain plus a finite down-set, all
      set_expr comp = complement(e);
      const auto& c = std::get<fan_set>(comp);
      if (is_empty(comp) || is_all(comp)) return true;
      set_expr down = fan_down_set(c);
      if (!(down == comp)) return false;
      if (finite_card(comp)) return true;
      // infinite: must be the chain with its top plus finitely much else
      return c.a_tail == 1 && !c.w_tail && c.w0;
    }
  }
  fail(errc::bad_input, "unknown space");
}

bool is_closed(space_id s, const set_expr& e) {
  check_grammar(s, e);
  switch (grammar_of(s)) {
    case grammar_id::cofinite: {
      const auto& c = std::get<cofin_set>(e);
      if (s == space_id::cofinite_nat) return !c.cofinite || c.pts.empty();
      return !c.cofinite || c.pts.empty(); // finite sets and the whole carrier
    }
    default:
      try {
        return closure(s, e) == e;
      } catch (const error& err) {
        if (err.code() == errc::unrepresentable_set) return false; // closure escapes, e is not closed
        throw;
      }
  }
}

set_expr closure(space_id s, const set_expr& e) {
  check_grammar(s, e);
  switch (s) {
    case space_id::cofinite_nat:
    case space_id::cocountable: {
      const auto& c = std::get<cofin_set>(e);
      if (c.cofinite) return all_expr(grammar_id::cofinite); // infinite sets are dense
      return e;
    }
    case space_id::johnstone_scott: {
      const auto& g = std::get<grid_set>(e);
      if (g.all) return e;
      if (g.omega_tail) return all_expr(grammar_id::johnstone); // closure swallows every column
      if (!g.omega_pts.empty())
        fail(errc::unrepresentable_set, "closure of an isolated top holds a whole row");
      grid_set out;
      for (const auto& [j, col] : g.cols) {
        if (col.tail) {
          // whole column below, and the top joins as the column's limit;
          // its down-set then pulls in a row
          fail(errc::unrepresentable_set, "closure of a column tail holds a whole row");
        }
        grid_col down;
        for (long h = 1; h <= col.pts.back(); ++h) down.pts.push_back(h);
        out.cols[j] = std::move(down);
      }
      return normalize(out);
    }
    case space_id::johnstone_upper: {
      const auto& g = std::get<grid_set>(e);
      if (g.all) return e;
      if (g.omega_tail || !g.omega_pts.empty())
        fail(errc::unrepresentable_set, "upper-topology closure of a top holds a whole row");
      bool has_tail = false;
      for (const auto& [j, col] : g.cols) {
        (void)j;
        if (col.tail) has_tail = true;
      }
      if (has_tail) return all_expr(grammar_id::johnstone); // no finitely generated down-set catches a tail
      grid_set out;
      for (const auto& [j, col] : g.cols) {
        grid_col down;
        for (long h = 1; h <= col.pts.back(); ++h) down.pts.push_back(h);
        out.cols[j] = std::move(down);
      }
      return normalize(out);
    }
    case space_id::omega_fan_scott: {
      const auto& f = std::get<fan_set>(e);
      set_expr down = fan_down_set(f);
      auto& d = std::get<fan_set>(down);
      if (d.a_tail) d.w0 = true; // the chain's supremum joins the closure
      return normalize(down);
    }
    case space_id::omega_fan_upper: {
      const auto& f = std::get<fan_set>(e);
      if (f.w_tail) return all_expr(grammar_id::omega_fan); // tops escape finitely generated down-sets
      set_expr down = fan_down_set(f);
      auto& d = std::get<fan_set>(down);
      if (d.a_tail) d.w0 = true; // the only closed superset of the whole chain already has the top
      return normalize(down);
    }
  }
  fail(errc::bad_input, "unknown space");
}

bool is_compact_saturated(space_id s, const set_expr& e) {
  check_grammar(s, e);
  if (is_empty(e)) return false;
  switch (s) {
    case space_id::cofinite_nat: return true; // every nonempty subset
    case space_id::cocountable: return finite_card(e); // exactly the nonempty finite sets
    default: break;
  }
  // grid and fan: saturations of finite point sets
  // the saturation of the minimal points must give the set back; tails of
  // tops are reachable only through a generator below them
  if (!is_upper(s, e)) return false;
  if (grammar_of(s) == grammar_id::johnstone) {
    const auto& g = std::get<grid_set>(e);
    if (g.all) return false; // finitely many generators reach finitely many columns
    set_expr from_mins = empty_expr(grammar_id::johnstone);
    for (const auto& [j, col] : g.cols) {
      long least = col.tail ? *col.tail : col.pts.front();
      if (!col.pts.empty()) least = std::min(least, col.pts.front());
      from_mins = unite(from_mins, grid_up_point(grid_point{j, least}));
    }
    if (g.omega_tail) {
      const auto& fm = std::get<grid_set>(from_mins);
      if (!fm.omega_tail) return false; // a bare tail of tops has no finite generator set
      for (long m = *g.omega_tail; m < *fm.omega_tail; ++m)
        from_mins = unite(from_mins, grid_up_point(grid_point{m, omega_height}));
    }
    for (long m : g.omega_pts) from_mins = unite(from_mins, grid_up_point(grid_point{m, omega_height}));
    return from_mins == e;
  }
  const auto& f = std::get<fan_set>(e);
  set_expr from_mins = empty_expr(grammar_id::omega_fan);
  if (f.a_tail || !f.a_pts.empty()) {
    long least = f.a_tail ? *f.a_tail : f.a_pts.front();
    if (!f.a_pts.empty()) least = std::min(least, f.a_pts.front());
    from_mins = unite(from_mins, fan_up_point(fan_point{fan_part::a, least}));
  }
  if (f.b) from_mins = unite(from_mins, fan_up_point(fan_point{fan_part::b, 0}));
  if (f.w0) from_mins = unite(from_mins, fan_up_point(fan_point{fan_part::w0, 0}));
  if (f.w_tail) {
    const auto& fm = std::get<fan_set>(from_mins);
    if (!fm.w_tail) return false; // a bare tail of tops has no finite generator set
    for (long m = *f.w_tail; m < *fm.w_tail; ++m)
      from_mins = unite(from_mins, fan_up_point(fan_point{fan_part::w, m}));
  }
  for (long m : f.w_pts) from_mins = unite(from_mins, fan_up_point(fan_point{fan_part::w, m}));
  return from_mins == e;
}

bool is_irreducible(space_id s, const set_expr& e) {
  check_grammar(s, e);
  if (is_empty(e)) fail(errc::empty_set, "irreducibility of the empty set");
  switch (grammar_of(s)) {
    case grammar_id::cofinite: {
      long cnt = 0;
      if (finite_card(e, &cnt)) return cnt == 1; // finite sets of size two split into closed halves
      return true; // infinite sets only fit under the whole space
    }
    default:
      // only needed for the T1-type certificates; grid/fan irreducibility is
      // outside the certified fragment
      fail(errc::unrepresentable_set, "irreducibility is decided on the co-finite/co-countable fragment only");
  }
}

sym_expr up_point_sym(space_id s, const sym_atom& point) {
  grammar_id g = grammar_of(s);
  sym_expr out{g, false, {}};
  switch (point.kind) {
    case sym_kind::fin_pt:
      if (g != grammar_id::cofinite) fail(errc::wrong_grammar, "point grammar mismatch");
      out.atoms = {point};
      return out;
    case sym_kind::g_pt:
      if (g != grammar_id::johnstone) fail(errc::wrong_grammar, "point grammar mismatch");
      out.atoms = {sym_atom{sym_kind::col_tail, point.col, point.t}, sym_atom{sym_kind::omega_tail, 0, point.t}};
      return out;
    case sym_kind::g_pt_omega:
      if (g != grammar_id::johnstone) fail(errc::wrong_grammar, "point grammar mismatch");
      out.atoms = {point};
      return out;
    case sym_kind::a_pt:
      if (g != grammar_id::omega_fan) fail(errc::wrong_grammar, "point grammar mismatch");
      out.atoms = {sym_atom{sym_kind::a_tail, 0, point.t}, sym_atom{sym_kind::w0_pt, 0, affine{}},
                   sym_atom{sym_kind::w_tail, 0, point.t}};
      return out;
    case sym_kind::b_pt:
      out.atoms = {sym_atom{sym_kind::b_pt, 0, affine{}}, sym_atom{sym_kind::w_tail, 0, affine{0, 1}}};
      return out;
    case sym_kind::w0_pt:
      out.atoms = {sym_atom{sym_kind::w0_pt, 0, affine{}}};
      return out;
    case sym_kind::w_pt:
      out.atoms = {sym_atom{sym_kind::w_pt, 0, point.t}};
      return out;
    default: fail(errc::bad_input, "expected a point atom");
  }
}

bool is_chain_sym(space_id s, const sym_atom& point) {
  (void)s;
  switch (point.kind) {
    case sym_kind::fin_pt: return point.t.is_const(); // distinct naturals are incomparable
    case sym_kind::g_pt: return point.t.slope >= 0;   // one column, nondecreasing height
    case sym_kind::a_pt: return point.t.slope >= 0;   // the ascending chain
    case sym_kind::g_pt_omega:
    case sym_kind::b_pt:
    case sym_kind::w0_pt: return true; // constant point
    case sym_kind::w_pt: return point.t.is_const();
    default: return false;
  }
}

sym_expr intersect_sym(const sym_expr& e, const set_expr& c) {
  if (grammar_of(c) != e.g) fail(errc::wrong_grammar, "mixed grammars");
  if (e.all) fail(errc::unrepresentable_set, "cannot intersect the whole-space template symbolically");
  if (is_all(c)) return e;
  sym_expr out{e.g, false, {}};
  for (const auto& a : e.atoms) {
    if (a.t.is_const() || a.kind == sym_kind::g_pt_omega || a.kind == sym_kind::b_pt || a.kind == sym_kind::w0_pt) {
      // constant atom: intersect concretely and lift back
      sym_expr single{e.g, false, {a}};
      set_expr conc = intersect(substitute(single, 1), c);
      if (is_empty(conc)) continue;
      // lift: the concrete result of a constant atom meet stays constant
      const set_expr norm = conc;
      // rebuild constant atoms from the concrete pieces
      if (auto* cs = std::get_if<cofin_set>(&norm)) {
        if (cs->cofinite) fail(errc::unrepresentable_set, "constant co-finite piece in a template");
        for (long p : cs->pts) out.atoms.push_back(sym_atom{sym_kind::fin_pt, 0, affine{0, p}});
      } else if (auto* gs = std::get_if<grid_set>(&norm)) {
        for (const auto& [j, col] : gs->cols) {
          for (long h : col.pts) out.atoms.push_back(sym_atom{sym_kind::g_pt, j, affine{0, h}});
          if (col.tail) out.atoms.push_back(sym_atom{sym_kind::col_tail, j, affine{0, *col.tail}});
        }
        for (long m : gs->omega_pts) out.atoms.push_back(sym_atom{sym_kind::g_pt_omega, m, affine{}});
        if (gs->omega_tail) out.atoms.push_back(sym_atom{sym_kind::omega_tail, 0, affine{0, *gs->omega_tail}});
      } else {
        const auto& fs = std::get<fan_set>(norm);
        for (long i : fs.a_pts) out.atoms.push_back(sym_atom{sym_kind::a_pt, 0, affine{0, i}});
        if (fs.a_tail) out.atoms.push_back(sym_atom{sym_kind::a_tail, 0, affine{0, *fs.a_tail}});
        if (fs.b) out.atoms.push_back(sym_atom{sym_kind::b_pt, 0, affine{}});
        if (fs.w0) out.atoms.push_back(sym_atom{sym_kind::w0_pt, 0, affine{}});
        for (long i : fs.w_pts) out.atoms.push_back(sym_atom{sym_kind::w_pt, 0, affine{0, i}});
        if (fs.w_tail) out.atoms.push_back(sym_atom{sym_kind::w_tail, 0, affine{0, *fs.w_tail}});
      }
      continue;
    }
    // moving atoms: tails against the concrete set's matching zone
    switch (a.kind) {
      case sym_kind::col_tail: {
        const auto& gs = std::get<grid_set>(c);
        auto it = gs.cols.find(a.col);
        if (it == gs.cols.end()) continue;
        if (!it->second.pts.empty())
          fail(errc::unrepresentable_set, "tail against isolated points is stagewise irregular");
        if (it->second.tail) {
          affine other{0, *it->second.tail};
          if (dominates(a.t, other)) out.atoms.push_back(a);
          else if (dominates(other, a.t)) out.atoms.push_back(sym_atom{sym_kind::col_tail, a.col, other});
          else fail(errc::unrepresentable_set, "tail thresholds cross");
        }
        break;
      }
      case sym_kind::omega_tail: {
        const auto& gs = std::get<grid_set>(c);
        if (!gs.omega_pts.empty())
          fail(errc::unrepresentable_set, "tail against isolated points is stagewise irregular");
        if (gs.omega_tail) {
          affine other{0, *gs.omega_tail};
          if (dominates(a.t, other)) out.atoms.push_back(a);
          else if (dominates(other, a.t)) out.atoms.push_back(sym_atom{sym_kind::omega_tail, 0, other});
          else fail(errc::unrepresentable_set, "tail thresholds cross");
        }
        break;
      }
      case sym_kind::a_tail: {
        const auto& fs = std::get<fan_set>(c);
        if (!fs.a_pts.empty()) fail(errc::unrepresentable_set, "tail against isolated points is stagewise irregular");
        if (fs.a_tail) {
          affine other{0, *fs.a_tail};
          if (dominates(a.t, other)) out.atoms.push_back(a);
          else if (dominates(other, a.t)) out.atoms.push_back(sym_atom{sym_kind::a_tail, 0, other});
          else fail(errc::unrepresentable_set, "tail thresholds cross");
        }
        break;
      }
      case sym_kind::w_tail: {
        const auto& fs = std::get<fan_set>(c);
        if (!fs.w_pts.empty()) fail(errc::unrepresentable_set, "tail against isolated points is stagewise irregular");
        if (fs.w_tail) {
          affine other{0, *fs.w_tail};
          if (dominates(a.t, other)) out.atoms.push_back(a);
          else if (dominates(other, a.t)) out.atoms.push_back(sym_atom{sym_kind::w_tail, 0, other});
          else fail(errc::unrepresentable_set, "tail thresholds cross");
        }
        break;
      }
      case sym_kind::cofin_prefix: {
        const auto& cs = std::get<cofin_set>(c);
        if (cs.cofinite) {
          // meet of co-finite sets: exclusions join; only prefix exclusions stay affine
          for (long p : cs.pts)
            if (p > a.t.at(1) || a.t.slope == 0)
              fail(errc::unrepresentable_set, "co-finite meet leaves the prefix form");
          out.atoms.push_back(a);
        } else {
          fail(errc::unrepresentable_set, "prefix tail against a finite set is stagewise irregular");
        }
        break;
      }
      default: {
        // moving point against a concrete set: regular only when always inside
        // or always outside
        sym_expr probe{e.g, false, {a}};
        if (!never_subset_of(probe, c)) {
          // inside for every n? check domination against a covering tail
          fail(errc::unrepresentable_set, "moving point is only stagewise inside the set");
        }
        break; // never inside: contributes nothing
      }
    }
  }
  return out;
}

sym_expr up_meet_template(space_id s, const sym_atom& moving, const zoo_point& fixed) {
  sym_expr moving_up = up_point_sym(s, moving);
  set_expr fixed_up = up_point(s, fixed);
  return intersect_sym(moving_up, fixed_up);
}

} // namespace ordtop::zoo
