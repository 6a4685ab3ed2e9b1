#include "ordtop/zoo/expr.hpp"

#include <algorithm>
#include <cctype>

namespace ordtop::zoo {

namespace {

void sort_unique(std::vector<long>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool in_sorted(const std::vector<long>& v, long x) { return std::binary_search(v.begin(), v.end(), x); }

// ---- rays: {pts} union {i : i >= tail} inside naturals bounded below ----

struct ray {
  std::vector<long> pts;
  std::optional<long> tail;
};

ray ray_normalize(ray r, long lo) {
  sort_unique(r.pts);
  for (long p : r.pts)
    if (p < lo) fail(errc::bad_input, "index below the carrier bound");
  if (r.tail) {
    if (*r.tail < lo) *r.tail = lo;
    // absorb adjacent points into the tail
    while (true) {
      std::vector<long> keep;
      for (long p : r.pts)
        if (p < *r.tail) keep.push_back(p);
      if (!keep.empty() && keep.back() == *r.tail - 1) {
        *r.tail -= 1;
        keep.pop_back();
      }
      if (keep.size() == r.pts.size()) {
        r.pts = std::move(keep);
        break;
      }
      r.pts = std::move(keep);
    }
  }
  return r;
}

bool ray_contains(const ray& r, long x) {
  if (r.tail && x >= *r.tail) return true;
  return in_sorted(r.pts, x);
}

ray ray_union(const ray& a, const ray& b, long lo) {
  ray out;
  out.pts = a.pts;
  out.pts.insert(out.pts.end(), b.pts.begin(), b.pts.end());
  if (a.tail && b.tail) out.tail = std::min(*a.tail, *b.tail);
  else out.tail = a.tail ? a.tail : b.tail;
  return ray_normalize(std::move(out), lo);
}

ray ray_intersect(const ray& a, const ray& b, long lo) {
  ray out;
  if (a.tail && b.tail) out.tail = std::max(*a.tail, *b.tail);
  std::vector<long> candidates = a.pts;
  candidates.insert(candidates.end(), b.pts.begin(), b.pts.end());
  if (a.tail)
    for (long p : b.pts)
      if (p >= *a.tail) candidates.push_back(p);
  if (b.tail)
    for (long p : a.pts)
      if (p >= *b.tail) candidates.push_back(p);
  for (long p : candidates)
    if (ray_contains(a, p) && ray_contains(b, p) && !(out.tail && p >= *out.tail)) out.pts.push_back(p);
  return ray_normalize(std::move(out), lo);
}

bool ray_subset(const ray& a, const ray& b) {
  if (a.tail && !(b.tail && *b.tail <= *a.tail)) return false;
  for (long p : a.pts)
    if (!ray_contains(b, p)) return false;
  return true;
}

ray ray_complement(const ray& r, long lo) {
  ray out;
  if (r.tail) {
    for (long i = lo; i < *r.tail; ++i)
      if (!in_sorted(r.pts, i)) out.pts.push_back(i);
  } else {
    long bound = r.pts.empty() ? lo : r.pts.back() + 1;
    for (long i = lo; i < bound; ++i)
      if (!in_sorted(r.pts, i)) out.pts.push_back(i);
    out.tail = bound;
  }
  return ray_normalize(std::move(out), lo);
}

bool ray_empty(const ray& r) { return r.pts.empty() && !r.tail; }

ray col_ray(const grid_set& e, long col) {
  auto it = e.cols.find(col);
  if (it == e.cols.end()) return {};
  return {it->second.pts, it->second.tail};
}

ray omega_ray(const grid_set& e) { return {e.omega_pts, e.omega_tail}; }

ray a_ray(const fan_set& e) { return {e.a_pts, e.a_tail}; }
ray w_ray(const fan_set& e) { return {e.w_pts, e.w_tail}; }

} // namespace

grammar_id grammar_of(space_id s) {
  switch (s) {
    case space_id::cofinite_nat:
    case space_id::cocountable: return grammar_id::cofinite;
    case space_id::johnstone_scott:
    case space_id::johnstone_upper: return grammar_id::johnstone;
    case space_id::omega_fan_scott:
    case space_id::omega_fan_upper: return grammar_id::omega_fan;
  }
  fail(errc::bad_input, "unknown space id");
}

const char* space_id_name(space_id s) {
  switch (s) {
    case space_id::cofinite_nat: return "cofinite-nat";
    case space_id::cocountable: return "cocountable";
    case space_id::johnstone_scott: return "johnstone-scott";
    case space_id::johnstone_upper: return "johnstone-upper";
    case space_id::omega_fan_scott: return "omega-fan-scott";
    case space_id::omega_fan_upper: return "omega-fan-upper";
  }
  return "?";
}

space_id parse_space_id(const std::string& name) {
  for (space_id s : {space_id::cofinite_nat, space_id::cocountable, space_id::johnstone_scott,
                     space_id::johnstone_upper, space_id::omega_fan_scott, space_id::omega_fan_upper})
    if (name == space_id_name(s)) return s;
  fail(errc::bad_input, "unknown space id '" + name + "'");
}

grammar_id grammar_of(const set_expr& e) {
  if (std::holds_alternative<cofin_set>(e)) return grammar_id::cofinite;
  if (std::holds_alternative<grid_set>(e)) return grammar_id::johnstone;
  return grammar_id::omega_fan;
}

void check_grammar(space_id s, const set_expr& e) {
  if (grammar_of(s) != grammar_of(e)) fail(errc::wrong_grammar, "expression grammar does not match the space");
}

set_expr empty_expr(grammar_id g) {
  switch (g) {
    case grammar_id::cofinite: return cofin_set{};
    case grammar_id::johnstone: return grid_set{};
    case grammar_id::omega_fan: return fan_set{};
  }
  fail(errc::bad_input, "unknown grammar");
}

set_expr all_expr(grammar_id g) {
  switch (g) {
    case grammar_id::cofinite: return cofin_set{true, {}};
    case grammar_id::johnstone: {
      grid_set e;
      e.all = true;
      return e;
    }
    case grammar_id::omega_fan: {
      fan_set e;
      e.a_tail = 1;
      e.b = e.w0 = true;
      e.w_tail = 1;
      return e;
    }
  }
  fail(errc::bad_input, "unknown grammar");
}

bool is_empty(const set_expr& e) {
  if (auto* c = std::get_if<cofin_set>(&e)) return !c->cofinite && c->pts.empty();
  if (auto* g = std::get_if<grid_set>(&e)) return !g->all && g->cols.empty() && g->omega_pts.empty() && !g->omega_tail;
  const auto& f = std::get<fan_set>(e);
  return f.a_pts.empty() && !f.a_tail && !f.b && !f.w0 && f.w_pts.empty() && !f.w_tail;
}

bool is_all(const set_expr& e) {
  if (auto* c = std::get_if<cofin_set>(&e)) return c->cofinite && c->pts.empty();
  if (auto* g = std::get_if<grid_set>(&e)) return g->all;
  const auto& f = std::get<fan_set>(e);
  return f.a_tail == 1 && f.a_pts.empty() && f.b && f.w0 && f.w_tail == 1 && f.w_pts.empty();
}

set_expr normalize(set_expr e) {
  if (auto* c = std::get_if<cofin_set>(&e)) {
    sort_unique(c->pts);
    for (long p : c->pts)
      if (p < 0) fail(errc::bad_input, "negative natural");
    return e;
  }
  if (auto* g = std::get_if<grid_set>(&e)) {
    if (g->all) {
      g->cols.clear();
      g->omega_pts.clear();
      g->omega_tail.reset();
      return e;
    }
    std::map<long, grid_col> cols;
    for (auto& [j, col] : g->cols) {
      if (j < 1) fail(errc::bad_input, "grid column below 1");
      ray r = ray_normalize({col.pts, col.tail}, 1);
      if (!ray_empty(r)) cols[j] = {r.pts, r.tail};
    }
    g->cols = std::move(cols);
    ray om = ray_normalize({g->omega_pts, g->omega_tail}, 1);
    g->omega_pts = om.pts;
    g->omega_tail = om.tail;
    return e;
  }
  auto& f = std::get<fan_set>(e);
  ray ra = ray_normalize({f.a_pts, f.a_tail}, 1);
  f.a_pts = ra.pts;
  f.a_tail = ra.tail;
  ray rw = ray_normalize({f.w_pts, f.w_tail}, 1);
  f.w_pts = rw.pts;
  f.w_tail = rw.tail;
  return e;
}

static void check_same_grammar(const set_expr& a, const set_expr& b) {
  if (grammar_of(a) != grammar_of(b)) fail(errc::wrong_grammar, "mixed expression grammars");
}

set_expr unite(const set_expr& a, const set_expr& b) {
  check_same_grammar(a, b);
  if (auto* ca = std::get_if<cofin_set>(&a)) {
    const auto& cb = std::get<cofin_set>(b);
    cofin_set out;
    if (!ca->cofinite && !cb.cofinite) {
      out.pts = ca->pts;
      out.pts.insert(out.pts.end(), cb.pts.begin(), cb.pts.end());
      sort_unique(out.pts);
    } else if (ca->cofinite && cb.cofinite) {
      out.cofinite = true;
      for (long p : ca->pts)
        if (in_sorted(cb.pts, p)) out.pts.push_back(p);
    } else {
      const auto& fin = ca->cofinite ? cb : *ca;
      const auto& cof = ca->cofinite ? *ca : cb;
      out.cofinite = true;
      for (long p : cof.pts)
        if (!in_sorted(fin.pts, p)) out.pts.push_back(p);
    }
    return out;
  }
  if (auto* ga = std::get_if<grid_set>(&a)) {
    const auto& gb = std::get<grid_set>(b);
    if (ga->all || gb.all) return all_expr(grammar_id::johnstone);
    grid_set out;
    for (const auto& [j, col] : ga->cols) {
      ray r = ray_union({col.pts, col.tail}, col_ray(gb, j), 1);
      out.cols[j] = {r.pts, r.tail};
    }
    for (const auto& [j, col] : gb.cols)
      if (!ga->cols.count(j)) out.cols[j] = col;
    ray om = ray_union(omega_ray(*ga), omega_ray(gb), 1);
    out.omega_pts = om.pts;
    out.omega_tail = om.tail;
    return normalize(out);
  }
  const auto& fa = std::get<fan_set>(a);
  const auto& fb = std::get<fan_set>(b);
  fan_set out;
  ray ra = ray_union(a_ray(fa), a_ray(fb), 1);
  out.a_pts = ra.pts;
  out.a_tail = ra.tail;
  out.b = fa.b || fb.b;
  out.w0 = fa.w0 || fb.w0;
  ray rw = ray_union(w_ray(fa), w_ray(fb), 1);
  out.w_pts = rw.pts;
  out.w_tail = rw.tail;
  return out;
}

set_expr intersect(const set_expr& a, const set_expr& b) {
  check_same_grammar(a, b);
  if (auto* ca = std::get_if<cofin_set>(&a)) {
    const auto& cb = std::get<cofin_set>(b);
    cofin_set out;
    if (!ca->cofinite && !cb.cofinite) {
      for (long p : ca->pts)
        if (in_sorted(cb.pts, p)) out.pts.push_back(p);
    } else if (ca->cofinite && cb.cofinite) {
      out.cofinite = true;
      out.pts = ca->pts;
      out.pts.insert(out.pts.end(), cb.pts.begin(), cb.pts.end());
      sort_unique(out.pts);
    } else {
      const auto& fin = ca->cofinite ? cb : *ca;
      const auto& cof = ca->cofinite ? *ca : cb;
      for (long p : fin.pts)
        if (!in_sorted(cof.pts, p)) out.pts.push_back(p);
    }
    return out;
  }
  if (auto* ga = std::get_if<grid_set>(&a)) {
    const auto& gb = std::get<grid_set>(b);
    if (ga->all) return b;
    if (gb.all) return a;
    grid_set out;
    for (const auto& [j, col] : ga->cols) {
      ray r = ray_intersect({col.pts, col.tail}, col_ray(gb, j), 1);
      if (!ray_empty(r)) out.cols[j] = {r.pts, r.tail};
    }
    ray om = ray_intersect(omega_ray(*ga), omega_ray(gb), 1);
    out.omega_pts = om.pts;
    out.omega_tail = om.tail;
    return normalize(out);
  }
  const auto& fa = std::get<fan_set>(a);
  const auto& fb = std::get<fan_set>(b);
  fan_set out;
  ray ra = ray_intersect(a_ray(fa), a_ray(fb), 1);
  out.a_pts = ra.pts;
  out.a_tail = ra.tail;
  out.b = fa.b && fb.b;
  out.w0 = fa.w0 && fb.w0;
  ray rw = ray_intersect(w_ray(fa), w_ray(fb), 1);
  out.w_pts = rw.pts;
  out.w_tail = rw.tail;
  return out;
}

bool subset_of(const set_expr& a, const set_expr& b) {
  check_same_grammar(a, b);
  if (auto* ca = std::get_if<cofin_set>(&a)) {
    const auto& cb = std::get<cofin_set>(b);
    if (!ca->cofinite && !cb.cofinite) return std::includes(cb.pts.begin(), cb.pts.end(), ca->pts.begin(), ca->pts.end());
    if (!ca->cofinite && cb.cofinite) {
      for (long p : ca->pts)
        if (in_sorted(cb.pts, p)) return false;
      return true;
    }
    if (ca->cofinite && !cb.cofinite) return false; // infinite inside finite
    return std::includes(ca->pts.begin(), ca->pts.end(), cb.pts.begin(), cb.pts.end());
  }
  if (auto* ga = std::get_if<grid_set>(&a)) {
    const auto& gb = std::get<grid_set>(b);
    if (gb.all) return true;
    if (ga->all) return false;
    for (const auto& [j, col] : ga->cols)
      if (!ray_subset({col.pts, col.tail}, col_ray(gb, j))) return false;
    return ray_subset(omega_ray(*ga), omega_ray(gb));
  }
  const auto& fa = std::get<fan_set>(a);
  const auto& fb = std::get<fan_set>(b);
  if (fa.b && !fb.b) return false;
  if (fa.w0 && !fb.w0) return false;
  return ray_subset(a_ray(fa), a_ray(fb)) && ray_subset(w_ray(fa), w_ray(fb));
}

set_expr complement(const set_expr& e) {
  if (auto* c = std::get_if<cofin_set>(&e)) return cofin_set{!c->cofinite, c->pts};
  if (std::holds_alternative<grid_set>(e))
    fail(errc::unrepresentable_set, "grid complements reach infinitely many columns");
  const auto& f = std::get<fan_set>(e);
  fan_set out;
  ray ra = ray_complement(a_ray(f), 1);
  out.a_pts = ra.pts;
  out.a_tail = ra.tail;
  out.b = !f.b;
  out.w0 = !f.w0;
  ray rw = ray_complement(w_ray(f), 1);
  out.w_pts = rw.pts;
  out.w_tail = rw.tail;
  return out;
}

bool finite_card(const set_expr& e, long* out) {
  long n = 0;
  if (auto* c = std::get_if<cofin_set>(&e)) {
    if (c->cofinite) return false;
    n = static_cast<long>(c->pts.size());
  } else if (auto* g = std::get_if<grid_set>(&e)) {
    if (g->all || g->omega_tail) return false;
    for (const auto& [j, col] : g->cols) {
      (void)j;
      if (col.tail) return false;
      n += static_cast<long>(col.pts.size());
    }
    n += static_cast<long>(g->omega_pts.size());
  } else {
    const auto& f = std::get<fan_set>(e);
    if (f.a_tail || f.w_tail) return false;
    n = static_cast<long>(f.a_pts.size() + f.w_pts.size()) + (f.b ? 1 : 0) + (f.w0 ? 1 : 0);
  }
  if (out) *out = n;
  return true;
}

bool contains(const set_expr& e, const zoo_point& p) {
  if (auto* c = std::get_if<cofin_set>(&e)) {
    auto* np = std::get_if<nat_point>(&p);
    if (!np) fail(errc::wrong_grammar, "point grammar mismatch");
    return c->cofinite ? !in_sorted(c->pts, np->v) : in_sorted(c->pts, np->v);
  }
  if (auto* g = std::get_if<grid_set>(&e)) {
    auto* gp = std::get_if<grid_point>(&p);
    if (!gp) fail(errc::wrong_grammar, "point grammar mismatch");
    if (g->all) return true;
    if (gp->height == omega_height) return ray_contains(omega_ray(*g), gp->col);
    return ray_contains(col_ray(*g, gp->col), gp->height);
  }
  const auto& f = std::get<fan_set>(e);
  auto* fp = std::get_if<fan_point>(&p);
  if (!fp) fail(errc::wrong_grammar, "point grammar mismatch");
  switch (fp->part) {
    case fan_part::a: return ray_contains(a_ray(f), fp->idx);
    case fan_part::b: return f.b;
    case fan_part::w0: return f.w0;
    case fan_part::w: return ray_contains(w_ray(f), fp->idx);
  }
  return false;
}

std::string point_to_string(const zoo_point& p) {
  if (auto* np = std::get_if<nat_point>(&p)) return std::to_string(np->v);
  if (auto* gp = std::get_if<grid_point>(&p)) {
    if (gp->height == omega_height) return "pt(" + std::to_string(gp->col) + ",w)";
    return "pt(" + std::to_string(gp->col) + "," + std::to_string(gp->height) + ")";
  }
  const auto& fp = std::get<fan_point>(p);
  switch (fp.part) {
    case fan_part::a: return "a(" + std::to_string(fp.idx) + ")";
    case fan_part::b: return "b";
    case fan_part::w0: return "w0";
    case fan_part::w: return "w(" + std::to_string(fp.idx) + ")";
  }
  return "?";
}

std::vector<zoo_point> sample_points(grammar_id g, long bound) {
  std::vector<zoo_point> out;
  switch (g) {
    case grammar_id::cofinite:
      for (long v = 0; v <= bound; ++v) out.push_back(nat_point{v});
      break;
    case grammar_id::johnstone: {
      long side = 1;
      while (side * side < bound) ++side;
      for (long j = 1; j <= side; ++j) {
        for (long h = 1; h <= side; ++h) out.push_back(grid_point{j, h});
        out.push_back(grid_point{j, omega_height});
      }
      break;
    }
    case grammar_id::omega_fan:
      for (long i = 1; i <= bound; ++i) out.push_back(fan_point{fan_part::a, i});
      out.push_back(fan_point{fan_part::b, 0});
      out.push_back(fan_point{fan_part::w0, 0});
      for (long i = 1; i <= bound; ++i) out.push_back(fan_point{fan_part::w, i});
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// symbolic layer

bool dominates(const affine& a, const affine& b) { return a.slope >= b.slope && a.at(1) >= b.at(1); }

namespace {

bool is_shrinking_kind(sym_kind k) {
  switch (k) {
    case sym_kind::cofin_prefix:
    case sym_kind::col_tail:
    case sym_kind::omega_tail:
    case sym_kind::a_tail:
    case sym_kind::w_tail: return true;
    default: return false;
  }
}

bool kind_in_grammar(sym_kind k, grammar_id g) {
  switch (g) {
    case grammar_id::cofinite: return k == sym_kind::fin_pt || k == sym_kind::cofin_prefix;
    case grammar_id::johnstone:
      return k == sym_kind::g_pt || k == sym_kind::g_pt_omega || k == sym_kind::col_tail || k == sym_kind::omega_tail;
    case grammar_id::omega_fan:
      return k == sym_kind::a_pt || k == sym_kind::b_pt || k == sym_kind::w0_pt || k == sym_kind::w_pt ||
             k == sym_kind::a_tail || k == sym_kind::w_tail;
  }
  return false;
}

/// Drop point atoms covered by a tail atom of the template at every n.
sym_expr absorb(sym_expr e) {
  std::vector<sym_atom> kept;
  for (const auto& a : e.atoms) {
    bool covered = false;
    for (const auto& t : e.atoms) {
      if (!is_shrinking_kind(t.kind)) continue;
      bool same_zone = (a.kind == sym_kind::g_pt && t.kind == sym_kind::col_tail && a.col == t.col) ||
                       (a.kind == sym_kind::g_pt_omega && t.kind == sym_kind::omega_tail) ||
                       (a.kind == sym_kind::a_pt && t.kind == sym_kind::a_tail) ||
                       (a.kind == sym_kind::w_pt && t.kind == sym_kind::w_tail);
      if (!same_zone) continue;
      affine idx = a.kind == sym_kind::g_pt_omega ? affine{0, a.col} : a.t;
      if (dominates(idx, t.t)) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(a);
  }
  e.atoms = std::move(kept);
  return e;
}

} // namespace

set_expr substitute(const sym_expr& e, long n) {
  for (const auto& a : e.atoms)
    if (!kind_in_grammar(a.kind, e.g)) fail(errc::wrong_grammar, "atom does not belong to the grammar");
  if (e.all) return all_expr(e.g);
  set_expr out = empty_expr(e.g);
  for (const auto& a : e.atoms) {
    long v = a.t.at(n);
    set_expr piece = empty_expr(e.g);
    switch (a.kind) {
      case sym_kind::fin_pt: piece = cofin_set{false, {v}}; break;
      case sym_kind::cofin_prefix: {
        if (v < 0) fail(errc::bad_input, "prefix end below 0");
        cofin_set c{true, {}};
        for (long i = 0; i <= v; ++i) c.pts.push_back(i);
        piece = std::move(c);
        break;
      }
      case sym_kind::g_pt: {
        grid_set g;
        g.cols[a.col] = {{v}, std::nullopt};
        piece = std::move(g);
        break;
      }
      case sym_kind::g_pt_omega: {
        grid_set g;
        g.omega_pts = {a.col};
        piece = std::move(g);
        break;
      }
      case sym_kind::col_tail: {
        grid_set g;
        g.cols[a.col] = {{}, v};
        piece = std::move(g);
        break;
      }
      case sym_kind::omega_tail: {
        grid_set g;
        g.omega_tail = v;
        piece = std::move(g);
        break;
      }
      case sym_kind::a_pt: {
        fan_set f;
        f.a_pts = {v};
        piece = std::move(f);
        break;
      }
      case sym_kind::b_pt: {
        fan_set f;
        f.b = true;
        piece = std::move(f);
        break;
      }
      case sym_kind::w0_pt: {
        fan_set f;
        f.w0 = true;
        piece = std::move(f);
        break;
      }
      case sym_kind::w_pt: {
        fan_set f;
        f.w_pts = {v};
        piece = std::move(f);
        break;
      }
      case sym_kind::a_tail: {
        fan_set f;
        f.a_tail = v;
        piece = std::move(f);
        break;
      }
      case sym_kind::w_tail: {
        fan_set f;
        f.w_tail = v;
        piece = std::move(f);
        break;
      }
    }
    out = unite(out, normalize(piece));
  }
  return out;
}

bool is_constant(const sym_expr& e) {
  for (const auto& a : e.atoms)
    if (!a.t.is_const()) return false;
  return true;
}

void check_decreasing(const sym_expr& e) {
  if (e.all) return;
  sym_expr n = absorb(e);
  for (const auto& a : n.atoms) {
    if (a.t.slope < 0) fail(errc::non_monotone_family, "threshold decreases with the parameter");
    if (a.t.slope > 0 && !is_shrinking_kind(a.kind))
      fail(errc::non_monotone_family, "moving point atom breaks member(n+1) within member(n)");
  }
}

set_expr family_limit(const sym_expr& e) {
  check_decreasing(e);
  if (e.all) return all_expr(e.g);
  sym_expr n = absorb(e);
  sym_expr constant{n.g, false, {}};
  for (const auto& a : n.atoms)
    if (a.t.is_const()) constant.atoms.push_back(a);
  return substitute(constant, 1);
}

set_expr swept_union(const sym_expr& e) {
  if (e.all) return all_expr(e.g);
  set_expr out = empty_expr(e.g);
  for (const auto& a : e.atoms) {
    if (a.t.slope < 0) fail(errc::unrepresentable_set, "backward-moving atom in a swept union");
    sym_atom piece = a;
    if (a.t.slope == 0 || a.kind == sym_kind::g_pt_omega) {
      // constant atom: keep
    } else if (is_shrinking_kind(a.kind)) {
      piece.t = affine{0, a.t.at(1)}; // union of shrinking tails is the first one
    } else if (a.t.slope == 1) {
      // a point with unit slope sweeps a full tail from its first value
      switch (a.kind) {
        case sym_kind::fin_pt: {
          // naturals >= offset+1: complement of the prefix below
          long start = a.t.at(1);
          cofin_set c{true, {}};
          for (long i = 0; i < start; ++i) c.pts.push_back(i);
          out = unite(out, set_expr{std::move(c)});
          continue;
        }
        case sym_kind::g_pt: piece.kind = sym_kind::col_tail; break;
        case sym_kind::a_pt: piece.kind = sym_kind::a_tail; break;
        case sym_kind::w_pt: piece.kind = sym_kind::w_tail; break;
        default: fail(errc::unrepresentable_set, "atom kind cannot sweep a tail");
      }
      piece.t = affine{0, a.t.at(1)};
    } else {
      fail(errc::unrepresentable_set, "slope above one sweeps a gapped progression");
    }
    sym_expr single{e.g, false, {piece}};
    out = unite(out, substitute(single, 1));
  }
  return out;
}

namespace {

/// Inside(u) is monotone in n for every atom, so an atom witnesses
/// "never inside" exactly when no instantiation lands in u.
bool atom_never_inside(const sym_atom& a, const set_expr& u, grammar_id g) {
  if (is_all(u)) return false;
  auto point_never = [&](auto make_point) {
    if (a.t.is_const()) {
      return !contains(u, make_point(a.t.offset));
    }
    // moving point: inside requires a covering tail (eventually) or one of
    // finitely many listed points; check the finitely many reachable hits
    long cover = -1; // least tail threshold covering the zone, if any
    std::vector<long> listed;
    if (g == grammar_id::cofinite) {
      const auto& c = std::get<cofin_set>(u);
      // co-finite u: the exclusion list is finite and t(n) is unbounded,
      // so the moving point lands inside for some n
      if (c.cofinite) return false;
      listed = c.pts;
    } else if (g == grammar_id::johnstone) {
      const auto& gs = std::get<grid_set>(u);
      if (a.kind == sym_kind::g_pt) {
        auto it = gs.cols.find(a.col);
        if (it != gs.cols.end()) {
          if (it->second.tail) cover = *it->second.tail;
          listed = it->second.pts;
        }
      }
    } else {
      const auto& f = std::get<fan_set>(u);
      if (a.kind == sym_kind::a_pt) {
        if (f.a_tail) cover = *f.a_tail;
        listed = f.a_pts;
      } else if (a.kind == sym_kind::w_pt) {
        if (f.w_tail) cover = *f.w_tail;
        listed = f.w_pts;
      }
    }
    if (cover >= 0) return false; // t(n) >= cover for large n
    for (long v : listed)
      if (v >= a.t.at(1) && (v - a.t.offset) % a.t.slope == 0) return false;
    return true;
  };

  switch (a.kind) {
    case sym_kind::fin_pt: return point_never([](long v) { return zoo_point{nat_point{v}}; });
    case sym_kind::g_pt: {
      long col = a.col;
      return point_never([col](long v) { return zoo_point{grid_point{col, v}}; });
    }
    case sym_kind::g_pt_omega: return !contains(u, grid_point{a.col, omega_height});
    case sym_kind::a_pt: return point_never([](long v) { return zoo_point{fan_point{fan_part::a, v}}; });
    case sym_kind::w_pt: return point_never([](long v) { return zoo_point{fan_point{fan_part::w, v}}; });
    case sym_kind::b_pt: return !contains(u, fan_point{fan_part::b, 0});
    case sym_kind::w0_pt: return !contains(u, fan_point{fan_part::w0, 0});
    case sym_kind::cofin_prefix: {
      const auto& c = std::get<cofin_set>(u);
      if (!c.cofinite) return true; // an infinite set never fits in a finite one
      if (c.pts.empty()) return false;
      long need = c.pts.back(); // inside iff every excluded point lies in the prefix
      if (a.t.slope > 0) return false;
      return a.t.offset < need;
    }
    case sym_kind::col_tail: {
      const auto& gs = std::get<grid_set>(u);
      auto it = gs.cols.find(a.col);
      if (it == gs.cols.end() || !it->second.tail) return true;
      if (a.t.slope > 0) return false;
      return a.t.offset < *it->second.tail;
    }
    case sym_kind::omega_tail: {
      const auto& gs = std::get<grid_set>(u);
      if (!gs.omega_tail) return true;
      if (a.t.slope > 0) return false;
      return a.t.offset < *gs.omega_tail;
    }
    case sym_kind::a_tail: {
      const auto& f = std::get<fan_set>(u);
      if (!f.a_tail) return true;
      if (a.t.slope > 0) return false;
      return a.t.offset < *f.a_tail;
    }
    case sym_kind::w_tail: {
      const auto& f = std::get<fan_set>(u);
      if (!f.w_tail) return true;
      if (a.t.slope > 0) return false;
      return a.t.offset < *f.w_tail;
    }
  }
  return false;
}

} // namespace

bool never_subset_of(const sym_expr& e, const set_expr& u) {
  if (grammar_of(u) != e.g) fail(errc::wrong_grammar, "mixed grammars");
  if (is_all(u)) return false;
  if (e.all) return true; // the whole space never fits in a proper subset
  for (const auto& a : e.atoms)
    if (atom_never_inside(a, u, e.g)) return true;
  return false;
}

bool always_nonempty(const sym_expr& e) { return e.all || !e.atoms.empty(); }

bool always_finite(const sym_expr& e) {
  if (e.all) return false;
  for (const auto& a : e.atoms)
    if (is_shrinking_kind(a.kind)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// text grammar

std::string affine_to_string(const affine& a) {
  if (a.slope == 0) return std::to_string(a.offset);
  std::string s = a.slope == 1 ? "n" : std::to_string(a.slope) + "n";
  if (a.offset > 0) s += "+" + std::to_string(a.offset);
  return s;
}

namespace {

std::string join_atoms(const std::vector<std::string>& atoms) {
  if (atoms.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += " | ";
    out += atoms[i];
  }
  return out;
}

std::string num_list(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

} // namespace

std::string expr_to_string(const set_expr& e) {
  if (auto* c = std::get_if<cofin_set>(&e)) {
    if (c->cofinite) return c->pts.empty() ? "all" : "cofin(" + num_list(c->pts) + ")";
    return c->pts.empty() ? "empty" : "fin(" + num_list(c->pts) + ")";
  }
  if (auto* g = std::get_if<grid_set>(&e)) {
    if (g->all) return "all";
    std::vector<std::string> atoms;
    for (const auto& [j, col] : g->cols) {
      for (long h : col.pts) atoms.push_back("pt(" + std::to_string(j) + "," + std::to_string(h) + ")");
      if (col.tail) atoms.push_back("coltail(" + std::to_string(j) + "," + std::to_string(*col.tail) + ")");
    }
    for (long m : g->omega_pts) atoms.push_back("pt(" + std::to_string(m) + ",w)");
    if (g->omega_tail) atoms.push_back("omegatail(" + std::to_string(*g->omega_tail) + ")");
    return join_atoms(atoms);
  }
  const auto& f = std::get<fan_set>(e);
  std::vector<std::string> atoms;
  for (long i : f.a_pts) atoms.push_back("a(" + std::to_string(i) + ")");
  if (f.a_tail) atoms.push_back("atail(" + std::to_string(*f.a_tail) + ")");
  if (f.b) atoms.push_back("b");
  if (f.w0) atoms.push_back("w0");
  for (long i : f.w_pts) atoms.push_back("w(" + std::to_string(i) + ")");
  if (f.w_tail) atoms.push_back("wtail(" + std::to_string(*f.w_tail) + ")");
  return join_atoms(atoms);
}

namespace {

struct token_args {
  std::string head;
  std::vector<std::string> args;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

token_args split_atom(const std::string& raw) {
  std::string s = trim(raw);
  auto paren = s.find('(');
  if (paren == std::string::npos) return {s, {}};
  if (s.back() != ')') fail(errc::bad_input, "malformed atom '" + s + "'");
  token_args t;
  t.head = s.substr(0, paren);
  std::string inner = s.substr(paren + 1, s.size() - paren - 2);
  std::string cur;
  for (char ch : inner) {
    if (ch == ',') {
      t.args.push_back(trim(cur));
      cur.clear();
    } else
      cur += ch;
  }
  if (!trim(cur).empty() || t.args.empty()) t.args.push_back(trim(cur));
  return t;
}

std::vector<std::string> split_union(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == '|') {
      parts.push_back(trim(cur));
      cur.clear();
    } else
      cur += ch;
  }
  parts.push_back(trim(cur));
  return parts;
}

long parse_long(const std::string& s) {
  if (s.empty()) fail(errc::bad_input, "expected a number");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) fail(errc::bad_input, "expected a number, got '" + s + "'");
  return std::stol(s);
}

affine parse_affine(const std::string& raw) {
  std::string s = trim(raw);
  auto npos = s.find('n');
  if (npos == std::string::npos) return affine{0, parse_long(s)};
  affine a;
  std::string coef = s.substr(0, npos);
  a.slope = coef.empty() ? 1 : parse_long(coef);
  std::string rest = trim(s.substr(npos + 1));
  if (rest.empty()) return a;
  if (rest[0] != '+') fail(errc::bad_input, "malformed affine term '" + s + "'");
  a.offset = parse_long(trim(rest.substr(1)));
  return a;
}

sym_atom parse_atom_sym(grammar_id g, const std::string& raw) {
  auto t = split_atom(raw);
  auto need_args = [&](std::size_t n) {
    if (t.args.size() != n) fail(errc::bad_input, "atom '" + t.head + "' expects " + std::to_string(n) + " arguments");
  };
  if (g == grammar_id::cofinite) {
    if (t.head == "fin") {
      need_args(1);
      return sym_atom{sym_kind::fin_pt, 0, parse_affine(t.args[0])};
    }
    if (t.head == "cofin-range") {
      need_args(2);
      if (parse_long(t.args[0]) != 0) fail(errc::bad_input, "only prefix ranges from 0 are supported");
      return sym_atom{sym_kind::cofin_prefix, 0, parse_affine(t.args[1])};
    }
  } else if (g == grammar_id::johnstone) {
    if (t.head == "pt") {
      need_args(2);
      long col = parse_long(t.args[0]);
      if (t.args[1] == "w") return sym_atom{sym_kind::g_pt_omega, col, affine{}};
      return sym_atom{sym_kind::g_pt, col, parse_affine(t.args[1])};
    }
    if (t.head == "coltail") {
      need_args(2);
      return sym_atom{sym_kind::col_tail, parse_long(t.args[0]), parse_affine(t.args[1])};
    }
    if (t.head == "omegatail") {
      need_args(1);
      return sym_atom{sym_kind::omega_tail, 0, parse_affine(t.args[0])};
    }
  } else {
    if (t.head == "a") {
      need_args(1);
      return sym_atom{sym_kind::a_pt, 0, parse_affine(t.args[0])};
    }
    if (t.head == "b" && t.args.empty()) return sym_atom{sym_kind::b_pt, 0, affine{}};
    if (t.head == "w0" && t.args.empty()) return sym_atom{sym_kind::w0_pt, 0, affine{}};
    if (t.head == "w") {
      need_args(1);
      return sym_atom{sym_kind::w_pt, 0, parse_affine(t.args[0])};
    }
    if (t.head == "atail") {
      need_args(1);
      return sym_atom{sym_kind::a_tail, 0, parse_affine(t.args[0])};
    }
    if (t.head == "wtail") {
      need_args(1);
      return sym_atom{sym_kind::w_tail, 0, parse_affine(t.args[0])};
    }
  }
  fail(errc::wrong_grammar, "atom '" + t.head + "' is not part of the grammar");
}

} // namespace

sym_expr parse_sym_expr(grammar_id g, const std::string& text) {
  sym_expr e{g, false, {}};
  std::string s = trim(text);
  if (s == "empty") return e;
  if (s == "all") {
    if (g == grammar_id::omega_fan) {
      e.atoms = {sym_atom{sym_kind::a_tail, 0, affine{0, 1}}, sym_atom{sym_kind::b_pt, 0, affine{}},
                 sym_atom{sym_kind::w0_pt, 0, affine{}}, sym_atom{sym_kind::w_tail, 0, affine{0, 1}}};
      return e;
    }
    e.all = true;
    return e;
  }
  for (const auto& part : split_union(s)) {
    if (part == "empty") continue;
    if (g == grammar_id::cofinite && part.rfind("cofin(", 0) == 0) {
      // constant co-finite list: excluded points become prefix-free exclusions,
      // representable only concretely; express through fin atoms is impossible,
      // so keep it symbolically constant via exclusion of each listed point.
      fail(errc::bad_input, "use concrete expressions for constant co-finite sets");
    }
    auto t = split_atom(part);
    if (g == grammar_id::cofinite && t.head == "fin") {
      for (const auto& arg : t.args) e.atoms.push_back(sym_atom{sym_kind::fin_pt, 0, parse_affine(arg)});
      continue;
    }
    e.atoms.push_back(parse_atom_sym(g, part));
  }
  return e;
}

std::string sym_atom_to_string(const sym_atom& a) {
  switch (a.kind) {
    case sym_kind::fin_pt: return "fin(" + affine_to_string(a.t) + ")";
    case sym_kind::cofin_prefix: return "cofin-range(0," + affine_to_string(a.t) + ")";
    case sym_kind::g_pt: return "pt(" + std::to_string(a.col) + "," + affine_to_string(a.t) + ")";
    case sym_kind::g_pt_omega: return "pt(" + std::to_string(a.col) + ",w)";
    case sym_kind::col_tail: return "coltail(" + std::to_string(a.col) + "," + affine_to_string(a.t) + ")";
    case sym_kind::omega_tail: return "omegatail(" + affine_to_string(a.t) + ")";
    case sym_kind::a_pt: return "a(" + affine_to_string(a.t) + ")";
    case sym_kind::b_pt: return "b";
    case sym_kind::w0_pt: return "w0";
    case sym_kind::w_pt: return "w(" + affine_to_string(a.t) + ")";
    case sym_kind::a_tail: return "atail(" + affine_to_string(a.t) + ")";
    case sym_kind::w_tail: return "wtail(" + affine_to_string(a.t) + ")";
  }
  return "?";
}

std::string sym_to_string(const sym_expr& e) {
  if (e.all) return "all";
  std::vector<std::string> atoms;
  for (const auto& a : e.atoms) atoms.push_back(sym_atom_to_string(a));
  return join_atoms(atoms);
}

sym_atom parse_sym_point(grammar_id g, const std::string& text) {
  auto e = parse_sym_expr(g, text);
  if (e.all || e.atoms.size() != 1) fail(errc::bad_input, "expected a single point atom");
  const auto& a = e.atoms[0];
  switch (a.kind) {
    case sym_kind::fin_pt:
    case sym_kind::g_pt:
    case sym_kind::g_pt_omega:
    case sym_kind::a_pt:
    case sym_kind::b_pt:
    case sym_kind::w0_pt:
    case sym_kind::w_pt: return a;
    default: fail(errc::bad_input, "expected a point atom, got a tail");
  }
}

set_expr parse_expr(grammar_id g, const std::string& text) {
  std::string s = trim(text);
  if (s == "all") return all_expr(g);
  if (s == "empty") return empty_expr(g);
  if (g == grammar_id::cofinite) {
    auto t = split_atom(s);
    if (t.head == "fin" || t.head == "cofin") {
      cofin_set c;
      c.cofinite = t.head == "cofin";
      for (const auto& arg : t.args) c.pts.push_back(parse_long(arg));
      return normalize(set_expr{std::move(c)});
    }
    fail(errc::wrong_grammar, "expected fin(...), cofin(...), empty or all");
  }
  // grid / fan: unions of concrete atoms; reuse the symbolic parser and
  // require constant thresholds
  auto sym = parse_sym_expr(g, s);
  if (!is_constant(sym)) fail(errc::bad_input, "expected a concrete expression without the parameter");
  return substitute(sym, 1);
}

zoo_point parse_point(grammar_id g, const std::string& text) {
  std::string s = trim(text);
  switch (g) {
    case grammar_id::cofinite: return nat_point{parse_long(s)};
    case grammar_id::johnstone: {
      auto t = split_atom(s);
      if (t.head != "pt" || t.args.size() != 2) fail(errc::bad_input, "expected pt(col,height)");
      long col = parse_long(t.args[0]);
      if (t.args[1] == "w") return grid_point{col, omega_height};
      return grid_point{col, parse_long(t.args[1])};
    }
    case grammar_id::omega_fan: {
      auto t = split_atom(s);
      if (t.head == "a") return fan_point{fan_part::a, parse_long(t.args.at(0))};
      if (t.head == "b") return fan_point{fan_part::b, 0};
      if (t.head == "w0") return fan_point{fan_part::w0, 0};
      if (t.head == "w") return fan_point{fan_part::w, parse_long(t.args.at(0))};
      fail(errc::bad_input, "expected a(i), b, w0 or w(i)");
    }
  }
  fail(errc::bad_input, "unknown grammar");
}

} // namespace ordtop::zoo
