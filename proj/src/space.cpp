#include "ordtop/space.hpp"

#include <algorithm>

namespace ordtop {

namespace {

finite_poset specialization_of(const std::vector<std::string>& names, const std::vector<subset>& opens) {
  const int n = static_cast<int>(names.size());
  std::vector<subset> up(names.size());
  for (int x = 0; x < n; ++x) {
    subset nbhd = full_mask(n);
    for (subset u : opens)
      if (has_bit(u, x)) nbhd &= u;
    up[static_cast<std::size_t>(x)] = nbhd; // minimal neighborhood = up-set of x
  }
  return finite_poset::from_up_masks(names, std::move(up));
}

} // namespace

finite_space::finite_space(std::vector<std::string> names, std::vector<subset> opens, finite_poset order)
    : names_(std::move(names)), opens_(std::move(opens)), order_(std::move(order)) {}

finite_space finite_space::from_opens(std::vector<std::string> carrier, std::vector<subset> opens) {
  if (carrier.empty()) fail(errc::bad_input, "space needs a nonempty carrier");
  if (carrier.size() > 64) fail(errc::size_limit, "carrier exceeds 64 elements");
  if (!std::is_sorted(carrier.begin(), carrier.end())) fail(errc::bad_input, "carrier not in canonical order");
  for (std::size_t i = 1; i < carrier.size(); ++i)
    if (carrier[i] == carrier[i - 1]) fail(errc::duplicate_id, "duplicate point '" + carrier[i] + "'");

  const subset all = full_mask(static_cast<int>(carrier.size()));
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (subset u : opens)
    if (!is_subset(u, all)) fail(errc::unknown_element, "open set not within carrier");

  auto member = [&](subset s) { return std::binary_search(opens.begin(), opens.end(), s); };
  if (!member(0) || !member(all)) fail(errc::bad_input, "opens must contain the empty set and the carrier");
  for (subset u : opens)
    for (subset v : opens) {
      if (!member(u | v)) fail(errc::bad_input, "opens not closed under union");
      if (!member(u & v)) fail(errc::bad_input, "opens not closed under intersection");
    }

  finite_poset order = specialization_of(carrier, opens); // antisymmetry there = T0

  // Alexandroff collapse: every upper set of the specialization order is open.
  // Union closure is already verified, so checking the minimal neighborhoods
  // suffices; conversely every open is an upper set of the order.
  for (int x = 0; x < static_cast<int>(carrier.size()); ++x)
    if (!member(order.up_of(x))) fail(errc::bad_input, "minimal neighborhood missing from opens");
  for (subset u : opens)
    if (order.up_set(u) != u) fail(errc::bad_input, "open set is not an upper set of the specialization order");

  return finite_space(std::move(carrier), std::move(opens), std::move(order));
}

finite_space finite_space::alexandroff(const finite_poset& p) {
  check_subset_enum(static_cast<std::size_t>(p.size()), "alexandroff");
  std::vector<subset> opens;
  for_each_submask(p.carrier(), [&](subset s) {
    if (p.up_set(s) == s) opens.push_back(s);
  });
  return from_opens(p.names(), std::move(opens));
}

int finite_space::index_of(const std::string& id) const { return order_.index_of(id); }

std::vector<subset> finite_space::closed_sets() const {
  std::vector<subset> closed;
  closed.reserve(opens_.size());
  for (subset u : opens_) closed.push_back(carrier() & ~u);
  std::sort(closed.begin(), closed.end());
  return closed;
}

bool finite_space::is_open(subset s) const {
  if (!is_subset(s, carrier())) fail(errc::unknown_element, "set not within carrier");
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

subset finite_space::closure(subset s) const {
  if (!is_subset(s, carrier())) fail(errc::unknown_element, "set not within carrier");
  subset out = carrier();
  for (subset u : opens_) {
    subset c = carrier() & ~u;
    if (is_subset(s, c)) out &= c;
  }
  return out;
}

subset finite_space::interior(subset s) const {
  if (!is_subset(s, carrier())) fail(errc::unknown_element, "set not within carrier");
  subset out = 0;
  for (subset u : opens_)
    if (is_subset(u, s)) out |= u;
  return out;
}

subset finite_space::saturate(subset s) const {
  if (!is_subset(s, carrier())) fail(errc::unknown_element, "set not within carrier");
  subset out = carrier();
  for (subset u : opens_)
    if (is_subset(s, u)) out &= u;
  return out;
}

bool finite_space::is_irreducible(subset a) const {
  if (!is_subset(a, carrier())) fail(errc::unknown_element, "set not within carrier");
  if (a == 0) fail(errc::empty_set, "irreducibility of the empty set");
  auto closed = closed_sets();
  for (subset f1 : closed) {
    if (is_subset(a, f1)) continue;
    for (subset f2 : closed) {
      if (is_subset(a, f2)) continue;
      if (is_subset(a, f1 | f2)) return false;
    }
  }
  return true;
}

bool finite_space::is_irreducible_fast(subset a) const {
  if (!is_subset(a, carrier())) fail(errc::unknown_element, "set not within carrier");
  if (a == 0) fail(errc::empty_set, "irreducibility of the empty set");
  for (int x : bits_of(a))
    for (int y : bits_of(a)) {
      if (y < x) continue;
      if ((order_.up_of(x) & order_.up_of(y) & a) == 0) return false;
    }
  return true;
}

std::vector<subset> finite_space::irreducible_closed() const {
  std::vector<subset> out;
  for (subset c : closed_sets())
    if (c != 0 && is_irreducible_fast(c)) out.push_back(c);
  return out;
}

std::vector<subset> finite_space::compact_saturated() const {
  std::vector<subset> out;
  for (subset u : opens_)
    if (u != 0 && saturate(u) == u && is_compact(u)) out.push_back(u);
  return out;
}

bool finite_space::is_compact(subset s) const {
  if (!is_subset(s, carrier())) fail(errc::unknown_element, "set not within carrier");
  // Covers from the full open family reduce to covers from the minimal
  // neighborhood base, so quantifying over base subfamilies is exhaustive.
  check_subset_enum(names_.size(), "is_compact");
  for_each_submask(carrier(), [&](subset gens) {
    subset covered = 0;
    for (int x : bits_of(gens)) covered |= order_.up_of(x);
    if (!is_subset(s, covered)) return;
    // extract an irredundant finite subcover and confirm it still covers
    subset sub = 0;
    for (int x : bits_of(gens)) {
      if (is_subset(s, sub)) break;
      if ((order_.up_of(x) & s & ~sub) != 0) sub |= order_.up_of(x);
    }
    if (!is_subset(s, sub)) fail(errc::bad_input, "finite subcover extraction failed");
  });
  return true;
}

bool finite_space::is_sober() const {
  auto irr = irreducible_closed();
  for (subset a : irr) {
    int generic = -1;
    for (int x = 0; x < size(); ++x)
      if (closure(subset{1} << x) == a) {
        if (generic >= 0) return false; // not unique
        generic = x;
      }
    if (generic < 0) return false;
  }
  return true;
}

finite_space finite_space::subspace(subset sub) const {
  if (!is_subset(sub, carrier()) || sub == 0) fail(errc::bad_input, "subspace carrier invalid");
  auto idx = bits_of(sub);
  std::vector<std::string> nm;
  nm.reserve(idx.size());
  for (int i : idx) nm.push_back(names_[static_cast<std::size_t>(i)]);
  std::vector<subset> op;
  for (subset u : opens_) {
    subset induced = 0;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (has_bit(u, idx[k])) induced |= subset{1} << k;
    op.push_back(induced);
  }
  return from_opens(std::move(nm), std::move(op));
}

std::vector<subset> generate_set_family(std::vector<subset> gens, std::size_t cap) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<subset> fam = gens;
  std::vector<subset> fresh = gens;
  while (!fresh.empty()) {
    std::vector<subset> next;
    auto member = [&](subset s) { return std::binary_search(fam.begin(), fam.end(), s); };
    for (subset a : fresh)
      for (subset b : fam)
        for (subset c : {a | b, a & b})
          if (!member(c) && !std::binary_search(next.begin(), next.end(), c)) {
            next.insert(std::lower_bound(next.begin(), next.end(), c), c);
            if (fam.size() + next.size() > cap) fail(errc::size_limit, "generated family exceeds cap");
          }
    fam.insert(fam.end(), next.begin(), next.end());
    std::sort(fam.begin(), fam.end());
    fresh = std::move(next);
  }
  return fam;
}

bool is_continuous(const std::vector<int>& assignment, const finite_space& x, const finite_space& y) {
  if (assignment.size() != static_cast<std::size_t>(x.size())) fail(errc::bad_input, "assignment size mismatch");
  for (int v : assignment)
    if (v < 0 || v >= y.size()) fail(errc::unknown_element, "assignment target out of range");
  for (subset v : y.opens())
    if (!x.is_open(map_preimage(assignment, x.size(), v))) return false;
  return true;
}

subset map_image(const std::vector<int>& assignment, subset s) {
  subset out = 0;
  for (int i : bits_of(s)) out |= subset{1} << assignment[static_cast<std::size_t>(i)];
  return out;
}

subset map_preimage(const std::vector<int>& assignment, int src_size, subset t) {
  subset out = 0;
  for (int i = 0; i < src_size; ++i)
    if (has_bit(t, assignment[static_cast<std::size_t>(i)])) out |= subset{1} << i;
  return out;
}

bool is_topological_embedding(const std::vector<int>& assignment, const finite_space& x, const finite_space& y) {
  for (std::size_t a = 0; a < assignment.size(); ++a)
    for (std::size_t b = a + 1; b < assignment.size(); ++b)
      if (assignment[a] == assignment[b]) return false;
  if (!is_continuous(assignment, x, y)) return false;
  subset image = map_image(assignment, x.carrier());
  // image of each open must be open in the subspace topology on the image
  for (subset u : x.opens()) {
    subset img = map_image(assignment, u);
    bool found = false;
    for (subset v : y.opens())
      if ((v & image) == img) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool are_homeomorphic(const finite_space& x, const finite_space& y) {
  if (x.size() != y.size() || x.opens().size() != y.opens().size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool ok = true;
    for (subset u : x.opens())
      if (!y.is_open(map_image(perm, u))) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

} // namespace ordtop
