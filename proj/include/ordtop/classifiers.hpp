#pragma once

#include <string>
#include <vector>

#include "ordtop/set_classes.hpp"

namespace ordtop {

struct named_set {
  std::string label;
  std::vector<std::string> elements;
};

struct flag_witness {
  std::string flag;
  std::string detail;
  std::vector<named_set> parts;
};

/// Per-space classification. Internal implications (t1 => strong d;
/// sober => well-filtered => d-space; strong d => d-space) are revalidated on
/// construction.
struct property_report {
  bool t1 = false;
  bool d_space = false;
  bool strong_d = false;
  bool well_filtered = false;
  bool sober = false;
  bool coherent = false;
  bool locally_compact = false;
  bool locally_hypercompact = false;
  std::vector<flag_witness> witnesses;
};

property_report classify(const finite_space& x);

struct check_result {
  std::string id;
  bool pass = true;
  std::string detail; // replayable description of the failing instance
};

/// The four set-class/upper-set conditions characterizing well-filteredness,
/// plus their d-space variants; each must match the classified flag.
std::vector<check_result> wf_characterization_check(const finite_space& x);

/// The filter/maximal-point/lower-closure conditions characterizing
/// sobriety; each must match the classified flag.
std::vector<check_result> sober_characterization_check(const finite_space& x);

/// Upper set U such that whenever the up-set intersection of a directed set
/// and a point lands inside U, some stage already does.
bool strongly_scott_open(const finite_poset& p, subset u); // throws not_upper_set

struct strong_scott_result {
  std::vector<subset> base;     // all strongly Scott open sets
  std::vector<subset> topology; // generated by the base
};

strong_scott_result strong_scott_topology(const finite_poset& p);

struct topology_record {
  std::vector<subset> upper;       // generated by complements of finitely generated down-sets
  std::vector<subset> scott;       // inaccessible-by-directed-suprema upper sets
  std::vector<subset> lower;       // generated by complements of principal up-sets
  std::vector<subset> lawson;      // join of scott and lower
  std::vector<subset> alexandroff; // all upper sets
};

topology_record topologies(const finite_poset& p);

/// Catalog of theorem-instance checks evaluated on one poset (and its upper
/// Alexandroff space). Every entry passes on valid finite instances; a FAIL
/// carries a replayable description.
std::vector<check_result> theorem_suite(const finite_poset& p);

/// Names of all catalog entries, in run order.
std::vector<std::string> theorem_suite_ids();

} // namespace ordtop
