#include "ordtop/error.hpp"

#include <cstdlib>

namespace ordtop {

const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_id: return "DuplicateId";
    case errc::unknown_element: return "UnknownElement";
    case errc::cycle_detected: return "CycleDetected";
    case errc::empty_set: return "EmptySet";
    case errc::size_limit: return "SizeLimit";
    case errc::not_closed: return "NotClosed";
    case errc::not_filtered: return "NotFiltered";
    case errc::not_compact_saturated: return "NotCompactSaturated";
    case errc::not_irreducible_family: return "NotIrreducibleFamily";
    case errc::not_irreducible_closed: return "NotIrreducibleClosed";
    case errc::not_rudin_set: return "NotRudinSet";
    case errc::not_continuous: return "NotContinuous";
    case errc::not_upper_set: return "NotUpperSet";
    case errc::misses_member: return "MissesMember";
    case errc::unrepresentable_set: return "UnrepresentableSet";
    case errc::wrong_grammar: return "WrongGrammar";
    case errc::non_monotone_family: return "NonMonotoneFamily";
    case errc::not_coarser: return "NotCoarser";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

int subset_enum_limit() {
  if (const char* env = std::getenv("ORDTOP_SIZE_LIMIT")) {
    int v = std::atoi(env);
    if (v >= 1 && v <= 24) return v;
  }
  return 12;
}

void check_subset_enum(std::size_t carrier_size, const char* what) {
  if (carrier_size > static_cast<std::size_t>(subset_enum_limit()))
    fail(errc::size_limit, std::string(what) + " enumerates subsets; carrier size " +
                               std::to_string(carrier_size) + " exceeds limit " +
                               std::to_string(subset_enum_limit()));
}

} // namespace ordtop
