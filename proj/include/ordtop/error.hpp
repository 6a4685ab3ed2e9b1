#pragma once

#include <stdexcept>
#include <string>

namespace ordtop {

enum class errc {
  duplicate_id,
  unknown_element,
  cycle_detected,
  empty_set,
  size_limit,
  not_closed,
  not_filtered,
  not_compact_saturated,
  not_irreducible_family,
  not_irreducible_closed,
  not_rudin_set,
  not_continuous,
  not_upper_set,
  misses_member,
  unrepresentable_set,
  wrong_grammar,
  non_monotone_family,
  not_coarser,
  bad_input,
};

const char* errc_name(errc c);

/// All library failures carry a machine-readable code plus a human message.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

/// Carrier bound for operations that enumerate all subsets (2^n blowup).
/// Overridable through the ORDTOP_SIZE_LIMIT environment variable.
int subset_enum_limit();

void check_subset_enum(std::size_t carrier_size, const char* what);

} // namespace ordtop
