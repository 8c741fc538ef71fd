#pragma once

#include <stdexcept>
#include <string>

namespace packnorm {

// Machine-readable failure codes, mirrored verbatim in CLI JSON output.
enum class Errc {
  invalid_symbol,
  incompatible_functions,
  missing_coordinate,
  enumeration_too_large,
  invalid_creature,
  no_sdr,
  no_witness,
  empty_restriction,
  domain_overlap,
  domain_mismatch,
  illegal_decision,
  illegal_composition,
  illegal_decomposition,
  invalid_certificate,
  truncation_too_short,
  insufficient_norm,
  not_aligned,
  insufficient_capacity,
  no_selection,
  key_mismatch,
  generation_failed,
  bad_input,
  unknown_suite,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace packnorm
