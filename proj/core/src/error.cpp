#include "packnorm/error.hpp"

namespace packnorm {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_symbol: return "invalid-symbol";
    case Errc::incompatible_functions: return "incompatible-functions";
    case Errc::missing_coordinate: return "missing-coordinate";
    case Errc::enumeration_too_large: return "enumeration-too-large";
    case Errc::invalid_creature: return "invalid-creature";
    case Errc::no_sdr: return "no-sdr";
    case Errc::no_witness: return "no-witness";
    case Errc::empty_restriction: return "empty-restriction";
    case Errc::domain_overlap: return "domain-overlap";
    case Errc::domain_mismatch: return "domain-mismatch";
    case Errc::illegal_decision: return "illegal-decision";
    case Errc::illegal_composition: return "illegal-composition";
    case Errc::illegal_decomposition: return "illegal-decomposition";
    case Errc::invalid_certificate: return "invalid-certificate";
    case Errc::truncation_too_short: return "truncation-too-short";
    case Errc::insufficient_norm: return "insufficient-norm";
    case Errc::not_aligned: return "not-aligned";
    case Errc::insufficient_capacity: return "insufficient-capacity";
    case Errc::no_selection: return "no-selection";
    case Errc::key_mismatch: return "key-mismatch";
    case Errc::generation_failed: return "generation-failed";
    case Errc::bad_input: return "bad-input";
    case Errc::unknown_suite: return "unknown-suite";
  }
  return "unknown-error";
}

}  // namespace packnorm
