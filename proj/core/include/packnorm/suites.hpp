#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "packnorm/partial_function.hpp"
#include "packnorm/qhn_seq.hpp"

namespace packnorm::suites {

struct SuiteConfig {
  std::uint64_t seed = 1;
  Alphabet alpha{std::vector<std::uint32_t>{2}};
  std::size_t instances = 200;
  qhn::Strictness strictness = qhn::Strictness::relaxed;
  Budget budget;
  // Replay hook: run only this instance index when set.
  std::optional<std::size_t> only_index;
};

struct PropertyResult {
  std::string property;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::vector<std::string> counterexamples;  // JSON payloads, capped
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  bool ok = true;
  std::vector<PropertyResult> properties;
  std::uint64_t elapsed_ms = 0;

  std::string to_json() const;  // timing excluded from determinism guarantees
  std::string to_csv() const;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace packnorm::suites
