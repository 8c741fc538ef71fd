#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "packnorm/condition.hpp"
#include "packnorm/qhn_condition.hpp"

namespace packnorm::gen {

/// Deterministic seeded source. All draws go through rejection sampling on
/// the raw engine output, so results are identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n);                       // uniform in [0, n)
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi);  // uniform in [lo, hi]
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
  std::mt19937_64 engine_;
};

struct CreatureGenConfig {
  Alphabet alpha{std::vector<std::uint32_t>{2}};
  Coord coord_span = 12;  // z drawn from [0, coord_span)
  std::size_t z_min = 1, z_max = 6;
  std::size_t delta_min = 1, delta_max = 5;
  std::uint64_t min_n = 1;
  std::size_t retry_cap = 400;
  Budget budget;
};

// Rejection-sampled creature with packing number at least min_n.
Creature random_creature(Rng& rng, const CreatureGenConfig& config);

struct ConditionGenConfig {
  Alphabet alpha{std::vector<std::uint32_t>{2}};
  Coord window_size = 14;
  std::size_t stem_coords = 1;          // initial segment decided by the stem
  std::size_t run_min = 3, run_max = 7; // creature coordinate-run lengths
  std::uint64_t min_n = 2;
  bool constant_delta_only = false;     // all-zero constraints only
  std::size_t retry_cap = 400;
  Budget budget;
};

// A finite-norm condition on [0, window_size): stem on the first coordinates,
// then creatures over consecutive runs.
TruncatedCondition random_condition(Rng& rng, const ConditionGenConfig& config);

// Conditions sharing the stem and window, for amalgamation inputs.
std::vector<TruncatedCondition> random_amalgam_family(Rng& rng,
                                                      const ConditionGenConfig& config,
                                                      std::size_t count);

// Applies `steps` random legal moves that keep the condition finite-norm,
// recording them; returns the strengthened condition.
TruncatedCondition random_strengthening(Rng& rng, const TruncatedCondition& p,
                                        std::size_t steps, MoveCertificate& cert,
                                        const Budget& budget = Budget{});

struct QGenConfig {
  Alphabet alpha{std::vector<std::uint32_t>{2}};
  Window window = Window::interval(0, 10);
  qhn::NormSeqPrefix seq;
  std::uint32_t m_star = 0;
  std::size_t stem_max = 2;       // stem size drawn from [0, stem_max]
  std::size_t sigmas_max = 3;     // total sigma count drawn from [0, sigmas_max]
  std::size_t sigma_pad = 1;      // sigma sizes exceed the minimum by up to this
  std::size_t levels = 1;         // sigmas spread over levels [m_star, m_star+levels)
  std::size_t retry_cap = 400;
};

// A valid (relaxed-mode) condition with pairwise disjoint sigma domains.
qhn::QCondition random_qcondition(Rng& rng, const QGenConfig& config);

/// n+1 conditions sharing the class key for parameter n: identical stem and
/// low levels, independent sigma families on the high levels.
std::vector<qhn::QCondition> random_class_family(Rng& rng, const QGenConfig& config,
                                                 std::size_t n, std::size_t high_per_cond);

}  // namespace packnorm::gen
