#pragma once

#include <string>

#include "packnorm/amalgamate.hpp"
#include "packnorm/condition.hpp"
#include "packnorm/qhn_condition.hpp"

namespace packnorm {

// Canonical JSON encodings. Symbols render as component tuples of the
// product group; every collection is emitted in its canonical order, so
// equal values serialize to equal bytes.

std::string to_json(const Alphabet& alpha);
std::string to_json(const Window& window);
std::string to_json(const Alphabet& alpha, const PartialFunction& pf);
std::string to_json(const Alphabet& alpha, const Creature& t);
std::string to_json(const TruncatedCondition& p);
std::string to_json(const Alphabet& alpha, const MoveCertificate& cert);
std::string to_json(const qhn::NormSeqPrefix& seq);
std::string to_json(const qhn::QCondition& p);

Alphabet alphabet_from_json(const std::string& text);
Window window_from_json(const std::string& text);
PartialFunction pf_from_json(const Alphabet& alpha, const std::string& text);
Creature creature_from_json(const Alphabet& alpha, const std::string& text,
                            const Budget& budget = Budget{});
TruncatedCondition condition_from_json(const std::string& text, const Budget& budget = Budget{});
MoveCertificate certificate_from_json(const Alphabet& alpha, const std::string& text,
                                      const Budget& budget = Budget{});
qhn::NormSeqPrefix seq_from_json(const std::string& text);
qhn::QCondition qcondition_from_json(const std::string& text, const Budget& budget = Budget{});

}  // namespace packnorm
