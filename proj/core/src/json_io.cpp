#include "packnorm/json_io.hpp"

#include <json.hpp>

#include "packnorm/error.hpp"

namespace packnorm {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::bad_input, "malformed JSON");
  return j;
}

json alphabet_json(const Alphabet& alpha) {
  return json{{"orders", alpha.orders()}};
}

Alphabet alphabet_from(const json& j) {
  if (!j.contains("orders")) fail(Errc::bad_input, "alphabet needs an orders list");
  return Alphabet(j.at("orders").get<std::vector<std::uint32_t>>());
}

json window_json(const Window& w) { return json(w.coords()); }

Window window_from(const json& j) { return Window(j.get<std::vector<Coord>>()); }

json pf_json(const Alphabet& alpha, const PartialFunction& pf) {
  json out = json::array();
  for (const auto& [c, s] : pf.entries()) out.push_back({c, alpha.components(s)});
  return out;
}

PartialFunction pf_from(const Alphabet& alpha, const json& j) {
  std::vector<std::pair<Coord, Symbol>> entries;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) fail(Errc::bad_input, "entry must be [coord, symbol]");
    entries.emplace_back(e.at(0).get<Coord>(),
                         alpha.from_components(e.at(1).get<std::vector<std::uint32_t>>()));
  }
  return PartialFunction(std::move(entries));
}

json creature_json(const Alphabet& alpha, const Creature& t) {
  json delta = json::array();
  for (const auto& eta : t.delta()) delta.push_back(pf_json(alpha, eta));
  return json{{"z", t.z().coords()}, {"delta", delta}};
}

Creature creature_from(const Alphabet& alpha, const json& j, const Budget& budget) {
  std::vector<PartialFunction> delta;
  for (const auto& e : j.at("delta")) delta.push_back(pf_from(alpha, e));
  return Creature::make(window_from(j.at("z")), std::move(delta), budget);
}

json condition_json(const TruncatedCondition& p) {
  json creatures = json::array();
  for (const auto& t : p.creatures) creatures.push_back(creature_json(p.alpha, t));
  json profile = json::array();
  for (const auto& b : p.bound_profile) profile.push_back(rational_to_string(b));
  return json{{"alphabet", alphabet_json(p.alpha)},
              {"window", window_json(p.window)},
              {"w", pf_json(p.alpha, p.w)},
              {"creatures", creatures},
              {"flavor", p.flavor == Flavor::q_plus_infinity ? "q+inf" : "q0"},
              {"profile", profile}};
}

TruncatedCondition condition_from(const json& j, const Budget& budget) {
  Alphabet alpha = alphabet_from(j.at("alphabet"));
  std::vector<Creature> creatures;
  for (const auto& e : j.at("creatures")) creatures.push_back(creature_from(alpha, e, budget));
  std::string flavor = j.at("flavor").get<std::string>();
  if (flavor != "q+inf" && flavor != "q0") fail(Errc::bad_input, "unknown flavor");
  std::vector<Rational> profile;
  if (j.contains("profile"))
    for (const auto& b : j.at("profile")) profile.push_back(rational_from_string(b));
  return make_condition(alpha, window_from(j.at("window")), pf_from(alpha, j.at("w")),
                        std::move(creatures),
                        flavor == "q+inf" ? Flavor::q_plus_infinity : Flavor::q_empty,
                        std::move(profile));
}

json move_json(const Alphabet& alpha, const Move& move) {
  return std::visit(
      [&](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DecideMove>) {
          return json{{"op", "decide"}, {"indices", m.indices}, {"w", pf_json(alpha, m.w_star)}};
        } else if constexpr (std::is_same_v<T, SigmaMove>) {
          json groups = json::array();
          for (const auto& g : m.groups)
            groups.push_back({{"indices", g.indices},
                              {"replacement", creature_json(alpha, g.replacement)}});
          return json{{"op", "sigma"}, {"groups", groups}};
        } else {
          json pieces = json::array();
          for (const auto& s : m.pieces) pieces.push_back(creature_json(alpha, s));
          return json{{"op", "sigma-bot"}, {"index", m.index}, {"pieces", pieces}};
        }
      },
      move);
}

Move move_from(const Alphabet& alpha, const json& j, const Budget& budget) {
  std::string op = j.at("op").get<std::string>();
  if (op == "decide")
    return DecideMove{j.at("indices").get<std::vector<std::size_t>>(),
                      pf_from(alpha, j.at("w"))};
  if (op == "sigma") {
    SigmaMove m;
    for (const auto& g : j.at("groups"))
      m.groups.push_back(SigmaGroup{g.at("indices").get<std::vector<std::size_t>>(),
                                    creature_from(alpha, g.at("replacement"), budget)});
    return m;
  }
  if (op == "sigma-bot") {
    SigmaBotMove m;
    m.index = j.at("index").get<std::size_t>();
    for (const auto& e : j.at("pieces")) m.pieces.push_back(creature_from(alpha, e, budget));
    return m;
  }
  fail(Errc::bad_input, "unknown move op '" + op + "'");
}

json seq_json(const qhn::NormSeqPrefix& seq) {
  json n0 = json::array();
  json n1 = json::array();
  for (std::size_t m = 0; m < seq.size(); ++m) {
    n0.push_back(seq.n0(m).str());
    n1.push_back(seq.n1(m).str());
  }
  return json{{"n0", n0}, {"n1", n1}};
}

qhn::NormSeqPrefix seq_from(const json& j) {
  auto n0 = j.at("n0").get<std::vector<std::string>>();
  auto n1 = j.at("n1").get<std::vector<std::string>>();
  if (n0.size() != n1.size()) fail(Errc::bad_input, "n0 and n1 lists must align");
  std::vector<std::pair<BigInt, BigInt>> levels;
  levels.reserve(n0.size());
  for (std::size_t m = 0; m < n0.size(); ++m)
    levels.emplace_back(BigInt(n0[m]), BigInt(n1[m]));
  return qhn::NormSeqPrefix(std::move(levels));
}

json qcondition_json(const qhn::QCondition& p) {
  json sigmas = json::array();
  for (const auto& sigma : p.sigmas) sigmas.push_back(pf_json(p.alpha, sigma));
  return json{{"alphabet", alphabet_json(p.alpha)},
              {"window", window_json(p.window)},
              {"w", pf_json(p.alpha, p.w)},
              {"sigmas", sigmas},
              {"m_star", p.m_star},
              {"blocks", p.blocks},
              {"seq", seq_json(p.seq)}};
}

qhn::QCondition qcondition_from(const json& j, const Budget&) {
  Alphabet alpha = alphabet_from(j.at("alphabet"));
  std::vector<PartialFunction> sigmas;
  for (const auto& e : j.at("sigmas")) sigmas.push_back(pf_from(alpha, e));
  return qhn::make_qcondition(alpha, window_from(j.at("window")), pf_from(alpha, j.at("w")),
                              std::move(sigmas), j.at("m_star").get<std::uint32_t>(),
                              j.at("blocks").get<std::vector<std::vector<std::size_t>>>(),
                              seq_from(j.at("seq")));
}

}  // namespace

std::string to_json(const Alphabet& alpha) { return alphabet_json(alpha).dump(); }
std::string to_json(const Window& window) { return window_json(window).dump(); }
std::string to_json(const Alphabet& alpha, const PartialFunction& pf) {
  return pf_json(alpha, pf).dump();
}
std::string to_json(const Alphabet& alpha, const Creature& t) {
  return creature_json(alpha, t).dump();
}
std::string to_json(const TruncatedCondition& p) { return condition_json(p).dump(); }
std::string to_json(const Alphabet& alpha, const MoveCertificate& cert) {
  json moves = json::array();
  for (const auto& m : cert.moves) moves.push_back(move_json(alpha, m));
  return json{{"moves", moves}}.dump();
}
std::string to_json(const qhn::NormSeqPrefix& seq) { return seq_json(seq).dump(); }
std::string to_json(const qhn::QCondition& p) { return qcondition_json(p).dump(); }

Alphabet alphabet_from_json(const std::string& text) { return alphabet_from(parse(text)); }
Window window_from_json(const std::string& text) { return window_from(parse(text)); }
PartialFunction pf_from_json(const Alphabet& alpha, const std::string& text) {
  return pf_from(alpha, parse(text));
}
Creature creature_from_json(const Alphabet& alpha, const std::string& text,
                            const Budget& budget) {
  return creature_from(alpha, parse(text), budget);
}
TruncatedCondition condition_from_json(const std::string& text, const Budget& budget) {
  return condition_from(parse(text), budget);
}
MoveCertificate certificate_from_json(const Alphabet& alpha, const std::string& text,
                                      const Budget& budget) {
  MoveCertificate cert;
  json j = parse(text);
  for (const auto& m : j.at("moves")) cert.moves.push_back(move_from(alpha, m, budget));
  return cert;
}
qhn::NormSeqPrefix seq_from_json(const std::string& text) { return seq_from(parse(text)); }
qhn::QCondition qcondition_from_json(const std::string& text, const Budget& budget) {
  return qcondition_from(parse(text), budget);
}

}  // namespace packnorm
