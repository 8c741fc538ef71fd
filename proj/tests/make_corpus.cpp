// Regenerates the bundled corpus of worked instances (docs/corpus). Run
// manually after intentional schema or construction changes:
//   packnorm_make_corpus <output-dir>

#include <json.hpp>

#include <fstream>
#include <iostream>

#include "packnorm/amalgamate.hpp"
#include "packnorm/json_io.hpp"
#include "packnorm/qhn_compat.hpp"

using json = nlohmann::json;
using namespace packnorm;

namespace {

void write(const std::string& dir, const std::string& name, const json& j) {
  std::ofstream out(dir + "/" + name);
  out << j.dump(2) << "\n";
  std::cout << "wrote " << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: packnorm_make_corpus <output-dir>\n";
    return 2;
  }
  std::string dir = argv[1];
  Alphabet z2 = Alphabet::cyclic(2);

  {
    // Three constraints crowding two coordinates force packing number zero.
    Creature t = Creature::make(
        Window({0, 1}), {PartialFunction({{0, 0}}), PartialFunction({{1, 0}}),
                         PartialFunction({{0, 0}, {1, 0}})});
    write(dir, "norm_zero_triple.json",
          json{{"schema", 1},
               {"kind", "creature"},
               {"alphabet", json::parse(to_json(z2))},
               {"creature", json::parse(to_json(z2, t))},
               {"expect", {{"n", 0}}}});
  }
  {
    // Two constant constraints on four coordinates leave fourteen values.
    Window z = Window::interval(0, 4);
    Creature t = Creature::make(
        z, {PartialFunction::constant(z, 0), PartialFunction::constant(z, 1)});
    write(dir, "value_count_fourteen.json",
          json{{"schema", 1},
               {"kind", "creature"},
               {"alphabet", json::parse(to_json(z2))},
               {"creature", json::parse(to_json(z2, t))},
               {"expect", {{"n", 4}, {"value_count", 14}}}});
  }
  {
    // The forced complement witness on a singleton.
    Creature t = Creature::make(Window({0}), {PartialFunction({{0, 0}})});
    write(dir, "witness_singleton.json",
          json{{"schema", 1},
               {"kind", "creature"},
               {"alphabet", json::parse(to_json(z2))},
               {"creature", json::parse(to_json(z2, t))},
               {"expect",
                {{"witness", json::parse(to_json(z2, witness_value(z2, t)))}}}});
  }
  {
    // Stem plus two blocks: the POS count is the product of the value sets.
    Window z0 = Window::interval(1, 3);
    Window z1 = Window::interval(3, 6);
    TruncatedCondition p = make_condition(
        z2, Window::interval(0, 6), PartialFunction({{0, 1}}),
        {Creature::make(z0, {PartialFunction::constant(z0, 0)}),
         Creature::make(z1, {PartialFunction::constant(z1, 1)})},
        Flavor::q_plus_infinity);
    write(dir, "pos_product.json",
          json{{"schema", 1},
               {"kind", "cond"},
               {"condition", json::parse(to_json(p))},
               {"expect", {{"pos_count", 21}}}});
  }
  {
    // Two 24-coordinate conditions with aligned constant blocks.
    auto block = [&](Coord lo, Coord hi, Symbol s) {
      Window z = Window::interval(lo, hi);
      return Creature::make(z, {PartialFunction::constant(z, s)});
    };
    TruncatedCondition p0 = make_condition(
        z2, Window::interval(0, 24), PartialFunction{},
        {block(0, 12, 0), block(12, 24, 0)}, Flavor::q_plus_infinity);
    TruncatedCondition p1 = make_condition(
        z2, Window::interval(0, 24), PartialFunction{},
        {block(0, 12, 1), block(12, 24, 1)}, Flavor::q_plus_infinity);
    write(dir, "amalgam_pair_24.json",
          json{{"schema", 1},
               {"kind", "cond-family"},
               {"slack", {{"base", "1"}, {"step", "1"}}},
               {"instances",
                {json::parse(to_json(p0)), json::parse(to_json(p1))}},
               {"expect", {{"contained", true}, {"nonempty", true}, {"blocks", 2}}}});
  }
  {
    // Syntactic order pair: shrinking a constraint strengthens.
    auto seq = qhn::NormSeqPrefix({{2, 8}});
    Window window = Window::interval(0, 8);
    qhn::QCondition wide = qhn::make_qcondition(
        z2, window, PartialFunction({{0, 1}}),
        {PartialFunction({{1, 0}, {2, 0}, {3, 0}})}, 0, {{0}}, seq);
    qhn::QCondition narrow = qhn::make_qcondition(
        z2, window, PartialFunction({{0, 1}}), {PartialFunction({{1, 0}, {2, 0}})}, 0,
        {{0}}, seq);
    write(dir, "leq_pair.json",
          json{{"schema", 1},
               {"kind", "qcond-pair"},
               {"p", json::parse(to_json(wide))},
               {"q", json::parse(to_json(narrow))},
               {"expect", {{"p_below_q", true}, {"q_below_p", false}}}});
  }
  {
    // Constructive compatibility through the disjoint-selection path; the
    // shared point violates the wide constraint only at its last coordinate,
    // so it ends up outside the built bound.
    auto seq = qhn::NormSeqPrefix({{2, 2}, {3, 3}, {4, 4}, {40, 40}});
    Window window = Window::interval(0, 60);
    std::vector<std::pair<Coord, Symbol>> entries;
    for (Coord c = 10; c < 50; ++c) entries.emplace_back(c, 0);
    qhn::QCondition p = qhn::make_qcondition(z2, window, PartialFunction{},
                                             {PartialFunction(entries)}, 0,
                                             {{}, {}, {}, {0}}, seq);
    write(dir, "compat_selection.json",
          json{{"schema", 1},
               {"kind", "qcond"},
               {"condition", json::parse(to_json(p))},
               {"eta_violation_coord", 49},
               {"expect",
                {{"m_star", 3}, {"selections", 2}, {"witness_outside", true}}}});
  }
  {
    // Sixty-four disjoint 3-coordinate cylinders: measure (7/8)^64 <= e^{-8}.
    std::vector<PartialFunction> sigmas;
    json sigmas_json = json::array();
    for (Coord k = 0; k < 64; ++k) {
      Window dom = Window::interval(3 * k, 3 * k + 3);
      sigmas.push_back(PartialFunction::constant(dom, 0));
      sigmas_json.push_back(json::parse(to_json(z2, sigmas.back())));
    }
    write(dir, "measure_sixtyfour.json",
          json{{"schema", 1},
               {"kind", "sigma-family"},
               {"alphabet", json::parse(to_json(z2))},
               {"sigmas", sigmas_json},
               {"expect",
                {{"decimal_prefix", "0.000194"}, {"below_exp", 8}, {"disjoint", true}}}});
  }
  return 0;
}
