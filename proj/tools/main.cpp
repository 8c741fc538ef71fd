// packnorm CLI: instance generation, validity and order checks, amalgamation
// demos, measure reports, and the property-suite runner.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "packnorm/amalgamate.hpp"
#include "packnorm/error.hpp"
#include "packnorm/generators.hpp"
#include "packnorm/json_io.hpp"
#include "packnorm/measure.hpp"
#include "packnorm/q_projection.hpp"
#include "packnorm/qhn_compat.hpp"
#include "packnorm/qhn_refine.hpp"
#include "packnorm/suites.hpp"

using json = nlohmann::json;
using namespace packnorm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_input, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::bad_input, "cannot write '" + out_path + "'");
  out << text << "\n";
}

Alphabet parse_alphabet(const std::string& spec) {
  std::vector<std::uint32_t> orders;
  std::string token;
  for (char ch : spec + "x") {
    if (ch == 'x' || ch == ',') {
      if (!token.empty()) orders.push_back(static_cast<std::uint32_t>(std::stoul(token)));
      token.clear();
    } else if (ch >= '0' && ch <= '9') {
      token += ch;
    } else {
      fail(Errc::bad_input, "alphabet spec looks like '2' or '2x3'");
    }
  }
  return Alphabet(orders);
}

CoordMap parse_coord_map(const std::string& spec) {
  // "0:3,1:4" maps coordinate 0 to 3 and 1 to 4.
  std::vector<std::pair<Coord, Coord>> entries;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) fail(Errc::bad_input, "coordinate map looks like '0:3,1:4'");
    entries.emplace_back(static_cast<Coord>(std::stoul(item.substr(0, colon))),
                         static_cast<Coord>(std::stoul(item.substr(colon + 1))));
  }
  return CoordMap(std::move(entries));
}

json load_json(const std::string& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) fail(Errc::bad_input, "malformed JSON in '" + path + "'");
  return j;
}

// Accepts a bare object or a generated instances file plus --index.
json pick_instance(const json& j, std::size_t index) {
  if (j.contains("instances")) {
    const auto& list = j.at("instances");
    if (index >= list.size()) fail(Errc::bad_input, "instance index out of range");
    return list.at(index);
  }
  return j;
}

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string alphabet = "2";
  std::uint64_t max_points = Budget{}.max_points;
  std::size_t max_delta = Budget{}.max_delta;
  bool strict = false;
  std::string format = "json";
  std::string out;
  std::size_t index = 0;

  Budget budget() const { return Budget{max_points, max_delta}; }
  qhn::Strictness strictness() const {
    return strict ? qhn::Strictness::strict : qhn::Strictness::relaxed;
  }
};

int exit_code_for(const Error& e) {
  return e.code() == Errc::enumeration_too_large ? kExitBudget : kExitFailure;
}

json error_json(const Error& e) {
  return json{{"error", errc_name(e.code())}, {"message", e.what()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packnorm: packing norms, constraint creatures, and condition calculus"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opt;
  app.add_option("--seed", opt.seed, "generator seed");
  app.add_option("--alphabet", opt.alphabet, "product of cyclic orders, e.g. 2 or 2x3");
  app.add_option("--budget", opt.max_points, "enumeration point budget");
  app.add_option("--delta-budget", opt.max_delta, "norm family-size budget");
  app.add_flag("--strict", opt.strict, "strict sequence clauses");
  bool relaxed_flag = false;
  app.add_flag("--relaxed", relaxed_flag, "relaxed sequence clauses (default)");
  app.add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", opt.out, "output file (default stdout)");
  app.add_option("--index", opt.index, "instance index inside a generated file");

  // ------------------------------------------------------------- creature
  auto* creature = app.add_subcommand("creature", "constraint creatures");
  auto* creature_gen = creature->add_subcommand("gen", "seeded random creatures");
  std::size_t gen_count = 10;
  std::size_t z_min = 1, z_max = 6, delta_min = 1, delta_max = 5;
  std::uint64_t min_n = 1;
  creature_gen->add_option("--count", gen_count);
  creature_gen->add_option("--z-min", z_min);
  creature_gen->add_option("--z-max", z_max);
  creature_gen->add_option("--delta-min", delta_min);
  creature_gen->add_option("--delta-max", delta_max);
  creature_gen->add_option("--min-n", min_n);

  std::string in_path, second_path, cert_path, map_spec;
  auto* creature_norm = creature->add_subcommand("norm", "packing number of a creature file");
  creature_norm->add_option("--in", in_path)->required();
  auto* creature_witness = creature->add_subcommand("witness", "value-set witness");
  creature_witness->add_option("--in", in_path)->required();

  // ----------------------------------------------------------------- cond
  auto* cond = app.add_subcommand("cond", "truncated conditions");
  auto* cond_gen = cond->add_subcommand("gen", "seeded random conditions");
  std::size_t window_size = 14, stem_coords = 1, family = 1;
  cond_gen->add_option("--count", gen_count);
  cond_gen->add_option("--window", window_size);
  cond_gen->add_option("--stem", stem_coords);
  cond_gen->add_option("--min-n", min_n);
  cond_gen->add_option("--family", family, "conditions per instance, sharing a stem");

  auto* cond_validate = cond->add_subcommand("validate", "check the condition clauses");
  cond_validate->add_option("--in", in_path)->required();
  auto* cond_pos = cond->add_subcommand("pos", "count POS and show a member");
  cond_pos->add_option("--in", in_path)->required();
  auto* cond_move = cond->add_subcommand("move", "apply a move certificate");
  cond_move->add_option("--in", in_path)->required();
  cond_move->add_option("--cert", cert_path)->required();
  auto* cond_leq = cond->add_subcommand("leq", "order checks");
  cond_leq->add_option("--p", in_path)->required();
  cond_leq->add_option("--q", second_path)->required();
  cond_leq->add_option("--cert", cert_path);
  bool semantic = false;
  cond_leq->add_flag("--semantic", semantic, "decide by POS enumeration");
  std::size_t search_moves = 0;
  cond_leq->add_option("--search", search_moves, "bounded certificate search depth");
  auto* cond_amalg = cond->add_subcommand("amalgamate", "common strengthening with certificates");
  cond_amalg->add_option("--in", in_path)->required();
  std::string slack_base = "0", slack_step = "1/3";
  cond_amalg->add_option("--slack-base", slack_base);
  cond_amalg->add_option("--slack-step", slack_step);
  bool verify = false;
  cond_amalg->add_flag("--verify", verify, "verify POS containment by enumeration");
  auto* cond_project = cond->add_subcommand("project", "pull back along an embedding");
  cond_project->add_option("--in", in_path)->required();
  cond_project->add_option("--map", map_spec)->required();
  cond_project->add_option("--complete", second_path,
                           "condition on the embedding side to transport back");

  // ------------------------------------------------------------------ qhn
  auto* qhn_cmd = app.add_subcommand("qhn", "sequence-indexed conditions");
  auto* qhn_seq_check = qhn_cmd->add_subcommand("seq-check", "sequence prefix clauses");
  qhn_seq_check->add_option("--in", in_path)->required();
  auto* qhn_validate = qhn_cmd->add_subcommand("validate", "condition clauses");
  qhn_validate->add_option("--in", in_path)->required();
  auto* qhn_gen = qhn_cmd->add_subcommand("gen", "seeded random conditions");
  std::size_t sigmas_max = 3, levels = 1, seq_len = 3;
  qhn_gen->add_option("--count", gen_count);
  qhn_gen->add_option("--window", window_size);
  qhn_gen->add_option("--sigmas", sigmas_max);
  qhn_gen->add_option("--levels", levels);
  qhn_gen->add_option("--seq-len", seq_len);
  auto* qhn_leq = qhn_cmd->add_subcommand("leq", "syntactic order");
  qhn_leq->add_option("--p", in_path)->required();
  qhn_leq->add_option("--q", second_path)->required();
  qhn_leq->add_flag("--semantic", semantic);
  auto* qhn_compat = qhn_cmd->add_subcommand("compat", "compatibility of two conditions");
  qhn_compat->add_option("--p", in_path)->required();
  qhn_compat->add_option("--q", second_path)->required();
  bool constructive = false;
  qhn_compat->add_flag("--constructive", constructive, "also build a common upper bound");
  auto* qhn_amalg = qhn_cmd->add_subcommand("amalgamate", "class amalgamation");
  qhn_amalg->add_option("--in", in_path)->required();
  auto* qhn_norm = qhn_cmd->add_subcommand("normalize", "dense normal form");
  qhn_norm->add_option("--in", in_path)->required();
  auto* qhn_measure = qhn_cmd->add_subcommand("measure", "exact avoidance measure");
  qhn_measure->add_option("--in", in_path)->required();
  auto* qhn_project = qhn_cmd->add_subcommand("project", "transport along an embedding");
  qhn_project->add_option("--in", in_path)->required();
  qhn_project->add_option("--map", map_spec)->required();
  qhn_project->add_option("--r", second_path, "condition on the embedding side");

  // ---------------------------------------------------------------- suite
  auto* suite = app.add_subcommand("suite", "property suites");
  auto* suite_list = suite->add_subcommand("list", "print suite names");
  auto* suite_run = suite->add_subcommand("run", "run one suite or all");
  std::string suite_name = "all";
  std::size_t instances = 60;
  std::string replay_path;
  suite_run->add_option("name", suite_name, "suite name or 'all'");
  suite_run->add_option("--instances", instances);
  suite_run->add_option("--replay", replay_path, "re-run a recorded counterexample file");
  auto* suite_replay = suite->add_subcommand("replay", "re-run a recorded counterexample");
  suite_replay->add_option("--in", in_path)->required();
  std::string replay_suite;
  suite_replay->add_option("--suite", replay_suite, "suite name when the file omits it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Budget budget = opt.budget();
    Alphabet alpha = parse_alphabet(opt.alphabet);

    if (creature_gen->parsed()) {
      gen::Rng rng(opt.seed);
      gen::CreatureGenConfig cg;
      cg.alpha = alpha;
      cg.z_min = z_min;
      cg.z_max = z_max;
      cg.delta_min = delta_min;
      cg.delta_max = delta_max;
      cg.min_n = min_n;
      cg.budget = budget;
      json instances_json = json::array();
      for (std::size_t i = 0; i < gen_count; ++i)
        instances_json.push_back(json::parse(to_json(alpha, gen::random_creature(rng, cg))));
      emit(json{{"schema", 1},
                {"kind", "creature"},
                {"seed", opt.seed},
                {"alphabet", json::parse(to_json(alpha))},
                {"instances", instances_json}}
               .dump(2),
           opt.out);
      return kExitOk;
    }
    if (creature_norm->parsed()) {
      json j = pick_instance(load_json(in_path), opt.index);
      Creature t = creature_from_json(alpha, j.dump(), budget);
      emit(json{{"n", t.n()},
                {"infinite", t.infinite_norm()},
                {"nor", t.infinite_norm() ? json() : json(t.nor_real())},
                {"valid", t.valid()}}
               .dump(2),
           opt.out);
      return kExitOk;
    }
    if (creature_witness->parsed()) {
      json j = pick_instance(load_json(in_path), opt.index);
      Creature t = creature_from_json(alpha, j.dump(), budget);
      PartialFunction w = witness_value(alpha, t);
      emit(json{{"witness", json::parse(to_json(alpha, w))}}.dump(2), opt.out);
      return kExitOk;
    }

    if (cond_gen->parsed()) {
      gen::Rng rng(opt.seed);
      gen::ConditionGenConfig cg;
      cg.alpha = alpha;
      cg.window_size = static_cast<Coord>(window_size);
      cg.stem_coords = stem_coords;
      cg.min_n = min_n;
      cg.budget = budget;
      json instances_json = json::array();
      for (std::size_t i = 0; i < gen_count; ++i) {
        if (family <= 1) {
          instances_json.push_back(json::parse(to_json(gen::random_condition(rng, cg))));
        } else {
          json fam = json::array();
          for (const auto& p : gen::random_amalgam_family(rng, cg, family))
            fam.push_back(json::parse(to_json(p)));
          instances_json.push_back(fam);
        }
      }
      emit(json{{"schema", 1},
                {"kind", family <= 1 ? "cond" : "cond-family"},
                {"seed", opt.seed},
                {"instances", instances_json}}
               .dump(2),
           opt.out);
      return kExitOk;
    }
    if (cond_validate->parsed()) {
      TruncatedCondition p =
          condition_from_json(pick_instance(load_json(in_path), opt.index).dump(), budget);
      auto report = validate(p);
      emit(json{{"ok", report.ok}, {"issues", report.issues}}.dump(2), opt.out);
      return report.ok ? kExitOk : kExitFailure;
    }
    if (cond_pos->parsed()) {
      TruncatedCondition p =
          condition_from_json(pick_instance(load_json(in_path), opt.index).dump(), budget);
      auto example = pos_example(p, budget);
      json ex;
      if (example) ex = json::parse(to_json(p.alpha, assignment_to_pf(p.window, *example)));
      emit(json{{"count", pos_count(p, budget)}, {"example", ex}}.dump(2), opt.out);
      return kExitOk;
    }
    if (cond_move->parsed()) {
      TruncatedCondition p =
          condition_from_json(pick_instance(load_json(in_path), opt.index).dump(), budget);
      MoveCertificate cert = certificate_from_json(p.alpha, read_file(cert_path), budget);
      TruncatedCondition q = replay(p, cert, budget);
      emit(to_json(q), opt.out);
      return kExitOk;
    }
    if (cond_leq->parsed()) {
      TruncatedCondition p = condition_from_json(pick_instance(load_json(in_path), 0).dump(), budget);
      TruncatedCondition q =
          condition_from_json(pick_instance(load_json(second_path), 0).dump(), budget);
      json result;
      bool ok = false;
      if (!cert_path.empty()) {
        MoveCertificate cert = certificate_from_json(p.alpha, read_file(cert_path), budget);
        ok = leq_check(p, q, cert, budget);
        result["certified"] = ok;
      } else if (search_moves > 0) {
        auto found = leq_bounded_search(p, q, search_moves, budget);
        ok = found.has_value();
        result["found"] = ok;
        if (found) result["certificate"] = json::parse(to_json(p.alpha, *found));
      }
      if (semantic || (cert_path.empty() && search_moves == 0)) {
        bool sem = leq_semantic(p, q, budget);
        result["semantic"] = sem;
        if (cert_path.empty() && search_moves == 0) ok = sem;
      }
      emit(result.dump(2), opt.out);
      return ok ? kExitOk : kExitFailure;
    }
    if (cond_amalg->parsed()) {
      json j = load_json(in_path);
      json list = j.contains("instances") ? j.at("instances").at(opt.index) : j;
      std::vector<TruncatedCondition> ps;
      for (const auto& e : list) ps.push_back(condition_from_json(e.dump(), budget));
      Slack slack =
          Slack::linear(rational_from_string(slack_base), rational_from_string(slack_step));
      AmalgamResult result = amalgamate(ps, slack, budget);
      json certs = json::array();
      for (const auto& cert : result.certificates)
        certs.push_back(json::parse(to_json(result.q.alpha, cert)));
      json out{{"schema", 1},
               {"q", json::parse(to_json(result.q))},
               {"certificates", certs},
               {"boundaries", result.boundaries}};
      if (verify) {
        bool contained = true;
        for (const auto& p : ps) contained = contained && pos_subset(result.q, p, budget);
        out["pos_contained"] = contained;
        out["pos_nonempty"] = pos_example(result.q, budget).has_value();
        if (!contained) {
          emit(out.dump(2), opt.out);
          return kExitFailure;
        }
      }
      emit(out.dump(2), opt.out);
      return kExitOk;
    }
    if (cond_project->parsed()) {
      TruncatedCondition p =
          condition_from_json(pick_instance(load_json(in_path), opt.index).dump(), budget);
      CoordMap pi = parse_coord_map(map_spec);
      if (second_path.empty()) {
        emit(to_json(project_condition(p, pi)), opt.out);
      } else {
        TruncatedCondition r =
            condition_from_json(pick_instance(load_json(second_path), 0).dump(), budget);
        emit(to_json(project_complete(p, pi, r, budget)), opt.out);
      }
      return kExitOk;
    }

    if (qhn_seq_check->parsed()) {
      auto seq = seq_from_json(read_file(in_path));
      auto report = opt.strict ? qhn::validate_seq(seq) : qhn::validate_seq_relaxed(seq);
      auto strict_report = qhn::validate_seq(seq);
      emit(json{{"ok", report.ok}, {"strict_violations", strict_report.violations}}.dump(2),
           opt.out);
      return report.ok ? kExitOk : kExitFailure;
    }
    if (qhn_validate->parsed()) {
      auto p = qcondition_from_json(pick_instance(load_json(in_path), opt.index).dump(), budget);
      auto report = qhn::validate_qcondition(p, opt.strictness());
      emit(json{{"ok", report.ok}, {"issues", report.issues}}.dump(2), opt.out);
      return report.ok ? kExitOk : kExitFailure;
    }
    if (qhn_gen->parsed()) {
      gen::Rng rng(opt.seed);
      gen::QGenConfig qg;
      qg.alpha = alpha;
      qg.window = Window::interval(0, static_cast<Coord>(window_size));
      qg.seq = opt.strict ? qhn::strict_seq(seq_len) : qhn::relaxed_seq(seq_len);
      qg.sigmas_max = sigmas_max;
      qg.levels = levels;
      json instances_json = json::array();
      for (std::size_t i = 0; i < gen_count; ++i)
        instances_json.push_back(json::parse(to_json(gen::random_qcondition(rng, qg))));
      emit(json{{"schema", 1}, {"kind", "qcond"}, {"seed", opt.seed}, {"instances", instances_json}}
               .dump(2),
           opt.out);
      return kExitOk;
    }
    if (qhn_leq->parsed()) {
      auto p = qcondition_from_json(pick_instance(load_json(in_path), 0).dump(), budget);
      auto q = qcondition_from_json(pick_instance(load_json(second_path), 0).dump(), budget);
      bool syn = qhn::leq_syntactic(p, q);
      json result{{"syntactic", syn}};
      if (semantic) result["semantic"] = qhn::qpos_subset(q, p, budget);
      emit(result.dump(2), opt.out);
      return syn ? kExitOk : kExitFailure;
    }
    if (qhn_compat->parsed()) {
      auto p0 = qcondition_from_json(pick_instance(load_json(in_path), 0).dump(), budget);
      auto p1 = qcondition_from_json(pick_instance(load_json(second_path), 0).dump(), budget);
      auto witness = qhn::compatible_bruteforce(p0, p1, budget);
      json result{{"compatible", witness.has_value()}};
      if (!witness) result["reason"] = "contradictory-conditions";
      if (witness)
        result["witness"] =
            json::parse(to_json(p0.alpha, assignment_to_pf(p0.window, *witness)));
      if (witness && constructive) {
        auto q = qhn::compatible_constructive(p0, p1, *witness, opt.strictness(), budget);
        result["bound"] = json::parse(to_json(q));
      }
      emit(result.dump(2), opt.out);
      return witness ? kExitOk : kExitFailure;
    }
    if (qhn_amalg->parsed()) {
      json j = load_json(in_path);
      json list = j.contains("instances") ? j.at("instances").at(opt.index) : j;
      std::vector<qhn::QCondition> ps;
      for (const auto& e : list) ps.push_back(qcondition_from_json(e.dump(), budget));
      auto q = qhn::amalgamate_class(ps, opt.strictness(), budget);
      bool above = true;
      for (const auto& p : ps) above = above && qhn::leq_syntactic(p, q);
      emit(json{{"q", json::parse(to_json(q))}, {"above_all", above}}.dump(2), opt.out);
      return above ? kExitOk : kExitFailure;
    }
    if (qhn_norm->parsed()) {
      auto p = qcondition_from_json(pick_instance(load_json(in_path), opt.index).dump(), budget);
      emit(to_json(qhn::normalize_dense(p, opt.strictness())), opt.out);
      return kExitOk;
    }
    if (qhn_measure->parsed()) {
      json j = pick_instance(load_json(in_path), opt.index);
      Alphabet measure_alpha = j.contains("alphabet") ? alphabet_from_json(j.at("alphabet").dump())
                                                      : alpha;
      std::vector<PartialFunction> sigmas;
      for (const auto& e : j.at("sigmas")) sigmas.push_back(pf_from_json(measure_alpha, e.dump()));
      Rational value = avoid_measure(measure_alpha, sigmas, budget);
      json result{{"schema", 1},
                  {"measure", rational_to_string(value)},
                  {"decimal", rational_to_decimal(value, 12)}};
      if (j.contains("m_star")) {
        // Per-level bound verdicts for a full condition file.
        auto p = qcondition_from_json(j.dump(), budget);
        json blocks = json::array();
        for (std::size_t k = 0; k < p.blocks.size(); ++k) {
          std::size_t m = p.m_star + k;
          if (p.blocks[k].empty() || m >= p.seq.size()) continue;
          BigInt growth = big_pow(BigInt(p.alpha.size()), 2) ;
          growth = big_pow(BigInt(p.alpha.size()), 2 * p.seq.n0(m).convert_to<std::uint64_t>());
          bool clause = p.seq.n1(m) > growth;
          json entry{{"level", m}, {"growth_clause", clause}};
          if (clause) {
            std::vector<PartialFunction> block_sigmas;
            for (std::size_t s : p.blocks[k]) block_sigmas.push_back(p.sigmas[s]);
            Rational block_value = avoid_measure(p.alpha, block_sigmas, budget);
            std::uint64_t exponent = 1;
            for (std::uint64_t e = 0; e < p.seq.n0(m).convert_to<std::uint64_t>(); ++e)
              exponent *= p.alpha.size();
            entry["measure"] = rational_to_string(block_value);
            entry["certified_below_exp"] = certified_at_most_exp_neg(block_value, exponent);
            entry["exponent"] = exponent;
          }
          blocks.push_back(entry);
        }
        result["blocks"] = blocks;
      }
      emit(result.dump(2), opt.out);
      return kExitOk;
    }
    if (qhn_project->parsed()) {
      auto p = qcondition_from_json(pick_instance(load_json(in_path), opt.index).dump(), budget);
      CoordMap pi = parse_coord_map(map_spec);
      if (second_path.empty()) {
        emit(to_json(qhn::project_q(p, pi)), opt.out);
      } else {
        auto r = qcondition_from_json(pick_instance(load_json(second_path), 0).dump(), budget);
        emit(to_json(qhn::project_pi_q(p, pi, r, opt.strictness())), opt.out);
      }
      return kExitOk;
    }

    if (suite_list->parsed()) {
      emit(json(suites::suite_names()).dump(2), opt.out);
      return kExitOk;
    }
    if (suite_run->parsed()) {
      suites::SuiteConfig config;
      config.seed = opt.seed;
      config.alpha = alpha;
      config.instances = instances;
      config.strictness = opt.strictness();
      config.budget = budget;
      if (!replay_path.empty()) {
        json j = load_json(replay_path);
        config.seed = j.at("seed").get<std::uint64_t>();
        config.instances = j.at("index").get<std::size_t>() + 1;
        config.only_index = j.at("index").get<std::size_t>();
        if (j.contains("suite")) suite_name = j.at("suite").get<std::string>();
      }
      std::vector<std::string> names =
          suite_name == "all" ? suites::suite_names() : std::vector<std::string>{suite_name};
      bool all_ok = true;
      std::string output;
      for (const auto& name : names) {
        auto report = suites::run_suite(name, config);
        all_ok = all_ok && report.ok;
        output += opt.format == "csv" ? report.to_csv() : report.to_json() + "\n";
      }
      emit(output, opt.out);
      return all_ok ? kExitOk : kExitFailure;
    }
    if (suite_replay->parsed()) {
      json j = load_json(in_path);
      suites::SuiteConfig config;
      config.seed = j.at("seed").get<std::uint64_t>();
      config.alpha = alpha;
      config.instances = j.at("index").get<std::size_t>() + 1;
      config.strictness = opt.strictness();
      config.budget = budget;
      config.only_index = j.at("index").get<std::size_t>();
      std::string name = j.contains("suite") ? j.at("suite").get<std::string>() : replay_suite;
      if (name.empty()) fail(Errc::bad_input, "counterexample file names no suite");
      auto report = suites::run_suite(name, config);
      emit(report.to_json(), opt.out);
      return report.ok ? kExitOk : kExitFailure;
    }

    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << error_json(e).dump(2) << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump(2) << "\n";
    return kExitFailure;
  }
}
