#include "packnorm/qhn_condition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "packnorm/error.hpp"

namespace packnorm::qhn {

std::uint32_t QCondition::level_of(std::size_t sigma_index) const {
  for (std::size_t k = 0; k < blocks.size(); ++k)
    for (std::size_t j : blocks[k])
      if (j == sigma_index) return m_star + static_cast<std::uint32_t>(k);
  fail(Errc::bad_input, "sigma index " + std::to_string(sigma_index) + " has no block");
}

QCondition make_qcondition(Alphabet alpha, Window window, PartialFunction w,
                           std::vector<PartialFunction> sigmas, std::uint32_t m_star,
                           std::vector<std::vector<std::size_t>> blocks, NormSeqPrefix seq) {
  // Sort sigmas and remap block indices through the permutation.
  std::vector<std::size_t> order(sigmas.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sigmas[a] < sigmas[b]; });
  std::vector<std::size_t> position(sigmas.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) position[order[rank]] = rank;

  QCondition p;
  p.alpha = std::move(alpha);
  p.window = std::move(window);
  p.w = std::move(w);
  p.sigmas.reserve(sigmas.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    p.sigmas.push_back(std::move(sigmas[order[rank]]));
  p.m_star = m_star;
  p.blocks.resize(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (std::size_t j : blocks[k]) {
      if (j >= position.size()) fail(Errc::bad_input, "block index out of range");
      p.blocks[k].push_back(position[j]);
    }
    std::sort(p.blocks[k].begin(), p.blocks[k].end());
  }
  while (!p.blocks.empty() && p.blocks.back().empty()) p.blocks.pop_back();
  p.seq = std::move(seq);
  return p;
}

QReport validate_qcondition(const QCondition& p, Strictness mode) {
  QReport report;
  auto seq_report =
      mode == Strictness::strict ? validate_seq(p.seq) : validate_seq_relaxed(p.seq);
  if (!seq_report.ok)
    for (const auto& v : seq_report.violations) report.flag("sequence: " + v);

  for (const auto& [c, s] : p.w.entries()) {
    if (!p.window.contains(c)) report.flag("stem coordinate outside window");
    if (!p.alpha.valid(s)) report.flag("stem symbol out of range");
  }
  // Disjointness via one global sort of every mentioned coordinate.
  std::vector<Coord> mentioned;
  for (const auto& [c, s] : p.w.entries()) mentioned.push_back(c);
  for (std::size_t j = 0; j < p.sigmas.size(); ++j) {
    const auto& sigma = p.sigmas[j];
    if (sigma.empty()) {
      report.flag("sigma " + std::to_string(j) + " is empty");
      continue;
    }
    for (const auto& [c, s] : sigma.entries()) {
      if (!p.window.contains(c)) report.flag("sigma coordinate outside window");
      if (!p.alpha.valid(s)) report.flag("sigma symbol out of range");
      mentioned.push_back(c);
    }
  }
  std::sort(mentioned.begin(), mentioned.end());
  if (std::adjacent_find(mentioned.begin(), mentioned.end()) != mentioned.end())
    report.flag("stem and sigma domains are not pairwise disjoint");

  // Block partition of the index set.
  std::set<std::size_t> assigned;
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    std::size_t m = p.m_star + k;
    if (m >= p.seq.size()) {
      if (!p.blocks[k].empty())
        report.flag("block at level " + std::to_string(m) + " is beyond the sequence prefix");
      continue;
    }
    BigInt cap = p.seq.n1(m) * big_pow(2, p.m_star);
    if (BigInt(p.blocks[k].size()) > cap)
      report.flag("block at level " + std::to_string(m) + " exceeds its size cap");
    for (std::size_t j : p.blocks[k]) {
      if (j >= p.sigmas.size()) {
        report.flag("block index out of range");
        continue;
      }
      if (!assigned.insert(j).second) report.flag("sigma assigned to two blocks");
      // |dom(sigma_j)| >= n0_m / 2^{m_star}, in cleared-denominator form.
      if (BigInt(p.sigmas[j].size()) * big_pow(2, p.m_star) < p.seq.n0(m))
        report.flag("sigma " + std::to_string(j) + " is too small for level " +
                    std::to_string(m));
    }
  }
  if (assigned.size() != p.sigmas.size())
    report.flag("block partition does not cover every sigma");
  return report;
}

void require_valid(const QCondition& p, Strictness mode) {
  auto report = validate_qcondition(p, mode);
  if (!report.ok) fail(Errc::bad_input, "invalid condition: " + report.issues.front());
}

bool qpos_member(const QCondition& p, const std::vector<Symbol>& x) {
  if (x.size() != p.window.size()) fail(Errc::bad_input, "assignment must be total on window");
  for (const auto& [c, s] : p.w.entries())
    if (x[*p.window.index_of(c)] != s) return false;
  for (const auto& sigma : p.sigmas) {
    bool contained = true;
    for (const auto& [c, s] : sigma.entries()) {
      if (x[*p.window.index_of(c)] != s) {
        contained = false;
        break;
      }
    }
    if (contained) return false;
  }
  return true;
}

namespace {

struct CompiledQ {
  CompiledPf stem;
  std::vector<CompiledPf> forbidden;
};

CompiledQ compile_q(const QCondition& p) {
  CompiledQ out;
  out.stem = compile_pf(p.window, p.w);
  for (const auto& sigma : p.sigmas) out.forbidden.push_back(compile_pf(p.window, sigma));
  return out;
}

bool compiled_member(const std::vector<Symbol>& x, const CompiledQ& c) {
  if (!extends(x, c.stem)) return false;
  for (const auto& sigma : c.forbidden)
    if (extends(x, sigma)) return false;
  return true;
}

}  // namespace

std::uint64_t qpos_count(const QCondition& p, const Budget& budget) {
  auto compiled = compile_q(p);
  PointEnumerator points(p.alpha, p.window, budget);
  std::vector<Symbol> x;
  std::uint64_t count = 0;
  while (points.next(x))
    if (compiled_member(x, compiled)) ++count;
  return count;
}

BigInt qpos_count_closed(const QCondition& p) {
  // Free coordinates times prod_j (|X|^{d_j} - 1) / |X|^{d_j}, assembled as
  // one integer: |X|^{free - sum d_j} * prod (|X|^{d_j} - 1).
  std::size_t free = p.window.size() - p.w.size();
  std::size_t pinned = 0;
  BigInt product = 1;
  BigInt x(p.alpha.size());
  for (const auto& sigma : p.sigmas) {
    pinned += sigma.size();
    product *= big_pow(x, sigma.size()) - 1;
  }
  if (pinned > free) fail(Errc::bad_input, "sigma domains escape the window");
  return big_pow(x, free - pinned) * product;
}

std::optional<std::vector<Symbol>> qpos_example(const QCondition& p, const Budget& budget) {
  auto compiled = compile_q(p);
  PointEnumerator points(p.alpha, p.window, budget);
  std::vector<Symbol> x;
  while (points.next(x))
    if (compiled_member(x, compiled)) return x;
  return std::nullopt;
}

bool qpos_subset(const QCondition& q, const QCondition& p, const Budget& budget) {
  if (!(q.window == p.window) || !(q.alpha == p.alpha))
    fail(Errc::bad_input, "POS comparison needs a shared window and alphabet");
  auto cq = compile_q(q);
  auto cp = compile_q(p);
  PointEnumerator points(q.alpha, q.window, budget);
  std::vector<Symbol> x;
  while (points.next(x))
    if (compiled_member(x, cq) && !compiled_member(x, cp)) return false;
  return true;
}

bool leq_syntactic(const QCondition& p, const QCondition& q) {
  if (!p.w.subfunction_of(q.w)) return false;
  for (const auto& sp : p.sigmas) {
    bool handled = false;
    for (const auto& sq : q.sigmas) {
      if (sq.subfunction_of(sp)) {
        handled = true;
        break;
      }
    }
    if (!handled) {
      for (const auto& [c, s] : sp.entries()) {
        auto v = q.w.at(c);
        if (v && *v != s) {
          handled = true;
          break;
        }
      }
    }
    if (!handled) return false;
  }
  return true;
}

}  // namespace packnorm::qhn
