#include "packnorm/qhn_compat.hpp"

#include <algorithm>

#include "packnorm/error.hpp"
#include "packnorm/matching.hpp"

namespace packnorm::qhn {

namespace {

void require_comparable(const QCondition& p0, const QCondition& p1) {
  if (!(p0.window == p1.window) || !(p0.alpha == p1.alpha))
    fail(Errc::bad_input, "conditions must share the window and alphabet");
  if (!(p0.seq == p1.seq)) fail(Errc::bad_input, "conditions must share the sequence prefix");
}

std::size_t size_t_from(const BigInt& v, std::size_t limit, Errc code, const char* what) {
  if (v < 0 || v > BigInt(limit)) fail(code, what);
  return v.convert_to<std::size_t>();
}

std::string pf_repr(const PartialFunction& pf) {
  std::string out = "(";
  for (const auto& [c, s] : pf.entries())
    out += std::to_string(c) + "=" + std::to_string(s) + ",";
  out += ")";
  return out;
}

}  // namespace

std::optional<std::vector<Symbol>> compatible_bruteforce(const QCondition& p0,
                                                         const QCondition& p1,
                                                         const Budget& budget) {
  require_comparable(p0, p1);
  PointEnumerator points(p0.alpha, p0.window, budget);
  std::vector<Symbol> x;
  while (points.next(x))
    if (qpos_member(p0, x) && qpos_member(p1, x)) return x;
  return std::nullopt;
}

std::vector<Window> hall_select_u(const std::vector<HallRequest>& requests) {
  Window pool;
  for (const auto& r : requests) pool = Window::set_union(pool, r.domain);
  BipartiteMatcher matcher(pool.size());
  std::vector<std::size_t> owner;  // left node -> request index
  for (std::size_t i = 0; i < requests.size(); ++i) {
    std::vector<std::size_t> adjacency;
    adjacency.reserve(requests[i].domain.size());
    for (Coord c : requests[i].domain.coords()) adjacency.push_back(*pool.index_of(c));
    for (std::size_t copy = 0; copy < requests[i].count; ++copy) {
      matcher.add_left(adjacency);
      owner.push_back(i);
    }
  }
  matcher.solve();
  if (!matcher.perfect_left())
    fail(Errc::no_selection, "the expanded request system violates Hall's condition");
  std::vector<std::vector<Coord>> picked(requests.size());
  for (std::size_t l = 0; l < owner.size(); ++l)
    picked[owner[l]].push_back(pool.coords()[*matcher.matched_right(l)]);
  std::vector<Window> out;
  out.reserve(requests.size());
  for (auto& coords : picked) out.emplace_back(std::move(coords));
  return out;
}

QCondition compatible_constructive(const QCondition& p0, const QCondition& p1,
                                   const std::vector<Symbol>& witness, Strictness mode,
                                   const Budget& budget) {
  require_comparable(p0, p1);
  require_valid(p0, mode);
  require_valid(p1, mode);
  if (!qpos_member(p0, witness) || !qpos_member(p1, witness))
    fail(Errc::bad_input, "witness must lie in both POS sets");

  const NormSeqPrefix& seq = p0.seq;
  Window stems = Window::set_union(p0.w.domain(), p1.w.domain());
  std::uint32_t m_star = p0.m_star + p1.m_star + 3;
  while ((std::uint64_t{1} << (m_star + 1)) <= stems.size()) ++m_star;
  if (m_star >= seq.size())
    fail(Errc::truncation_too_short,
         "level " + std::to_string(m_star) + " is beyond the sequence prefix");

  // One violated coordinate per low-level sigma, harvested from the witness.
  std::vector<Coord> pins(stems.coords());
  const QCondition* conds[2] = {&p0, &p1};
  for (const QCondition* p : conds) {
    for (std::size_t k = 0; k < p->blocks.size(); ++k) {
      std::uint32_t m = p->m_star + static_cast<std::uint32_t>(k);
      if (m >= m_star) continue;
      for (std::size_t j : p->blocks[k]) {
        const auto& sigma = p->sigmas[j];
        bool pinned = false;
        for (const auto& [c, s] : sigma.entries()) {
          if (witness[*p->window.index_of(c)] != s) {
            pins.push_back(c);
            pinned = true;
            break;
          }
        }
        if (!pinned) fail(Errc::bad_input, "witness extends a forbidden cylinder");
      }
    }
  }
  Window a(std::move(pins));
  if (!(BigInt(a.size()) * big_pow(2, m_star) < seq.n0(m_star)))
    fail(Errc::truncation_too_short, "pinned-set cardinality clause fails at the truncation");

  // Shrink the high-level sigmas off the pinned set and select disjoint
  // sub-sigmas of the certified size.
  struct HighSigma {
    const QCondition* p;
    std::size_t j;
    std::uint32_t m;
  };
  std::vector<HighSigma> high;
  std::vector<HallRequest> requests;
  for (const QCondition* p : conds) {
    for (std::size_t k = 0; k < p->blocks.size(); ++k) {
      std::uint32_t m = p->m_star + static_cast<std::uint32_t>(k);
      if (m < m_star) continue;
      for (std::size_t j : p->blocks[k]) {
        Window shrunk = p->sigmas[j].domain().minus(a);
        if (mode == Strictness::strict &&
            !(BigInt(shrunk.size()) * big_pow(2, m_star) > 4 * seq.n0(m)))
          throw std::logic_error("high sigma lost too many coordinates");
        BigInt y = seq.n0(m) / big_pow(2, m_star) + 1;
        std::size_t count =
            size_t_from(y, p->window.size(), Errc::no_selection,
                        "required representative count exceeds the window");
        high.push_back({p, j, m});
        requests.push_back({std::move(shrunk), count});
      }
    }
  }
  std::vector<Window> selected = hall_select_u(requests);

  std::vector<PartialFunction> sigmas;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < high.size(); ++i) {
    sigmas.push_back(high[i].p->sigmas[high[i].j].restrict_to(selected[i]));
    std::size_t level_index = high[i].m - m_star;
    if (blocks.size() <= level_index) blocks.resize(level_index + 1);
    blocks[level_index].push_back(sigmas.size() - 1);
  }

  std::vector<std::pair<Coord, Symbol>> stem_entries;
  for (Coord c : a.coords()) stem_entries.emplace_back(c, witness[*p0.window.index_of(c)]);

  QCondition q = make_qcondition(p0.alpha, p0.window, PartialFunction(std::move(stem_entries)),
                                 std::move(sigmas), m_star, std::move(blocks), seq);
  require_valid(q, mode);
  if (!leq_syntactic(p0, q) || !leq_syntactic(p1, q))
    throw std::logic_error("constructed bound is not above both inputs");
  (void)budget;
  return q;
}

std::optional<QCondition> compatible_constructive(const QCondition& p0, const QCondition& p1,
                                                  Strictness mode, const Budget& budget) {
  auto witness = compatible_bruteforce(p0, p1, budget);
  if (!witness) return std::nullopt;
  return compatible_constructive(p0, p1, *witness, mode, budget);
}

std::string class_key(const QCondition& p, std::size_t n) {
  std::string key = "n=" + std::to_string(n) + ";m*=" + std::to_string(p.m_star) +
                    ";w=" + pf_repr(p.w) + ";levels=";
  for (std::size_t k = 0; k < n + 2; ++k) {
    key += "[";
    if (k < p.blocks.size()) {
      // Block indices are sorted and sigmas are canonical, so this listing
      // is order-independent of how the condition was assembled.
      for (std::size_t j : p.blocks[k]) key += pf_repr(p.sigmas[j]);
    }
    key += "]";
  }
  return key;
}

QCondition amalgamate_class(const std::vector<QCondition>& ps, Strictness mode,
                            const Budget& budget) {
  if (ps.empty()) fail(Errc::bad_input, "amalgamate_class needs at least one condition");
  std::size_t n = ps.size() - 1;
  for (const auto& p : ps) {
    require_valid(p, mode);
    if (!(p.window == ps[0].window) || !(p.alpha == ps[0].alpha))
      fail(Errc::bad_input, "conditions must share the window and alphabet");
    if (!(p.seq == ps[0].seq)) fail(Errc::bad_input, "conditions must share the sequence prefix");
  }
  std::string key = class_key(ps[0], n);
  for (const auto& p : ps)
    if (class_key(p, n) != key) fail(Errc::key_mismatch, "conditions are in different classes");

  const QCondition& p0 = ps[0];
  const NormSeqPrefix& seq = p0.seq;
  std::uint32_t new_m = p0.m_star + static_cast<std::uint32_t>(n) + 2;

  // Decide the shared low levels: conflict every low sigma at every coordinate.
  PartialFunction w_q = p0.w;
  for (std::size_t k = 0; k < p0.blocks.size() && k < n + 2; ++k) {
    for (std::size_t j : p0.blocks[k]) {
      for (const auto& [c, s] : p0.sigmas[j].entries())
        w_q = w_q.with_entry(c, s == 0 ? 1 : 0);
    }
  }

  // Hall-select disjoint sub-sigmas inside every high-level sigma.
  struct HighSigma {
    const QCondition* p;
    std::size_t j;
    std::uint32_t m;
  };
  std::vector<HighSigma> high;
  std::vector<HallRequest> requests;
  for (const auto& p : ps) {
    for (std::size_t k = n + 2; k < p.blocks.size(); ++k) {
      std::uint32_t m = p.m_star + static_cast<std::uint32_t>(k);
      for (std::size_t j : p.blocks[k]) {
        BigInt y = seq.n0(m) / big_pow(2, p0.m_star + static_cast<std::uint64_t>(n) + 1) + 1;
        std::size_t count = size_t_from(y, p.window.size(), Errc::insufficient_capacity,
                                        "required representative count exceeds the window");
        high.push_back({&p, j, m});
        requests.push_back({p.sigmas[j].domain(), count});
      }
    }
  }
  std::vector<Window> selected;
  try {
    selected = hall_select_u(requests);
  } catch (const Error& e) {
    if (e.code() == Errc::no_selection)
      fail(Errc::insufficient_capacity, "no disjoint selection at these parameters");
    throw;
  }

  std::vector<PartialFunction> sigmas;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < high.size(); ++i) {
    sigmas.push_back(high[i].p->sigmas[high[i].j].restrict_to(selected[i]));
    std::size_t level_index = high[i].m - new_m;
    if (blocks.size() <= level_index) blocks.resize(level_index + 1);
    blocks[level_index].push_back(sigmas.size() - 1);
  }

  QCondition q = make_qcondition(p0.alpha, p0.window, std::move(w_q), std::move(sigmas),
                                 new_m, std::move(blocks), seq);
  require_valid(q, mode);
  for (const auto& p : ps)
    if (!leq_syntactic(p, q))
      throw std::logic_error("class amalgam is not above an input");
  (void)budget;
  return q;
}

}  // namespace packnorm::qhn
