#include "gmcr/oracle.hpp"

#include <functional>

#include "gmcr/error.hpp"
#include "gmcr/stability.hpp"

namespace gmcr {
namespace {

using Matrix = std::vector<std::vector<char>>;

// Brute-force re-derivation. Everything is indexed 0..n-1 and recomputed from
// the raw model: move arcs pair-by-pair, preferences by scanning tiers,
// sequence reachability by Warshall closure over (state, last mover) nodes.
class BruteForce {
 public:
  explicit BruteForce(const ConflictModel& model)
      : model_(model), n_(model.space.size()), m_(model.dms.size()) {
    arcs_.assign(m_, Matrix(n_, std::vector<char>(n_, 0)));
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) arcs_[i][a][b] = arc(i, a, b);
  }

  std::size_t states() const { return n_; }
  std::size_t dms() const { return m_; }

  // Position of the state in the DM's tier list; lower is better.
  std::size_t tier(std::size_t i, std::size_t s) const {
    const auto& tiers = (*model_.preferences)[orderIndex(i)].tiers();
    for (std::size_t t = 0; t < tiers.size(); ++t)
      for (StateId x : tiers[t])
        if (static_cast<std::size_t>(x - 1) == s) return t;
    throw ModelError("oracle: unranked state");
  }
  bool better(std::size_t i, std::size_t a, std::size_t b) const { return tier(i, a) < tier(i, b); }
  bool noBetter(std::size_t i, std::size_t a, std::size_t b) const { return tier(i, a) >= tier(i, b); }

  bool move(std::size_t i, std::size_t a, std::size_t b) const { return arcs_[i][a][b]; }
  bool improve(std::size_t i, std::size_t a, std::size_t b) const {
    return arcs_[i][a][b] && better(i, b, a);
  }

  // reach[a][b]: b is the end of some non-empty legal sequence from a whose
  // movers are in `mask`. With `improving`, every step must improve its mover.
  Matrix sequences(unsigned mask, bool improving) const {
    // Node (s, last) with last in 0..m_; m_ stands for "nobody yet".
    const std::size_t nodes = n_ * (m_ + 1);
    auto id = [this](std::size_t s, std::size_t last) { return s * (m_ + 1) + last; };
    Matrix closure(nodes, std::vector<char>(nodes, 0));
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t last = 0; last <= m_; ++last)
        for (std::size_t i = 0; i < m_; ++i) {
          if (!(mask & (1u << i)) || i == last) continue;
          for (std::size_t t = 0; t < n_; ++t)
            if (improving ? improve(i, s, t) : move(i, s, t)) closure[id(s, last)][id(t, i)] = 1;
        }
    for (std::size_t k = 0; k < nodes; ++k)
      for (std::size_t x = 0; x < nodes; ++x)
        if (closure[x][k])
          for (std::size_t y = 0; y < nodes; ++y)
            if (closure[k][y]) closure[x][y] = 1;
    Matrix out(n_, std::vector<char>(n_, 0));
    for (std::size_t s = 0; s < n_; ++s)
      for (std::size_t t = 0; t < n_; ++t)
        for (std::size_t i = 0; i < m_; ++i)
          if (closure[id(s, m_)][id(t, i)]) out[s][t] = 1;
    return out;
  }

 private:
  std::size_t orderIndex(std::size_t i) const {
    const DmId dm = model_.dms[i].id;
    const auto& orders = *model_.preferences;
    for (std::size_t k = 0; k < orders.size(); ++k)
      if (orders[k].dm() == dm) return k;
    throw ModelError("oracle: missing preference order");
  }

  bool arc(std::size_t i, std::size_t a, std::size_t b) const {
    if (a == b) return false;
    const DmId dm = model_.dms[i].id;
    const auto sa = static_cast<StateId>(a + 1);
    const auto sb = static_cast<StateId>(b + 1);
    switch (model_.policy.kind) {
      case PolicyKind::Explicit: {
        auto d = model_.policy.adjacency.find(dm);
        if (d == model_.policy.adjacency.end()) return false;
        auto r = d->second.find(sa);
        return r != d->second.end() && r->second.count(sb);
      }
      case PolicyKind::FixedOthers:
      case PolicyKind::EntailmentDrift: {
        const auto& from = model_.space.assignments()[a];
        const auto& to = model_.space.assignments()[b];
        for (std::size_t o = 0; o < from.size(); ++o) {
          const auto& opt = model_.options[o];
          bool ok;
          if (opt.controller == dm)
            ok = opt.ownTransitions.contains(from[o], to[o]);
          else if (model_.policy.kind == PolicyKind::FixedOthers)
            ok = from[o] == to[o];
          else
            ok = driftPair(from[o], to[o]);
          if (!ok) return false;
        }
        return true;
      }
    }
    return false;
  }

  // Spelled out independently of b4-core's table.
  static bool driftPair(TruthValue src, TruthValue dst) {
    using enum TruthValue;
    return (src == B && (dst == B || dst == F)) || (src == N && (dst == N || dst == F)) ||
           (src == T && (dst == T || dst == B || dst == N));
  }

  const ConflictModel& model_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Matrix> arcs_;
};

}  // namespace

std::string toString(const Discrepancy& d) {
  std::string out = d.row;
  if (d.dm) out += " dm=" + std::to_string(d.dm);
  out += " s" + std::to_string(d.state) + ": oracle " + (d.oracle ? "stable" : "unstable") +
         ", analysis " + (d.analyzed ? "stable" : "unstable");
  return out;
}

std::vector<Discrepancy> oracleCheck(const ConflictModel& model, std::size_t bound) {
  if (model.space.size() > bound)
    throw ModelError("oracle bound exceeded: " + std::to_string(model.space.size()) +
                     " states > " + std::to_string(bound));
  const StabilityReport report = analyze(model);
  const BruteForce bf(model);
  const std::size_t n = bf.states();
  const std::size_t m = bf.dms();
  const unsigned everyone = (1u << m) - 1;

  std::map<std::pair<unsigned, bool>, Matrix> seq;
  auto sequences = [&](unsigned mask, bool improving) -> const Matrix& {
    auto key = std::make_pair(mask, improving);
    auto it = seq.find(key);
    if (it == seq.end()) it = seq.emplace(key, bf.sequences(mask, improving)).first;
    return it->second;
  };

  // Coalition improvement targets from s for coalition `mask`.
  auto improvements = [&](unsigned mask, std::size_t s) {
    std::vector<std::size_t> out;
    const auto& r = sequences(mask, false);
    for (std::size_t t = 0; t < n; ++t) {
      if (!r[s][t]) continue;
      bool all = true;
      for (std::size_t j = 0; j < m; ++j)
        if ((mask & (1u << j)) && !bf.better(j, t, s)) all = false;
      if (all) out.push_back(t);
    }
    return out;
  };

  // GMR/SMR/SEQ and their coalition forms differ only in which coalitions
  // are quantified and in the sanction test.
  using Sanction = std::function<bool(std::size_t i, unsigned mask, std::size_t s, std::size_t next)>;
  auto stableUnder = [&](std::size_t i, std::size_t s, bool coalitions, const Sanction& ok) {
    for (unsigned mask = 1; mask <= everyone; ++mask) {
      if (!(mask & (1u << i))) continue;
      if (!coalitions && mask != (1u << i)) continue;
      const unsigned rest = everyone & ~mask;
      for (std::size_t next : improvements(mask, s)) {
        if (rest == 0) return false;
        if (!ok(i, mask, s, next)) return false;
      }
    }
    return true;
  };

  const Sanction anyAnswer = [&](std::size_t i, unsigned mask, std::size_t s, std::size_t next) {
    const auto& r = sequences(everyone & ~mask, false);
    for (std::size_t x = 0; x < n; ++x)
      if (r[next][x] && bf.noBetter(i, x, s)) return true;
    return false;
  };
  const Sanction inescapable = [&](std::size_t i, unsigned mask, std::size_t s, std::size_t next) {
    const auto& r = sequences(everyone & ~mask, false);
    const auto& back = sequences(mask, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (!r[next][x] || !bf.noBetter(i, x, s)) continue;
      bool contained = true;
      for (std::size_t y = 0; y < n; ++y)
        if (back[x][y] && !bf.noBetter(i, y, s)) contained = false;
      if (contained) return true;
    }
    return false;
  };
  const Sanction credible = [&](std::size_t i, unsigned mask, std::size_t s, std::size_t next) {
    const auto& r = sequences(everyone & ~mask, true);
    for (std::size_t x = 0; x < n; ++x)
      if (r[next][x] && bf.noBetter(i, x, s)) return true;
    return false;
  };
  const Sanction never = [](std::size_t, unsigned, std::size_t, std::size_t) { return false; };

  std::vector<Discrepancy> out;
  auto expect = [&](Concept c, std::size_t i, std::size_t s, bool verdict) {
    const DmId dm = model.dms[i].id;
    const auto state = static_cast<StateId>(s + 1);
    const bool analyzed = report.stable(c, dm, state);
    if (analyzed != verdict) out.push_back({std::string(toString(c)), dm, state, verdict, analyzed});
  };

  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < m; ++i) {
      expect(Concept::Nash, i, s, stableUnder(i, s, false, never));
      expect(Concept::GMR, i, s, stableUnder(i, s, false, anyAnswer));
      expect(Concept::SMR, i, s, stableUnder(i, s, false, inescapable));
      expect(Concept::SEQ, i, s, stableUnder(i, s, false, credible));
      expect(Concept::CNash, i, s, stableUnder(i, s, true, never));
      expect(Concept::CGMR, i, s, stableUnder(i, s, true, anyAnswer));
      expect(Concept::CSMR, i, s, stableUnder(i, s, true, inescapable));
      expect(Concept::CSEQ, i, s, stableUnder(i, s, true, credible));
    }
    bool pareto = true;
    for (std::size_t t = 0; t < n && pareto; ++t) {
      if (t == s) continue;
      bool weak = true, strict = false;
      for (std::size_t i = 0; i < m; ++i) {
        if (bf.better(i, s, t)) weak = false;
        if (bf.better(i, t, s)) strict = true;
      }
      if (weak && strict) pareto = false;
    }
    const auto state = static_cast<StateId>(s + 1);
    const bool analyzed = report.pareto.count(state) != 0;
    if (analyzed != pareto) out.push_back({"Pareto", 0, state, pareto, analyzed});
  }
  return out;
}

}  // namespace gmcr
