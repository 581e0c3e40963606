#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "prym/components.hpp"
#include "prym/moves.hpp"
#include "prym/surface.hpp"
#include "prym/tables.hpp"

namespace prym::testing {

inline ButterflyParam parse_butterfly(const std::string& m) {
  if (m == "B_inf") return ButterflyParam::infinite();
  return ButterflyParam::finite(std::stoll(m.substr(1)));
}

// One chain step on p. Butterflies use the formula layer; switches and the
// Model B decomposition are read off the traced surface.
inline Prototype apply_step(const Prototype& p, const std::string& move) {
  if (move[0] == 'B') return butterfly(p, parse_butterfly(move));
  auto s = build_prototype_surface(p);
  if (move == "ModelBSplit") {
    auto mb = model_b_of_reduced(p);
    return *traced_move(s, Direction::slope(mb.slope), MoveKind::ModelBSplit, move).target;
  }
  auto sw = switch_move(p, move[1] - '0');
  if (!sw.admissible) throw MoveError(move + " not admissible on " + p.str());
  auto m = traced_move(s, *sw.slope, MoveKind::Switch, move);
  if (m.target_e != sw.e) throw std::logic_error(move + " formula and trace disagree on " + p.str());
  return *m.target;
}

// Returns an empty string if every step reproduces its quoted target.
inline std::string replay(const tables::Chain& ch) {
  Prototype cur = ch.start;
  for (const auto& st : ch.steps) {
    Prototype next = apply_step(cur, st.move);
    bool ok = st.target.w == 0 ? next.e == st.target.e : next == st.target;
    if (!ok) return "D=" + std::to_string(ch.D) + ": " + st.move + " on " + cur.str() + " gives " + next.str();
    cur = next;
  }
  return "";
}

inline std::vector<ButterflyParam> all_params(const Prototype& p) {
  std::vector<ButterflyParam> v{ButterflyParam::infinite()};
  for (std::int64_t q = 1; q <= max_butterfly_q(p); ++q) v.push_back(ButterflyParam::finite(q));
  return v;
}

// Breadth-first closure, independent of the union-find in the library.
inline std::set<std::set<Prototype>> bfs_components(std::int64_t D, Level level) {
  Filter f = level == Level::PA ? Filter::A : level == Level::S1 ? Filter::Reduced1 : Filter::Reduced2;
  auto universe = enumerate(D, f);
  std::set<Prototype> inside(universe.begin(), universe.end()), done;
  std::set<std::set<Prototype>> out;
  for (const auto& start : universe) {
    if (done.count(start)) continue;
    std::set<Prototype> comp{start};
    std::deque<Prototype> queue{start};
    while (!queue.empty()) {
      Prototype p = queue.front();
      queue.pop_front();
      for (const auto& bp : all_params(p)) {
        Prototype q = butterfly(p, bp);
        if (inside.count(q) && comp.insert(q).second) queue.push_back(q);
      }
    }
    done.insert(comp.begin(), comp.end());
    out.insert(comp);
  }
  // merge overlapping classes until stable
  bool merged = true;
  while (merged) {
    merged = false;
    for (auto a = out.begin(); a != out.end() && !merged; ++a)
      for (auto b = std::next(a); b != out.end() && !merged; ++b) {
        bool meet = std::any_of(a->begin(), a->end(), [&](const Prototype& p) { return b->count(p) > 0; });
        if (!meet) continue;
        std::set<Prototype> aa = *a, bb = *b, u = aa;
        u.insert(bb.begin(), bb.end());
        out.erase(aa);
        out.erase(bb);
        out.insert(u);
        merged = true;
      }
  }
  return out;
}

}  // namespace prym::testing
