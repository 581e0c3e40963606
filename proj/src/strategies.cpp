#include "prym/strategies.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <thread>

#include "prym/moves.hpp"
#include "prym/prototype.hpp"
#include "prym/tables.hpp"

namespace prym {

namespace {

constexpr int kPrimes[] = {3, 5, 7};

void check_step(int q) {
  int a = q < 0 ? -q : q;
  if (a != 3 && a != 5 && a != 7) throw std::invalid_argument("strategy step " + std::to_string(q) + " is not ±3, ±5 or ±7");
}

int shift(int q, int h) { return (q > 0 ? 4 : -4) * h * ((q < 0 ? -q : q) - 1); }

bool step_ok(std::int64_t d, std::int64_t e, int h, int q) {
  int a = q < 0 ? -q : q;
  std::int64_t base = q > 0 ? e : e + 4 * h;
  return mod_floor(d - base * base, a) != 0;
}

bool is_odd_prime(std::int64_t q) {
  if (q < 3 || q % 2 == 0) return false;
  for (std::int64_t k = 3; k * k <= q; k += 2)
    if (q % k == 0) return false;
  return true;
}

}  // namespace

std::string to_string(const Strategy& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

std::int64_t net_displacement(const Strategy& s) {
  std::int64_t total = 0;
  for (int q : s) {
    check_step(q);
    total += shift(q, 1);
  }
  return total;
}

bool strategy_applies(int d_res, int e_res, int h, const Strategy& s) {
  std::int64_t e = e_res;
  for (int q : s) {
    check_step(q);
    if (!step_ok(d_res, e, h, q)) return false;
    e = mod_floor(e + shift(q, h), kModulus);
  }
  return true;
}

std::optional<Strategy> search_strategy(int d_res, int e_res, int h, int max_len) {
  struct Node {
    Strategy seq;
    int offset;  // in units of h
  };
  std::deque<Node> queue{{{}, 0}};
  while (!queue.empty()) {
    Node n = queue.front();
    queue.pop_front();
    if (static_cast<int>(n.seq.size()) == max_len) continue;
    for (int a : kPrimes) {
      for (int q : {a, -a}) {
        std::int64_t e = mod_floor(e_res + static_cast<std::int64_t>(n.offset) * h, kModulus);
        if (!step_ok(d_res, e, h, q)) continue;
        int off = n.offset + shift(q, 1);
        if (off < -24 || off > 32) continue;
        Node next{n.seq, off};
        next.seq.push_back(q);
        if (off == 8) return next.seq;
        queue.push_back(std::move(next));
      }
    }
  }
  return std::nullopt;
}

StrategyScan strategy_scan(int h, unsigned threads) {
  if (h != 1 && h != 2) throw std::invalid_argument("h must be 1 or 2");
  StrategyScan scan;
  scan.h = h;
  scan.strategies = tables::strategies();
  const std::size_t k = scan.strategies.size();

  struct Row {
    std::vector<std::int64_t> first, any;
    std::vector<std::pair<int, int>> uncovered, search_uncovered;
  };
  std::vector<Row> rows(kModulus);
  auto work = [&](int d) {
    Row& r = rows[d];
    r.first.assign(k, 0);
    r.any.assign(k, 0);
    for (int e = 0; e < kModulus; ++e) {
      bool found = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (!strategy_applies(d, e, h, scan.strategies[i])) continue;
        ++r.any[i];
        if (!found) ++r.first[i];
        found = true;
      }
      if (!found) r.uncovered.emplace_back(d, e);
      if (!search_strategy(d, e, h)) r.search_uncovered.emplace_back(d, e);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int d = static_cast<int>(t); d < kModulus; d += static_cast<int>(threads)) work(d);
    });
  for (auto& th : pool) th.join();

  scan.first_match.assign(k, 0);
  scan.any_match.assign(k, 0);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < k; ++i) {
      scan.first_match[i] += r.first[i];
      scan.any_match[i] += r.any[i];
    }
    scan.uncovered.insert(scan.uncovered.end(), r.uncovered.begin(), r.uncovered.end());
    scan.search_uncovered.insert(scan.search_uncovered.end(), r.search_uncovered.begin(), r.search_uncovered.end());
  }
  return scan;
}

std::optional<Strategy> find_strategy(std::int64_t D, std::int64_t e, int h) {
  int d = static_cast<int>(mod_floor(D, kModulus)), r = static_cast<int>(mod_floor(e, kModulus));
  for (const auto& s : tables::strategies())
    if (strategy_applies(d, r, h, s)) return s;
  return std::nullopt;
}

RangeSets::RangeSets(std::int64_t D, int h) : D_(D), h_(h) {
  if (h != 1 && h != 2) throw std::invalid_argument("h must be 1 or 2");
}

bool RangeSets::in_s(std::int64_t e) const { return in_reduced_set(D_, h_, e); }

bool RangeSets::in_t(std::int64_t e) const { return in_s(e) && in_s(e - 24 * h_) && in_s(e + 32 * h_); }

bool RangeSets::in_u(std::int64_t e) const {
  return in_t(e) && mod_floor(e + 2 * h_, kModulus) != 0;
}

std::vector<std::int64_t> RangeSets::t_set() const {
  std::vector<std::int64_t> out;
  for (std::int64_t e : reduced_e_set(D_, h_))
    if (in_t(e)) out.push_back(e);
  if (D_ > 36 * 36 * h_ * h_) {
    for (std::int64_t e : out)
      if (e >= -2 * h_ && !in_t(-e - 4 * h_))
        throw std::logic_error("T is not closed under e -> -e-4h at e=" + std::to_string(e));
  }
  return out;
}

std::vector<WalkStep> walk_to_t(std::int64_t D, int h, std::int64_t e, std::int64_t budget) {
  const std::int64_t bound = (h == 1 ? 55 : 63) * h;
  if (D < bound * bound) throw WalkError("walk needs D >= " + std::to_string(bound * bound));
  RangeSets sets(D, h);
  if (!sets.in_s(e)) throw WalkError(std::to_string(e) + " is not in S");
  std::vector<WalkStep> steps;
  if (sets.in_t(e)) return steps;
  if (e > -2 * h) {
    steps.push_back({0, e, -e - 4 * h});
    e = -e - 4 * h;
  }
  std::int64_t tried = 0;
  while (!sets.in_t(e)) {
    std::optional<std::int64_t> chosen;
    for (std::int64_t q = 3; !chosen; q += 2) {
      if (!is_odd_prime(q)) continue;
      if (++tried > budget) throw WalkError("no usable prime within budget");
      if (f_move_admissible(e, h, D, static_cast<int>(q))) chosen = q;
    }
    std::int64_t next = f_move(e, h, D, static_cast<int>(*chosen));
    steps.push_back({static_cast<int>(*chosen), e, next});
    e = next;
  }
  return steps;
}

std::int64_t run_strategy(std::int64_t D, std::int64_t e, int h, const Strategy& s) {
  std::int64_t cur = e;
  for (int q : s) cur = f_move(cur, h, D, q);
  if (cur != e + 8 * h) throw std::logic_error("strategy " + to_string(s) + " did not end at e+8h");
  return cur;
}

}  // namespace prym
