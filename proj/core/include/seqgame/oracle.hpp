// Plain recursive minimax over GameRules.
//
// Shares the rules with the engine but none of the selection machinery, so
// agreement between the two is evidence that the products compute minimax.
// Slow on purpose: no pruning, no caching.

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "seqgame/engine.hpp"
#include "seqgame/outcome.hpp"

namespace seqgame::oracle {

// Preference of `d` between two scored outcomes: greater means o1 is
// preferred. Values compare first; among equal values the side that is
// winning (or drawing) wants fewer moves and the losing side wants more.
constexpr std::strong_ordering compare_scored(Direction d, const ScoredOutcome& o1,
                                              const ScoredOutcome& o2) noexcept {
  const bool maximize = d == Direction::Maximize;
  if (o1.value != o2.value) {
    return maximize ? o1.value <=> o2.value : o2.value <=> o1.value;
  }
  const bool losing = maximize ? o1.value < 0 : o1.value > 0;
  return losing ? o1.moves <=> o2.moves : o2.moves <=> o1.moves;
}

template <class R>
constexpr std::strong_ordering compare(Direction d, const R& a, const R& b) {
  if constexpr (std::is_same_v<R, ScoredOutcome>) {
    return compare_scored(d, a, b);
  } else {
    if (a == b) return std::strong_ordering::equal;
    const bool less = a < b;
    if (d == Direction::Maximize) {
      return less ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return less ? std::strong_ordering::greater : std::strong_ordering::less;
  }
}

namespace detail {

template <class Move, class R>
R search(const GameRules<Move, R>& rules, std::vector<Move>& history, std::size_t depth,
         std::vector<Move>* line) {
  if (depth == 0 || rules.is_finished(history)) return rules.payoff(history);
  const std::vector<Move> moves = rules.possible_moves(history);
  if (moves.empty()) return rules.payoff(history);
  const Direction d = rules.direction_at(history.size());
  R best{};
  bool have = false;
  std::vector<Move> best_line;
  std::vector<Move> child_line;
  for (const Move& m : moves) {
    history.push_back(m);
    child_line.clear();
    R v = search(rules, history, depth - 1, line ? &child_line : nullptr);
    history.pop_back();
    if (!have || compare(d, v, best) > 0) {
      best = std::move(v);
      have = true;
      if (line) {
        best_line.assign(1, m);
        best_line.insert(best_line.end(), child_line.begin(), child_line.end());
      }
    }
  }
  if (line) *line = std::move(best_line);
  return best;
}

}  // namespace detail

template <class Move, class R>
R minimax_value(const GameRules<Move, R>& rules, std::span<const Move> history,
                std::size_t depth) {
  std::vector<Move> h(history.begin(), history.end());
  return detail::search(rules, h, depth, static_cast<std::vector<Move>*>(nullptr));
}

// One line attaining minimax_value; ties go to the earliest move. The payoff
// of history ++ line equals minimax_value(rules, history, depth).
template <class Move, class R>
std::vector<Move> best_line(const GameRules<Move, R>& rules, std::span<const Move> history,
                            std::size_t depth) {
  std::vector<Move> h(history.begin(), history.end());
  std::vector<Move> line;
  detail::search(rules, h, depth, &line);
  return line;
}

}  // namespace seqgame::oracle
