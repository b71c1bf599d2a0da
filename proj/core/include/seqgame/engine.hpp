// Game-facing layer over the selection products.
//
// A game is a GameRules bundle: legal continuations of a history and the
// payoff of a history. The engine builds one history selector per ply,
// alternating direction for two-player games, and runs their product against
// the payoff to obtain an optimal play.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "seqgame/outcome.hpp"
#include "seqgame/selection.hpp"
#include "seqgame/selectors.hpp"

namespace seqgame {

enum class SelectorKind { Generic, ThreeValued, Boolean, Scored, GenericParallel, ScoredParallel };

inline constexpr SelectorKind kAllSelectorKinds[] = {
    SelectorKind::Generic, SelectorKind::ThreeValued,     SelectorKind::Boolean,
    SelectorKind::Scored,  SelectorKind::GenericParallel, SelectorKind::ScoredParallel};

constexpr std::string_view to_string(SelectorKind k) noexcept {
  switch (k) {
    case SelectorKind::Generic: return "generic";
    case SelectorKind::ThreeValued: return "three";
    case SelectorKind::Boolean: return "bool";
    case SelectorKind::Scored: return "scored";
    case SelectorKind::GenericParallel: return "generic-parallel";
    case SelectorKind::ScoredParallel: return "scored-parallel";
  }
  return "?";
}

inline std::optional<SelectorKind> parse_selector_kind(std::string_view name) {
  for (SelectorKind k : kAllSelectorKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

enum class Turns { Alternating, SinglePlayer };

template <class Move, class R>
struct GameRules {
  using move_type = Move;
  using outcome_type = R;

  std::function<std::vector<Move>(std::span<const Move>)> possible_moves;
  std::function<R(std::span<const Move>)> payoff;
  Direction first_player_direction = Direction::Maximize;
  std::size_t max_game_length = 0;
  Turns turns = Turns::Alternating;
  // Optional: true once the payoff of a history can no longer change.
  std::function<bool(std::span<const Move>)> finished;

  bool is_finished(std::span<const Move> h) const { return finished && finished(h); }

  Direction direction_at(std::size_t ply) const {
    if (turns == Turns::SinglePlayer || ply % 2 == 0) return first_player_direction;
    return opposite(first_player_direction);
  }
};

class GameOver : public std::runtime_error {
 public:
  GameOver() : std::runtime_error("game over: no legal continuation") {}
};

class SelectorMismatch : public std::invalid_argument {
 public:
  explicit SelectorMismatch(SelectorKind k)
      : std::invalid_argument("selector kind '" + std::string(to_string(k)) +
                              "' does not fit this outcome type") {}
};

template <class R>
constexpr bool selector_applicable(SelectorKind k) noexcept {
  switch (k) {
    case SelectorKind::Generic:
    case SelectorKind::GenericParallel: return std::totally_ordered<R>;
    case SelectorKind::ThreeValued: return std::is_same_v<R, Three>;
    case SelectorKind::Boolean: return std::is_same_v<R, bool>;
    case SelectorKind::Scored:
    case SelectorKind::ScoredParallel: return std::is_same_v<R, ScoredOutcome>;
  }
  return false;
}

template <class R, class X>
Selection<X, R> make_selector(SelectorKind kind, Direction d, std::vector<X> xs) {
  switch (kind) {
    case SelectorKind::Generic:
      if constexpr (std::totally_ordered<R>) return extremum_generic<R>(d, std::move(xs));
      break;
    case SelectorKind::GenericParallel:
      if constexpr (std::totally_ordered<R>) {
        return extremum_generic_parallel<R>(d, std::move(xs));
      }
      break;
    case SelectorKind::ThreeValued:
      if constexpr (std::is_same_v<R, Three>) return extremum_three(d, std::move(xs));
      break;
    case SelectorKind::Boolean:
      if constexpr (std::is_same_v<R, bool>) return extremum_bool(d, std::move(xs));
      break;
    case SelectorKind::Scored:
      if constexpr (std::is_same_v<R, ScoredOutcome>) return extremum_scored(d, std::move(xs));
      break;
    case SelectorKind::ScoredParallel:
      if constexpr (std::is_same_v<R, ScoredOutcome>) {
        return extremum_scored_parallel(d, std::move(xs));
      }
      break;
  }
  throw SelectorMismatch(kind);
}

// Number of selectors a search from `prior_length` moves gets: the lookahead,
// clamped to the moves left in the game.
inline std::size_t search_length(std::size_t lookahead, std::size_t max_game_length,
                                 std::size_t prior_length) {
  const std::size_t remaining =
      max_game_length > prior_length ? max_game_length - prior_length : 0;
  return std::min(lookahead, remaining);
}

// Entry k selects over the legal continuations of prior_history ++ partial,
// in the direction of the side to move at that ply. A partial history with no
// legal continuation yields no selector, which ends the play there.
template <class Move, class R>
std::vector<HistorySelector<Move, R>> build_selectors(const GameRules<Move, R>& rules,
                                                      SelectorKind kind, std::size_t lookahead,
                                                      std::span<const Move> prior_history = {}) {
  if (!selector_applicable<R>(kind)) throw SelectorMismatch(kind);
  const std::size_t n = search_length(lookahead, rules.max_game_length, prior_history.size());
  const std::vector<Move> prior(prior_history.begin(), prior_history.end());
  std::vector<HistorySelector<Move, R>> selectors;
  selectors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Direction d = rules.direction_at(prior.size() + k);
    selectors.push_back(
        [possible = rules.possible_moves, prior, kind, d](
            std::span<const Move> partial) -> std::optional<Selection<Move, R>> {
          std::vector<Move> moves;
          if (prior.empty()) {
            moves = possible(partial);
          } else {
            std::vector<Move> h;
            h.reserve(prior.size() + partial.size());
            h.insert(h.end(), prior.begin(), prior.end());
            h.insert(h.end(), partial.begin(), partial.end());
            moves = possible(h);
          }
          if (moves.empty()) return std::nullopt;
          return make_selector<R>(kind, d, std::move(moves));
        });
  }
  return selectors;
}

template <class Move, class R>
std::vector<Move> optimal_play(const GameRules<Move, R>& rules,
                               std::vector<HistorySelector<Move, R>> selectors) {
  const auto& payoff = rules.payoff;
  return sequence_product(std::move(selectors))(
      [&payoff](const std::vector<Move>& play) { return payoff(play); });
}

template <class Move, class R>
R optimal_outcome(const GameRules<Move, R>& rules,
                  std::vector<HistorySelector<Move, R>> selectors) {
  return rules.payoff(optimal_play(rules, std::move(selectors)));
}

// The optimal play continuing `prior_history`, searching `lookahead` plies
// (clamped to the end of the game). The payoff sees prior ++ continuation.
template <class Move, class R>
std::vector<Move> optimal_continuation(const GameRules<Move, R>& rules, SelectorKind kind,
                                       std::size_t lookahead,
                                       std::span<const Move> prior_history) {
  auto selectors = build_selectors(rules, kind, lookahead, prior_history);
  const std::vector<Move> prior(prior_history.begin(), prior_history.end());
  const auto& payoff = rules.payoff;
  return sequence_product(std::move(selectors))([&](const std::vector<Move>& xs) {
    std::vector<Move> h;
    h.reserve(prior.size() + xs.size());
    h.insert(h.end(), prior.begin(), prior.end());
    h.insert(h.end(), xs.begin(), xs.end());
    return payoff(h);
  });
}

// The next move for the side to move after `prior_history`.
template <class Move, class R>
Move optimal_strategy(const GameRules<Move, R>& rules, SelectorKind kind, std::size_t lookahead,
                      std::span<const Move> prior_history) {
  if (lookahead == 0) throw std::invalid_argument("lookahead must be positive");
  if (rules.is_finished(prior_history) || rules.possible_moves(prior_history).empty()) {
    throw GameOver();
  }
  const std::vector<Move> play = optimal_continuation(rules, kind, lookahead, prior_history);
  if (play.empty()) throw GameOver();
  return play.front();
}

// Same game seen through a different outcome encoding, e.g. a scored game
// projected onto Three for the three-valued selectors.
template <class Move, class R, class F,
          class S = std::decay_t<std::invoke_result_t<F&, const R&>>>
GameRules<Move, S> project_payoff(const GameRules<Move, R>& rules, F f) {
  GameRules<Move, S> out;
  out.possible_moves = rules.possible_moves;
  out.payoff = [payoff = rules.payoff, f = std::move(f)](std::span<const Move> h) {
    return f(payoff(h));
  };
  out.first_player_direction = rules.first_player_direction;
  out.max_game_length = rules.max_game_length;
  out.turns = rules.turns;
  out.finished = rules.finished;
  return out;
}

}  // namespace seqgame
