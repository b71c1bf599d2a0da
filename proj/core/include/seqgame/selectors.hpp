// Extremum selection functions for the four outcome encodings.
//
// Every constructor rejects an empty candidate list and breaks ties towards
// the lowest candidate index. The three-valued and boolean variants stop
// evaluating as soon as the absolute extremum is seen; the parallel variants
// evaluate every candidate concurrently and reduce by (value, index), so their
// choice never depends on scheduling.

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

#include "seqgame/outcome.hpp"
#include "seqgame/selection.hpp"

namespace seqgame {

class EmptyCandidates : public std::invalid_argument {
 public:
  EmptyCandidates() : std::invalid_argument("selection over an empty candidate list") {}
};

namespace detail {

template <class X>
void require_candidates(const std::vector<X>& xs) {
  if (xs.empty()) throw EmptyCandidates();
}

template <class R>
bool strictly_better(Direction d, const R& a, const R& b) {
  return d == Direction::Maximize ? b < a : a < b;
}

// Index of the scored outcome the selecting side prefers: extremal value,
// then fewest moves unless that value is a loss for the selector, in which
// case the most moves. Earlier index wins exact ties.
inline std::size_t best_scored_index(Direction d, const std::vector<ScoredOutcome>& scores) {
  int best = scores.front().value;
  for (const auto& s : scores) {
    best = d == Direction::Maximize ? std::max(best, s.value) : std::min(best, s.value);
  }
  const bool losing = d == Direction::Maximize ? best < 0 : best > 0;
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i].value != best) continue;
    if (!pick || (losing ? scores[i].moves > scores[*pick].moves
                         : scores[i].moves < scores[*pick].moves)) {
      pick = i;
    }
  }
  return *pick;
}

template <class X, class R>
std::vector<R> evaluate_all_parallel(const std::vector<X>& xs, const Valuation<X, R>& p) {
  // optional<R> keeps slots independent even when R is bool.
  std::vector<std::optional<R>> slots(xs.size());
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, xs.size()),
                    [&](const tbb::blocked_range<std::size_t>& range) {
                      for (std::size_t i = range.begin(); i != range.end(); ++i) {
                        slots[i].emplace(p(xs[i]));
                      }
                    });
  std::vector<R> values;
  values.reserve(slots.size());
  for (auto& s : slots) values.push_back(std::move(*s));
  return values;
}

}  // namespace detail

template <std::totally_ordered R, class X>
Selection<X, R> extremum_generic(Direction d, std::vector<X> xs) {
  detail::require_candidates(xs);
  return Selection<X, R>([d, xs = std::move(xs)](const Valuation<X, R>& p) {
    std::size_t best = 0;
    R best_value = p(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
      R v = p(xs[i]);
      if (detail::strictly_better(d, v, best_value)) {
        best = i;
        best_value = std::move(v);
      }
    }
    return xs[best];
  });
}

template <class X>
Selection<X, Three> extremum_three(Direction d, std::vector<X> xs) {
  detail::require_candidates(xs);
  return Selection<X, Three>([d, xs = std::move(xs)](const Valuation<X, Three>& p) {
    const Three target = d == Direction::Maximize ? Three::Win : Three::Loss;
    std::size_t best = 0;
    Three best_value = p(xs[0]);
    for (std::size_t i = 1; i < xs.size() && best_value != target; ++i) {
      const Three v = p(xs[i]);
      if (detail::strictly_better(d, v, best_value)) {
        best = i;
        best_value = v;
      }
    }
    return xs[best];
  });
}

template <class X>
Selection<X, bool> extremum_bool(Direction d, std::vector<X> xs) {
  detail::require_candidates(xs);
  return Selection<X, bool>([d, xs = std::move(xs)](const Valuation<X, bool>& p) {
    const bool target = d == Direction::Maximize;
    for (const auto& x : xs) {
      if (p(x) == target) return x;
    }
    return xs.front();
  });
}

template <class X>
Selection<X, ScoredOutcome> extremum_scored(Direction d, std::vector<X> xs) {
  detail::require_candidates(xs);
  return Selection<X, ScoredOutcome>(
      [d, xs = std::move(xs)](const Valuation<X, ScoredOutcome>& p) {
        std::vector<ScoredOutcome> scores;
        scores.reserve(xs.size());
        for (const auto& x : xs) scores.push_back(p(x));
        return xs[detail::best_scored_index(d, scores)];
      });
}

// The valuation must be safe to call from several threads at once.
template <std::totally_ordered R, class X>
Selection<X, R> extremum_generic_parallel(Direction d, std::vector<X> xs) {
  detail::require_candidates(xs);
  return Selection<X, R>([d, xs = std::move(xs)](const Valuation<X, R>& p) {
    const std::vector<R> values = detail::evaluate_all_parallel(xs, p);
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (detail::strictly_better(d, values[i], values[best])) best = i;
    }
    return xs[best];
  });
}

template <class X>
Selection<X, ScoredOutcome> extremum_scored_parallel(Direction d, std::vector<X> xs) {
  detail::require_candidates(xs);
  return Selection<X, ScoredOutcome>(
      [d, xs = std::move(xs)](const Valuation<X, ScoredOutcome>& p) {
        const std::vector<ScoredOutcome> scores = detail::evaluate_all_parallel(xs, p);
        return xs[detail::best_scored_index(d, scores)];
      });
}

}  // namespace seqgame
