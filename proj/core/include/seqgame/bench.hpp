// Depth-sweep timing harness.
//
// A sweep times one game/selector pair at each depth of a range, keeps the
// median of several repetitions, and records the solved outcome next to the
// time so rows can be audited. Growth factors are the ratios of consecutive
// times within a series.

#pragma once

#include <chrono>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqgame/chess.hpp"
#include "seqgame/connect.hpp"
#include "seqgame/engine.hpp"
#include "seqgame/sudoku.hpp"

namespace seqgame::bench {

using Clock = std::chrono::steady_clock;

inline constexpr std::string_view kTimeoutOutcome = "timeout";

struct BenchRow {
  std::string game;
  std::string selector;
  int depth = 0;
  double seconds = 0.0;
  std::string outcome;

  bool timed_out() const { return outcome == kTimeoutOutcome; }
  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  unsigned cores = 0;
  std::string timestamp;  // UTC, ISO 8601
};

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("benchmark depth exceeded its time budget") {}
};

class Deadline {
 public:
  explicit Deadline(Clock::time_point at) : at_(at) {}
  static Deadline never() { return Deadline(Clock::time_point::max()); }

  void check() const {
    if (Clock::now() > at_) throw Timeout();
  }

  // check() on every 64th call per thread, for hot loops where reading the
  // clock would show up in the timings.
  void poll() const {
    thread_local unsigned calls = 0;
    if ((++calls & 63u) == 0) check();
  }

 private:
  Clock::time_point at_;
};

// Solves one instance at `depth` and returns a printable outcome. Long solves
// should call deadline.check() or poll() regularly (guard_rules polls per payoff).
using Solver = std::function<std::string(SelectorKind, int depth, const Deadline&)>;

struct Options {
  // Repetitions run as rounds over the whole depth range; each row keeps the
  // median of its repetitions.
  int repetitions = 3;
  // Per depth, summed over its repetitions.
  std::chrono::duration<double> timeout{60.0};
  // Each repetition loops the solve until this much time has passed and
  // reports the per-solve mean, so microsecond solves still time stably.
  std::chrono::duration<double> min_time{0.02};
};

BenchReport run_benchmark(const std::string& game, const Solver& solver, SelectorKind kind,
                          std::span<const int> depths, const Options& options = {});

// Appends another sweep and restores (game, selector, depth) order.
void merge(BenchReport& into, const BenchReport& from);
void sort_rows(BenchReport& report);

// Ratios t(d) / t(d-1) for consecutive rows of one series, keyed by the
// larger depth. Timed-out rows end the series.
std::vector<std::pair<int, double>> growth_factors(const BenchReport& report,
                                                   std::string_view game,
                                                   std::string_view selector);

std::string to_csv(const BenchReport& report);
BenchReport parse_csv(std::string_view text);

std::string utc_timestamp();

// Rules whose payoff polls the deadline before every evaluation.
template <class Move, class R>
GameRules<Move, R> guard_rules(GameRules<Move, R> rules, Deadline deadline) {
  rules.payoff = [payoff = std::move(rules.payoff), deadline](std::span<const Move> h) {
    deadline.poll();
    return payoff(h);
  };
  return rules;
}

// Ready-made solvers for the shipped games. Depth is the lookahead from the
// empty history, except for sudoku where it is the number of gaps.
Solver connect_solver(const connect::Config& config);
Solver chess_solver(const chess::Board& start);
Solver sudoku_solver(const sudoku::Board& solution);

// A puzzle with `gaps` cells of a solved grid emptied, taken in a fixed
// order that keeps several candidates open per gap.
sudoku::Puzzle puzzle_with_gaps(const sudoku::Board& solution, int gaps);

// A fixed valid completed grid.
sudoku::Board reference_solution();

}  // namespace seqgame::bench
