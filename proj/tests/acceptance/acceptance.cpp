// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seqgame/bench.hpp"
#include "seqgame/chess.hpp"
#include "seqgame/connect.hpp"
#include "seqgame/engine.hpp"
#include "seqgame/oracle.hpp"
#include "seqgame/selection.hpp"
#include "seqgame/selectors.hpp"
#include "seqgame/sudoku.hpp"

using namespace seqgame;

namespace {

using Seconds = std::chrono::duration<double>;
using Clock = std::chrono::steady_clock;

constexpr double kConnectBudget = 300.0;
constexpr double kSudokuBudget = 60.0;
constexpr double kMateInThreeBudget = 600.0;
constexpr double kSudokuMinGrowth = 2.0;

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void report(const char* name, const std::function<Check()>& body) {
  Check c;
  const auto start = Clock::now();
  try {
    c = body();
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  const double took = Seconds(Clock::now() - start).count();
  if (!c.ok) ++failures;
  std::printf("%s %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", name, took,
              c.detail.empty() ? "" : ": ", c.detail.c_str());
  std::fflush(stdout);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& rel) { return read_file(std::string(SEQGAME_DATA_DIR) + "/" + rel); }

template <class F>
double timed(F&& f) {
  const auto start = Clock::now();
  f();
  return Seconds(Clock::now() - start).count();
}

std::string str(const ScoredOutcome& o) { return to_string(o); }

// ---- connect three ----------------------------------------------------------

Check connect_three() {
  Check c;
  const auto r = connect::rules(connect::Config::connect_three());
  std::vector<int> play;
  const double took = timed([&] { play = optimal_play(r, build_selectors(r, SelectorKind::Scored, 9)); });
  const ScoredOutcome got = r.payoff(play);
  c.require(play.size() == 9, "play length " + std::to_string(play.size()));
  c.require(got == ScoredOutcome{1, 9}, "outcome " + str(got));
  c.require(took <= kConnectBudget, "took " + std::to_string(took) + "s");
  // every move of the play keeps the oracle value of its position
  std::vector<int> h;
  const ScoredOutcome root = oracle::minimax_value(r, std::span<const int>{}, 9);
  c.require(root == got, "oracle value " + str(root));
  for (std::size_t i = 0; i < play.size() && c.ok; ++i) {
    const auto here = oracle::minimax_value(r, std::span<const int>(h), 9 - i);
    h.push_back(play[i]);
    const auto after = oracle::minimax_value(r, std::span<const int>(h), 8 - i);
    c.require(here == after, "move " + std::to_string(i + 1) + " loses value");
  }
  std::string shown;
  for (int m : play) shown += std::to_string(m) + " ";
  if (c.ok) c.detail = "play " + shown + "-> " + str(got) + " in " + std::to_string(took) + "s";
  return c;
}

// ---- oracle equivalence -----------------------------------------------------

Check oracle_equivalence() {
  Check c;
  int positions = 0;
  for (const auto& cfg : {connect::Config{3, 2, 2, 6}, connect::Config{4, 2, 3, 8}}) {
    const auto r = connect::rules(cfg);
    const auto n = r.max_game_length;
    const auto want = oracle::minimax_value(r, std::span<const int>{}, n);
    const auto got = optimal_outcome(r, build_selectors(r, SelectorKind::Scored, n));
    c.require(got == want, "empty history " + str(got) + " vs " + str(want));
  }
  const auto r = connect::rules(connect::Config{3, 2, 2, 6});
  std::vector<int> h;
  std::function<void()> walk = [&]() {
    if (r.is_finished(h) || r.possible_moves(h).empty()) return;
    ++positions;
    const std::size_t left = r.max_game_length - h.size();
    const auto want = oracle::minimax_value(r, std::span<const int>(h), left);
    auto full = h;
    const auto rest = optimal_continuation(r, SelectorKind::Scored, left, std::span<const int>(h));
    full.insert(full.end(), rest.begin(), rest.end());
    c.require(r.payoff(full) == want, "position of length " + std::to_string(h.size()));
    auto next = h;
    next.push_back(optimal_strategy(r, SelectorKind::Scored, left, std::span<const int>(h)));
    c.require(oracle::minimax_value(r, std::span<const int>(next), left - 1) == want,
              "strategy at length " + std::to_string(h.size()));
    for (int m : r.possible_moves(h)) {
      h.push_back(m);
      walk();
      h.pop_back();
    }
  };
  walk();
  if (c.ok) c.detail = std::to_string(positions) + " open 3x2 positions";
  return c;
}

// ---- selectors --------------------------------------------------------------

template <class R>
Valuation<int, R> table(std::vector<R> v) {
  return [v = std::move(v)](const int& i) { return v[static_cast<std::size_t>(i)]; };
}

std::vector<int> idx(std::size_t n) {
  std::vector<int> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<int>(i);
  return xs;
}

Check selector_semantics() {
  Check c;
  const auto Max = Direction::Maximize;
  const auto Min = Direction::Minimize;
  const auto id = [](const int& x) { return x; };
  c.require(extremum_generic<int>(Max, std::vector{1, 2, 3})(id) == 3, "generic max");
  c.require(extremum_generic<std::size_t>(Max, std::vector<std::string>{"a", "bb", "ccc", "dd"})(
                [](const std::string& s) { return s.size(); }) == "ccc", "generic length");
  c.require(extremum_generic<int>(Min, std::vector{10, 20, 30})([](const int&) { return 0; }) == 10, "generic tie");
  const auto three = [](std::vector<int> v) {
    std::vector<Three> out;
    for (int x : v) out.push_back(three_from_sign(x));
    return table(out);
  };
  c.require(extremum_three(Min, idx(3))(three({1, 0, -1})) == 2, "three min");
  c.require(extremum_three(Min, idx(4))(three({1, 0, 1, 0})) == 1, "three first zero");
  int calls = 0;
  const auto counted = [&](const int& i) {
    ++calls;
    return three_from_sign(std::vector{0, 1, 0}[static_cast<std::size_t>(i)]);
  };
  c.require(extremum_three(Max, idx(3))(counted) == 1 && calls == 2, "three short-circuit");
  c.require(extremum_bool(Max, idx(3))(table(std::vector{false, true, false})) == 1, "bool max");
  c.require(extremum_bool(Min, idx(2))(table(std::vector{true, true})) == 0, "bool tie");
  using S = std::vector<ScoredOutcome>;
  for (bool parallel : {false, true}) {
    const auto sc = [&](Direction d, S s) {
      return parallel ? extremum_scored_parallel(d, idx(s.size()))(table(s))
                      : extremum_scored(d, idx(s.size()))(table(s));
    };
    c.require(sc(Min, {{1, 3}, {1, 5}, {2, 2}}) == 1, "scored prolong");
    c.require(sc(Min, {{-1, 4}, {0, 2}, {-1, 6}}) == 0, "scored fastest min");
    c.require(sc(Max, {{1, 7}, {1, 3}, {0, 1}}) == 1, "scored fastest max");
  }
  c.require(extremum_generic_parallel<int>(Max, std::vector{1, 2, 3})(id) == 3, "parallel max");
  c.require(extremum_generic_parallel<int>(Min, std::vector{7, 8, 9})([](const int&) { return 0; }) == 7,
            "parallel tie");
  c.require(extremum_scored_parallel(Max, std::vector{5})(table(S(6, {0, 0}))) == 5, "parallel singleton");

  std::mt19937 rng(101);
  for (int k = 0; k < 500 && c.ok; ++k) {
    const std::size_t n = 1 + rng() % 64;
    std::vector<int> v(n);
    for (int& x : v) x = static_cast<int>(rng() % 5);
    S s(n);
    for (auto& o : s) o = {static_cast<int>(rng() % 3) - 1, static_cast<int>(rng() % 10)};
    const Direction d = k % 2 == 0 ? Max : Min;
    const int g = extremum_generic<int>(d, idx(n))(table(v));
    const int sc = extremum_scored(d, idx(n))(table(s));
    for (int rep = 0; rep < 10; ++rep) {
      c.require(extremum_generic_parallel<int>(d, idx(n))(table(v)) == g, "generic parallel case " + std::to_string(k));
      c.require(extremum_scored_parallel(d, idx(n))(table(s)) == sc, "scored parallel case " + std::to_string(k));
    }
  }
  if (c.ok) c.detail = "examples plus 500 cases x 10 runs";
  return c;
}

// ---- monad laws -------------------------------------------------------------

Check monad_laws() {
  Check c;
  std::vector<Valuation<int, int>> ps;
  for (int code = 0; code < 81; ++code) {
    std::array<int, 4> t{};
    for (int i = 0, x = code; i < 4; ++i, x /= 3) t[static_cast<std::size_t>(i)] = x % 3;
    ps.push_back([t](const int& x) { return t[static_cast<std::size_t>(x)]; });
  }
  std::vector<Selection<int, int>> es;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> xs;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1 << i)) xs.push_back(i);
    }
    es.push_back(extremum_generic<int>(Direction::Maximize, xs));
    es.push_back(extremum_generic<int>(Direction::Minimize, xs));
  }
  for (int x = 0; x < 4; ++x) es.push_back(unit<int>(x));
  es.emplace_back([](const Valuation<int, int>& p) { return (p(0) + 2 * p(2)) % 4; });
  using K = std::function<Selection<int, int>(const int&)>;
  std::vector<K> fs;
  for (int k = 1; k < 4; ++k) {
    fs.push_back([k](const int& x) {
      return extremum_generic<int>(Direction::Maximize, std::vector{x, (x + k) % 4});
    });
  }
  fs.push_back([](const int& x) { return unit<int>((3 * x + 1) % 4); });
  fs.push_back([](const int& x) {
    return Selection<int, int>([x](const Valuation<int, int>& p) { return (p(x) + x) % 4; });
  });
  long checks = 0;
  for (const auto& f : fs) {
    for (int x = 0; x < 4; ++x) {
      const auto lhs = bind(unit<int>(x), f);
      const auto rhs = f(x);
      for (const auto& p : ps) {
        c.require(lhs(p) == rhs(p), "left identity");
        ++checks;
      }
    }
  }
  for (const auto& e : es) {
    const auto right = bind(e, [](const int& x) { return unit<int>(x); });
    for (const auto& p : ps) {
      c.require(right(p) == e(p), "right identity");
      c.require(quantify(e)(p) == p(e(p)), "quantify");
      checks += 2;
    }
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        const auto lhs = bind(bind(e, f), g);
        const auto rhs = bind(e, [&](const int& x) { return bind(f(x), g); });
        for (const auto& p : ps) {
          c.require(lhs(p) == rhs(p), "associativity");
          ++checks;
        }
      }
    }
  }
  if (c.ok) c.detail = std::to_string(checks) + " extensional checks over |X|=4, |R|=3";
  return c;
}

// ---- sudoku -----------------------------------------------------------------

bool backtrack(std::array<int, 81>& g) {
  int at = -1;
  for (int i = 0; i < 81 && at < 0; ++i) {
    if (g[static_cast<std::size_t>(i)] == 0) at = i;
  }
  if (at < 0) return true;
  const int r = at / 9;
  const int col = at % 9;
  for (int v = 1; v <= 9; ++v) {
    bool ok = true;
    for (int k = 0; k < 9 && ok; ++k) {
      ok = g[static_cast<std::size_t>(r * 9 + k)] != v && g[static_cast<std::size_t>(k * 9 + col)] != v &&
           g[static_cast<std::size_t>((r / 3 * 3 + k / 3) * 9 + col / 3 * 3 + k % 3)] != v;
    }
    if (!ok) continue;
    g[static_cast<std::size_t>(at)] = v;
    if (backtrack(g)) return true;
  }
  g[static_cast<std::size_t>(at)] = 0;
  return false;
}

Check sudoku_puzzles() {
  Check c;
  std::istringstream corpus(data("sudoku/corpus.txt"));
  int solved = 0;
  double slowest = 0.0;
  for (std::string line; std::getline(corpus, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto p = sudoku::parse_puzzle(line);
    if (p.gaps.size() > 10) continue;
    std::array<int, 81> g{};
    for (int i = 0; i < 81; ++i) g[static_cast<std::size_t>(i)] = p.start.at(i / 9 + 1, i % 9 + 1);
    const bool solvable = backtrack(g);
    const auto r = sudoku::rules(p);
    std::vector<sudoku::Move> play;
    const double took = timed([&] {
      play = optimal_play(r, build_selectors(r, SelectorKind::Boolean, p.gaps.size()));
    });
    slowest = std::max(slowest, took);
    const bool ok = sudoku::solved(play, p);
    c.require(ok == solvable, "disagrees with backtracking on " + line);
    c.require(took <= kSudokuBudget, "took " + std::to_string(took) + "s on " + line);
    if (ok) {
      c.require(sudoku::valid_board(sudoku::apply(play, p)), "invalid final board");
      ++solved;
    }
  }
  c.require(solved > 0, "empty corpus");

  bench::Options o;
  o.repetitions = 9;
  o.min_time = Seconds(0.3);
  const std::vector<int> gaps{6, 7, 8, 9, 10};
  const auto rep = bench::run_benchmark("sudoku", bench::sudoku_solver(bench::reference_solution()),
                                        SelectorKind::Boolean, gaps, o);
  std::string ratios;
  for (const auto& row : rep.rows) c.require(row.outcome == "true", "sweep puzzle unsolved");
  const auto growth = bench::growth_factors(rep, "sudoku", "bool");
  c.require(growth.size() == 4, "growth series incomplete");
  for (const auto& [gap, ratio] : growth) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%d:%.2f ", gap, ratio);
    ratios += buf;
    c.require(ratio >= kSudokuMinGrowth, "growth " + ratios);
  }
  if (c.ok) {
    c.detail = std::to_string(solved) + " puzzles, slowest " + std::to_string(slowest) +
               "s; growth " + ratios;
  }
  return c;
}

// ---- chess ------------------------------------------------------------------

Check chess_endgames() {
  Check c;
  const auto two = chess::rules(chess::parse_position(data("chess/kq_k_mate_in_2.txt")));
  const auto got2 = optimal_outcome(two, build_selectors(two, SelectorKind::Scored, 3));
  const auto want2 = oracle::minimax_value(two, std::span<const chess::Move>{}, 3);
  c.require(got2 == ScoredOutcome{1, 3}, "mate in two gave " + str(got2));
  c.require(got2 == want2, "oracle gave " + str(want2));

  const auto three = chess::rules(chess::parse_position(data("chess/kq_k_mate_in_3.txt")));
  ScoredOutcome got3;
  const double took = timed([&] {
    got3 = optimal_outcome(three, build_selectors(three, SelectorKind::Scored, 5));
  });
  c.require(got3 == ScoredOutcome{1, 5}, "mate in three gave " + str(got3));
  c.require(took <= kMateInThreeBudget, "mate in three took " + std::to_string(took) + "s");

  bench::Options o;
  o.repetitions = 3;
  o.min_time = Seconds(0.1);
  const std::vector<int> depths{2, 3, 4, 5};
  auto rep = bench::run_benchmark(
      "chess", bench::chess_solver(chess::parse_position(data("chess/krq_kr_endgame.txt"))),
      SelectorKind::Scored, depths, o);
  bench::merge(rep, bench::run_benchmark("connect3", bench::connect_solver(connect::Config::connect_three()),
                                         SelectorKind::Scored, depths, o));
  const auto cg = bench::growth_factors(rep, "chess", "scored");
  const auto kg = bench::growth_factors(rep, "connect3", "scored");
  c.require(cg.size() == 3 && kg.size() == 3, "incomplete growth series");
  std::string shown;
  for (std::size_t i = 0; i < cg.size() && i < kg.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "d%d %.1f>%.1f ", cg[i].first, cg[i].second, kg[i].second);
    shown += buf;
    c.require(cg[i].first == kg[i].first && cg[i].second > kg[i].second, "growth " + shown);
  }
  if (c.ok) c.detail = "mate in three " + std::to_string(took) + "s; growth " + shown;
  return c;
}

// ---- early termination ------------------------------------------------------

Check early_termination() {
  Check c;
  std::mt19937 rng(103);
  int connect_cases = 0;
  const auto cfg = connect::Config::connect_three();
  while (connect_cases < 1000) {
    std::vector<int> h;
    std::size_t at = 0;
    for (auto moves = connect::possible_moves(h, cfg); !moves.empty(); moves = connect::possible_moves(h, cfg)) {
      h.push_back(moves[rng() % moves.size()]);
      if (at == 0 && connect::payoff(h, cfg).value != 0) at = h.size();
    }
    if (at == 0 || at == h.size()) continue;
    ++connect_cases;
    const std::vector<int> prefix(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(at));
    c.require(connect::payoff(h, cfg) == connect::payoff(prefix, cfg), "connect history");
  }

  int chess_cases = 0;
  const chess::Board starts[] = {chess::parse_position(data("chess/kq_k_mate_in_3.txt")),
                                 chess::parse_position(data("chess/krq_kr_endgame.txt"))};
  while (chess_cases < 1000) {
    const auto& start = starts[chess_cases % 2];
    std::vector<chess::Move> h;
    std::size_t at = 0;
    for (int ply = 0; ply < 60; ++ply) {
      const auto moves = chess::possible_moves(h, start);
      if (moves.empty()) break;
      h.push_back(moves[rng() % moves.size()]);
      if (at == 0 && chess::payoff(h, start).value != 0) at = h.size();
    }
    if (at == 0 || at == h.size()) continue;
    ++chess_cases;
    const std::vector<chess::Move> prefix(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(at));
    c.require(chess::payoff(h, start) == chess::payoff(prefix, start), "chess history");
  }

  // sudoku's terminal event is the first invalid insertion
  int sudoku_cases = 0;
  const auto puzzle = bench::puzzle_with_gaps(bench::reference_solution(), 20);
  while (sudoku_cases < 1000) {
    std::vector<int> order(puzzle.gaps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<sudoku::Move> h;
    std::size_t at = 0;
    for (int gi : order) {
      const auto cell = puzzle.gaps[static_cast<std::size_t>(gi)];
      h.push_back({cell.row, cell.col, 1 + static_cast<int>(rng() % 9)});
      if (at == 0 && !sudoku::payoff(h, puzzle)) at = h.size();
    }
    if (at == 0 || at == h.size()) continue;
    ++sudoku_cases;
    const std::vector<sudoku::Move> prefix(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(at));
    c.require(sudoku::payoff(h, puzzle) == sudoku::payoff(prefix, puzzle), "sudoku history");
  }
  if (c.ok) c.detail = "1000 histories each for connect, chess, sudoku";
  return c;
}

// ---- bench ------------------------------------------------------------------

Check bench_rows() {
  Check c;
  bench::Options o;
  o.repetitions = 1;
  o.min_time = Seconds(0.0);
  bench::BenchReport all;
  const auto connect_run = bench::connect_solver(connect::Config::connect_three());
  const auto chess_run = bench::chess_solver(chess::parse_position(data("chess/kq_k_mate_in_3.txt")));
  const auto sudoku_run = bench::sudoku_solver(bench::reference_solution());
  const std::vector<int> shallow{1, 2, 3, 4};
  for (SelectorKind k : {SelectorKind::Generic, SelectorKind::ThreeValued, SelectorKind::Scored,
                         SelectorKind::GenericParallel, SelectorKind::ScoredParallel}) {
    bench::merge(all, bench::run_benchmark("connect3", connect_run, k, shallow, o));
    bench::merge(all, bench::run_benchmark("chess", chess_run, k, shallow, o));
  }
  const std::vector<int> gaps{4, 6, 8};
  for (SelectorKind k : {SelectorKind::Generic, SelectorKind::Boolean, SelectorKind::GenericParallel}) {
    bench::merge(all, bench::run_benchmark("sudoku", sudoku_run, k, gaps, o));
  }
  for (const auto& a : all.rows) {
    for (const auto& b : all.rows) {
      if (a.game == b.game && a.depth == b.depth) {
        c.require(a.outcome == b.outcome, a.game + " depth " + std::to_string(a.depth) + ": " +
                                              a.selector + "=" + a.outcome + " " + b.selector + "=" + b.outcome);
      }
    }
  }
  const auto back = bench::parse_csv(bench::to_csv(all));
  c.require(back.rows == all.rows, "CSV round trip changed rows");
  c.require(bench::to_csv(back) == bench::to_csv(all), "CSV round trip changed text");
  if (c.ok) c.detail = std::to_string(all.rows.size()) + " rows";
  return c;
}

}  // namespace

int main() {
  report("connect-three reproduction", connect_three);
  report("oracle equivalence", oracle_equivalence);
  report("selector semantics", selector_semantics);
  report("monad laws", monad_laws);
  report("sudoku", sudoku_puzzles);
  report("chess endgames", chess_endgames);
  report("early termination", early_termination);
  report("bench csv and outcomes", bench_rows);
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
