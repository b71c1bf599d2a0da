#include "seqgame/bench.hpp"

#include <algorithm>
#include <charconv>
#include <ctime>
#include <map>
#include <memory>
#include <mutex>
#include <system_error>
#include <thread>
#include <tuple>

namespace seqgame::bench {

namespace {

double time_once(const Solver& solver, SelectorKind kind, int depth, const Deadline& deadline,
                 std::chrono::duration<double> min_time, std::string& outcome) {
  const auto start = Clock::now();
  int iterations = 0;
  Clock::time_point now;
  do {
    outcome = solver(kind, depth, deadline);
    ++iterations;
    now = Clock::now();
  } while (now - start < min_time);
  const double seconds = std::chrono::duration<double>(now - start).count() / iterations;
  return std::max(seconds, 1e-12);
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// One record of RFC 4180 CSV starting at `pos`; advances past the line end.
std::vector<std::string> read_record(std::string_view text, std::size_t& pos) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  while (pos < text.size()) {
    const char c = text[pos++];
    if (quoted) {
      if (c == '"') {
        if (pos < text.size() && text[pos] == '"') {
          fields.back() += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  return fields;
}

template <class T>
T parse_number(const std::string& s, const char* what) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " field '" + s + "'");
  }
  return v;
}

// Generic kinds solve over the integer game value and three-valued kinds over
// its sign; the row records the value of the play found, which every kind
// must agree on.
template <class Move>
std::string solve_summary(const GameRules<Move, ScoredOutcome>& rules, SelectorKind kind,
                          int depth, const Deadline& deadline) {
  const auto guarded = guard_rules(rules, deadline);
  const auto n = static_cast<std::size_t>(depth);
  std::vector<Move> play;
  switch (kind) {
    case SelectorKind::ThreeValued: {
      const auto three = project_payoff(guarded, [](const ScoredOutcome& o) {
        return three_from_sign(o.value);
      });
      play = optimal_play(three, build_selectors(three, kind, n));
      break;
    }
    case SelectorKind::Generic:
    case SelectorKind::GenericParallel: {
      const auto value = project_payoff(guarded, [](const ScoredOutcome& o) { return o.value; });
      play = optimal_play(value, build_selectors(value, kind, n));
      break;
    }
    default:
      play = optimal_play(guarded, build_selectors(guarded, kind, n));
      break;
  }
  return std::to_string(rules.payoff(play).value);
}

}  // namespace

BenchReport run_benchmark(const std::string& game, const Solver& solver, SelectorKind kind,
                          std::span<const int> depths, const Options& options) {
  if (depths.empty()) throw std::invalid_argument("empty depth range");
  if (options.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  struct Series {
    BenchRow row;
    std::vector<double> times;
    Clock::duration spent{};
    bool cut = false;
  };
  std::vector<Series> sweep;
  for (int depth : depths) {
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    sweep.push_back({BenchRow{game, std::string(to_string(kind)), depth, 0.0, ""}, {}, {}, false});
  }
  BenchReport report;
  report.cores = std::max(1u, std::thread::hardware_concurrency());
  report.timestamp = utc_timestamp();
  const auto budget = std::chrono::duration_cast<Clock::duration>(options.timeout);
  // Round r times every depth once, so a slow spell on the host lands on all
  // depths rather than on one.
  for (int r = 0; r < options.repetitions; ++r) {
    for (Series& s : sweep) {
      if (s.cut) continue;
      const auto begin = Clock::now();
      try {
        s.times.push_back(time_once(solver, kind, s.row.depth, Deadline(begin + (budget - s.spent)),
                                    options.min_time, s.row.outcome));
      } catch (const Timeout&) {
        s.cut = true;
      }
      s.spent += Clock::now() - begin;
    }
  }
  for (Series& s : sweep) {
    if (s.cut) {
      s.row.outcome = std::string(kTimeoutOutcome);
      s.row.seconds = std::chrono::duration<double>(s.spent).count();
    } else {
      s.row.seconds = median(s.times);
    }
    report.rows.push_back(std::move(s.row));
  }
  sort_rows(report);
  return report;
}

void sort_rows(BenchReport& report) {
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const BenchRow& a, const BenchRow& b) {
                     return std::tie(a.game, a.selector, a.depth) <
                            std::tie(b.game, b.selector, b.depth);
                   });
}

void merge(BenchReport& into, const BenchReport& from) {
  into.rows.insert(into.rows.end(), from.rows.begin(), from.rows.end());
  if (into.timestamp.empty()) into.timestamp = from.timestamp;
  into.cores = std::max(into.cores, from.cores);
  sort_rows(into);
}

std::vector<std::pair<int, double>> growth_factors(const BenchReport& report,
                                                   std::string_view game,
                                                   std::string_view selector) {
  std::vector<const BenchRow*> series;
  for (const BenchRow& row : report.rows) {
    if (row.game == game && row.selector == selector) series.push_back(&row);
  }
  std::sort(series.begin(), series.end(),
            [](const BenchRow* a, const BenchRow* b) { return a->depth < b->depth; });
  std::vector<std::pair<int, double>> ratios;
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (series[i - 1]->timed_out() || series[i]->timed_out()) break;
    ratios.emplace_back(series[i]->depth, series[i]->seconds / series[i - 1]->seconds);
  }
  return ratios;
}

std::string to_csv(const BenchReport& report) {
  std::string out = "game,selector,depth,seconds,outcome\n";
  for (const BenchRow& row : report.rows) {
    out += csv_field(row.game);
    out += ',';
    out += csv_field(row.selector);
    out += ',';
    out += std::to_string(row.depth);
    out += ',';
    out += format_double(row.seconds);
    out += ',';
    out += csv_field(row.outcome);
    out += '\n';
  }
  return out;
}

BenchReport parse_csv(std::string_view text) {
  std::size_t pos = 0;
  const auto header = read_record(text, pos);
  const std::vector<std::string> expected = {"game", "selector", "depth", "seconds", "outcome"};
  if (header != expected) throw std::invalid_argument("unexpected CSV header");
  BenchReport report;
  while (pos < text.size()) {
    const auto fields = read_record(text, pos);
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 5) {
      throw std::invalid_argument("CSV row has " + std::to_string(fields.size()) + " fields");
    }
    report.rows.push_back({fields[0], fields[1], parse_number<int>(fields[2], "depth"),
                           parse_number<double>(fields[3], "seconds"), fields[4]});
  }
  return report;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Solver connect_solver(const connect::Config& config) {
  return [rules = connect::rules(config)](SelectorKind kind, int depth, const Deadline& deadline) {
    return solve_summary(rules, kind, depth, deadline);
  };
}

Solver chess_solver(const chess::Board& start) {
  return [rules = chess::rules(start)](SelectorKind kind, int depth, const Deadline& deadline) {
    return solve_summary(rules, kind, depth, deadline);
  };
}

Solver sudoku_solver(const sudoku::Board& solution) {
  // Puzzles and rules are built once per gap count so the timed region is
  // the solve alone.
  struct Cache {
    std::mutex mutex;
    std::map<int, std::pair<sudoku::Puzzle, GameRules<sudoku::Move, bool>>> entries;
  };
  auto cache = std::make_shared<Cache>();
  return [solution, cache](SelectorKind kind, int gaps, const Deadline& deadline) {
    const std::pair<sudoku::Puzzle, GameRules<sudoku::Move, bool>>* entry = nullptr;
    {
      std::lock_guard lock(cache->mutex);
      auto it = cache->entries.find(gaps);
      if (it == cache->entries.end()) {
        sudoku::Puzzle puzzle = puzzle_with_gaps(solution, gaps);
        auto rules = sudoku::rules(puzzle);
        it = cache->entries.emplace(gaps, std::make_pair(std::move(puzzle), std::move(rules))).first;
      }
      entry = &it->second;
    }
    const auto& [puzzle, base] = *entry;
    const auto rules = guard_rules(base, deadline);
    const auto play = optimal_play(rules, build_selectors(rules, kind, puzzle.gaps.size()));
    return std::string(base.payoff(play) ? "true" : "false");
  };
}

sudoku::Puzzle puzzle_with_gaps(const sudoku::Board& solution, int gaps) {
  if (gaps < 0 || gaps > 81) throw std::invalid_argument("gap count out of range");
  // Walk the first band box by box, then the rest row-major: gaps crowd the
  // same rows and boxes, so early gaps keep several candidate values.
  std::vector<sudoku::Cell> order;
  for (int box = 0; box < 3; ++box) {
    for (int r = 1; r <= 3; ++r) {
      for (int c = box * 3 + 1; c <= box * 3 + 3; ++c) order.push_back({r, c});
    }
  }
  for (int r = 4; r <= 9; ++r) {
    for (int c = 1; c <= 9; ++c) order.push_back({r, c});
  }
  sudoku::Board board = solution;
  for (int i = 0; i < gaps; ++i) {
    const auto cell = order[static_cast<std::size_t>(i)];
    board.set(cell.row, cell.col, 0);
  }
  return sudoku::parse_puzzle(board.render());
}

sudoku::Board reference_solution() {
  static constexpr std::string_view grid =
      "534678912"
      "672195348"
      "198342567"
      "859761423"
      "426853791"
      "713924856"
      "961537284"
      "287419635"
      "345286179";
  sudoku::Board b;
  for (int i = 0; i < 81; ++i) b.set(i / 9 + 1, i % 9 + 1, grid[static_cast<std::size_t>(i)] - '0');
  return b;
}

}  // namespace seqgame::bench
