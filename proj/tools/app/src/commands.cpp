#include "seqgame/app/commands.hpp"

#include <algorithm>
#include <cctype>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "httplib.h"
#include "seqgame/app/server.hpp"
#include "seqgame/app/session.hpp"
#include "seqgame/bench.hpp"
#include "seqgame/chess.hpp"
#include "seqgame/connect.hpp"
#include "seqgame/engine.hpp"
#include "seqgame/sudoku.hpp"

namespace seqgame::app {

namespace {

SelectorKind selector_or(const std::string& name, SelectorKind fallback) {
  if (name.empty()) return fallback;
  const auto k = parse_selector_kind(name);
  if (!k) throw UsageError("unknown selector '" + name + "'");
  return *k;
}

connect::Config connect_config(const std::string& game, const ConnectShape& shape) {
  if (game == "connect3") return connect::Config::connect_three();
  if (game == "connect4") return connect::Config::connect_four();
  if (game == "connect") {
    connect::Config c{shape.width, shape.height, shape.run_length, shape.width * shape.height};
    try {
      c.validate();
    } catch (const connect::ConfigError& e) {
      throw UsageError(e.what());
    }
    return c;
  }
  throw UsageError("not a connect game: " + game);
}

std::string connect_title(const std::string& game, const connect::Config& c) {
  if (game == "connect3") return "Connect Three";
  if (game == "connect4") return "Connect Four";
  return "Connect " + std::to_string(c.run_length) + " on " + std::to_string(c.width) + "x" +
         std::to_string(c.height);
}

chess::Board chess_start(const std::string& position) {
  if (position.empty()) throw UsageError("chess needs --position");
  try {
    return chess::parse_position(file_or_inline(position));
  } catch (const chess::PositionError& e) {
    throw UsageError(e.what());
  }
}

// Scored games solved with other selector kinds see the payoff through the
// matching projection: Three keeps the sign, Generic the value.
template <class Move>
std::vector<Move> solve_scored(const GameRules<Move, ScoredOutcome>& rules, SelectorKind kind,
                               std::size_t depth) {
  switch (kind) {
    case SelectorKind::ThreeValued: {
      const auto r = project_payoff(rules, [](const ScoredOutcome& o) { return three_from_sign(o.value); });
      return optimal_play(r, build_selectors(r, kind, depth));
    }
    case SelectorKind::Generic:
    case SelectorKind::GenericParallel: {
      const auto r = project_payoff(rules, [](const ScoredOutcome& o) { return o.value; });
      return optimal_play(r, build_selectors(r, kind, depth));
    }
    default: return optimal_play(rules, build_selectors(rules, kind, depth));
  }
}

std::size_t depth_or(const std::optional<int>& depth, std::size_t fallback) {
  if (!depth) return fallback;
  if (*depth < 1) throw UsageError("--depth must be positive");
  return static_cast<std::size_t>(*depth);
}

template <class Move, class F>
std::string list(const std::vector<Move>& play, F show) {
  std::string s = "[";
  for (std::size_t i = 0; i < play.size(); ++i) {
    if (i) s += ",";
    s += show(play[i]);
  }
  return s + "]";
}

void announce(std::ostream& out, const std::string& title, const std::string& play, const std::string& outcome) {
  out << "An optimal play for " << title << " is " << play << "\nand the optimal outcome is " << outcome << "\n";
}

// Human input in the terminal: "3" for connect, "b1 b3" or "b1-b3" for chess.
std::optional<Json> read_move(const std::string& kind, const std::string& line) {
  std::string t;
  for (char ch : line) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '-') t += static_cast<char>(std::tolower(ch));
  }
  if (t.empty()) return std::nullopt;
  if (kind == "connect") {
    if (!std::all_of(t.begin(), t.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      return std::nullopt;
    }
    return std::stoi(t);
  }
  if (t.size() != 4 || t[0] < 'a' || t[0] > 'h' || t[2] < 'a' || t[2] > 'h' || !std::isdigit(t[1]) ||
      !std::isdigit(t[3])) {
    return std::nullopt;
  }
  return Json{{"from", {t[0] - 'a' + 1, t[1] - '0'}}, {"to", {t[2] - 'a' + 1, t[3] - '0'}}};
}

std::string show_move(const Json& move) {
  if (move.is_object()) {
    const auto sq = [](const Json& s) {
      return std::string(1, static_cast<char>('a' + s[0].get<int>() - 1)) + std::to_string(s[1].get<int>());
    };
    return sq(move.at("from")) + "-" + sq(move.at("to"));
  }
  return move.dump();
}

httplib::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

}  // namespace

std::string file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::pair<int, int> parse_depth_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int d = std::stoi(text, &used);
      if (used != text.size() || d < 1) throw UsageError("");
      return {d, d};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw UsageError("");
    const int hi = std::stoi(b, &used);
    if (used != b.size() || lo < 1 || hi < lo) throw UsageError("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("bad depth range '" + text + "', expected A..B with 1 <= A <= B");
  }
}

int run_solve(const SolveCommand& cmd, std::ostream& out) {
  if (cmd.game == "connect3" || cmd.game == "connect4" || cmd.game == "connect") {
    const auto cfg = connect_config(cmd.game, cmd.shape);
    const auto rules = connect::rules(cfg);
    const auto play = solve_scored(rules, selector_or(cmd.selector, SelectorKind::Scored),
                                   depth_or(cmd.depth, static_cast<std::size_t>(cfg.lookahead)));
    announce(out, connect_title(cmd.game, cfg), list(play, [](int c) { return std::to_string(c); }),
             to_string(rules.payoff(play)));
    out << connect::replay(play, cfg).render();
    return 0;
  }
  if (cmd.game == "sudoku") {
    if (cmd.puzzle.empty()) throw UsageError("sudoku needs --puzzle");
    sudoku::Puzzle p;
    try {
      p = sudoku::parse_puzzle(file_or_inline(cmd.puzzle));
    } catch (const sudoku::ParseError& e) {
      throw UsageError(e.what());
    }
    const auto rules = sudoku::rules(p);
    const auto play = optimal_play(rules, build_selectors(rules, selector_or(cmd.selector, SelectorKind::Boolean),
                                                          depth_or(cmd.depth, p.gaps.size())));
    announce(out, "Sudoku", list(play, [](const sudoku::Move& m) {
               return "(" + std::to_string(m.row) + "," + std::to_string(m.col) + "," + std::to_string(m.value) + ")";
             }),
             sudoku::solved(play, p) ? "true" : "false");
    out << sudoku::apply(play, p).render();
    return 0;
  }
  if (cmd.game == "chess") {
    const auto start = chess_start(cmd.position);
    const auto rules = chess::rules(start);
    const auto play = solve_scored(rules, selector_or(cmd.selector, SelectorKind::Scored), depth_or(cmd.depth, 3));
    announce(out, "Chess", list(play, [](const chess::Move& m) { return chess::to_string(m); }),
             to_string(rules.payoff(play)));
    out << chess::render(chess::replay(play, start));
    return 0;
  }
  throw UsageError("unknown game '" + cmd.game + "' (connect3, connect4, connect, sudoku, chess)");
}

int run_play(const PlayCommand& cmd, std::istream& in, std::ostream& out) {
  std::unique_ptr<Game> game;
  if (cmd.game == "connect3" || cmd.game == "connect4" || cmd.game == "connect") {
    connect::Config c = cmd.game == "connect3" ? connect::Config::connect_three_interactive()
                                               : connect_config(cmd.game, cmd.shape);
    if (cmd.game == "connect") c.lookahead = 6;
    c.lookahead = static_cast<int>(depth_or(cmd.depth, static_cast<std::size_t>(c.lookahead)));
    game = make_game("connect", {{"width", c.width}, {"height", c.height}, {"run_length", c.run_length},
                                 {"lookahead", c.lookahead}});
  } else if (cmd.game == "chess") {
    Json cfg{{"lookahead", depth_or(cmd.depth, 3)}};
    if (!cmd.position.empty()) cfg["position"] = chess::serialize_position(chess_start(cmd.position));
    game = make_game("chess", cfg);
  } else {
    throw UsageError("play supports connect3, connect4, connect and chess");
  }

  const std::string kind(game->kind());
  bool human_turn = !cmd.ai_first;
  out << (kind == "connect" ? "Enter a column number" : "Enter moves like b1-b3") << "; empty input quits.\n";
  while (game->status() == Status::InProgress) {
    out << "\n" << game->board();
    if (human_turn) {
      out << "Your move: " << std::flush;
      std::string line;
      if (!std::getline(in, line) || line.empty()) {
        out << "\nbye\n";
        return 0;
      }
      const auto move = read_move(kind, line);
      if (!move) {
        out << "could not read that move\n";
        continue;
      }
      try {
        game->play(*move);
      } catch (const std::exception& e) {
        out << e.what() << "\n";
        continue;
      }
    } else {
      const Json move = game->best_move(game->default_lookahead());
      game->play(move);
      out << "AI plays " << show_move(move) << "\n";
    }
    human_turn = !human_turn;
  }
  out << "\n" << game->board();
  const Status s = game->status();
  const bool human_first = !cmd.ai_first;
  if (s == Status::Draw) {
    out << "Draw.\n";
  } else if ((s == Status::FirstWon) == human_first) {
    out << "You win.\n";
  } else {
    out << "The AI wins.\n";
  }
  return 0;
}

int run_bench(const BenchCommand& cmd, std::ostream& out) {
  const auto [lo, hi] = parse_depth_range(cmd.depths);
  if (cmd.repetitions < 1) throw UsageError("--reps must be at least 1");
  bench::Solver solver;
  SelectorKind fallback = SelectorKind::Scored;
  if (cmd.game == "connect3" || cmd.game == "connect4" || cmd.game == "connect") {
    solver = bench::connect_solver(connect_config(cmd.game, cmd.shape));
  } else if (cmd.game == "chess") {
    solver = bench::chess_solver(chess_start(cmd.position));
  } else if (cmd.game == "sudoku") {
    solver = bench::sudoku_solver(bench::reference_solution());
    fallback = SelectorKind::Boolean;
  } else {
    throw UsageError("unknown game '" + cmd.game + "'");
  }
  const SelectorKind kind = selector_or(cmd.selector, fallback);
  std::vector<int> depths;
  for (int d = lo; d <= hi; ++d) depths.push_back(d);
  bench::Options o;
  o.repetitions = cmd.repetitions;
  o.timeout = std::chrono::duration<double>(cmd.timeout);
  const auto report = bench::run_benchmark(cmd.game, solver, kind, depths, o);

  const std::string csv = bench::to_csv(report);
  if (!cmd.out.empty()) {
    std::ofstream f(cmd.out, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + cmd.out);
    f << csv;
  }
  out << csv;
  for (const auto& [depth, ratio] : bench::growth_factors(report, cmd.game, to_string(kind))) {
    out << "# growth " << depth - 1 << "->" << depth << ": " << ratio << "\n";
  }
  out << "# cores " << report.cores << ", " << report.timestamp << "\n";
  return 0;
}

int run_serve(const ServeCommand& cmd, std::ostream& out) {
  ServiceOptions o;
  if (!cmd.snapshot_dir.empty()) o.snapshot_dir = cmd.snapshot_dir;
  o.ai_timeout = std::chrono::milliseconds(static_cast<long long>(cmd.ai_timeout * 1000));
  SessionService service(o);
  httplib::Server server;
  install_routes(server, service);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  out << "listening on " << cmd.host << ":" << cmd.port;
  if (o.snapshot_dir) out << ", " << service.size() << " sessions restored from " << o.snapshot_dir->string();
  out << std::endl;
  const bool ok = server.listen(cmd.host, cmd.port);
  g_server = nullptr;
  if (!ok && !server.is_running()) {
    std::cerr << "could not listen on " << cmd.host << ":" << cmd.port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace seqgame::app
