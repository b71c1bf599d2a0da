// The seqgame subcommands, separated from argument parsing so they can be
// driven from tests.

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace seqgame::app {

// Reports a bad command line; main turns it into exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConnectShape {
  int width = 5;
  int height = 3;
  int run_length = 3;
};

struct SolveCommand {
  std::string game;  // connect3, connect4, connect, sudoku, chess
  std::optional<int> depth;
  std::string selector;  // empty: the game's usual kind
  std::string puzzle;    // file or inline text
  std::string position;  // file or inline text
  ConnectShape shape;
};

struct PlayCommand {
  std::string game;  // connect3, connect4, connect, chess
  std::optional<int> depth;
  std::string position;
  ConnectShape shape;
  bool ai_first = false;
};

struct BenchCommand {
  std::string game;  // connect3, connect4, connect, sudoku, chess
  std::string depths;  // "A..B"
  std::string selector;
  int repetitions = 3;
  double timeout = 60.0;
  std::string out;
  std::string position;
  ConnectShape shape;
};

struct ServeCommand {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string snapshot_dir;
  double ai_timeout = 30.0;
};

int run_solve(const SolveCommand& cmd, std::ostream& out);
int run_play(const PlayCommand& cmd, std::istream& in, std::ostream& out);
int run_bench(const BenchCommand& cmd, std::ostream& out);
int run_serve(const ServeCommand& cmd, std::ostream& out);

// "3..7" -> {3, 7}; a single number N is {N, N}.
std::pair<int, int> parse_depth_range(const std::string& text);

// Reads `arg` as a file if one exists under that name, otherwise returns it.
std::string file_or_inline(const std::string& arg);

}  // namespace seqgame::app
