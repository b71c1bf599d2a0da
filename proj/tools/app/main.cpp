#include <iostream>

#include "CLI11.hpp"
#include "seqgame/app/commands.hpp"

using namespace seqgame::app;

namespace {

void shape_flags(CLI::App* cmd, ConnectShape& shape) {
  cmd->add_option("--width", shape.width, "columns, for the plain connect game");
  cmd->add_option("--height", shape.height, "rows, for the plain connect game");
  cmd->add_option("--run", shape.run_length, "discs in a row needed to win");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seqgame: sequential games solved with selection functions"};
  app.require_subcommand(1);

  SolveCommand solve;
  auto* s = app.add_subcommand("solve", "compute an optimal play and its outcome");
  s->add_option("game", solve.game, "connect3, connect4, connect, sudoku or chess")->required();
  s->add_option("--depth", solve.depth, "number of plies to search");
  s->add_option("--selector", solve.selector,
                "generic, three, bool, scored, generic-parallel or scored-parallel");
  s->add_option("--puzzle", solve.puzzle, "sudoku puzzle file or 81-character string");
  s->add_option("--position", solve.position, "chess position file or text");
  shape_flags(s, solve.shape);

  PlayCommand play;
  auto* p = app.add_subcommand("play", "play against the AI in the terminal");
  p->add_option("game", play.game, "connect3, connect4, connect or chess")->required();
  p->add_option("--depth", play.depth, "AI lookahead in plies");
  p->add_option("--position", play.position, "chess starting position file or text");
  p->add_flag("--ai-first", play.ai_first, "let the AI make the first move");
  shape_flags(p, play.shape);

  BenchCommand bench;
  auto* b = app.add_subcommand("bench", "time a depth sweep and write CSV");
  b->add_option("game", bench.game, "connect3, connect4, connect, sudoku or chess")->required();
  b->add_option("--depths", bench.depths, "range A..B; gap counts for sudoku")->required();
  b->add_option("--selector", bench.selector, "selector kind");
  b->add_option("--reps", bench.repetitions, "repetitions per depth, median is kept");
  b->add_option("--timeout", bench.timeout, "seconds per depth before the row is cut");
  b->add_option("--out", bench.out, "CSV output file");
  b->add_option("--position", bench.position, "chess position file or text");
  shape_flags(b, bench.shape);

  ServeCommand serve;
  auto* v = app.add_subcommand("serve", "run the HTTP game service");
  v->add_option("--host", serve.host, "address to bind");
  v->add_option("--port", serve.port, "port to listen on");
  v->add_option("--snapshot-dir", serve.snapshot_dir, "keep session snapshots here and reload them at start");
  v->add_option("--ai-timeout", serve.ai_timeout, "seconds an ai-move request waits before answering 202");

  CLI11_PARSE(app, argc, argv);

  try {
    if (s->parsed()) return run_solve(solve, std::cout);
    if (p->parsed()) return run_play(play, std::cin, std::cout);
    if (b->parsed()) return run_bench(bench, std::cout);
    if (v->parsed()) return run_serve(serve, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "seqgame: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "seqgame: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
