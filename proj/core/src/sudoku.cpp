#include "seqgame/sudoku.hpp"

#include <cctype>
#include <memory>

namespace seqgame::sudoku {

std::size_t Board::index(int row, int col) {
  if (row < 1 || row > 9 || col < 1 || col > 9) {
    throw std::out_of_range("sudoku cell (" + std::to_string(row) + "," + std::to_string(col) +
                            ") is off the board");
  }
  return static_cast<std::size_t>((row - 1) * 9 + (col - 1));
}

std::string Board::render() const {
  std::string out;
  out.reserve(90);
  for (int r = 1; r <= 9; ++r) {
    for (int c = 1; c <= 9; ++c) {
      const int v = at(r, c);
      out += v == 0 ? '.' : static_cast<char>('0' + v);
    }
    out += '\n';
  }
  return out;
}

Puzzle parse_puzzle(std::string_view text) {
  std::string cells;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch != '.' && (ch < '0' || ch > '9')) {
      throw ParseError(std::string("bad puzzle character '") + ch + "'");
    }
    cells += ch;
  }
  if (cells.size() != 81) {
    throw ParseError("puzzle needs 81 cells, got " + std::to_string(cells.size()));
  }
  Puzzle puzzle;
  for (int i = 0; i < 81; ++i) {
    const int row = i / 9 + 1;
    const int col = i % 9 + 1;
    const char ch = cells[static_cast<std::size_t>(i)];
    if (ch == '.' || ch == '0') {
      puzzle.gaps.push_back({row, col});
    } else {
      const int v = ch - '0';
      puzzle.start.set(row, col, v);
      puzzle.starting_moves.push_back({row, col, v});
    }
  }
  if (!valid_board(puzzle.start)) throw ParseError("clues repeat a value in a row, column, or box");
  return puzzle;
}

namespace {

bool conflicts(const Board& b, int row, int col, int value) {
  for (int i = 1; i <= 9; ++i) {
    if (i != col && b.at(row, i) == value) return true;
    if (i != row && b.at(i, col) == value) return true;
  }
  const int r0 = (row - 1) / 3 * 3 + 1;
  const int c0 = (col - 1) / 3 * 3 + 1;
  for (int r = r0; r < r0 + 3; ++r) {
    for (int c = c0; c < c0 + 3; ++c) {
      if ((r != row || c != col) && b.at(r, c) == value) return true;
    }
  }
  return false;
}

}  // namespace

bool valid_board(const Board& board) {
  for (int r = 1; r <= 9; ++r) {
    for (int c = 1; c <= 9; ++c) {
      const int v = board.at(r, c);
      if (v != 0 && conflicts(board, r, c, v)) return false;
    }
  }
  return true;
}

bool valid_move(const Move& move, const Board& board) {
  if (!board.empty(move.row, move.col)) {
    throw OccupiedCell("cell (" + std::to_string(move.row) + "," + std::to_string(move.col) +
                       ") is not a gap");
  }
  if (move.value < 1 || move.value > 9) return false;
  return !conflicts(board, move.row, move.col, move.value);
}

Board insert(const Move& move, const Board& board) {
  Board next = board;
  next.set(move.row, move.col, move.value);
  return next;
}

Board apply(std::span<const Move> history, const Puzzle& puzzle) {
  Board b = puzzle.start;
  for (const Move& m : history) b.set(m.row, m.col, m.value);
  return b;
}

std::vector<Move> possible_moves(std::span<const Move> history, const Puzzle& puzzle) {
  if (history.size() >= puzzle.gaps.size()) return {};
  const Board b = apply(history, puzzle);
  const Cell next = puzzle.gaps[history.size()];
  std::vector<Move> moves;
  if (!b.empty(next.row, next.col)) return moves;
  for (int v = 1; v <= 9; ++v) {
    if (!conflicts(b, next.row, next.col, v)) moves.push_back({next.row, next.col, v});
  }
  return moves;
}

namespace {

// Whether every move lands on a gap without creating a duplicate.
bool insertions_valid(std::span<const Move> history, Board& b) {
  for (const Move& m : history) {
    if (m.row < 1 || m.row > 9 || m.col < 1 || m.col > 9) return false;
    if (!b.empty(m.row, m.col) || !valid_move(m, b)) return false;
    b.set(m.row, m.col, m.value);
  }
  return true;
}

}  // namespace

bool payoff(std::span<const Move> history, const Puzzle& puzzle) {
  Board b = puzzle.start;
  return insertions_valid(history, b) && valid_board(b);
}

bool solved(std::span<const Move> history, const Puzzle& puzzle) {
  return history.size() == puzzle.gaps.size() && payoff(history, puzzle);
}

GameRules<Move, bool> rules(const Puzzle& puzzle) {
  if (!valid_board(puzzle.start)) throw ParseError("starting board repeats a value");
  GameRules<Move, bool> r;
  auto shared = std::make_shared<const Puzzle>(puzzle);
  r.possible_moves = [shared](std::span<const Move> h) { return possible_moves(h, *shared); };
  // A valid start plus valid insertions is a valid board, so only the cells
  // touched by the history need checking.
  r.payoff = [shared](std::span<const Move> h) {
    Board b = shared->start;
    return h.size() == shared->gaps.size() && insertions_valid(h, b);
  };
  r.first_player_direction = Direction::Maximize;
  r.max_game_length = puzzle.gaps.size();
  r.turns = Turns::SinglePlayer;
  return r;
}

}  // namespace seqgame::sudoku
