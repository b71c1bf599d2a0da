// Sudoku as a one-player sequential game.
//
// Gaps are filled one per ply in row-major order; every selector maximizes a
// boolean payoff that says whether the filled board is still a valid Sudoku.

#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqgame/engine.hpp"

namespace seqgame::sudoku {

struct Cell {
  int row = 0;  // 1..9
  int col = 0;  // 1..9
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Move {
  int row = 0;
  int col = 0;
  int value = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

class Board {
 public:
  Board() { cells_.fill(0); }

  int at(int row, int col) const { return cells_[index(row, col)]; }
  void set(int row, int col, int value) { cells_[index(row, col)] = value; }
  bool empty(int row, int col) const { return at(row, col) == 0; }

  // 9 lines of 9 digits, '.' for gaps
  std::string render() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  static std::size_t index(int row, int col);

  std::array<int, 81> cells_;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OccupiedCell : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Puzzle {
  Board start;
  std::vector<Cell> gaps;            // row-major
  std::vector<Move> starting_moves;  // the clues as moves
};

// 81 characters after whitespace removal, row-major, '.' or '0' for a gap.
Puzzle parse_puzzle(std::string_view text);

// No duplicate non-zero value in any row, column, or box. Gaps are allowed.
bool valid_board(const Board& board);

// Whether placing the move keeps its row, column, and box duplicate-free.
// Throws OccupiedCell if the target already holds a value.
bool valid_move(const Move& move, const Board& board);

Board insert(const Move& move, const Board& board);

// Values for the next unfilled gap that pass valid_move; empty once every gap
// is filled or when the next gap has no valid value.
std::vector<Move> possible_moves(std::span<const Move> history, const Puzzle& puzzle);

// Replays the history onto the starting board. False at the first invalid
// insertion, otherwise whether the final board is valid.
bool payoff(std::span<const Move> history, const Puzzle& puzzle);

// Board after applying the history without validity checks.
Board apply(std::span<const Move> history, const Puzzle& puzzle);

// payoff, and additionally every gap filled. This is the payoff the engine
// solves against, since a play may stop early at a gap with no valid value.
bool solved(std::span<const Move> history, const Puzzle& puzzle);

GameRules<Move, bool> rules(const Puzzle& puzzle);

}  // namespace seqgame::sudoku
