// Connect-N on a width x height board with gravity.
//
// Columns and rows are 1-based externally; row 1 is the bottom of a column.
// Moves are column numbers, so a play reads like "[2,4,3,1,2,2,3,5,1]".

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqgame/engine.hpp"
#include "seqgame/outcome.hpp"

namespace seqgame::connect {

enum class Cell : std::uint8_t { Empty, First, Second };

constexpr Cell other(Cell c) noexcept {
  return c == Cell::First ? Cell::Second : (c == Cell::Second ? Cell::First : Cell::Empty);
}

using Move = int;

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  int width = 5;
  int height = 3;
  int run_length = 3;
  int lookahead = 9;

  // Throws ConfigError unless the geometry is playable.
  void validate() const;

  static Config connect_three() { return {5, 3, 3, 9}; }
  static Config connect_three_interactive() { return {4, 3, 3, 6}; }
  static Config connect_four() { return {7, 6, 4, 6}; }
};

class Board {
 public:
  Board(int width, int height);
  explicit Board(const Config& c) : Board(c.width, c.height) {}

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  Cell at(int column, int row) const { return cells_[index(column, row)]; }
  void set(int column, int row, Cell c) { cells_[index(column, row)] = c; }

  // Row the next disc dropped into `column` lands on, or 0 when full.
  int landing_row(int column) const;

  // height lines of width characters from {X,O,.}, top row first
  std::string render() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  std::size_t index(int column, int row) const;

  int width_;
  int height_;
  std::vector<Cell> cells_;
};

Board insert_disc(Move column, Cell player, const Board& board);

// Full-board scan over horizontal, vertical, and both diagonal windows.
bool wins(const Board& board, Cell player, int run_length);

// Only the windows through (column, row).
bool wins_through(const Board& board, int column, int row, int run_length);

std::vector<Move> possible_moves(std::span<const Move> history, const Config& config);

int board_value(const Board& board, int run_length);

// Replays from the empty board, First moving first, and stops at the first
// winning insertion.
ScoredOutcome payoff(std::span<const Move> history, const Config& config);

// Board after replaying the history; illegal moves throw.
Board replay(std::span<const Move> history, const Config& config);

// Number of moves after which the history has a winner, or 0.
std::size_t decided_at(std::span<const Move> history, const Config& config);

GameRules<Move, ScoredOutcome> rules(const Config& config);

}  // namespace seqgame::connect
