// Capture-the-king chess with kings, queens, rooks, and bishops.
//
// There is no check, checkmate, castling, promotion, or stalemate: the game
// ends when a king is taken. Squares are (x, y) with x the file (1 = a) and
// y the rank (1 = White's back rank).

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqgame/engine.hpp"
#include "seqgame/outcome.hpp"

namespace seqgame::chess {

enum class Colour : std::uint8_t { White, Black };

constexpr Colour opposite(Colour c) noexcept {
  return c == Colour::White ? Colour::Black : Colour::White;
}

enum class PieceKind : std::uint8_t { Empty, King, Queen, Rook, Bishop };

struct Piece {
  PieceKind kind = PieceKind::Empty;
  Colour colour = Colour::White;

  bool empty() const noexcept { return kind == PieceKind::Empty; }
  friend bool operator==(const Piece&, const Piece&) = default;
};

struct Square {
  int x = 0;
  int y = 0;
  bool on_board() const noexcept { return x >= 1 && x <= 8 && y >= 1 && y <= 8; }
  friend bool operator==(const Square&, const Square&) = default;
};

struct Move {
  Square from;
  Square to;
  friend bool operator==(const Move&, const Move&) = default;
};

// e.g. "d1-d8"
std::string to_string(const Square& s);
std::string to_string(const Move& m);

class Board {
 public:
  Board() = default;

  const Piece& at(Square s) const { return squares_[index(s)]; }
  void set(Square s, Piece p) { squares_[index(s)] = p; }

  bool has_king(Colour c) const;
  int piece_count() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  static std::size_t index(Square s);

  std::array<Piece, 64> squares_{};
};

class PositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// 8 ranks of 8 symbols from {K,Q,R,B,k,q,r,b,.} separated by '/', rank 8
// first; uppercase is White. Whitespace is ignored.
Board parse_position(std::string_view text);
std::string serialize_position(const Board& board);

// Board as 8 text lines, rank 8 first.
std::string render(const Board& board);

std::vector<Move> piece_moves(Square from, const Board& board);

Board apply_move(const Board& board, const Move& move);

// True iff the opposing king is gone.
bool wins(const Board& board, Colour colour);

int board_value(const Board& board);

inline Colour side_to_move(std::size_t plies) noexcept {
  return plies % 2 == 1 ? Colour::Black : Colour::White;
}

Board replay(std::span<const Move> history, const Board& start);

std::vector<Move> possible_moves(std::span<const Move> history, const Board& start);

// +1 White took the black king, -1 Black took the white king; stops at the
// first capture. (0, length) when no king falls.
ScoredOutcome payoff(std::span<const Move> history, const Board& start);

// Histories are capped at this many plies so the engine's lookahead clamp has
// a bound; real searches stay far below it.
inline constexpr std::size_t kMaxGameLength = 400;

GameRules<Move, ScoredOutcome> rules(const Board& start);

}  // namespace seqgame::chess
