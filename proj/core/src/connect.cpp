#include "seqgame/connect.hpp"

#include <algorithm>
#include <string>

namespace seqgame::connect {

void Config::validate() const {
  if (width < 1 || height < 1) throw ConfigError("board needs at least one column and row");
  if (width > 32 || height > 32) throw ConfigError("board larger than 32x32");
  if (run_length < 1) throw ConfigError("run length must be positive");
  if (run_length > std::max(width, height)) {
    throw ConfigError("run length " + std::to_string(run_length) + " exceeds board size");
  }
  if (lookahead < 1) throw ConfigError("lookahead must be positive");
}

Board::Board(int width, int height)
    : width_(width), height_(height),
      cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), Cell::Empty) {}

std::size_t Board::index(int column, int row) const {
  if (column < 1 || column > width_ || row < 1 || row > height_) {
    throw std::out_of_range("cell (" + std::to_string(column) + "," + std::to_string(row) +
                            ") is off the board");
  }
  return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(width_) +
         static_cast<std::size_t>(column - 1);
}

int Board::landing_row(int column) const {
  for (int row = 1; row <= height_; ++row) {
    if (at(column, row) == Cell::Empty) return row;
  }
  return 0;
}

std::string Board::render() const {
  std::string out;
  out.reserve(static_cast<std::size_t>((width_ + 1) * height_));
  for (int row = height_; row >= 1; --row) {
    for (int column = 1; column <= width_; ++column) {
      switch (at(column, row)) {
        case Cell::First: out += 'X'; break;
        case Cell::Second: out += 'O'; break;
        case Cell::Empty: out += '.'; break;
      }
    }
    out += '\n';
  }
  return out;
}

namespace {

void drop(Board& board, Move column, Cell player, int& landed) {
  if (player == Cell::Empty) throw std::invalid_argument("cannot drop an empty cell");
  if (column < 1 || column > board.width()) {
    throw IllegalMove("column " + std::to_string(column) + " is off the board");
  }
  landed = board.landing_row(column);
  if (landed == 0) throw IllegalMove("column " + std::to_string(column) + " is full");
  board.set(column, landed, player);
}

constexpr int kDirections[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};

}  // namespace

Board insert_disc(Move column, Cell player, const Board& board) {
  Board next = board;
  int row = 0;
  drop(next, column, player, row);
  return next;
}

bool wins(const Board& board, Cell player, int run_length) {
  for (int column = 1; column <= board.width(); ++column) {
    for (int row = 1; row <= board.height(); ++row) {
      for (const auto& dir : kDirections) {
        const int end_c = column + dir[0] * (run_length - 1);
        const int end_r = row + dir[1] * (run_length - 1);
        if (end_c < 1 || end_c > board.width() || end_r < 1 || end_r > board.height()) continue;
        bool all = true;
        for (int i = 0; i < run_length && all; ++i) {
          all = board.at(column + dir[0] * i, row + dir[1] * i) == player;
        }
        if (all) return true;
      }
    }
  }
  return false;
}

bool wins_through(const Board& board, int column, int row, int run_length) {
  const Cell player = board.at(column, row);
  if (player == Cell::Empty) return false;
  auto same = [&](int c, int r) {
    return c >= 1 && c <= board.width() && r >= 1 && r <= board.height() &&
           board.at(c, r) == player;
  };
  for (const auto& dir : kDirections) {
    int run = 1;
    for (int i = 1; same(column + dir[0] * i, row + dir[1] * i); ++i) ++run;
    for (int i = 1; same(column - dir[0] * i, row - dir[1] * i); ++i) ++run;
    if (run >= run_length) return true;
  }
  return false;
}

std::vector<Move> possible_moves(std::span<const Move> history, const Config& config) {
  std::vector<int> filled(static_cast<std::size_t>(config.width) + 1, 0);
  for (Move m : history) {
    if (m >= 1 && m <= config.width) ++filled[static_cast<std::size_t>(m)];
  }
  std::vector<Move> moves;
  moves.reserve(static_cast<std::size_t>(config.width));
  for (int column = 1; column <= config.width; ++column) {
    if (filled[static_cast<std::size_t>(column)] < config.height) moves.push_back(column);
  }
  return moves;
}

int board_value(const Board& board, int run_length) {
  if (wins(board, Cell::First, run_length)) return 1;
  if (wins(board, Cell::Second, run_length)) return -1;
  return 0;
}

ScoredOutcome payoff(std::span<const Move> history, const Config& config) {
  Board board(config);
  Cell player = Cell::First;
  int played = 0;
  for (Move m : history) {
    int row = 0;
    drop(board, m, player, row);
    ++played;
    if (wins_through(board, m, row, config.run_length)) {
      return {player == Cell::First ? 1 : -1, played};
    }
    player = other(player);
  }
  return {board_value(board, config.run_length), played};
}

Board replay(std::span<const Move> history, const Config& config) {
  Board board(config);
  Cell player = Cell::First;
  for (Move m : history) {
    int row = 0;
    drop(board, m, player, row);
    player = other(player);
  }
  return board;
}

std::size_t decided_at(std::span<const Move> history, const Config& config) {
  const ScoredOutcome o = payoff(history, config);
  return o.value != 0 ? static_cast<std::size_t>(o.moves) : 0;
}

GameRules<Move, ScoredOutcome> rules(const Config& config) {
  config.validate();
  GameRules<Move, ScoredOutcome> r;
  r.possible_moves = [config](std::span<const Move> h) { return possible_moves(h, config); };
  r.payoff = [config](std::span<const Move> h) { return payoff(h, config); };
  r.first_player_direction = Direction::Maximize;
  r.max_game_length = static_cast<std::size_t>(config.width) * static_cast<std::size_t>(config.height);
  r.finished = [config](std::span<const Move> h) {
    return payoff(h, config).value != 0;
  };
  return r;
}

}  // namespace seqgame::connect
