#include "seqgame/chess.hpp"

#include <cctype>

namespace seqgame::chess {

std::string to_string(const Square& s) {
  std::string out;
  out += static_cast<char>('a' + s.x - 1);
  out += std::to_string(s.y);
  return out;
}

std::string to_string(const Move& m) { return to_string(m.from) + "-" + to_string(m.to); }

std::size_t Board::index(Square s) {
  if (!s.on_board()) {
    throw std::out_of_range("square (" + std::to_string(s.x) + "," + std::to_string(s.y) +
                            ") is off the board");
  }
  return static_cast<std::size_t>((s.y - 1) * 8 + (s.x - 1));
}

bool Board::has_king(Colour c) const {
  for (const Piece& p : squares_) {
    if (p.kind == PieceKind::King && p.colour == c) return true;
  }
  return false;
}

int Board::piece_count() const {
  int n = 0;
  for (const Piece& p : squares_) n += p.empty() ? 0 : 1;
  return n;
}

namespace {

char symbol(const Piece& p) {
  char c = '.';
  switch (p.kind) {
    case PieceKind::Empty: return '.';
    case PieceKind::King: c = 'K'; break;
    case PieceKind::Queen: c = 'Q'; break;
    case PieceKind::Rook: c = 'R'; break;
    case PieceKind::Bishop: c = 'B'; break;
  }
  return p.colour == Colour::White ? c : static_cast<char>(std::tolower(c));
}

Piece piece_from(char c) {
  const Colour colour = std::isupper(static_cast<unsigned char>(c)) ? Colour::White : Colour::Black;
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'K': return {PieceKind::King, colour};
    case 'Q': return {PieceKind::Queen, colour};
    case 'R': return {PieceKind::Rook, colour};
    case 'B': return {PieceKind::Bishop, colour};
    default: break;
  }
  throw PositionError(std::string("unknown piece symbol '") + c + "'");
}

constexpr int kRookRays[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
constexpr int kBishopRays[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
constexpr int kKingSteps[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                  {1, 0},   {-1, 1}, {0, 1},  {1, 1}};

template <std::size_t N>
void slide(Square from, const Board& b, Colour own, const int (&rays)[N][2],
           std::vector<Move>& out) {
  for (const auto& ray : rays) {
    Square s{from.x + ray[0], from.y + ray[1]};
    while (s.on_board()) {
      const Piece& p = b.at(s);
      if (!p.empty()) {
        if (p.colour != own) out.push_back({from, s});
        break;
      }
      out.push_back({from, s});
      s = {s.x + ray[0], s.y + ray[1]};
    }
  }
}

}  // namespace

Board parse_position(std::string_view text) {
  std::vector<std::string> ranks(1);
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '/') {
      ranks.emplace_back();
    } else {
      ranks.back() += c;
    }
  }
  if (ranks.size() != 8) {
    throw PositionError("position needs 8 ranks, got " + std::to_string(ranks.size()));
  }
  Board board;
  bool seen_king[2] = {false, false};
  for (int i = 0; i < 8; ++i) {
    const std::string& rank = ranks[static_cast<std::size_t>(i)];
    if (rank.size() != 8) {
      throw PositionError("rank " + std::to_string(8 - i) + " needs 8 squares, got " +
                          std::to_string(rank.size()));
    }
    for (int x = 1; x <= 8; ++x) {
      const char c = rank[static_cast<std::size_t>(x - 1)];
      if (c == '.') continue;
      const Piece p = piece_from(c);
      if (p.kind == PieceKind::King) {
        bool& seen = seen_king[p.colour == Colour::White ? 0 : 1];
        if (seen) throw PositionError("more than one king of one colour");
        seen = true;
      }
      board.set({x, 8 - i}, p);
    }
  }
  return board;
}

std::string serialize_position(const Board& board) {
  std::string out;
  for (int y = 8; y >= 1; --y) {
    for (int x = 1; x <= 8; ++x) out += symbol(board.at({x, y}));
    if (y > 1) out += '/';
  }
  return out;
}

std::string render(const Board& board) {
  std::string out;
  for (int y = 8; y >= 1; --y) {
    for (int x = 1; x <= 8; ++x) out += symbol(board.at({x, y}));
    out += '\n';
  }
  return out;
}

std::vector<Move> piece_moves(Square from, const Board& board) {
  const Piece& p = board.at(from);
  if (p.empty()) throw IllegalMove("no piece on " + to_string(from));
  std::vector<Move> out;
  switch (p.kind) {
    case PieceKind::King:
      for (const auto& step : kKingSteps) {
        const Square s{from.x + step[0], from.y + step[1]};
        if (!s.on_board()) continue;
        const Piece& q = board.at(s);
        if (q.empty() || q.colour != p.colour) out.push_back({from, s});
      }
      break;
    case PieceKind::Rook: slide(from, board, p.colour, kRookRays, out); break;
    case PieceKind::Bishop: slide(from, board, p.colour, kBishopRays, out); break;
    case PieceKind::Queen:
      slide(from, board, p.colour, kRookRays, out);
      slide(from, board, p.colour, kBishopRays, out);
      break;
    case PieceKind::Empty: break;
  }
  return out;
}

Board apply_move(const Board& board, const Move& move) {
  const Piece p = board.at(move.from);
  if (p.empty()) throw IllegalMove("no piece on " + to_string(move.from));
  if (!move.to.on_board() || move.to == move.from) {
    throw IllegalMove("bad destination for " + to_string(move.from));
  }
  Board next = board;
  next.set(move.to, p);
  next.set(move.from, Piece{});
  return next;
}

bool wins(const Board& board, Colour colour) { return !board.has_king(opposite(colour)); }

int board_value(const Board& board) {
  if (wins(board, Colour::White)) return 1;
  if (wins(board, Colour::Black)) return -1;
  return 0;
}

Board replay(std::span<const Move> history, const Board& start) {
  Board b = start;
  for (const Move& m : history) b = apply_move(b, m);
  return b;
}

std::vector<Move> possible_moves(std::span<const Move> history, const Board& start) {
  const Board b = replay(history, start);
  const Colour c = side_to_move(history.size());
  std::vector<Move> moves;
  for (int y = 1; y <= 8; ++y) {
    for (int x = 1; x <= 8; ++x) {
      const Piece& p = b.at({x, y});
      if (p.empty() || p.colour != c) continue;
      const auto mine = piece_moves({x, y}, b);
      moves.insert(moves.end(), mine.begin(), mine.end());
    }
  }
  return moves;
}

ScoredOutcome payoff(std::span<const Move> history, const Board& start) {
  Board b = start;
  Colour c = Colour::White;
  int played = 0;
  for (const Move& m : history) {
    b = apply_move(b, m);
    ++played;
    if (wins(b, c)) return {board_value(b), played};
    c = opposite(c);
  }
  return {board_value(b), played};
}

GameRules<Move, ScoredOutcome> rules(const Board& start) {
  GameRules<Move, ScoredOutcome> r;
  r.possible_moves = [start](std::span<const Move> h) { return possible_moves(h, start); };
  r.payoff = [start](std::span<const Move> h) { return payoff(h, start); };
  r.first_player_direction = Direction::Maximize;
  r.max_game_length = kMaxGameLength;
  r.finished = [start](std::span<const Move> h) { return payoff(h, start).value != 0; };
  return r;
}

}  // namespace seqgame::chess
