#include <algorithm>
#include <string>
#include <vector>

#include "seqgame/app/session.hpp"
#include "seqgame/chess.hpp"
#include "seqgame/connect.hpp"
#include "seqgame/engine.hpp"
#include "seqgame/sudoku.hpp"

namespace seqgame::app {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::InProgress: return "InProgress";
    case Status::FirstWon: return "FirstWon";
    case Status::SecondWon: return "SecondWon";
    case Status::Draw: return "Draw";
  }
  return "?";
}

namespace {

constexpr const char* kDefaultChessPosition =
    ".......k/......../......K./......../......../......../......../.Q......";

int int_field(const Json& config, const char* key, int fallback) {
  if (!config.contains(key)) return fallback;
  const Json& v = config.at(key);
  if (!v.is_number_integer()) throw BadRequest(std::string("config field '") + key + "' must be an integer");
  return v.get<int>();
}

std::size_t lookahead_field(const Json& config, std::size_t fallback) {
  const int n = int_field(config, "lookahead", static_cast<int>(fallback));
  if (n < 1) throw BadRequest("lookahead must be positive");
  return static_cast<std::size_t>(n);
}

std::string string_field(const Json& config, const char* key, const std::string& fallback) {
  if (!config.contains(key)) return fallback;
  if (!config.at(key).is_string()) throw BadRequest(std::string("config field '") + key + "' must be a string");
  return config.at(key).get<std::string>();
}

Status two_player_status(const ScoredOutcome& o, bool stuck) {
  if (o.value > 0) return Status::FirstWon;
  if (o.value < 0) return Status::SecondWon;
  return stuck ? Status::Draw : Status::InProgress;
}

template <class Move, class R>
class RulesGame : public Game {
 public:
  Json moves() const override {
    Json out = Json::array();
    for (const Move& m : log_) out.push_back(encode(m));
    return out;
  }

  Json legal_moves() const override {
    Json out = Json::array();
    if (status() != Status::InProgress) return out;
    for (const Move& m : rules_.possible_moves(log_)) out.push_back(encode(m));
    return out;
  }

  void play(const Json& move) override {
    const Move m = decode(move);
    if (status() != Status::InProgress) throw Conflict("game is over");
    const auto legal = rules_.possible_moves(log_);
    if (std::find(legal.begin(), legal.end(), m) == legal.end()) {
      throw Conflict("illegal move " + move.dump());
    }
    log_.push_back(m);
  }

  Json best_move(std::size_t lookahead) const override {
    if (status() != Status::InProgress) throw Conflict("game is over");
    try {
      return encode(optimal_strategy(rules_, selector(), lookahead, std::span<const Move>(log_)));
    } catch (const GameOver&) {
      throw Conflict("game is over");
    }
  }

 protected:
  explicit RulesGame(GameRules<Move, R> rules) : rules_(std::move(rules)) {}

  virtual Move decode(const Json& move) const = 0;
  virtual Json encode(const Move& move) const = 0;
  virtual SelectorKind selector() const = 0;

  bool stuck() const {
    return log_.size() >= rules_.max_game_length || rules_.possible_moves(log_).empty();
  }

  GameRules<Move, R> rules_;
  std::vector<Move> log_;
};

class ConnectGame final : public RulesGame<connect::Move, ScoredOutcome> {
 public:
  explicit ConnectGame(const connect::Config& c) : RulesGame(connect::rules(c)), config_(c) {}

  std::string_view kind() const override { return "connect"; }

  Json config() const override {
    return {{"width", config_.width},
            {"height", config_.height},
            {"run_length", config_.run_length},
            {"lookahead", config_.lookahead}};
  }

  std::string board() const override { return connect::replay(log_, config_).render(); }

  Status status() const override { return two_player_status(rules_.payoff(log_), stuck()); }

  Json to_move() const override {
    if (status() != Status::InProgress) return nullptr;
    return log_.size() % 2 == 0 ? "first" : "second";
  }

  std::size_t default_lookahead() const override { return static_cast<std::size_t>(config_.lookahead); }

  std::unique_ptr<Game> clone() const override { return std::make_unique<ConnectGame>(*this); }

 protected:
  connect::Move decode(const Json& move) const override {
    if (!move.is_number_integer()) throw BadRequest("connect moves are column numbers");
    return move.get<int>();
  }
  Json encode(const connect::Move& move) const override { return move; }
  SelectorKind selector() const override { return SelectorKind::Scored; }

 private:
  connect::Config config_;
};

class SudokuGame final : public RulesGame<sudoku::Move, bool> {
 public:
  SudokuGame(sudoku::Puzzle p, std::string text, std::size_t lookahead)
      : RulesGame(sudoku::rules(p)), puzzle_(std::move(p)), text_(std::move(text)), lookahead_(lookahead) {}

  std::string_view kind() const override { return "sudoku"; }

  Json config() const override { return {{"puzzle", text_}, {"lookahead", lookahead_}}; }

  std::string board() const override { return sudoku::apply(log_, puzzle_).render(); }

  Status status() const override {
    if (sudoku::solved(log_, puzzle_)) return Status::FirstWon;
    return stuck() ? Status::Draw : Status::InProgress;
  }

  Json to_move() const override {
    if (status() != Status::InProgress) return nullptr;
    return "first";
  }

  std::size_t default_lookahead() const override { return lookahead_; }

  std::unique_ptr<Game> clone() const override { return std::make_unique<SudokuGame>(*this); }

 protected:
  sudoku::Move decode(const Json& move) const override {
    if (!move.is_array() || move.size() != 3 ||
        !std::all_of(move.begin(), move.end(), [](const Json& v) { return v.is_number_integer(); })) {
      throw BadRequest("sudoku moves are [row,col,value]");
    }
    return {move[0].get<int>(), move[1].get<int>(), move[2].get<int>()};
  }
  Json encode(const sudoku::Move& m) const override { return Json::array({m.row, m.col, m.value}); }
  SelectorKind selector() const override { return SelectorKind::Boolean; }

 private:
  sudoku::Puzzle puzzle_;
  std::string text_;
  std::size_t lookahead_;
};

chess::Square square_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw BadRequest("chess squares are [x,y]");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

class ChessGame final : public RulesGame<chess::Move, ScoredOutcome> {
 public:
  ChessGame(const chess::Board& start, std::size_t lookahead)
      : RulesGame(chess::rules(start)), start_(start), lookahead_(lookahead) {}

  std::string_view kind() const override { return "chess"; }

  Json config() const override {
    return {{"position", chess::serialize_position(start_)}, {"lookahead", lookahead_}};
  }

  std::string board() const override { return chess::render(chess::replay(log_, start_)); }

  Status status() const override { return two_player_status(rules_.payoff(log_), stuck()); }

  Json to_move() const override {
    if (status() != Status::InProgress) return nullptr;
    return chess::side_to_move(log_.size()) == chess::Colour::White ? "white" : "black";
  }

  std::size_t default_lookahead() const override { return lookahead_; }

  std::unique_ptr<Game> clone() const override { return std::make_unique<ChessGame>(*this); }

 protected:
  chess::Move decode(const Json& move) const override {
    if (!move.is_object() || !move.contains("from") || !move.contains("to")) {
      throw BadRequest("chess moves are {\"from\":[x,y],\"to\":[x,y]}");
    }
    return {square_from(move.at("from")), square_from(move.at("to"))};
  }
  Json encode(const chess::Move& m) const override {
    return {{"from", {m.from.x, m.from.y}}, {"to", {m.to.x, m.to.y}}};
  }
  SelectorKind selector() const override { return SelectorKind::Scored; }

 private:
  chess::Board start_;
  std::size_t lookahead_;
};

}  // namespace

std::unique_ptr<Game> make_game(std::string_view kind, const Json& config) {
  if (!config.is_null() && !config.is_object()) throw BadRequest("config must be an object");
  const Json c = config.is_null() ? Json::object() : config;
  if (kind == "connect") {
    const auto d = connect::Config::connect_four();
    connect::Config cfg{int_field(c, "width", d.width), int_field(c, "height", d.height),
                        int_field(c, "run_length", d.run_length), int_field(c, "lookahead", d.lookahead)};
    try {
      cfg.validate();
    } catch (const connect::ConfigError& e) {
      throw BadRequest(e.what());
    }
    return std::make_unique<ConnectGame>(cfg);
  }
  if (kind == "sudoku") {
    if (!c.contains("puzzle")) throw BadRequest("sudoku needs a puzzle");
    const std::string text = string_field(c, "puzzle", "");
    sudoku::Puzzle p;
    try {
      p = sudoku::parse_puzzle(text);
    } catch (const sudoku::ParseError& e) {
      throw BadRequest(e.what());
    }
    const std::size_t look = lookahead_field(c, std::max<std::size_t>(p.gaps.size(), 1));
    return std::make_unique<SudokuGame>(std::move(p), text, look);
  }
  if (kind == "chess") {
    chess::Board start;
    try {
      start = chess::parse_position(string_field(c, "position", kDefaultChessPosition));
    } catch (const chess::PositionError& e) {
      throw BadRequest(e.what());
    }
    return std::make_unique<ChessGame>(start, lookahead_field(c, 3));
  }
  throw BadRequest("unknown game kind '" + std::string(kind) + "'");
}

std::unique_ptr<Game> replay_game(std::string_view kind, const Json& config, const Json& moves) {
  auto game = make_game(kind, config);
  if (!moves.is_array()) throw BadRequest("move log must be an array");
  for (const Json& m : moves) game->play(m);
  return game;
}

}  // namespace seqgame::app
