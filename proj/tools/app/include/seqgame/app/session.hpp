// Game sessions for human-vs-AI play.
//
// A session is its game config plus the log of moves played; every view is
// rebuilt by replaying the log. AI moves run on a worker thread and the
// request waits for them only up to a timeout.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace seqgame::app {

using Json = nlohmann::json;

enum class Status { InProgress, FirstWon, SecondWon, Draw };

std::string_view to_string(Status s) noexcept;

// Unknown session id.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed request the current state refuses: illegal move, finished
// game, AI move in flight.
class Conflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown kind, bad config, malformed move.
class BadRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One game position behind a JSON interface. Implementations keep the typed
// move log and replay it for every query.
class Game {
 public:
  virtual ~Game() = default;

  virtual std::string_view kind() const = 0;
  virtual Json config() const = 0;
  virtual Json moves() const = 0;
  virtual Json legal_moves() const = 0;
  virtual std::string board() const = 0;
  virtual Status status() const = 0;
  // null once the game is over
  virtual Json to_move() const = 0;

  // Throws BadRequest for a malformed move and Conflict for an illegal one;
  // the log is unchanged either way.
  virtual void play(const Json& move) = 0;

  virtual std::size_t default_lookahead() const = 0;
  virtual Json best_move(std::size_t lookahead) const = 0;

  virtual std::unique_ptr<Game> clone() const = 0;
};

// kind is "connect", "sudoku" or "chess"; missing config fields take defaults.
std::unique_ptr<Game> make_game(std::string_view kind, const Json& config);

// make_game, then every move of `moves` in order.
std::unique_ptr<Game> replay_game(std::string_view kind, const Json& config, const Json& moves);

struct ServiceOptions {
  std::optional<std::filesystem::path> snapshot_dir;
  std::chrono::milliseconds ai_timeout{30000};
};

struct AiReply {
  bool ready = false;  // false: still computing, state is the current one
  Json move;
  Json state;
};

class SessionService {
 public:
  explicit SessionService(ServiceOptions options = {});
  ~SessionService();

  SessionService(const SessionService&) = delete;
  SessionService& operator=(const SessionService&) = delete;

  Json create_session(std::string_view kind, const Json& config);
  Json submit_human_move(const std::string& id, const Json& move);
  AiReply request_ai_move(const std::string& id, std::optional<std::size_t> lookahead = {});
  Json get_state(const std::string& id) const;

  std::size_t size() const;

 private:
  struct Session;
  struct Workers;

  std::shared_ptr<Session> find(const std::string& id) const;
  std::string fresh_id();
  void load_snapshots();

  ServiceOptions options_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::shared_ptr<Workers> workers_;
  std::uint64_t id_state_;
};

}  // namespace seqgame::app
