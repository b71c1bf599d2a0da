#include "seqgame/app/session.hpp"

#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <future>
#include <mutex>
#include <random>
#include <thread>

namespace seqgame::app {

struct SessionService::Session {
  std::string id;
  std::mutex mutex;
  std::unique_ptr<Game> game;
  std::optional<std::shared_future<Json>> pending;
};

struct SessionService::Workers {
  std::mutex mutex;
  std::condition_variable idle;
  int active = 0;
};

namespace {

Json view(const std::string& id, const Game& g, bool computing) {
  return {{"id", id},
          {"kind", g.kind()},
          {"status", to_string(g.status())},
          {"board", g.board()},
          {"legal_moves", g.legal_moves()},
          {"to_move", g.to_move()},
          {"moves", g.moves()},
          {"config", g.config()},
          {"computing", computing}};
}

// Written to a temporary name and renamed so a crash never leaves half a file.
void persist(const std::optional<std::filesystem::path>& dir, const std::string& id, const Game& g) {
  if (!dir) return;
  const Json doc = {{"id", id}, {"kind", g.kind()}, {"config", g.config()}, {"moves", g.moves()}};
  const auto target = *dir / (id + ".json");
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write snapshot " + tmp.string());
    out << doc.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

SessionService::SessionService(ServiceOptions options)
    : options_(std::move(options)), workers_(std::make_shared<Workers>()) {
  std::random_device rd;
  id_state_ = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  if (options_.snapshot_dir) {
    std::filesystem::create_directories(*options_.snapshot_dir);
    load_snapshots();
  }
}

SessionService::~SessionService() {
  std::unique_lock lock(workers_->mutex);
  workers_->idle.wait(lock, [&] { return workers_->active == 0; });
}

void SessionService::load_snapshots() {
  for (const auto& entry : std::filesystem::directory_iterator(*options_.snapshot_dir)) {
    if (entry.path().extension() != ".json") continue;
    try {
      std::ifstream in(entry.path());
      const Json doc = Json::parse(in);
      auto s = std::make_shared<Session>();
      s->id = doc.at("id").get<std::string>();
      s->game = replay_game(doc.at("kind").get<std::string>(), doc.at("config"), doc.at("moves"));
      sessions_[s->id] = std::move(s);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "skipping snapshot %s: %s\n", entry.path().c_str(), e.what());
    }
  }
}

std::string SessionService::fresh_id() {
  // splitmix64 over a random seed; ids only need to be unique and opaque
  for (;;) {
    std::uint64_t z = (id_state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(z));
    if (!sessions_.count(buf)) return buf;
  }
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFound("no session '" + id + "'");
  return it->second;
}

std::size_t SessionService::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

Json SessionService::create_session(std::string_view kind, const Json& config) {
  auto s = std::make_shared<Session>();
  s->game = make_game(kind, config);
  std::unique_lock lock(mutex_);
  s->id = fresh_id();
  persist(options_.snapshot_dir, s->id, *s->game);
  sessions_[s->id] = s;
  return view(s->id, *s->game, false);
}

Json SessionService::get_state(const std::string& id) const {
  const auto s = find(id);
  std::lock_guard lock(s->mutex);
  return view(s->id, *s->game, s->pending.has_value());
}

Json SessionService::submit_human_move(const std::string& id, const Json& move) {
  const auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (s->pending) throw Conflict("an AI move is being computed");
  auto next = s->game->clone();
  next->play(move);
  persist(options_.snapshot_dir, s->id, *next);
  s->game = std::move(next);
  return view(s->id, *s->game, false);
}

AiReply SessionService::request_ai_move(const std::string& id, std::optional<std::size_t> lookahead) {
  const auto s = find(id);
  std::shared_future<Json> result;
  {
    std::lock_guard lock(s->mutex);
    if (s->pending) {
      result = *s->pending;
    } else {
      if (s->game->status() != Status::InProgress) throw Conflict("game is over");
      const std::size_t depth = lookahead.value_or(s->game->default_lookahead());
      if (depth == 0) throw BadRequest("lookahead must be positive");
      auto promise = std::make_shared<std::promise<Json>>();
      result = promise->get_future().share();
      s->pending = result;
      {
        std::lock_guard wl(workers_->mutex);
        ++workers_->active;
      }
      std::thread([s, promise, depth, position = s->game->clone(), dir = options_.snapshot_dir,
                   workers = workers_]() {
        try {
          const Json move = position->best_move(depth);
          Json reply;
          {
            std::lock_guard lock(s->mutex);
            auto next = s->game->clone();
            next->play(move);
            persist(dir, s->id, *next);
            s->game = std::move(next);
            s->pending.reset();
            reply = {{"move", move}, {"state", view(s->id, *s->game, false)}};
          }
          promise->set_value(std::move(reply));
        } catch (...) {
          {
            std::lock_guard lock(s->mutex);
            s->pending.reset();
          }
          promise->set_exception(std::current_exception());
        }
        std::lock_guard wl(workers->mutex);
        if (--workers->active == 0) workers->idle.notify_all();
      }).detach();
    }
  }
  if (result.wait_for(options_.ai_timeout) != std::future_status::ready) {
    return {false, nullptr, get_state(id)};
  }
  const Json& done = result.get();
  return {true, done.at("move"), done.at("state")};
}

}  // namespace seqgame::app
