#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace seqgame {

enum class Direction : std::uint8_t { Minimize, Maximize };

constexpr Direction opposite(Direction d) noexcept {
  return d == Direction::Maximize ? Direction::Minimize : Direction::Maximize;
}

// Loss / draw / win from the first player's point of view.
enum class Three : std::int8_t { Loss = -1, Draw = 0, Win = 1 };

constexpr int to_int(Three t) noexcept { return static_cast<int>(t); }

constexpr Three three_from_sign(int v) noexcept {
  return v > 0 ? Three::Win : (v < 0 ? Three::Loss : Three::Draw);
}

// Who wins and after how many moves. Positive value: first player wins;
// negative: second player wins; zero: draw.
struct ScoredOutcome {
  int value = 0;
  int moves = 0;

  friend constexpr auto operator<=>(const ScoredOutcome&, const ScoredOutcome&) = default;
};

inline std::string to_string(const ScoredOutcome& o) {
  return "(" + std::to_string(o.value) + "," + std::to_string(o.moves) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const ScoredOutcome& o) {
  return os << to_string(o);
}

inline std::ostream& operator<<(std::ostream& os, Three t) { return os << to_int(t); }

inline std::ostream& operator<<(std::ostream& os, Direction d) {
  return os << (d == Direction::Maximize ? "Maximize" : "Minimize");
}

}  // namespace seqgame
