#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace billiards {

enum class Orientation : std::int8_t { Counterclockwise = -1, Clockwise = 1 };

inline int sign(Orientation e) { return static_cast<int>(e); }
inline Orientation flip(Orientation e) {
  return e == Orientation::Clockwise ? Orientation::Counterclockwise : Orientation::Clockwise;
}

// Largest vertex count a state can hold.
inline constexpr int kMaxStateOrder = 16;

// A point (v, i, eps) of S_n x Z/n x {+1,-1}: replica of vertex a sits at
// cycle position v(a), the pointer is i and the stone orientation is eps.
// Positions are labeled 1..n clockwise, with n identified with 0.
//
// The stone sits at i + (1 - eps)/2, "coexists" with the replica there and
// "points toward" the replica at the stone position + eps.
class BilliardState {
 public:
  // placement[k-1] = v(k); pointer is taken mod n. Throws InputError if
  // placement is not a permutation of 1..n or n is out of range.
  BilliardState(std::span<const int> placement, int pointer, Orientation orientation);

  static BilliardState identity(int n, int pointer, Orientation orientation);

  int order() const { return n_; }
  int position_of(int vertex) const { return position_[static_cast<std::size_t>(vertex - 1)] + 1; }
  // Any integer position, taken mod n.
  int vertex_at(int position) const { return vertex_[static_cast<std::size_t>(wrap(position - 1))] + 1; }
  int pointer() const { return pointer_ + 1; }
  Orientation orientation() const { return orientation_; }
  int stone_position() const { return stone0() + 1; }
  int coin_vertex() const { return vertex_[static_cast<std::size_t>(stone0())] + 1; }
  int pointed_vertex() const { return vertex_[static_cast<std::size_t>(wrap(stone0() + sign(orientation_)))] + 1; }

  // 0-based views used by the stepping engine.
  int pointer0() const { return pointer_; }
  int stone0() const { return orientation_ == Orientation::Clockwise ? pointer_ : wrap(pointer_ + 1); }
  int position0(int vertex0) const { return position_[static_cast<std::size_t>(vertex0)]; }
  int vertex0(int position0) const { return vertex_[static_cast<std::size_t>(position0)]; }
  int wrap(int position0) const { return ((position0 % n_) + n_) % n_; }

  // Swaps the occupants of two positions (0-based).
  void swap_positions0(int p, int q);
  void set_pointer0(int p) { pointer_ = static_cast<std::uint8_t>(wrap(p)); }
  void set_orientation(Orientation e) { orientation_ = e; }

  friend bool operator==(const BilliardState& x, const BilliardState& y) {
    return x.n_ == y.n_ && x.pointer_ == y.pointer_ && x.orientation_ == y.orientation_ && x.position_ == y.position_;
  }

 private:
  BilliardState() = default;

  std::uint8_t n_ = 0;
  std::uint8_t pointer_ = 0;
  Orientation orientation_ = Orientation::Clockwise;
  std::array<std::uint8_t, kMaxStateOrder> position_{};
  std::array<std::uint8_t, kMaxStateOrder> vertex_{};

  friend BilliardState state_from_index(int n, std::uint64_t index);
};

// |S_n x Z/n x {+1,-1}| = 2n * n!. Throws RangeError when it overflows.
std::uint64_t state_space_size(int n);

// Dense perfect index: lehmer(v(1..n)) * 2n + (i-1)*2 + (eps+1)/2.
std::uint64_t state_index(const BilliardState& s);
BilliardState state_from_index(int n, std::uint64_t index);

// "perm=p1,...,pn;i=I;eps=+1|-1" with pk = v(k).
std::string format_state(const BilliardState& s);
BilliardState parse_state(std::string_view text);

}  // namespace billiards
