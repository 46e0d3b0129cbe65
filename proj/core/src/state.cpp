#include "billiards/state.hpp"

#include <bit>
#include <charconv>
#include <vector>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

void check_state_order(int n) {
  if (n < 1 || n > kMaxStateOrder) {
    throw RangeError("states support 1.." + std::to_string(kMaxStateOrder) + " vertices, got " + std::to_string(n));
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace

BilliardState::BilliardState(std::span<const int> placement, int pointer, Orientation orientation) {
  const int n = static_cast<int>(placement.size());
  check_state_order(n);
  n_ = static_cast<std::uint8_t>(n);
  std::uint32_t seen = 0;
  for (int a = 0; a < n; ++a) {
    const int p = placement[static_cast<std::size_t>(a)];
    if (p < 1 || p > n || ((seen >> (p - 1)) & 1)) throw InputError("placement is not a permutation of 1..n");
    seen |= 1u << (p - 1);
    position_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(p - 1);
    vertex_[static_cast<std::size_t>(p - 1)] = static_cast<std::uint8_t>(a);
  }
  pointer_ = static_cast<std::uint8_t>(wrap(pointer - 1));
  orientation_ = orientation;
}

BilliardState BilliardState::identity(int n, int pointer, Orientation orientation) {
  check_state_order(n);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) v[static_cast<std::size_t>(a)] = a + 1;
  return BilliardState(v, pointer, orientation);
}

void BilliardState::swap_positions0(int p, int q) {
  const std::uint8_t a = vertex_[static_cast<std::size_t>(p)];
  const std::uint8_t b = vertex_[static_cast<std::size_t>(q)];
  vertex_[static_cast<std::size_t>(p)] = b;
  vertex_[static_cast<std::size_t>(q)] = a;
  position_[a] = static_cast<std::uint8_t>(q);
  position_[b] = static_cast<std::uint8_t>(p);
}

std::uint64_t state_space_size(int n) {
  check_state_order(n);
  return 2 * static_cast<std::uint64_t>(n) * factorial(n);
}

std::uint64_t state_index(const BilliardState& s) {
  const int n = s.order();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (int a = 0; a < n; ++a) {
    const int p = s.position0(a);
    const int digit = p - std::popcount(used & ((1u << p) - 1));
    used |= 1u << p;
    rank = rank * static_cast<std::uint64_t>(n - a) + static_cast<std::uint64_t>(digit);
  }
  const std::uint64_t tail = static_cast<std::uint64_t>(s.pointer0()) * 2 + (s.orientation() == Orientation::Clockwise ? 1 : 0);
  return rank * 2 * static_cast<std::uint64_t>(n) + tail;
}

BilliardState state_from_index(int n, std::uint64_t index) {
  const std::uint64_t size = state_space_size(n);
  if (index >= size) throw RangeError("state index out of range");
  BilliardState s;
  s.n_ = static_cast<std::uint8_t>(n);
  const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
  const std::uint64_t tail = index % two_n;
  std::uint64_t rank = index / two_n;
  s.pointer_ = static_cast<std::uint8_t>(tail / 2);
  s.orientation_ = (tail % 2) != 0 ? Orientation::Clockwise : Orientation::Counterclockwise;
  // Lehmer digits, last vertex first.
  std::array<int, kMaxStateOrder> digit{};
  for (int a = n - 1; a >= 0; --a) {
    const auto radix = static_cast<std::uint64_t>(n - a);
    digit[static_cast<std::size_t>(a)] = static_cast<int>(rank % radix);
    rank /= radix;
  }
  std::uint32_t used = 0;
  for (int a = 0; a < n; ++a) {
    // digit-th unused position.
    int p = 0;
    for (int left = digit[static_cast<std::size_t>(a)];; ++p) {
      if ((used >> p) & 1) continue;
      if (left-- == 0) break;
    }
    used |= 1u << p;
    s.position_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(p);
    s.vertex_[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(a);
  }
  return s;
}

std::string format_state(const BilliardState& s) {
  std::string out = "perm=";
  for (int a = 1; a <= s.order(); ++a) {
    if (a > 1) out += ',';
    out += std::to_string(s.position_of(a));
  }
  out += ";i=" + std::to_string(s.pointer());
  out += s.orientation() == Orientation::Clockwise ? ";eps=+1" : ";eps=-1";
  return out;
}

BilliardState parse_state(std::string_view text) {
  auto fail = [&](const std::string& what) -> BilliardState {
    throw InputError("state literal: " + what + " in '" + std::string(text) + "'");
  };
  auto read_int = [&](std::string_view& rest, int& value) {
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{}) return false;
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return true;
  };
  std::string_view rest = text;
  if (!rest.starts_with("perm=")) return fail("expected 'perm='");
  rest.remove_prefix(5);
  std::vector<int> placement;
  do {
    if (!placement.empty()) rest.remove_prefix(1);
    int p = 0;
    if (!read_int(rest, p)) return fail("expected a position");
    placement.push_back(p);
  } while (!rest.empty() && rest.front() == ',');
  if (!rest.starts_with(";i=")) return fail("expected ';i='");
  rest.remove_prefix(3);
  int pointer = 0;
  if (!read_int(rest, pointer)) return fail("expected a pointer");
  if (!rest.starts_with(";eps=")) return fail("expected ';eps='");
  rest.remove_prefix(5);
  int eps = 0;
  if (!read_int(rest, eps) || (eps != 1 && eps != -1)) return fail("eps must be +1 or -1");
  if (!rest.empty()) return fail("unexpected trailing input");
  if (placement.size() > static_cast<std::size_t>(kMaxStateOrder)) {
    throw RangeError("states support at most " + std::to_string(kMaxStateOrder) + " vertices");
  }
  return BilliardState(placement, pointer, eps == 1 ? Orientation::Clockwise : Orientation::Counterclockwise);
}

}  // namespace billiards
