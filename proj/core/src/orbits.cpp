#include "billiards/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include "billiards/errors.hpp"

namespace billiards {

namespace {

void check_scan_order(int n) {
  if (n < 3 || n > kMaxOrbitOrder) {
    throw RangeError("orbit enumeration supports 3 <= n <= " + std::to_string(kMaxOrbitOrder) + ", got n=" +
                     std::to_string(n));
  }
}

void check_step_order(const MaterializedGraph& m, const BilliardState& s) {
  if (m.order() < 3) throw RangeError("the step map needs n >= 3, got n=" + std::to_string(m.order()));
  if (s.order() != m.order()) throw InputError("state and graph have different vertex counts");
}

// Walks one full orbit from `start`, reporting the index of every member to
// on_state (start included, exactly once each).
template <class OnState>
OrbitSummary walk_orbit(const MaterializedGraph& m, const BilliardState& start, OnState&& on_state) {
  const int n = m.order();
  std::vector<std::int64_t> steps(static_cast<std::size_t>(n), 0);
  std::int64_t stone = 0;
  std::uint64_t period = 0;
  bool prerefractive = false;
  const std::uint64_t start_index = state_index(start);
  std::uint64_t min_index = start_index;
  on_state(start_index);

  BilliardState cur = start;
  while (true) {
    const int j = cur.stone0();
    const int a = cur.vertex0(j);
    const int b = cur.vertex0(cur.wrap(j + sign(cur.orientation())));
    if (((m.adjacency_row0(a) >> b) & 1) == 0) prerefractive = true;

    const StepEvent ev = advance(m, cur);
    ++period;
    if (ev.swapped) {
      ++steps[static_cast<std::size_t>(ev.swapped->first - 1)];
      --steps[static_cast<std::size_t>(ev.swapped->second - 1)];
    }
    stone += ev.stone_delta;
    const std::uint64_t idx = state_index(cur);
    if (idx == start_index) break;
    on_state(idx);
    min_index = std::min(min_index, idx);
  }

  OrbitSummary out{state_from_index(n, min_index), period, {}, 0, true, prerefractive};
  out.winding.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const std::int64_t total = steps[static_cast<std::size_t>(a)];
    if (total % n != 0) {
      throw InvariantViolation("replica " + std::to_string(a + 1) + " made " + std::to_string(total) +
                               " net steps over a period, not a multiple of n=" + std::to_string(n));
    }
    out.winding[static_cast<std::size_t>(a)] = total / n;
    if (total != 0) out.contractible = false;
  }
  if (stone % n != 0) {
    throw InvariantViolation("stone made " + std::to_string(stone) + " net steps over a period, not a multiple of n");
  }
  out.stone_winding = stone / n;
  return out;
}

std::uint64_t index_of(const OrbitSummary& o) { return state_index(o.representative); }

}  // namespace

OrbitSummary orbit_summary(const MaterializedGraph& m, const BilliardState& s) {
  check_step_order(m, s);
  return walk_orbit(m, s, [](std::uint64_t) {});
}

std::vector<OrbitSummary> all_orbits(const MaterializedGraph& m, const OrbitScanOptions& options) {
  const int n = m.order();
  check_scan_order(n);
  const std::uint64_t total = state_space_size(n);
  const std::size_t words = static_cast<std::size_t>((total + 63) / 64);
  const int workers = std::max(1, options.workers);

  if (workers == 1) {
    std::vector<std::uint64_t> visited(words, 0);
    std::vector<OrbitSummary> out;
    for (std::uint64_t k = 0; k < total; ++k) {
      if ((visited[k / 64] >> (k % 64)) & 1) continue;
      out.push_back(walk_orbit(m, state_from_index(n, k),
                               [&](std::uint64_t idx) { visited[idx / 64] |= std::uint64_t{1} << (idx % 64); }));
      if (options.stop_when && options.stop_when(out.back())) break;
    }
    return out;
  }

  // Shards of the start-index range are handed out dynamically. Two workers
  // can walk the same orbit concurrently; the merge keeps one copy per
  // representative, and copies are identical because every summary field is
  // independent of the starting state.
  std::vector<std::atomic<std::uint64_t>> visited(words);
  const std::uint64_t shard = std::max<std::uint64_t>(4096, total / (static_cast<std::uint64_t>(workers) * 64));
  std::atomic<std::uint64_t> next_shard{0};
  std::atomic<bool> stop{false};
  std::vector<std::vector<OrbitSummary>> found(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          auto& local = found[static_cast<std::size_t>(w)];
          while (!stop.load(std::memory_order_relaxed)) {
            const std::uint64_t begin = next_shard.fetch_add(1) * shard;
            if (begin >= total) break;
            const std::uint64_t end = std::min(total, begin + shard);
            for (std::uint64_t k = begin; k < end && !stop.load(std::memory_order_relaxed); ++k) {
              if ((visited[k / 64].load(std::memory_order_relaxed) >> (k % 64)) & 1) continue;
              local.push_back(walk_orbit(m, state_from_index(n, k), [&](std::uint64_t idx) {
                visited[idx / 64].fetch_or(std::uint64_t{1} << (idx % 64), std::memory_order_relaxed);
              }));
              if (options.stop_when && options.stop_when(local.back())) stop.store(true);
            }
          }
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
          stop.store(true);
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::pair<std::uint64_t, OrbitSummary>> merged;
  for (auto& local : found) {
    for (auto& o : local) merged.emplace_back(index_of(o), std::move(o));
  }
  std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<OrbitSummary> out;
  std::uint64_t last = std::numeric_limits<std::uint64_t>::max();
  for (auto& [idx, o] : merged) {
    if (idx == last) continue;
    last = idx;
    out.push_back(std::move(o));
  }
  return out;
}

OrbitLabeling label_orbits(const MaterializedGraph& m) {
  const int n = m.order();
  check_scan_order(n);
  const std::uint64_t total = state_space_size(n);
  OrbitLabeling out;
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  out.orbit_of.assign(static_cast<std::size_t>(total), kUnset);
  for (std::uint64_t k = 0; k < total; ++k) {
    if (out.orbit_of[static_cast<std::size_t>(k)] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.orbits.size());
    out.orbits.push_back(
        walk_orbit(m, state_from_index(n, k), [&](std::uint64_t idx) { out.orbit_of[static_cast<std::size_t>(idx)] = id; }));
  }
  return out;
}

std::vector<TraceRecord> trace(const MaterializedGraph& m, const BilliardState& s, std::uint64_t steps) {
  check_step_order(m, s);
  std::vector<TraceRecord> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(steps, 1 << 20)));
  std::vector<std::int64_t> replica(static_cast<std::size_t>(m.order()), 0);
  std::int64_t stone = 0;
  BilliardState cur = s;
  for (std::uint64_t k = 1; k <= steps; ++k) {
    const StepEvent ev = advance(m, cur);
    if (ev.swapped) {
      ++replica[static_cast<std::size_t>(ev.swapped->first - 1)];
      --replica[static_cast<std::size_t>(ev.swapped->second - 1)];
    }
    stone += ev.stone_delta;
    out.push_back({k, cur, ev, replica, stone});
  }
  return out;
}

}  // namespace billiards
