#include "billiards/classify.hpp"

#include <algorithm>

#include "billiards/parallel.hpp"

namespace billiards {

Classification classify(const MaterializedGraph& m, const ClassifyOptions& options) {
  Classification out;
  const int n = m.order();
  if (n == 1) {
    out.kind = Kind::Ensnaring;
    out.also_expelling = true;
    out.revolutionary = true;
    return out;
  }
  if (n == 2) {
    out.kind = Kind::Expelling;
    return out;
  }

  OrbitScanOptions scan{options.workers, {}};
  if (options.early_exit == EarlyExit::Ensnaring) {
    scan.stop_when = [](const OrbitSummary& o) { return !o.contractible; };
  } else if (options.early_exit == EarlyExit::Expelling) {
    scan.stop_when = [](const OrbitSummary& o) { return o.contractible; };
  }
  const std::vector<OrbitSummary> orbits = all_orbits(m, scan);

  std::uint64_t covered = 0;
  for (const OrbitSummary& o : orbits) {
    covered += o.period;
    if (!o.contractible) ++out.noncontractible_count;
  }
  out.orbit_count = orbits.size();
  out.exhaustive = covered == state_space_size(n);
  if (out.noncontractible_count == 0) {
    out.kind = Kind::Ensnaring;
  } else if (out.noncontractible_count == out.orbit_count) {
    out.kind = Kind::Expelling;
  } else {
    out.kind = Kind::Mixed;
  }

  if (out.kind != Kind::Ensnaring) {
    out.witness = *std::find_if(orbits.begin(), orbits.end(), [](const OrbitSummary& o) { return !o.contractible; });
  } else {
    const auto rev = std::find_if(orbits.begin(), orbits.end(), [](const OrbitSummary& o) { return o.stone_winding != 0; });
    if (rev != orbits.end()) {
      out.revolutionary = true;
      out.witness = *rev;
    }
  }
  return out;
}

void classify_many(std::span<const MaterializedGraph> graphs, const ClassifyOptions& options,
                   const std::function<void(std::size_t, const ClassifyResult&)>& sink) {
  const int workers = std::max(1, options.workers);
  const std::size_t batch = static_cast<std::size_t>(workers) * 8;
  ClassifyOptions single = options;
  single.workers = 1;
  for (std::size_t begin = 0; begin < graphs.size(); begin += batch) {
    const std::size_t count = std::min(batch, graphs.size() - begin);
    const auto results = parallel_map(count, workers, [&](std::size_t k) -> ClassifyResult {
      try {
        return classify(graphs[begin + k], single);
      } catch (const std::exception& e) {
        return std::string(e.what());
      }
    });
    for (std::size_t k = 0; k < count; ++k) sink(begin + k, results[k]);
  }
}

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::Ensnaring:
      return "ensnaring";
    case Kind::Expelling:
      return "expelling";
    case Kind::Mixed:
      return "mixed";
  }
  return "?";
}

}  // namespace billiards
