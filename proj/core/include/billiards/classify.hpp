#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "billiards/graph.hpp"
#include "billiards/orbits.hpp"

namespace billiards {

// Mixed: some orbits contractible, some not.
enum class Kind : std::uint8_t { Ensnaring, Expelling, Mixed };

// Stop a scan as soon as the answer to one yes/no question is known.
enum class EarlyExit : std::uint8_t { None, Ensnaring, Expelling };

struct Classification {
  Kind kind = Kind::Ensnaring;
  bool also_expelling = false;  // only for the one-vertex convention
  bool revolutionary = false;
  std::uint64_t orbit_count = 0;
  std::uint64_t noncontractible_count = 0;
  // A non-contractible orbit for non-ensnaring graphs; an orbit with nonzero
  // stone winding for revolutionary ones.
  std::optional<OrbitSummary> witness;
  // False when an early exit cut the scan short; counts are then partial,
  // but the answer to the question asked is still exact.
  bool exhaustive = true;

  bool ensnaring() const { return kind == Kind::Ensnaring; }
  bool expelling() const { return kind == Kind::Expelling || also_expelling; }
};

struct ClassifyOptions {
  int workers = 1;
  EarlyExit early_exit = EarlyExit::None;
};

// n = 1: ensnaring and expelling, revolutionary. n = 2: expelling. Otherwise
// decided from the winding vectors of all orbits.
Classification classify(const MaterializedGraph& m, const ClassifyOptions& options = {});

using ClassifyResult = std::variant<Classification, std::string>;

// Classifies each graph, delivering results to `sink` in input order. A
// failure for one graph is reported as an error string and does not stop
// the rest. Workers are spread across graphs.
void classify_many(std::span<const MaterializedGraph> graphs, const ClassifyOptions& options,
                   const std::function<void(std::size_t, const ClassifyResult&)>& sink);

const char* to_string(Kind kind);

}  // namespace billiards
