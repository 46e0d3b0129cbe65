#include "billiards/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>

#include "billiards/classify.hpp"
#include "billiards/enumerate.hpp"
#include "billiards/errors.hpp"
#include "billiards/graph_spec.hpp"
#include "billiards/parallel.hpp"

namespace billiards {

namespace {

using nlohmann::json;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::optional<OrbitSummary> witness;
  json note;  // optional per-instance observation kept in the report
};

Outcome pass() { return {}; }
Outcome fail(std::string detail, std::optional<OrbitSummary> witness = std::nullopt) {
  return {false, std::move(detail), std::move(witness), nullptr};
}

struct Instance {
  MaterializedGraph graph;
  std::function<Outcome(const MaterializedGraph&)> test;
};

struct Range {
  int lo;
  int hi;
};

Range resolve(const std::optional<int>& lo, const std::optional<int>& hi, Range fallback, Range limits,
              const char* what) {
  Range r{lo.value_or(fallback.lo), hi.value_or(fallback.hi)};
  if (r.lo < limits.lo || r.hi > limits.hi) {
    throw RangeError(std::string(what) + " must lie in [" + std::to_string(limits.lo) + ", " +
                     std::to_string(limits.hi) + "], got [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) +
                     "]");
  }
  if (r.lo > r.hi) throw RangeError(std::string("empty range for ") + what);
  return r;
}

int resolve_one(const std::optional<int>& v, int fallback, Range limits, const char* what) {
  return resolve(v, v, {fallback, fallback}, limits, what).lo;
}

std::string spec_of(const MaterializedGraph& g) { return format_graph_spec(g); }

std::optional<OrbitSummary> first_orbit(const MaterializedGraph& g, bool contractible) {
  if (g.order() < 3) return std::nullopt;
  for (const OrbitSummary& o : all_orbits(g)) {
    if (o.contractible == contractible) return o;
  }
  return std::nullopt;
}

// Ensnaring means no non-contractible orbit, so the scan can stop at the
// first one without losing the answer.
Classification classify_for_ensnaring(const MaterializedGraph& g) {
  return classify(g, {1, EarlyExit::Ensnaring});
}

Outcome expect_ensnaring(const MaterializedGraph& g, bool want) {
  const Classification c = classify_for_ensnaring(g);
  if (c.ensnaring() == want) return pass();
  if (want) return fail("expected ensnaring, found a non-contractible orbit", c.witness);
  return fail("expected not ensnaring, every orbit is contractible");
}

struct Runner {
  Runner(std::string id_, json params_) : id(std::move(id_)), params(std::move(params_)) {}

  std::string id;
  json params = json::object();
  json notes = json::object();
  std::vector<Instance> instances;
  // Counts instances for which a test reported something of interest.
  std::shared_ptr<std::atomic<std::uint64_t>> counter;
  std::string counter_name;
};

CheckReport finish(Runner&& r, int workers, std::chrono::steady_clock::time_point started) {
  CheckReport report;
  report.id = r.id;
  const auto outcomes = parallel_map(r.instances.size(), workers,
                                     [&](std::size_t k) { return r.instances[k].test(r.instances[k].graph); });
  report.instances = r.instances.size();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k].ok) continue;
    report.passed = false;
    report.counterexample = Counterexample{spec_of(r.instances[k].graph), outcomes[k].detail, outcomes[k].witness};
    break;
  }
  report.params = std::move(r.params);
  report.notes = std::move(r.notes);
  if (r.counter) report.notes[r.counter_name] = r.counter->load();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

json sampling_params(const VerifyParams& p, Range r) {
  json modes = json::object();
  bool sampled = false;
  for (int n = r.lo; n <= r.hi; ++n) {
    const char* mode = n <= 6 ? "exhaustive" : n == 7 ? "iso-dedup" : "sampled";
    modes[std::to_string(n)] = mode;
    sampled = sampled || n == 8;
  }
  json out = {{"min_n", r.lo}, {"max_n", r.hi}, {"modes", modes}};
  if (sampled) {
    out["seed"] = p.seed;
    out["samples"] = p.samples;
  }
  return out;
}

// ---- theorem checks ----

Runner check_expelling_bipartite(const VerifyParams& p) {
  const Range r = resolve(p.min_n, p.max_n, {1, 5}, {1, 8}, "n");
  Runner run{"expelling-bipartite", sampling_params(p, r)};
  for (int n = r.lo; n <= r.hi; ++n) {
    for (Graph& g : graphs_of_order(n, p).graphs) {
      run.instances.push_back({std::move(g), [](const MaterializedGraph& m) {
        const bool bipartite = is_bipartite(m.graph()).has_value();
        const Classification c = classify(m, {1, EarlyExit::Expelling});
        if (c.expelling() == bipartite) return pass();
        if (bipartite) return fail("bipartite but has a contractible orbit", first_orbit(m, true));
        return fail("not bipartite but expelling", c.witness);
      }});
    }
  }
  return run;
}

Runner check_complete(const VerifyParams& p) {
  const Range r = resolve(p.min_n, p.max_n, {3, 8}, {3, 9}, "n");
  Runner run{"complete", {{"min_n", r.lo}, {"max_n", r.hi}}};
  for (int n = r.lo; n <= r.hi; ++n) {
    run.instances.push_back({complete_graph(n), [](const MaterializedGraph& m) {
      const Classification c = classify(m);
      if (!c.ensnaring()) return fail("complete graph is not ensnaring", c.witness);
      if (c.revolutionary) return fail("complete graph is revolutionary", c.witness);
      const int order = m.order();
      const std::uint64_t total = state_space_size(order);
      for (std::uint64_t k = 0; k < total; ++k) {
        const BilliardState s = state_from_index(order, k);
        if (theta(m, s).event.stone_delta != 0) {
          return fail("the stone moved from " + format_state(s), orbit_summary(m, s));
        }
      }
      return pass();
    }});
  }
  return run;
}

Runner check_cycles(const VerifyParams& p) {
  const Range r = resolve(p.min_n, p.max_n, {3, 9}, {3, kMaxOrbitOrder}, "n");
  Runner run{"cycles", {{"min_n", r.lo}, {"max_n", r.hi}}};
  for (int n = r.lo; n <= r.hi; ++n) {
    run.instances.push_back({cycle_graph(n), [](const MaterializedGraph& m) {
      const bool odd = m.order() % 2 == 1;
      const Classification c = classify(m);
      if (odd && !c.ensnaring()) return fail("odd cycle is not ensnaring", c.witness);
      if (!odd && c.kind != Kind::Expelling) {
        return fail(std::string("even cycle classified ") + to_string(c.kind), first_orbit(m, true));
      }
      return pass();
    }});
  }
  return run;
}

std::vector<std::pair<std::string, Graph>> named(std::initializer_list<std::string_view> specs) {
  std::vector<std::pair<std::string, Graph>> out;
  for (std::string_view s : specs) out.emplace_back(std::string(s), parse_graph_spec(s).graph());
  return out;
}

Runner check_wedge(const VerifyParams& p) {
  const int max_n = resolve_one(p.max_n, 8, {3, 9}, "max_n");
  const int max_part = resolve_one(p.max_part, 0, {0, 6}, "max_part");
  auto parts = named({"complete:3", "complete:4", "cycle:5", "cycle:7"});
  for (int k = 3; k <= max_part; ++k) {
    for (Graph& g : enumerate_graphs(k, {.connected = false, .iso_dedup = true})) {
      if (classify_for_ensnaring(g).ensnaring()) parts.emplace_back(spec_of(g), std::move(g));
    }
  }
  Runner run{"wedge", {{"max_n", max_n}, {"max_part", max_part}}};
  json names = json::array();
  for (const auto& part : parts) names.push_back(part.first);
  run.params["parts"] = names;
  for (const auto& [s1, g1] : parts) {
    for (const auto& [s2, g2] : parts) {
      if (g1.order() + g2.order() - 1 > max_n) continue;
      for (int v1 = 1; v1 <= g1.order(); ++v1) {
        for (int v2 = 1; v2 <= g2.order(); ++v2) {
          run.instances.push_back({wedge(g1, v1, g2, v2), [](const MaterializedGraph& m) {
            return expect_ensnaring(m, true);
          }});
        }
      }
    }
  }
  return run;
}

Runner check_union(const VerifyParams& p) {
  const int max_n = resolve_one(p.max_n, 8, {2, 9}, "max_n");
  const int max_part = resolve_one(p.max_part, 0, {0, 7}, "max_part");
  auto parts = named({"complete:3", "complete:4", "cycle:3", "cycle:5", "path:2", "path:3"});
  for (int k = 1; k <= max_part; ++k) {
    for (Graph& g : enumerate_graphs(k, {.connected = false, .iso_dedup = true})) {
      parts.emplace_back(spec_of(g), std::move(g));
    }
  }
  std::vector<bool> safe;
  for (const auto& part : parts) {
    const Classification c = classify(part.second);
    safe.push_back(c.ensnaring() && !c.revolutionary);
  }
  Runner run{"union", {{"max_n", max_n}, {"max_part", max_part}}};
  json names = json::array();
  for (const auto& part : parts) names.push_back(part.first);
  run.params["parts"] = names;
  for (std::size_t x = 0; x < parts.size(); ++x) {
    for (std::size_t y = 0; y < parts.size(); ++y) {
      if (parts[x].second.order() + parts[y].second.order() > max_n) continue;
      const bool want = safe[x] && safe[y];
      run.instances.push_back({disjoint_union(parts[x].second, parts[y].second),
                               [want](const MaterializedGraph& m) { return expect_ensnaring(m, want); }});
    }
  }
  return run;
}

Runner check_rev_cycles(const VerifyParams& p) {
  const Range r = resolve(p.min_n, p.max_n, {3, 9}, {3, kMaxOrbitOrder}, "n");
  Runner run{"rev-cycles", {{"min_n", r.lo}, {"max_n", r.hi}}};
  for (int n = r.lo; n <= r.hi; ++n) {
    if (n % 2 == 0) continue;
    run.instances.push_back({cycle_graph(n), [](const MaterializedGraph& m) {
      const int order = m.order();
      const Classification c = classify(m);
      if (!c.ensnaring()) return fail("odd cycle is not ensnaring", c.witness);
      if (order == 3) return c.revolutionary ? fail("C_3 is revolutionary", c.witness) : pass();
      if (!c.revolutionary) return fail("odd cycle is not revolutionary");
      // From the identity diagram the stone drifts n - 3 positions
      // counterclockwise every n - 1 steps.
      const BilliardState start = BilliardState::identity(order, 1, Orientation::Clockwise);
      const OrbitSummary orbit = orbit_summary(m, start);
      const auto records = trace(m, start, orbit.period);
      for (std::size_t k = static_cast<std::size_t>(order - 1); k <= records.size(); k += static_cast<std::size_t>(order - 1)) {
        const auto laps = static_cast<std::int64_t>(k) / (order - 1);
        if (records[k - 1].stone_steps != -laps * (order - 3)) {
          return fail("stone count " + std::to_string(records[k - 1].stone_steps) + " after " + std::to_string(k) +
                          " steps from the identity",
                      orbit);
        }
      }
      return pass();
    }});
  }
  return run;
}

Runner check_wedge_complete_orbit(const VerifyParams& p) {
  const Range m_range = resolve(std::nullopt, p.max_m, {3, 4}, {3, 8}, "m");
  const int max_part = resolve_one(p.max_part, 4, {1, 6}, "max_part");
  const int max_n = resolve_one(p.max_n, 8, {3, 8}, "max_n");
  Runner run{"wedge-complete-orbit", {{"min_m", m_range.lo}, {"max_m", m_range.hi}, {"max_part", max_part}, {"max_n", max_n}}};
  for (int m = m_range.lo; m <= m_range.hi; ++m) {
    for (int k = 1; k <= max_part; ++k) {
      if (m + k - 1 > max_n) continue;
      for (const Graph& h : enumerate_graphs(k, {.connected = false, .iso_dedup = true})) {
        for (int v = 1; v <= k; ++v) {
          run.instances.push_back({wedge(complete_graph(m), 1, h, v), [m](const MaterializedGraph& g) {
            if (g.order() < 3) return pass();
            const OrbitLabeling labels = label_orbits(g);
            std::vector<bool> checked(labels.orbits.size(), false);
            const int n = g.order();
            for (std::uint64_t k = 0; k < labels.orbit_of.size(); ++k) {
              const std::uint32_t id = labels.orbit_of[static_cast<std::size_t>(k)];
              if (checked[id]) continue;
              const int coin = state_from_index(n, k).coin_vertex();
              if (coin < 2 || coin > m) continue;
              checked[id] = true;
              if (!labels.orbits[id].contractible) {
                return fail("stone on clique vertex " + std::to_string(coin) + " in a non-contractible orbit",
                            labels.orbits[id]);
              }
            }
            return pass();
          }});
        }
      }
    }
  }
  return run;
}

Runner check_complete_tree(const VerifyParams& p) {
  const Range m_range = resolve(std::nullopt, p.max_m, {3, 4}, {3, 8}, "m");
  const int max_part = resolve_one(p.max_part, 4, {1, 7}, "max_part");
  const int max_n = resolve_one(p.max_n, 8, {3, 8}, "max_n");
  Runner run{"complete-tree", {{"min_m", m_range.lo}, {"max_m", m_range.hi}, {"max_part", max_part}, {"max_n", max_n}}};
  for (int m = m_range.lo; m <= m_range.hi; ++m) {
    for (int k = 1; k <= max_part; ++k) {
      if (m + k - 1 > max_n) continue;
      for (const Graph& t : labeled_trees(k)) {
        for (int c = 1; c <= m; ++c) {
          for (int v = 1; v <= k; ++v) {
            run.instances.push_back({wedge(complete_graph(m), c, t, v), [](const MaterializedGraph& g) {
              return expect_ensnaring(g, true);
            }});
          }
        }
      }
    }
  }
  return run;
}

void multitree_tuples(const std::vector<RootedTree>& shapes, int m, int budget, std::size_t from,
                      std::vector<std::size_t>& picked, const std::function<void()>& emit) {
  if (static_cast<int>(picked.size()) == m) {
    emit();
    return;
  }
  for (std::size_t s = from; s < shapes.size(); ++s) {
    const int extra = shapes[s].tree.order() - 1;
    if (extra > budget) continue;
    picked.push_back(s);
    multitree_tuples(shapes, m, budget - extra, s, picked, emit);
    picked.pop_back();
  }
}

Runner check_multitree(const VerifyParams& p) {
  const Range m_range = resolve(std::nullopt, p.max_m, {3, 4}, {3, 8}, "m");
  const int max_n = resolve_one(p.max_n, 8, {3, 8}, "max_n");
  Runner run{"multitree", {{"min_m", m_range.lo}, {"max_m", m_range.hi}, {"max_n", max_n}}};
  const std::vector<RootedTree> shapes = rooted_tree_shapes(std::max(1, max_n - m_range.lo + 1));
  for (int m = m_range.lo; m <= m_range.hi; ++m) {
    std::vector<std::size_t> picked;
    multitree_tuples(shapes, m, max_n - m, 0, picked, [&] {
      Graph g = complete_graph(m);
      for (int c = 1; c <= m; ++c) {
        const RootedTree& t = shapes[picked[static_cast<std::size_t>(c - 1)]];
        g = wedge(g, c, t.tree, t.root);
      }
      run.instances.push_back({std::move(g), [](const MaterializedGraph& x) { return expect_ensnaring(x, true); }});
    });
  }
  return run;
}

Runner check_local_config(const VerifyParams& p) {
  const Range r = resolve(p.min_n, p.max_n, {4, 6}, {1, 8}, "n");
  Runner run{"local-config", sampling_params(p, r)};
  auto fired = std::make_shared<std::atomic<std::uint64_t>>(0);
  run.counter = fired;
  run.counter_name = "fired";
  for (int n = r.lo; n <= r.hi; ++n) {
    for (Graph& g : graphs_of_order(n, p).graphs) {
      run.instances.push_back({std::move(g), [fired](const MaterializedGraph& m) {
        const auto config = has_local_blocking_config(m.graph());
        if (!config) return pass();
        fired->fetch_add(1);
        const Classification c = classify_for_ensnaring(m);
        if (!c.ensnaring()) return pass();
        return fail("configuration a=" + std::to_string(config->a) + " b=" + std::to_string(config->b) +
                    " c=" + std::to_string(config->c) + " d=" + std::to_string(config->d) +
                    " present but the graph is ensnaring");
      }});
    }
  }
  return run;
}

Runner check_compl_components(const VerifyParams& p) {
  const Range r = resolve(p.min_n, p.max_n, {1, 5}, {1, 7}, "n");
  Runner run{"compl-components", sampling_params(p, r)};
  for (int n = r.lo; n <= r.hi; ++n) {
    for (Graph& g : graphs_of_order(n, p).graphs) {
      run.instances.push_back({std::move(g), [](const MaterializedGraph& m) {
        const Graph& g = m.graph();
        const Graph co = complement(g);
        bool predicted = true;
        std::string parts;
        for (const auto& comp : connected_components(co)) {
          const Graph part = compl_n(induced_subgraph(co, comp), g.order());
          const bool e = classify_for_ensnaring(part).ensnaring();
          predicted = predicted && e;
          parts += (parts.empty() ? "" : ", ") + spec_of(part) + (e ? " ensnaring" : " not ensnaring");
        }
        const Classification c = classify_for_ensnaring(m);
        if (c.ensnaring() == predicted) return pass();
        return fail(std::string(c.ensnaring() ? "ensnaring" : "not ensnaring") + " but components give " + parts,
                    c.witness);
      }});
    }
  }
  return run;
}

Runner check_compl_complete(const VerifyParams& p) {
  const Range r = resolve(p.min_n, p.max_n, {2, 7}, {2, 8}, "n");
  Runner run{"compl-complete", {{"min_n", r.lo}, {"max_n", r.hi}}};
  for (int n = r.lo; n <= r.hi; ++n) {
    for (int m = 2; m <= n; ++m) {
      run.instances.push_back({compl_n(complete_graph(m), n), [](const MaterializedGraph& g) {
        return expect_ensnaring(g, false);
      }});
    }
  }
  return run;
}

Runner check_compl_bipartite(const VerifyParams& p) {
  const Range r = resolve(p.min_n, p.max_n, {3, 7}, {3, 8}, "n");
  Runner run{"compl-bipartite", {{"min_n", r.lo}, {"max_n", r.hi}}};
  for (int n = r.lo; n <= r.hi; ++n) {
    for (int l = 1; l < n; ++l) {
      for (int rr = 1; l + rr < n; ++rr) {
        const bool want = (n - l - rr) % 2 == 1 && !(l == 1 && rr == 1);
        run.instances.push_back({compl_n(complete_bipartite(l, rr), n),
                                 [want](const MaterializedGraph& g) { return expect_ensnaring(g, want); }});
      }
    }
  }
  return run;
}

Runner check_mat_cycle(const VerifyParams& p) {
  const Range r = resolve(p.min_n, p.max_n, {3, 7}, {3, 8}, "n");
  Runner run{"mat-cycle", {{"min_n", r.lo}, {"max_n", r.hi}}};
  for (int n = r.lo; n <= r.hi; ++n) {
    const Graph c = cycle_graph(n);
    const std::vector<Edge> edges = c.edges();
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
      std::vector<Edge> reflect;
      for (int k = 0; k < n; ++k) {
        if ((subset >> k) & 1) reflect.push_back(edges[static_cast<std::size_t>(k)]);
      }
      const int refract = n - static_cast<int>(reflect.size());
      const bool want = refract == 0 || refract % 2 == 1;
      run.instances.push_back({MaterializedGraph(c, reflect), [want](const MaterializedGraph& g) {
        const Classification cl = classify(g);
        if (want && !cl.ensnaring()) return fail("expected ensnaring", cl.witness);
        if (!want && cl.kind != Kind::Expelling) {
          return fail(std::string("expected expelling, got ") + to_string(cl.kind), first_orbit(g, true));
        }
        return pass();
      }});
    }
  }
  return run;
}

using CheckFn = Runner (*)(const VerifyParams&);

constexpr std::array<std::string_view, 14> kCheckIds = {
    "expelling-bipartite", "complete",      "cycles",     "wedge",          "union",
    "rev-cycles",          "wedge-complete-orbit",        "complete-tree",  "multitree",
    "local-config",        "compl-components",            "compl-complete", "compl-bipartite",
    "mat-cycle"};

constexpr std::array<CheckFn, 14> kChecks = {
    check_expelling_bipartite, check_complete,         check_cycles,         check_wedge,
    check_union,               check_rev_cycles,       check_wedge_complete_orbit,
    check_complete_tree,       check_multitree,        check_local_config,   check_compl_components,
    check_compl_complete,      check_compl_bipartite,  check_mat_cycle};

// ---- conjectures ----

struct Probe {
  MaterializedGraph graph;
  std::function<Outcome(const MaterializedGraph&)> test;
};

struct Search {
  Search(std::string id_, std::string space_, json params_)
      : id(std::move(id_)), space(std::move(space_)), params(std::move(params_)) {}

  std::string id;
  std::string space;
  json params = json::object();
  json notes = json::object();
  std::vector<Probe> probes;
};

std::vector<Graph> non_ensnaring_graphs(int max_part) {
  std::vector<Graph> out;
  for (int k = 2; k <= max_part; ++k) {
    for (Graph& g : enumerate_graphs(k, {.connected = false, .iso_dedup = true})) {
      if (!classify_for_ensnaring(g).ensnaring()) out.push_back(std::move(g));
    }
  }
  return out;
}

Search conj_wedge_nonensnaring(const VerifyParams& p) {
  const int max_part = resolve_one(p.max_part, 4, {2, 6}, "max_part");
  const int max_n = resolve_one(p.max_n, 7, {3, kMaxOrbitOrder}, "max_n");
  Search s{"wedge-nonensnaring",
           "wedges of two non-ensnaring graphs, one per isomorphism class with 2.." + std::to_string(max_part) +
               " vertices each, every glue pair, wedge order <= " + std::to_string(max_n),
           {{"max_part", max_part}, {"max_n", max_n}}};
  const std::vector<Graph> parts = non_ensnaring_graphs(max_part);
  s.notes["parts"] = parts.size();
  for (std::size_t x = 0; x < parts.size(); ++x) {
    for (std::size_t y = x; y < parts.size(); ++y) {
      const Graph& g1 = parts[x];
      const Graph& g2 = parts[y];
      if (g1.order() + g2.order() - 1 > max_n) continue;
      for (int v1 = 1; v1 <= g1.order(); ++v1) {
        for (int v2 = 1; v2 <= g2.order(); ++v2) {
          s.probes.push_back({wedge(g1, v1, g2, v2), [](const MaterializedGraph& g) {
            return expect_ensnaring(g, false);
          }});
        }
      }
    }
  }
  return s;
}

Search conj_compl_parity(const VerifyParams& p) {
  const int max_part = resolve_one(p.max_part, 5, {1, 7}, "max_part");
  const int max_n = resolve_one(p.max_n, 8, {3, kMaxOrbitOrder}, "max_n");
  // Orders below 3 are classified by convention rather than by the dynamics.
  const int min_n = resolve_one(p.min_n, 3, {2, kMaxOrbitOrder}, "min_n");
  Search s{"compl-parity",
           "compl_n(H) for H one per isomorphism class with 1.." + std::to_string(max_part) +
               " vertices and max(|H| + 1, " + std::to_string(min_n) + ") <= n <= " + std::to_string(max_n),
           {{"max_part", max_part}, {"min_n", min_n}, {"max_n", max_n}}};
  for (int k = 1; k <= max_part; ++k) {
    for (Graph& h : enumerate_graphs(k, {.connected = false, .iso_dedup = true})) {
      if (std::max(k + 1, min_n) + 2 > max_n) continue;  // needs two n of the same parity
      s.probes.push_back({std::move(h), [min_n, max_n](const MaterializedGraph& h) {
        // First classification seen for each parity of n.
        std::array<std::optional<Classification>, 2> seen;
        std::array<int, 2> first_n{};
        for (int n = std::max(h.order() + 1, min_n); n <= max_n; ++n) {
          const Classification c = classify_for_ensnaring(compl_n(h.graph(), n));
          const auto parity = static_cast<std::size_t>(n % 2);
          if (!seen[parity]) {
            seen[parity] = c;
            first_n[parity] = n;
          } else if (seen[parity]->ensnaring() != c.ensnaring()) {
            const bool earlier = seen[parity]->ensnaring();
            // The witness belongs to whichever of the two orders is not ensnaring.
            const int witness_n = earlier ? n : first_n[parity];
            return fail("compl_" + std::to_string(first_n[parity]) + " is " + (earlier ? "ensnaring" : "not ensnaring") +
                            " but compl_" + std::to_string(n) + " is " + (earlier ? "not ensnaring" : "ensnaring") +
                            "; witness orbit is in compl:" + spec_of(h) + "@" + std::to_string(witness_n),
                        earlier ? c.witness : seen[parity]->witness);
          }
        }
        return pass();
      }});
    }
  }
  return s;
}

Search conj_compl_tree(const VerifyParams& p) {
  const int max_part = resolve_one(p.max_part, 7, {1, 9}, "max_part");
  const int max_n = resolve_one(p.max_n, 8, {2, kMaxOrbitOrder}, "max_n");
  const int min_n = resolve_one(p.min_n, 3, {2, kMaxOrbitOrder}, "min_n");
  Search s{"compl-tree",
           "compl_n(T) for trees T with 1.." + std::to_string(max_part) +
               " vertices (one per isomorphism class) and even n with max(|T| + 1, " + std::to_string(min_n) +
               ") <= n <= " + std::to_string(max_n),
           {{"max_part", max_part}, {"min_n", min_n}, {"max_n", max_n}}};
  for (int m = 1; m <= max_part; ++m) {
    std::set<std::uint64_t> classes;
    for (const Graph& t : labeled_trees(m)) {
      const Graph c = canonical_form(t);
      if (!classes.insert(mask_of(c)).second) continue;
      for (int n = std::max(m + 1, min_n); n <= max_n; ++n) {
        if (n % 2 != 0) continue;
        const bool want = m % 2 == 1;
        s.probes.push_back({compl_n(c, n), [want](const MaterializedGraph& g) { return expect_ensnaring(g, want); }});
      }
    }
  }
  return s;
}

Search conj_orbit_sizes(const VerifyParams& p) {
  std::vector<std::pair<int, int>> pairs;
  json params = json::object();
  if (p.m || p.n) {
    if (!p.m || !p.n) throw RangeError("orbit-sizes needs both m and n, or neither");
    const int m = resolve_one(p.m, 1, {1, kMaxOrbitOrder}, "m");
    const int n = resolve_one(p.n, 3, {3, kMaxOrbitOrder}, "n");
    if (m > n) throw RangeError("orbit-sizes needs m <= n");
    pairs.emplace_back(m, n);
    params = {{"m", m}, {"n", n}};
  } else {
    const int max_n = resolve_one(p.max_n, 8, {4, kMaxOrbitOrder}, "max_n");
    for (int n = 4; n <= max_n; n += 2) {
      for (int m = 1; m < n; m += 2) pairs.emplace_back(m, n);
    }
    params = {{"max_n", max_n}};
  }
  Search s{"orbit-sizes", "compl_n(P_m) with m odd and n even", params};
  for (const auto& [m, n] : pairs) {
    const bool applies = m % 2 == 1 && n % 2 == 0;
    const std::uint64_t big = static_cast<std::uint64_t>(6 * (m * n - n - 3 * m + 4));
    s.probes.push_back({compl_n(path_graph(m), n), [applies, big, m = m, n = n](const MaterializedGraph& g) {
      std::map<std::uint64_t, std::uint64_t> histogram;
      std::optional<OrbitSummary> stray;
      for (const OrbitSummary& o : all_orbits(g)) {
        ++histogram[o.period];
        if (applies && !stray && o.period != 6 && o.period != big) stray = o;
      }
      json periods = json::object();
      for (const auto& [period, count] : histogram) periods[std::to_string(period)] = count;
      Outcome out = pass();
      if (stray) {
        out = fail("orbit of period " + std::to_string(stray->period) + ", expected 6 or " + std::to_string(big), stray);
      }
      out.note = {{"m", m}, {"n", n}, {"formula", big}, {"periods", periods}};
      if (!applies) out.note["outside_hypothesis"] = true;
      return out;
    }});
  }
  return s;
}

using SearchFn = Search (*)(const VerifyParams&);

constexpr std::array<std::string_view, 4> kConjectureIds = {"wedge-nonensnaring", "compl-parity", "compl-tree",
                                                             "orbit-sizes"};
constexpr std::array<SearchFn, 4> kConjectures = {conj_wedge_nonensnaring, conj_compl_parity, conj_compl_tree,
                                                  conj_orbit_sizes};

template <class Ids>
std::size_t find_id(const Ids& ids, std::string_view id, const char* what) {
  const auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw RangeError(std::string("unknown ") + what + " id '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

std::span<const std::string_view> check_ids() { return kCheckIds; }
std::span<const std::string_view> conjecture_ids() { return kConjectureIds; }

GraphSample graphs_of_order(int n, const VerifyParams& params) {
  if (n < 1 || n > 8) throw RangeError("all-graphs checks support 1 <= n <= 8, got n=" + std::to_string(n));
  if (n <= 6) return {enumerate_graphs(n), "exhaustive"};
  if (n == 7) return {enumerate_graphs(n, {.connected = false, .iso_dedup = true}), "iso-dedup"};
  std::mt19937_64 rng(params.seed);
  GraphSample out{{}, "sampled"};
  for (int k = 0; k < params.samples; ++k) out.graphs.push_back(random_graph(n, rng));
  return out;
}

CheckReport run_check(std::string_view id, const VerifyParams& params) {
  const auto started = std::chrono::steady_clock::now();
  Runner run = kChecks[find_id(kCheckIds, id, "check")](params);
  return finish(std::move(run), params.workers, started);
}

ConjectureReport run_conjecture(std::string_view id, const VerifyParams& params) {
  const auto started = std::chrono::steady_clock::now();
  Search s = kConjectures[find_id(kConjectureIds, id, "conjecture")](params);
  const auto outcomes = parallel_map(s.probes.size(), params.workers,
                                     [&](std::size_t k) { return s.probes[k].test(s.probes[k].graph); });
  ConjectureReport report;
  report.id = s.id;
  report.search_space = s.space;
  report.params = std::move(s.params);
  report.notes = std::move(s.notes);
  report.instances = s.probes.size();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (!outcomes[k].note.is_null()) report.notes["observed"].push_back(outcomes[k].note);
    if (!outcomes[k].ok) {
      report.counterexamples.push_back({spec_of(s.probes[k].graph), outcomes[k].detail, outcomes[k].witness});
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace billiards
