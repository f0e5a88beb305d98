#pragma once

#include <vector>

#include "micro3d/genome.hpp"
#include "micro3d/nsga2_types.hpp"
#include "micro3d/potential_fields.hpp"
#include "micro3d/scenario.hpp"
#include "micro3d/sim.hpp"

namespace micro3d {

// Fitness evaluation setup: the training scenarios are generated once per
// run seed and frozen so fitness stays deterministic across generations.
struct EvalConfig {
    std::vector<Scenario> scenarios;
    MicroParams opponent;
    SimConfig sim;
};

// Normalized two-objective score of one finished skirmish:
//   o1 = damage to enemies / enemy starting hitpoints
//   o2 = 1 - damage to friends / friendly starting hitpoints
ObjectiveVector objectives(const SkirmishResult& result, const Scenario& scenario);

// Run one scenario with the given controller parameters on the friendly
// side and the opponent parameters on the enemy side.
SkirmishResult run_scenario(const Scenario& scenario, const MicroParams& controller,
                            const MicroParams& opponent, const SimConfig& sim,
                            TraceWriter* trace = nullptr);

// Decode, run every scenario against the opponent, return the per-objective
// arithmetic mean. Deterministic for a fixed config.
ObjectiveVector evaluate(const Genome& genome, const EvalConfig& cfg);

// The canonical hand-tuned opponent: pure enemy-distance attraction (only
// c3 nonzero), which drives units toward the opposing squad; the built-in
// target selection then fires at the nearest unit in range. All values sit
// on the codec's quantization grid. Mirrored in configs/baseline_opponent.json.
MicroParams baseline_opponent();

} // namespace micro3d
