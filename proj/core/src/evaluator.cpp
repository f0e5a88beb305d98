#include "micro3d/evaluator.hpp"

#include <algorithm>

namespace micro3d {

namespace {

double starting_hitpoints(const Scenario& scenario, Side side) {
    double hp = 0.0;
    for (const auto& p : scenario.placements) {
        if (p.side != side) continue;
        const UnitTypeSpec* type = find_unit_type(p.type);
        if (type) hp += type->max_hitpoints;
    }
    return hp;
}

} // namespace

ObjectiveVector objectives(const SkirmishResult& result, const Scenario& scenario) {
    const double enemy_hp = starting_hitpoints(scenario, Side::Enemy);
    const double friend_hp = starting_hitpoints(scenario, Side::Friend);
    // conservation makes the clamp a no-op; it only guards float dust
    const double o1 = enemy_hp > 0.0 ? result.damage_to_enemies / enemy_hp : 0.0;
    const double o2 = friend_hp > 0.0 ? 1.0 - result.damage_to_friends / friend_hp : 1.0;
    return {std::clamp(o1, 0.0, 1.0), std::clamp(o2, 0.0, 1.0)};
}

SkirmishResult run_scenario(const Scenario& scenario, const MicroParams& controller,
                            const MicroParams& opponent, const SimConfig& sim,
                            TraceWriter* trace) {
    PotentialFieldController friend_ctl(controller, Side::Friend, sim.im_refresh_ticks,
                                        sim.im_cell_size, sim.im_max_cells);
    PotentialFieldController enemy_ctl(opponent, Side::Enemy, sim.im_refresh_ticks,
                                       sim.im_cell_size, sim.im_max_cells);
    return run_skirmish(scenario, friend_ctl, enemy_ctl, sim, trace);
}

ObjectiveVector evaluate(const Genome& genome, const EvalConfig& cfg) {
    const MicroParams params = decode(genome);
    ObjectiveVector mean;
    for (const auto& scenario : cfg.scenarios) {
        const SkirmishResult result = run_scenario(scenario, params, cfg.opponent, cfg.sim);
        const ObjectiveVector obj = objectives(result, scenario);
        mean.o1 += obj.o1;
        mean.o2 += obj.o2;
    }
    const double n = static_cast<double>(cfg.scenarios.size());
    return {mean.o1 / n, mean.o2 / n};
}

MicroParams baseline_opponent() {
    MicroParams p;
    p.pf[kEnemyDistAttract] = {10000.0, 1};
    // remaining coefficients zero; with c13 == 0 the influence map is unused
    return p;
}

} // namespace micro3d
