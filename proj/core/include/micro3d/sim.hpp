#pragma once

#include <iosfwd>
#include <numbers>
#include <optional>

#include "micro3d/controller.hpp"
#include "micro3d/scenario.hpp"
#include "micro3d/units.hpp"

namespace micro3d {

// Fixed-timestep physics and combat constants. Values the source material
// leaves open are surfaced here so they stay tunable.
struct SimConfig {
    double dt = 0.05;                              // seconds per tick (20 Hz)
    int max_ticks = 2400;                          // 120 simulated seconds
    double max_turn_rate = std::numbers::pi;       // rad/s
    double acceleration_factor = 2.0;              // a_max = factor * max_speed, per second
    double climb_rate_cap = 40.0;                  // |vertical velocity| bound, world-units/s
    double min_altitude = 0.0;
    double max_altitude = 1000.0;
    int im_refresh_ticks = 8;
    double im_cell_size = 64.0;
    std::size_t im_max_cells = 4'000'000;
};

struct SkirmishResult {
    double damage_to_enemies = 0.0;
    double damage_to_friends = 0.0;
    int ticks_elapsed = 0;
    int survivors_friend = 0;
    int survivors_enemy = 0;
};

// Streams one JSON object per unit per tick:
//   {"tick":..,"id":..,"side":"friend","x":..,"y":..,"z":..,"hp":..,"cooldown":..}
class TraceWriter {
public:
    explicit TraceWriter(std::ostream& out) : out_(out) {}
    void record(int tick, const World& world);

private:
    std::ostream& out_;
};

// Nearest living enemy within weapon range (3D Euclidean); ties break to the
// lowest id. Firing is omnidirectional. Requires unit.alive.
std::optional<int> acquire_target(const UnitState& unit, const World& world);

// Applies one deterministic damage packet (max_damage_per_shot *
// shots_per_attack, clamped to the target's remaining hitpoints) and starts
// the attacker's cooldown. Returns the recorded damage. Preconditions
// (attacker alive and ready, target alive and in range) are asserts.
double fire(UnitState& attacker, UnitState& target);

// One unit's kinematics for one tick: rotate the heading toward the command
// (turn-rate limited), move speed toward desired_speed * max(0, cos theta)
// (acceleration limited), integrate position with the vertical velocity
// capped, clamp altitude.
void apply_steering(UnitState& unit, const SteeringCommand& cmd, const SimConfig& cfg);

// One tick over all living units in ascending id order: steer, cool down,
// acquire, fire. Controllers see the frozen pre-tick snapshot; damage lands
// immediately, so a unit killed early in the tick no longer acts or is
// targeted later in it. Damage tallies accumulate into `result`.
void step(World& world, Controller& friend_controller, Controller& enemy_controller,
          const SimConfig& cfg, int tick, SkirmishResult& result);

// Runs until one side is wiped out or max_ticks elapse. Bit-identical
// results and trace for identical inputs.
SkirmishResult run_skirmish(const Scenario& scenario, Controller& friend_controller,
                            Controller& enemy_controller, const SimConfig& cfg,
                            TraceWriter* trace = nullptr);

} // namespace micro3d
