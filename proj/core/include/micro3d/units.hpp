#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "micro3d/vec3.hpp"

namespace micro3d {

enum class Side { Friend, Enemy };

inline Side opposite(Side s) { return s == Side::Friend ? Side::Enemy : Side::Friend; }
std::string_view side_name(Side s);

// Immutable per-type combat and movement stats.
struct UnitTypeSpec {
    std::string name;
    double max_hitpoints;        // health points
    double max_speed;            // world-units / second
    double max_damage_per_shot;  // health points
    int shots_per_attack;
    double weapon_range;         // world-units
    double weapon_cooldown;      // seconds
};

// Built-in types: flying vulture (fast, fragile, ranged) and flying zealot
// (slow, tough, melee-ranged).
const UnitTypeSpec& fvulture();
const UnitTypeSpec& fzealot();

// Lookup by name; nullptr when unknown.
const UnitTypeSpec* find_unit_type(std::string_view name);

// One entity's mutable kinematic and combat state during a skirmish.
struct UnitState {
    int id = 0;
    const UnitTypeSpec* type = nullptr;
    Side side = Side::Friend;
    Vec3 position;
    Vec3 heading{1.0, 0.0, 0.0};  // unit length whenever speed > 0
    double speed = 0.0;           // [0, max_speed]
    double hitpoints = 0.0;       // [0, max_hitpoints]; alive <=> hitpoints > 0
    double cooldown_remaining = 0.0;
    bool alive = true;

    double health_fraction() const { return hitpoints / type->max_hitpoints; }
    double cooldown_fraction() const { return cooldown_remaining / type->weapon_cooldown; }
};

struct SteeringCommand {
    Vec3 desired_heading;  // unit vector, or zero to hold course and stop
    double desired_speed = 0.0;
};

struct World {
    std::vector<UnitState> units;

    int living(Side s) const;
    double total_hitpoints(Side s) const;
    Vec3 centroid(Side s) const;  // mean position of living units; zero if none
};

} // namespace micro3d
