#include "micro3d/sim.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace micro3d {

namespace {

constexpr double kEps = 1e-9;

// Rodrigues rotation of v around the unit axis by angle.
Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c));
}

// Any unit vector perpendicular to h, picked deterministically.
Vec3 perpendicular(const Vec3& h) {
    Vec3 axis = h.cross(Vec3{1.0, 0.0, 0.0});
    if (axis.norm_sq() < 1e-12) axis = h.cross(Vec3{0.0, 1.0, 0.0});
    return axis.normalized();
}

} // namespace

void TraceWriter::record(int tick, const World& world) {
    char line[256];
    for (const auto& u : world.units) {
        std::snprintf(line, sizeof line,
                      "{\"tick\":%d,\"id\":%d,\"side\":\"%s\",\"x\":%.6f,\"y\":%.6f,"
                      "\"z\":%.6f,\"hp\":%.6f,\"cooldown\":%.6f}\n",
                      tick, u.id, u.side == Side::Friend ? "friend" : "enemy", u.position.x,
                      u.position.y, u.position.z, u.hitpoints, u.cooldown_remaining);
        out_ << line;
    }
}

std::optional<int> acquire_target(const UnitState& unit, const World& world) {
    assert(unit.alive);
    const double range2 = unit.type->weapon_range * unit.type->weapon_range;
    std::optional<int> best;
    double best_d2 = 0.0;
    for (const auto& other : world.units) {
        if (!other.alive || other.side == unit.side) continue;
        const double d2 = (other.position - unit.position).norm_sq();
        if (d2 > range2) continue;
        if (!best || d2 < best_d2) {
            best = other.id;
            best_d2 = d2;
        }
    }
    return best;  // scan order is ascending id, so ties keep the lowest id
}

double fire(UnitState& attacker, UnitState& target) {
    assert(attacker.alive);
    assert(attacker.cooldown_remaining == 0.0);
    assert(target.alive);
    assert(distance(attacker.position, target.position) <=
           attacker.type->weapon_range + 1e-9);

    const double packet = attacker.type->max_damage_per_shot * attacker.type->shots_per_attack;
    const double damage = std::min(packet, target.hitpoints);
    target.hitpoints -= damage;
    if (target.hitpoints <= 0.0) {
        target.hitpoints = 0.0;
        target.alive = false;
        target.speed = 0.0;
    }
    attacker.cooldown_remaining = attacker.type->weapon_cooldown;
    return damage;
}

void apply_steering(UnitState& unit, const SteeringCommand& cmd, const SimConfig& cfg) {
    assert(unit.alive);
    const double dt = cfg.dt;
    const UnitTypeSpec& type = *unit.type;

    const Vec3 desired = cmd.desired_heading;
    double s_target = 0.0;
    if (desired.norm_sq() > kEps * kEps) {
        const double cos_theta = std::clamp(unit.heading.dot(desired), -1.0, 1.0);
        const double theta = std::acos(cos_theta);
        s_target = std::min(cmd.desired_speed, type.max_speed) * std::max(0.0, cos_theta);

        if (theta > kEps) {
            Vec3 axis = unit.heading.cross(desired);
            axis = axis.norm_sq() < 1e-12 ? perpendicular(unit.heading) : axis.normalized();
            const double turn = std::min(cfg.max_turn_rate * dt, theta);
            unit.heading = rotate_about(unit.heading, axis, turn).normalized();
        }
    }
    // zero desired heading: hold course, decelerate toward 0 (s_target stays 0)

    const double a_max = cfg.acceleration_factor * type.max_speed;
    const double dv = std::clamp(s_target - unit.speed, -a_max * dt, a_max * dt);
    unit.speed = std::clamp(unit.speed + dv, 0.0, type.max_speed);

    Vec3 velocity = unit.heading * unit.speed;
    velocity.z = std::clamp(velocity.z, -cfg.climb_rate_cap, cfg.climb_rate_cap);
    unit.position += velocity * dt;
    unit.position.z = std::clamp(unit.position.z, cfg.min_altitude, cfg.max_altitude);
}

void step(World& world, Controller& friend_controller, Controller& enemy_controller,
          const SimConfig& cfg, int tick, SkirmishResult& result) {
    const World snapshot = world;
    friend_controller.begin_tick(tick, snapshot);
    enemy_controller.begin_tick(tick, snapshot);

    for (std::size_t i = 0; i < world.units.size(); ++i) {
        UnitState& unit = world.units[i];
        if (!unit.alive) continue;

        Controller& ctl =
            unit.side == Side::Friend ? friend_controller : enemy_controller;
        apply_steering(unit, ctl.command(snapshot, snapshot.units[i]), cfg);

        unit.cooldown_remaining -= cfg.dt;
        if (unit.cooldown_remaining < kEps) unit.cooldown_remaining = 0.0;

        if (unit.cooldown_remaining == 0.0) {
            if (auto target_id = acquire_target(unit, world)) {
                UnitState& target = world.units[*target_id];
                const double damage = fire(unit, target);
                if (target.side == Side::Enemy)
                    result.damage_to_enemies += damage;
                else
                    result.damage_to_friends += damage;
            }
        }
    }
}

SkirmishResult run_skirmish(const Scenario& scenario, Controller& friend_controller,
                            Controller& enemy_controller, const SimConfig& cfg,
                            TraceWriter* trace) {
    World world = make_world(scenario);
    SkirmishResult result;

    if (trace) trace->record(0, world);

    int tick = 0;
    while (tick < cfg.max_ticks && world.living(Side::Friend) > 0 &&
           world.living(Side::Enemy) > 0) {
        step(world, friend_controller, enemy_controller, cfg, tick, result);
        ++tick;
        if (trace) trace->record(tick, world);
    }

    result.ticks_elapsed = tick;
    result.survivors_friend = world.living(Side::Friend);
    result.survivors_enemy = world.living(Side::Enemy);
    return result;
}

} // namespace micro3d
