#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "micro3d/rng.hpp"
#include "micro3d/units.hpp"

namespace micro3d {

struct Placement {
    std::string type;  // unit type name, e.g. "fvulture"
    Side side = Side::Friend;
    Vec3 position;
    Vec3 heading{1.0, 0.0, 0.0};
};

// Initial unit placement plus the seed it was generated from.
struct Scenario {
    std::string label;
    std::uint64_t seed = 0;
    std::vector<Placement> placements;
};

// Geometry constants for scenario construction.
struct ScenarioLayout {
    int n_friends = 3;
    int n_enemies = 30;
    double clump_radius = 400.0;
    double cloud_radius = 400.0;
    double cloud_shell = 10.0;          // units scatter within +-shell of the radius
    double random_clump_radius = 500.0; // single mixed clump for random scenarios
    double center_separation = 1200.0;  // scenario 1: clump centers along x
    double center_altitude = 500.0;
};

// n placements uniform inside the sphere (center, radius); headings uniform
// on the unit sphere. Altitude is clamped into [0, 1000] after sampling.
std::vector<Placement> clump(const Vec3& center, double radius, int n,
                             const std::string& type, Side side, Rng& rng);

// n placements in the spherical shell radius +- 10 (radial coordinate
// uniform, direction uniform). Requires radius > shell thickness.
std::vector<Placement> cloud(const Vec3& center, double radius, int n,
                             const std::string& type, Side side, Rng& rng,
                             double shell = 10.0);

// The three training maps: clump-vs-clump with separated centers, a friendly
// clump surrounded by an enemy cloud, and an enemy clump surrounded by a
// friendly cloud. Deterministic per seed.
std::vector<Scenario> training_scenarios(std::uint64_t seed,
                                         const ScenarioLayout& layout = {});

// All units of both sides spread within one sphere of radius 500.
Scenario random_scenario(std::uint64_t seed, const ScenarioLayout& layout = {});

// One placement per line: type side x y z hx hy hz. Comment lines start
// with '#'.
void write_scenario(std::ostream& out, const Scenario& s);
Scenario read_scenario(std::istream& in);

// Instantiate the scenario: ids ascend in placement order, full health, zero
// speed and cooldown. Throws on unknown unit type.
World make_world(const Scenario& s);

} // namespace micro3d
