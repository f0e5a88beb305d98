#include "micro3d/scenario.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace micro3d {

namespace {

constexpr double kMinAltitude = 0.0;
constexpr double kMaxAltitude = 1000.0;

Placement make_placement(const std::string& type, Side side, Vec3 pos, Rng& rng) {
    pos.z = std::clamp(pos.z, kMinAltitude, kMaxAltitude);
    return Placement{type, side, pos, rng.unit_vector()};
}

} // namespace

std::vector<Placement> clump(const Vec3& center, double radius, int n,
                             const std::string& type, Side side, Rng& rng) {
    assert(radius > 0.0);
    std::vector<Placement> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(make_placement(type, side, center + rng.in_unit_ball() * radius, rng));
    return out;
}

std::vector<Placement> cloud(const Vec3& center, double radius, int n,
                             const std::string& type, Side side, Rng& rng, double shell) {
    assert(radius > shell);
    std::vector<Placement> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double r = rng.uniform(radius - shell, radius + shell);
        out.push_back(make_placement(type, side, center + rng.unit_vector() * r, rng));
    }
    return out;
}

std::vector<Scenario> training_scenarios(std::uint64_t seed, const ScenarioLayout& layout) {
    const Vec3 mid{0.0, 0.0, layout.center_altitude};
    const Vec3 left{-layout.center_separation / 2.0, 0.0, layout.center_altitude};
    const Vec3 right{layout.center_separation / 2.0, 0.0, layout.center_altitude};

    std::vector<Scenario> out;

    {
        Rng rng = Rng::stream(seed, 0);
        Scenario s{"clump-vs-clump", seed, {}};
        auto friends = clump(left, layout.clump_radius, layout.n_friends, "fvulture",
                             Side::Friend, rng);
        auto enemies = clump(right, layout.clump_radius, layout.n_enemies, "fzealot",
                             Side::Enemy, rng);
        s.placements.insert(s.placements.end(), friends.begin(), friends.end());
        s.placements.insert(s.placements.end(), enemies.begin(), enemies.end());
        out.push_back(std::move(s));
    }
    {
        Rng rng = Rng::stream(seed, 1);
        Scenario s{"clump-in-enemy-cloud", seed, {}};
        auto friends = clump(mid, layout.clump_radius, layout.n_friends, "fvulture",
                             Side::Friend, rng);
        auto enemies = cloud(mid, layout.cloud_radius, layout.n_enemies, "fzealot",
                             Side::Enemy, rng, layout.cloud_shell);
        s.placements.insert(s.placements.end(), friends.begin(), friends.end());
        s.placements.insert(s.placements.end(), enemies.begin(), enemies.end());
        out.push_back(std::move(s));
    }
    {
        Rng rng = Rng::stream(seed, 2);
        Scenario s{"cloud-around-enemy-clump", seed, {}};
        auto friends = cloud(mid, layout.cloud_radius, layout.n_friends, "fvulture",
                             Side::Friend, rng, layout.cloud_shell);
        auto enemies = clump(mid, layout.clump_radius, layout.n_enemies, "fzealot",
                             Side::Enemy, rng);
        s.placements.insert(s.placements.end(), friends.begin(), friends.end());
        s.placements.insert(s.placements.end(), enemies.begin(), enemies.end());
        out.push_back(std::move(s));
    }
    return out;
}

Scenario random_scenario(std::uint64_t seed, const ScenarioLayout& layout) {
    Rng rng = Rng::stream(seed, 3);
    const Vec3 center{0.0, 0.0, layout.center_altitude};
    Scenario s{"random-clump", seed, {}};
    auto friends = clump(center, layout.random_clump_radius, layout.n_friends, "fvulture",
                         Side::Friend, rng);
    auto enemies = clump(center, layout.random_clump_radius, layout.n_enemies, "fzealot",
                         Side::Enemy, rng);
    s.placements.insert(s.placements.end(), friends.begin(), friends.end());
    s.placements.insert(s.placements.end(), enemies.begin(), enemies.end());
    return s;
}

void write_scenario(std::ostream& out, const Scenario& s) {
    out << "# scenario: " << s.label << "\n";
    out << "# seed: " << s.seed << "\n";
    char line[256];
    for (const auto& p : s.placements) {
        std::snprintf(line, sizeof line, "%s %s %.6f %.6f %.6f %.9f %.9f %.9f\n",
                      p.type.c_str(), std::string(side_name(p.side)).c_str(), p.position.x,
                      p.position.y, p.position.z, p.heading.x, p.heading.y, p.heading.z);
        out << line;
    }
}

Scenario read_scenario(std::istream& in) {
    Scenario s;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (auto pos = line.find("scenario:"); pos != std::string::npos) {
                s.label = line.substr(pos + 10);
            } else if (auto sp = line.find("seed:"); sp != std::string::npos) {
                s.seed = std::stoull(line.substr(sp + 5));
            }
            continue;
        }
        std::istringstream ls(line);
        Placement p;
        std::string side;
        if (!(ls >> p.type >> side >> p.position.x >> p.position.y >> p.position.z >>
              p.heading.x >> p.heading.y >> p.heading.z))
            throw std::invalid_argument("malformed scenario line: " + line);
        if (side == "friend")
            p.side = Side::Friend;
        else if (side == "enemy")
            p.side = Side::Enemy;
        else
            throw std::invalid_argument("unknown side: " + side);
        s.placements.push_back(std::move(p));
    }
    return s;
}

World make_world(const Scenario& s) {
    World w;
    w.units.reserve(s.placements.size());
    int id = 0;
    for (const auto& p : s.placements) {
        const UnitTypeSpec* type = find_unit_type(p.type);
        if (!type) throw std::invalid_argument("unknown unit type: " + p.type);
        UnitState u;
        u.id = id++;
        u.type = type;
        u.side = p.side;
        u.position = p.position;
        Vec3 h = p.heading.normalized();
        u.heading = h == Vec3{} ? Vec3{1.0, 0.0, 0.0} : h;
        u.speed = 0.0;
        u.hitpoints = type->max_hitpoints;
        u.cooldown_remaining = 0.0;
        u.alive = true;
        w.units.push_back(std::move(u));
    }
    return w;
}

} // namespace micro3d
