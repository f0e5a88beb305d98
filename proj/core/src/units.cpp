#include "micro3d/units.hpp"

namespace micro3d {

std::string_view side_name(Side s) { return s == Side::Friend ? "friend" : "enemy"; }

const UnitTypeSpec& fvulture() {
    static const UnitTypeSpec spec{"fvulture", 80.0, 64.0, 20.0, 1, 256.0, 1.1};
    return spec;
}

const UnitTypeSpec& fzealot() {
    static const UnitTypeSpec spec{"fzealot", 160.0, 40.0, 16.0, 2, 224.0, 1.24};
    return spec;
}

const UnitTypeSpec* find_unit_type(std::string_view name) {
    if (name == "fvulture") return &fvulture();
    if (name == "fzealot") return &fzealot();
    return nullptr;
}

int World::living(Side s) const {
    int n = 0;
    for (const auto& u : units)
        if (u.alive && u.side == s) ++n;
    return n;
}

double World::total_hitpoints(Side s) const {
    double hp = 0.0;
    for (const auto& u : units)
        if (u.side == s) hp += u.hitpoints;
    return hp;
}

Vec3 World::centroid(Side s) const {
    Vec3 sum;
    int n = 0;
    for (const auto& u : units) {
        if (u.alive && u.side == s) {
            sum += u.position;
            ++n;
        }
    }
    return n == 0 ? Vec3{} : sum / static_cast<double>(n);
}

} // namespace micro3d
