#include "micro3d/potential_fields.hpp"

#include <cmath>

namespace micro3d {

namespace {

// base^e for the small integer exponent range [-7, 8].
double ipow(double base, int e) {
    bool inv = e < 0;
    if (inv) e = -e;
    double r = 1.0;
    while (e-- > 0) r *= base;
    return inv ? 1.0 / r : r;
}

// Shared shape of D, H and W: per other unit, direction times the
// attract-minus-repel pair evaluated at that unit's magnitude.
template <typename MagnitudeFn>
Vec3 pair_field(const UnitState& self, std::span<const UnitState> others,
                const MicroParams& params, std::size_t attract_base, double magnitude_floor,
                MagnitudeFn magnitude) {
    Vec3 sum;
    for (const auto& other : others) {
        if (!other.alive || other.id == self.id) continue;
        const Vec3 n = direction(self.position, other.position);
        const double m = std::max(magnitude(other), magnitude_floor);
        const std::size_t base = attract_base + (other.side == self.side ? 0 : 2);
        const PFTerm& att = params.pf[base];
        const PFTerm& rep = params.pf[base + 1];
        sum += n * (att.coeff * ipow(m, att.exponent) - rep.coeff * ipow(m, rep.exponent));
    }
    return sum;
}

} // namespace

double pf_magnitude(const PFTerm& term, double d) {
    return term.coeff * ipow(std::max(d, kMinFieldDistance), term.exponent);
}

Vec3 direction(const Vec3& from, const Vec3& to) { return (to - from).normalized(); }

Vec3 distance_field(const UnitState& self, std::span<const UnitState> others,
                    const MicroParams& params) {
    return pair_field(self, others, params, kFriendDistAttract, kMinFieldDistance,
                      [&](const UnitState& o) { return distance(self.position, o.position); });
}

Vec3 health_field(const UnitState& self, std::span<const UnitState> others,
                  const MicroParams& params) {
    return pair_field(self, others, params, kFriendHealthAttract, kMinFieldFraction,
                      [](const UnitState& o) { return o.health_fraction(); });
}

Vec3 weapon_field(const UnitState& self, std::span<const UnitState> others,
                  const MicroParams& params) {
    return pair_field(self, others, params, kFriendWeaponAttract, kMinFieldFraction,
                      [](const UnitState& o) { return o.cooldown_fraction(); });
}

Vec3 target_field(const UnitState& self, const Vec3& target_pos, const MicroParams& params) {
    const Vec3 m = direction(self.position, target_pos);
    const double d = distance(self.position, target_pos);
    return m * pf_magnitude(params.pf[kTargetAttract], d);
}

SteeringCommand total_field(const UnitState& self, std::span<const UnitState> others,
                            const Vec3& target_pos, const MicroParams& params) {
    const Vec3 f = target_field(self, target_pos, params) +
                   distance_field(self, others, params) +
                   health_field(self, others, params) +
                   weapon_field(self, others, params);
    return {f.normalized(), self.type->max_speed};
}

PotentialFieldController::PotentialFieldController(MicroParams params, Side side,
                                                   int im_refresh_ticks, double im_cell_size,
                                                   std::size_t im_max_cells)
    : params_(std::move(params)),
      side_(side),
      im_refresh_ticks_(im_refresh_ticks),
      im_cell_size_(im_cell_size),
      im_max_cells_(im_max_cells) {}

void PotentialFieldController::begin_tick(int tick, const World& snapshot) {
    if (has_target_ && tick % im_refresh_ticks_ != 0) return;
    if (snapshot.units.empty()) return;

    // The target field ignores the IM when its coefficient is zero; skip the
    // grid work in that case.
    if (params_.pf[kTargetAttract].coeff == 0.0) {
        target_ = snapshot.centroid(side_);
        has_target_ = true;
        return;
    }

    std::vector<UnitState> opponents;
    opponents.reserve(snapshot.units.size());
    for (const auto& u : snapshot.units)
        if (u.alive && u.side != side_) opponents.push_back(u);

    const GridSpec spec = grid_for_units(snapshot.units, params_.im.range_cells,
                                         im_cell_size_, im_max_cells_);
    const IMGrid grid = compute_im(opponents, params_.im, spec);
    target_ = select_target_cell(grid, snapshot.centroid(side_));
    has_target_ = true;
}

SteeringCommand PotentialFieldController::command(const World& snapshot, const UnitState& self) {
    return total_field(self, snapshot.units, target_, params_);
}

} // namespace micro3d
