#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "micro3d/controller.hpp"
#include "micro3d/influence_map.hpp"
#include "micro3d/units.hpp"
#include "micro3d/vec3.hpp"

namespace micro3d {

// One attraction or repulsion term of the form c * d^e.
struct PFTerm {
    double coeff = 0.0;  // c, [-10000, 10000]
    int exponent = 0;    // e, [-7, 8]
};

// Indices of the 13 potential-field terms. Attract/repel pairs share the
// direction vector; the magnitude argument is distance, health fraction, or
// cooldown fraction of the other unit.
enum PFIndex : std::size_t {
    kFriendDistAttract = 0,
    kFriendDistRepel = 1,
    kEnemyDistAttract = 2,
    kEnemyDistRepel = 3,
    kFriendHealthAttract = 4,
    kFriendHealthRepel = 5,
    kEnemyHealthAttract = 6,
    kEnemyHealthRepel = 7,
    kFriendWeaponAttract = 8,
    kFriendWeaponRepel = 9,
    kEnemyWeaponAttract = 10,
    kEnemyWeaponRepel = 11,
    kTargetAttract = 12,
};

inline constexpr std::size_t kNumPFTerms = 13;

// The decoded controller: 13 potential-field terms plus influence-map
// parameters.
struct MicroParams {
    std::array<PFTerm, kNumPFTerms> pf{};
    IMParams im{};
};

// Magnitude limits that keep negative exponents finite.
inline constexpr double kMinFieldDistance = 1.0;       // d_eff = max(d, 1)
inline constexpr double kMinFieldFraction = 1.0 / 256; // floor for health/cooldown fractions

// c * max(d, 1)^e. Finite for every in-range term and d >= 0.
double pf_magnitude(const PFTerm& term, double d);

// (to - from) normalized; zero when the points are within 1e-9.
Vec3 direction(const Vec3& from, const Vec3& to);

// Vector sums over all living units other than self. Friends use the
// attract/repel pair for the unit's own side, enemies the other pair.
Vec3 distance_field(const UnitState& self, std::span<const UnitState> others,
                    const MicroParams& params);
Vec3 health_field(const UnitState& self, std::span<const UnitState> others,
                  const MicroParams& params);
Vec3 weapon_field(const UnitState& self, std::span<const UnitState> others,
                  const MicroParams& params);

// Single attractive field exerted by the target location.
Vec3 target_field(const UnitState& self, const Vec3& target_pos, const MicroParams& params);

// F = T + D + H + W. Desired heading is F normalized (zero when |F| < 1e-9);
// desired speed is the unit's max speed, attenuated later by heading
// alignment inside the physics step.
SteeringCommand total_field(const UnitState& self, std::span<const UnitState> others,
                            const Vec3& target_pos, const MicroParams& params);

// Squad controller: refreshes the influence-map target every few ticks from
// living opposing units, then steers each unit by the summed fields.
class PotentialFieldController : public Controller {
public:
    PotentialFieldController(MicroParams params, Side side, int im_refresh_ticks = 8,
                             double im_cell_size = 64.0, std::size_t im_max_cells = 4'000'000);

    void begin_tick(int tick, const World& snapshot) override;
    SteeringCommand command(const World& snapshot, const UnitState& self) override;

    const MicroParams& params() const { return params_; }
    const Vec3& current_target() const { return target_; }

private:
    MicroParams params_;
    Side side_;
    int im_refresh_ticks_;
    double im_cell_size_;
    std::size_t im_max_cells_;
    Vec3 target_;
    bool has_target_ = false;
};

} // namespace micro3d
