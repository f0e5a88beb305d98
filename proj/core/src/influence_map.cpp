#include "micro3d/influence_map.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace micro3d {

CellIndex GridSpec::cell_of(const Vec3& p) const {
    auto idx = [this](double coord, double org, int n) {
        int i = static_cast<int>(std::floor((coord - org) / cell_size + 0.5));
        return std::clamp(i, 0, n - 1);
    };
    return {idx(p.x, origin.x, nx), idx(p.y, origin.y, ny), idx(p.z, origin.z, nz)};
}

GridSpec grid_for_units(std::span<const UnitState> units, int range_cells,
                        double cell_size, std::size_t max_cells) {
    assert(!units.empty());
    Vec3 lo = units[0].position, hi = units[0].position;
    for (const auto& u : units) {
        lo.x = std::min(lo.x, u.position.x);
        lo.y = std::min(lo.y, u.position.y);
        lo.z = std::min(lo.z, u.position.z);
        hi.x = std::max(hi.x, u.position.x);
        hi.y = std::max(hi.y, u.position.y);
        hi.z = std::max(hi.z, u.position.z);
    }

    const int pad = range_cells + 1;
    for (;;) {
        auto lo_cell = [&](double v) { return static_cast<long>(std::floor(v / cell_size)) - pad; };
        auto hi_cell = [&](double v) { return static_cast<long>(std::floor(v / cell_size)) + pad; };
        long lx = lo_cell(lo.x), ly = lo_cell(lo.y), lz = lo_cell(lo.z);
        long hx = hi_cell(hi.x), hy = hi_cell(hi.y), hz = hi_cell(hi.z);
        std::size_t nx = hx - lx + 1, ny = hy - ly + 1, nz = hz - lz + 1;
        if (nx * ny * nz <= max_cells) {
            GridSpec spec;
            spec.nx = static_cast<int>(nx);
            spec.ny = static_cast<int>(ny);
            spec.nz = static_cast<int>(nz);
            spec.cell_size = cell_size;
            spec.origin = Vec3{(lx + 0.5) * cell_size, (ly + 0.5) * cell_size,
                               (lz + 0.5) * cell_size};
            return spec;
        }
        cell_size *= 2.0;
    }
}

double starting_influence(const UnitState& unit, const IMParams& p) {
    return p.health_weight * unit.health_fraction() +
           p.cooldown_weight * unit.cooldown_fraction() + p.bias;
}

IMGrid compute_im(std::span<const UnitState> units, const IMParams& p, const GridSpec& spec) {
    IMGrid grid{spec, std::vector<double>(spec.cell_count(), 0.0)};
    const int r = p.range_cells;

    for (const auto& u : units) {
        if (!u.alive) continue;
        const double is = starting_influence(u, p);
        const double id = is * p.falloff;
        const CellIndex cu = spec.cell_of(u.position);

        const int x0 = std::max(cu.x - r, 0), x1 = std::min(cu.x + r, spec.nx - 1);
        const int y0 = std::max(cu.y - r, 0), y1 = std::min(cu.y + r, spec.ny - 1);
        const int z0 = std::max(cu.z - r, 0), z1 = std::min(cu.z + r, spec.nz - 1);
        for (int z = z0; z <= z1; ++z) {
            for (int y = y0; y <= y1; ++y) {
                const int dyz = std::max(std::abs(y - cu.y), std::abs(z - cu.z));
                std::size_t row = spec.linear_index({x0, y, z});
                for (int x = x0; x <= x1; ++x, ++row) {
                    const int d = std::max(std::abs(x - cu.x), dyz);
                    grid.values[row] += is - d * id;
                }
            }
        }
    }
    return grid;
}

Vec3 select_target_cell(const IMGrid& grid, const Vec3& squad_centroid) {
    assert(!grid.values.empty());
    const GridSpec& spec = grid.spec;

    double best_value = std::numeric_limits<double>::infinity();
    double best_dist2 = std::numeric_limits<double>::infinity();
    Vec3 best_center;

    std::size_t i = 0;
    for (int z = 0; z < spec.nz; ++z) {
        for (int y = 0; y < spec.ny; ++y) {
            for (int x = 0; x < spec.nx; ++x, ++i) {
                const double v = grid.values[i];
                if (v > best_value) continue;
                const Vec3 center = spec.cell_center({x, y, z});
                const double d2 = (center - squad_centroid).norm_sq();
                if (v < best_value || d2 < best_dist2) {
                    best_value = v;
                    best_dist2 = d2;
                    best_center = center;
                }
            }
        }
    }
    return best_center;
}

} // namespace micro3d
