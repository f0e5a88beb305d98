#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "micro3d/units.hpp"
#include "micro3d/vec3.hpp"

namespace micro3d {

// Evolvable influence-map parameters.
struct IMParams {
    int range_cells = 0;          // r, [0, 8]
    double falloff = 0.0;         // i_f, [0, 1]; decrease per cell as fraction of I_s
    double health_weight = 0.0;   // w1, [0, 1]
    double cooldown_weight = 0.0; // w2, [0, 1]
    double bias = 0.0;            // w3, [0, 8]
};

struct CellIndex {
    int x = 0;
    int y = 0;
    int z = 0;
};

// Lattice-aligned grid geometry. `origin` is the world-space center of cell
// (0,0,0); linear index order is x fastest, then y, then z.
struct GridSpec {
    int nx = 0;
    int ny = 0;
    int nz = 0;
    double cell_size = 64.0;
    Vec3 origin;

    std::size_t cell_count() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
               static_cast<std::size_t>(nz);
    }
    std::size_t linear_index(const CellIndex& c) const {
        return (static_cast<std::size_t>(c.z) * ny + c.y) * nx + c.x;
    }
    Vec3 cell_center(const CellIndex& c) const {
        return origin + Vec3{c.x * cell_size, c.y * cell_size, c.z * cell_size};
    }
    CellIndex cell_of(const Vec3& p) const;  // clamped into grid bounds
    bool contains(const CellIndex& c) const {
        return c.x >= 0 && c.x < nx && c.y >= 0 && c.y < ny && c.z >= 0 && c.z < nz;
    }
};

struct IMGrid {
    GridSpec spec;
    std::vector<double> values;  // dense, spec.cell_count() entries

    double at(const CellIndex& c) const { return values[spec.linear_index(c)]; }
};

// Grid covering the axis-aligned bounding box of `units`, padded by
// (range_cells + 1) cells on every side. Cells are anchored to the world
// lattice of multiples of cell_size so the geometry is stable under small
// unit motion. When the box would exceed max_cells the cell size doubles
// until it fits.
GridSpec grid_for_units(std::span<const UnitState> units, int range_cells,
                        double cell_size, std::size_t max_cells = 4'000'000);

// I_s = w1 * R_h + w2 * R_c + w3 for one unit.
double starting_influence(const UnitState& unit, const IMParams& p);

// Sums every living unit's influence into the grid: a unit at cell distance
// d <= r contributes I_s - d * (I_s * i_f). Distance is Chebyshev in cells,
// so all eight planar neighbors sit at distance 1. Negative sums are kept.
IMGrid compute_im(std::span<const UnitState> units, const IMParams& p, const GridSpec& spec);

// World-space center of the minimum-valued cell. Ties break toward the
// smallest Euclidean distance to `squad_centroid`, then the lowest linear
// cell index.
Vec3 select_target_cell(const IMGrid& grid, const Vec3& squad_centroid);

} // namespace micro3d
