#pragma once

namespace micro3d {

// Two maximized objectives, both normalized to [0, 1]:
// o1 = damage-done fraction, o2 = 1 - damage-taken fraction.
struct ObjectiveVector {
    double o1 = 0.0;
    double o2 = 0.0;

    bool operator==(const ObjectiveVector&) const = default;
};

// a dominates b iff a is no worse in both objectives and better in one.
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.o1 >= b.o1 && a.o2 >= b.o2 && (a.o1 > b.o1 || a.o2 > b.o2);
}

} // namespace micro3d
