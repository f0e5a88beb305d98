#pragma once

#include "micro3d/units.hpp"

namespace micro3d {

// Per-side steering policy. The simulation hands every controller the same
// frozen pre-tick snapshot: begin_tick() once per tick, then command() for
// each living unit of the controller's side.
class Controller {
public:
    virtual ~Controller() = default;

    virtual void begin_tick(int /*tick*/, const World& /*snapshot*/) {}
    virtual SteeringCommand command(const World& snapshot, const UnitState& self) = 0;
};

} // namespace micro3d
