#pragma once

// Umbrella header: grid geometry, per-agent search, conflict detection and
// classification, COLREGs-style resolution, lockstep simulation, scenario
// and trajectory files, SVG rendering.

#include "comcore/astar.hpp"
#include "comcore/conflict.hpp"
#include "comcore/errors.hpp"
#include "comcore/grid.hpp"
#include "comcore/path.hpp"
#include "comcore/report.hpp"
#include "comcore/resolver.hpp"
#include "comcore/scenario.hpp"
#include "comcore/sim.hpp"
#include "comcore/svg.hpp"
#include "comcore/trajectory.hpp"
