#pragma once

// Umbrella header: profit-aware team grouping over a social network.
// Parse an instance, expand load limits, then either solve exactly
// (exact_oracle) or run the LP-relaxation pipeline (solver).

#include "teamgroup/exact_oracle.hpp"
#include "teamgroup/instance.hpp"
#include "teamgroup/instance_io.hpp"
#include "teamgroup/master_lp.hpp"
#include "teamgroup/pricing.hpp"
#include "teamgroup/rational.hpp"
#include "teamgroup/rounding.hpp"
#include "teamgroup/simplex.hpp"
#include "teamgroup/solver.hpp"
#include "teamgroup/teams.hpp"
