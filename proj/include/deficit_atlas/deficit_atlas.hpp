#pragma once

#include "deficit_atlas/boundaries.hpp"
#include "deficit_atlas/correlations.hpp"
#include "deficit_atlas/diagram.hpp"
#include "deficit_atlas/entropy.hpp"
#include "deficit_atlas/errors.hpp"
#include "deficit_atlas/golden.hpp"
#include "deficit_atlas/oracle.hpp"
#include "deficit_atlas/state.hpp"
