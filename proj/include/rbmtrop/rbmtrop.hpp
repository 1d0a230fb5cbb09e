/// Umbrella header for the whole library.
#pragma once

#include "rational.hpp"
#include "matrix.hpp"
#include "simplex.hpp"
#include "parallel.hpp"
#include "cube.hpp"
#include "trop_rbm.hpp"
#include "codes.hpp"
#include "statistics.hpp"
#include "trop_poly.hpp"
#include "secondary_fan.hpp"
