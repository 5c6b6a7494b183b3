#pragma once

#include "cavity.hpp"
#include "density_matrix.hpp"
#include "oracle.hpp"
#include "phase_space.hpp"
#include "quadrature.hpp"
#include "states.hpp"
