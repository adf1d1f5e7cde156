#pragma once

#include "mills/bounds.hpp"
#include "mills/constants.hpp"
#include "mills/derivatives.hpp"
#include "mills/errors.hpp"
#include "mills/extremal.hpp"
#include "mills/gaussian_core.hpp"
#include "mills/grid.hpp"
#include "mills/numeric.hpp"
#include "mills/quadrature_oracle.hpp"
#include "mills/summation.hpp"
#include "mills/verify.hpp"
