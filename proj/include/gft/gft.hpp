#pragma once

#include "gft/analytic.hpp"
#include "gft/class_oracles.hpp"
#include "gft/errors.hpp"
#include "gft/maminda.hpp"
#include "gft/membership.hpp"
#include "gft/quadrature.hpp"
#include "gft/radius.hpp"
#include "gft/schwarz.hpp"
#include "gft/series_io.hpp"
#include "gft/sufficiency.hpp"
#include "gft/verify.hpp"
#include "gft/version.hpp"
