#pragma once

#include "biwave/algebra.hpp"
#include "biwave/analytic.hpp"
#include "biwave/config.hpp"
#include "biwave/driver.hpp"
#include "biwave/errors.hpp"
#include "biwave/fd.hpp"
#include "biwave/grid.hpp"
#include "biwave/poly2d.hpp"
#include "biwave/profile.hpp"
#include "biwave/selftest.hpp"
#include "biwave/synthesis.hpp"
