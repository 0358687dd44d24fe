// SPDX-License-Identifier: MIT
//
// Umbrella header: pulls in the whole library.

#pragma once

#include "bext/barycentric.hpp"
#include "bext/bmo.hpp"
#include "bext/carleson.hpp"
#include "bext/circle_homeo.hpp"
#include "bext/errors.hpp"
#include "bext/gateaux.hpp"
#include "bext/grid.hpp"
#include "bext/io.hpp"
#include "bext/laurent.hpp"
#include "bext/mobius.hpp"
#include "bext/schwarzian.hpp"
#include "bext/trig_poly.hpp"
