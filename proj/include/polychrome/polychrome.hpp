#pragma once

#include "polychrome/chromatic_halfplanes.hpp"
#include "polychrome/chromatic_points.hpp"
#include "polychrome/construct.hpp"
#include "polychrome/epsnet.hpp"
#include "polychrome/geom.hpp"
#include "polychrome/io.hpp"
#include "polychrome/oracle.hpp"
#include "polychrome/ranges.hpp"
#include "polychrome/rational.hpp"
#include "polychrome/svg.hpp"
