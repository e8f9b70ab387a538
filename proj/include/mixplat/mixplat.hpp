#pragma once

#include "cyclo.hpp"
#include "interval.hpp"
#include "geometry.hpp"
#include "tiling.hpp"
#include "patch.hpp"
#include "symmetry.hpp"
#include "named.hpp"
#include "hyperbolic.hpp"
#include "classify.hpp"
#include "volume.hpp"
#include "svg.hpp"
