#pragma once

#include "vdwsurf/atoms.hpp"
#include "vdwsurf/forces.hpp"
#include "vdwsurf/geometry.hpp"
#include "vdwsurf/media.hpp"
#include "vdwsurf/potentials.hpp"
#include "vdwsurf/quadrature.hpp"
#include "vdwsurf/response.hpp"
#include "vdwsurf/scenario.hpp"
#include "vdwsurf/sweep.hpp"
