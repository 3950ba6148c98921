// Umbrella header.
#pragma once

#include "algebra_core.hpp"
#include "char_ring.hpp"
#include "diagram_calculus.hpp"
#include "ds_engine.hpp"
#include "iso_geometry.hpp"
#include "json_io.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "sweep.hpp"
