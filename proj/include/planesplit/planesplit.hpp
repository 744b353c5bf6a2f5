#pragma once

// Umbrella header: planar split thickness toolkit.

#include "planesplit/bounds.hpp"
#include "planesplit/certificate.hpp"
#include "planesplit/constructions.hpp"
#include "planesplit/empire.hpp"
#include "planesplit/errors.hpp"
#include "planesplit/exact.hpp"
#include "planesplit/graph.hpp"
#include "planesplit/hardness.hpp"
#include "planesplit/io.hpp"
#include "planesplit/planarity.hpp"
#include "planesplit/random.hpp"
#include "planesplit/splitters.hpp"
#include "planesplit/svg.hpp"
