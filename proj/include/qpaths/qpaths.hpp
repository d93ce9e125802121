// qpaths.hpp — umbrella header for the whole library.

#pragma once

#include "qpaths/numerics.hpp"
#include "qpaths/channels.hpp"
#include "qpaths/vacuum.hpp"
#include "qpaths/supermaps.hpp"
#include "qpaths/walk_hybrid.hpp"
#include "qpaths/dtqw.hpp"
#include "qpaths/measurement.hpp"
#include "qpaths/io.hpp"
