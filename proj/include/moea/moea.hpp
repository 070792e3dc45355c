#pragma once

// Umbrella header for the whole library.

#include "benchmarks.hpp"
#include "core.hpp"
#include "crowding.hpp"
#include "engines.hpp"
#include "harness.hpp"
#include "metrics.hpp"
#include "random.hpp"
#include "ranking.hpp"
#include "rational.hpp"
#include "selection.hpp"
#include "variation.hpp"
