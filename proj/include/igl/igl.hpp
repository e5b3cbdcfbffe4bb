#pragma once

// Umbrella header. io.hpp and model_spec.hpp pull in nlohmann/json and are
// included separately.

#include "igl/curve.hpp"
#include "igl/densities.hpp"
#include "igl/errors.hpp"
#include "igl/graph.hpp"
#include "igl/interval.hpp"
#include "igl/interval_graph.hpp"
#include "igl/kernels_ext.hpp"
#include "igl/measures.hpp"
#include "igl/observables.hpp"
#include "igl/random.hpp"
#include "igl/small_graph.hpp"
#include "igl/stats.hpp"
