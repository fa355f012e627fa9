#pragma once

#include "crosslab/bisection.hpp"
#include "crosslab/bounds.hpp"
#include "crosslab/crossing_number.hpp"
#include "crosslab/decomposition.hpp"
#include "crosslab/drawing.hpp"
#include "crosslab/errors.hpp"
#include "crosslab/generators.hpp"
#include "crosslab/geometry.hpp"
#include "crosslab/graph.hpp"
#include "crosslab/io.hpp"
#include "crosslab/json_io.hpp"
#include "crosslab/planarity.hpp"
#include "crosslab/rational.hpp"
#include "crosslab/suite.hpp"
