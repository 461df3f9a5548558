#pragma once

#include "error.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "lab.hpp"
#include "oracle.hpp"
#include "parameters.hpp"
#include "properties.hpp"
#include "solvers.hpp"
#include "vertex_set.hpp"
