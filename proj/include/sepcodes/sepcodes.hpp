#pragma once

#include "sepcodes/codes.hpp"
#include "sepcodes/cover_solver.hpp"
#include "sepcodes/errors.hpp"
#include "sepcodes/families.hpp"
#include "sepcodes/graph.hpp"
#include "sepcodes/graph_io.hpp"
#include "sepcodes/hypergraph.hpp"
#include "sepcodes/reduction.hpp"
#include "sepcodes/relations.hpp"
#include "sepcodes/vertex_set.hpp"
