#pragma once

// Convenience umbrella header.

#include "fibcube/bigint.hpp"
#include "fibcube/bitstring.hpp"
#include "fibcube/counting_polynomial.hpp"
#include "fibcube/cube_graph.hpp"
#include "fibcube/decomposition.hpp"
#include "fibcube/errors.hpp"
#include "fibcube/induced_hypercube.hpp"
#include "fibcube/maximal_enum.hpp"
#include "fibcube/serialize.hpp"
