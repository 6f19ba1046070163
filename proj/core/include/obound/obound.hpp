#ifndef OBOUND_OBOUND_HPP
#define OBOUND_OBOUND_HPP

// Umbrella header.

#include "obound/graph_io.hpp"
#include "obound/interval.hpp"
#include "obound/model.hpp"
#include "obound/oracle.hpp"
#include "obound/overlap_graph.hpp"
#include "obound/polytope.hpp"
#include "obound/propagation.hpp"
#include "obound/triangle_bounds.hpp"
#include "obound/witness.hpp"

#endif // OBOUND_OBOUND_HPP
