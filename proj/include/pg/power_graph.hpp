#ifndef PG_POWER_GRAPH_HPP
#define PG_POWER_GRAPH_HPP

#include "pg/graph.hpp"
#include "pg/group.hpp"

namespace pg {

// Arc x -> y iff y is a power of x and y != x, i.e. y in <x> \ {x}.
DiGraph directed_power_graph(const FiniteGroup& g);

// Edge {x, y} iff one of x, y is a power of the other and x != y.
Graph power_graph(const FiniteGroup& g);

}  // namespace pg

#endif
