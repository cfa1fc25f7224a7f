#include "pg/power_graph.hpp"

namespace pg {

DiGraph directed_power_graph(const FiniteGroup& g) {
    const int n = g.order();
    DiGraph d(n);
    for (int x = 0; x < n; ++x) {
        // Walk x^2, x^3, ... until the powers wrap around to x itself.
        int cur = g.mul(x, x);
        while (cur != x) {
            d.add_arc(x, cur);
            cur = g.mul(cur, x);
        }
    }
    return d;
}

Graph power_graph(const FiniteGroup& g) {
    const int n = g.order();
    Graph pg(n);
    for (int x = 0; x < n; ++x) {
        int cur = g.mul(x, x);
        while (cur != x) {
            pg.add_edge(x, cur);
            cur = g.mul(cur, x);
        }
    }
    return pg;
}

}  // namespace pg
