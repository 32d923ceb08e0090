#include "beamvar/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beamvar {

namespace {

void finish(Grid& g) {
    const int n = static_cast<int>(g.nodes.size()) - 1;
    g.midpoints.resize(n);
    g.h_max = 0.0;
    for (int i = 0; i < n; ++i) {
        const double h = g.nodes[i + 1] - g.nodes[i];
        if (!(h > 0.0))
            throw std::invalid_argument("grid nodes not strictly increasing");
        g.midpoints[i] = 0.5 * (g.nodes[i] + g.nodes[i + 1]);
        g.h_max = std::max(g.h_max, h);
    }
}

}  // namespace

Grid Grid::uniform(int n_cells) {
    if (n_cells < 1) throw std::invalid_argument("grid needs at least 1 cell");
    Grid g;
    g.nodes.resize(n_cells + 1);
    for (int i = 0; i <= n_cells; ++i)
        g.nodes[i] = static_cast<double>(i) / n_cells;
    g.nodes.front() = 0.0;
    g.nodes.back() = 1.0;
    finish(g);
    return g;
}

Grid Grid::uniform_with_knot(int n_cells, double xbar) {
    if (!(xbar > 0.0 && xbar < 1.0))
        throw std::invalid_argument("knot must lie strictly inside (0,1)");
    Grid g = uniform(n_cells);
    int j = static_cast<int>(std::lround(xbar * n_cells));
    j = std::clamp(j, 1, n_cells - 1);
    g.nodes[j] = xbar;
    finish(g);
    return g;
}

Grid Grid::from_nodes(std::vector<double> nodes) {
    if (nodes.size() < 2)
        throw std::invalid_argument("grid needs at least 2 nodes");
    if (nodes.front() != 0.0 || nodes.back() != 1.0)
        throw std::invalid_argument("grid must span [0,1]");
    Grid g;
    g.nodes = std::move(nodes);
    finish(g);
    return g;
}

int Grid::node_index_of(double x) const {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
    if (it != nodes.end() && *it == x)
        return static_cast<int>(it - nodes.begin());
    return -1;
}

}  // namespace beamvar
