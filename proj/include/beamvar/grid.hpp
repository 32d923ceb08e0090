#pragma once

#include <vector>

namespace beamvar {

// Partition of [0,1] into cells. nodes[0]=0, nodes[n]=1, strictly increasing;
// one midpoint per cell.
struct Grid {
    std::vector<double> nodes;
    std::vector<double> midpoints;
    double h_max = 0.0;

    static Grid uniform(int n_cells);
    // Same resolution as uniform(n_cells), but with xbar present exactly once
    // among the nodes: the nearest interior node is moved onto xbar, so the
    // cell count is preserved and no degenerate cell is created.
    static Grid uniform_with_knot(int n_cells, double xbar);
    static Grid from_nodes(std::vector<double> nodes);

    int cells() const { return static_cast<int>(midpoints.size()); }
    int node_count() const { return static_cast<int>(nodes.size()); }
    double width(int cell) const { return nodes[cell + 1] - nodes[cell]; }
    // Index of the node equal to x (exact match), or -1.
    int node_index_of(double x) const;
};

}  // namespace beamvar
