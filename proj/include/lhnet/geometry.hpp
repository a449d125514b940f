#pragma once

#include <cstdint>
#include <vector>

#include "lhnet/complex.hpp"

namespace lhnet {

struct NodeGeom {
    VertexId id = 0;
    double x = 0.0;
    double y = 0.0;
    double radius = 0.0;  // coverage radius where signal exceeds threshold
};

struct NetworkModel {
    std::vector<NodeGeom> nodes;

    void validate() const;  // ids unique, radii > 0, positions finite
    const NodeGeom& node(VertexId id) const;
};

enum class Exec { serial, parallel };

// Mutual-decodability graph: edge {i,j} iff each node sits inside the
// other's coverage disk. Returned as a 1-dimensional complex.
Complex link_graph(const NetworkModel& net);

// Clique complex of the link graph (maximal cliques via pivoting
// Bron-Kerbosch, then closure).
Complex link_complex(const NetworkModel& net);

// Cech-style complex: a cell is a node set whose open coverage disks share
// a common point. Decided exactly through planar Helly (every set is a
// cell iff all its pairs and triples are) with closed-form disk predicates.
// Decision margins below eps raise degenerate_geometry.
Complex interference_complex(const NetworkModel& net, double eps = 1e-9,
                             Exec exec = Exec::parallel);

std::vector<Cell> maximal_interference_sets(const NetworkModel& net, double eps = 1e-9);

// Uniform random placement in [0, area]^2, all nodes sharing one radius.
NetworkModel random_network(int count, double area, double radius, uint64_t seed);

}  // namespace lhnet
