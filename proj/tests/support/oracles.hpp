#pragma once

// Test-only reference implementations. Everything here recomputes results
// by exhaustive enumeration or sampling, independent of the elimination
// and Helly routes used by the library.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "lhnet/activation.hpp"
#include "lhnet/complex.hpp"
#include "lhnet/geometry.hpp"

namespace lhnet::testing {

// dim H_k of the quotient complex on `roi` inside x, by exhaustive span:
// count cycles among all 2^{n_k} chains and distinct boundaries among all
// 2^{n_{k+1}} chains. Chain groups must stay below 2^22.
inline int oracle_relative_homology(const Complex& x, const std::vector<Cell>& roi, int k) {
    std::vector<std::vector<Cell>> basis;
    for (const Cell& c : roi) {
        const std::size_t d = c.size() - 1;
        if (basis.size() <= d) basis.resize(d + 1);
        basis[d].push_back(c);
    }
    for (auto& group : basis) std::sort(group.begin(), group.end());
    auto dim_of = [&](int d) {
        return d >= 0 && d < static_cast<int>(basis.size())
                   ? static_cast<int>(basis[d].size())
                   : 0;
    };
    // Column masks of the projected boundary map from dimension d.
    auto columns = [&](int d) {
        std::vector<uint64_t> cols(dim_of(d), 0);
        if (d < 1 || dim_of(d - 1) == 0) return cols;
        for (int c = 0; c < dim_of(d); ++c) {
            const Cell& cell = basis[d][c];
            for (std::size_t drop = 0; drop < cell.size(); ++drop) {
                Cell face;
                for (std::size_t i = 0; i < cell.size(); ++i)
                    if (i != drop) face.push_back(cell[i]);
                auto it = std::lower_bound(basis[d - 1].begin(), basis[d - 1].end(), face);
                if (it != basis[d - 1].end() && *it == face)
                    cols[c] ^= uint64_t{1} << (it - basis[d - 1].begin());
            }
        }
        return cols;
    };
    auto log2_exact = [](uint64_t v) {
        int n = 0;
        while (v > 1) { v >>= 1; ++n; }
        return n;
    };

    const int nk = dim_of(k);
    if (nk == 0) return 0;
    if (nk >= 22 || dim_of(k + 1) >= 22) throw std::runtime_error("oracle chain group too big");

    // Cycles: Gray-code walk over all k-chains.
    const auto dk = columns(k);
    uint64_t acc = 0, cycles = 1;  // empty chain
    for (uint64_t g = 1; g < (uint64_t{1} << nk); ++g) {
        acc ^= dk[std::countr_zero(g)];
        if (acc == 0) ++cycles;
    }
    // Boundaries: distinct images of all (k+1)-chains.
    const auto dk1 = columns(k + 1);
    const int nk1 = dim_of(k + 1);
    std::vector<uint64_t> images{0};
    acc = 0;
    for (uint64_t g = 1; g < (uint64_t{1} << nk1); ++g) {
        acc ^= dk1[std::countr_zero(g)];
        images.push_back(acc);
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    return log2_exact(cycles) - log2_exact(images.size());
}

inline int oracle_betti(const Complex& x, int k) {
    return oracle_relative_homology(x, x.all_cells(), k);
}

// All global sections by backtracking over raw cell assignments; compares
// against the transmitter-set enumeration route.
inline std::vector<Section> brute_force_global_sections(const Complex& x) {
    const auto cells = x.all_cells();
    std::vector<Stalk> stalks;
    for (const Cell& c : cells) stalks.push_back(stalk(x, c));

    std::vector<Section> out;
    Section current;
    auto consistent = [&](std::size_t idx, VertexId value) {
        for (std::size_t j = 0; j < idx; ++j) {
            const Cell& other = cells[j];
            const VertexId ov = current.assignment.at(other);
            if (is_face(other, cells[idx])) {
                if (restrict_value(x, other, cells[idx], ov) != value) return false;
            } else if (is_face(cells[idx], other)) {
                if (restrict_value(x, cells[idx], other, value) != ov) return false;
            }
        }
        return true;
    };
    auto walk = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back(current);
            return;
        }
        std::vector<VertexId> options{kBottom};
        options.insert(options.end(), stalks[idx].members.begin(), stalks[idx].members.end());
        for (VertexId v : options) {
            if (!consistent(idx, v)) continue;
            current.assignment[cells[idx]] = v;
            self(self, idx + 1);
            current.assignment.erase(cells[idx]);
        }
    };
    walk(walk, 0);
    return out;
}

// Face-adjacency connectivity of a cell set.
inline bool cells_connected(const std::vector<Cell>& cells) {
    if (cells.empty()) return true;
    const int n = static_cast<int>(cells.size());
    std::vector<int> comp(n, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (comp[v] >= 0) continue;
            if (is_face(cells[u], cells[v]) || is_face(cells[v], cells[u])) {
                comp[v] = 0;
                stack.push_back(v);
            }
        }
    }
    return std::none_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
}

// Random small complex: a handful of facets over at most `max_vertices`.
inline Complex random_complex(uint64_t seed, int max_vertices = 8) {
    std::mt19937_64 rng(seed);
    const int n = 1 + static_cast<int>(rng() % max_vertices);
    const int facet_count = 1 + static_cast<int>(rng() % 3);
    std::vector<Cell> gen;
    for (int i = 0; i < n; ++i) gen.push_back({i});
    for (int f = 0; f < facet_count; ++f) {
        const int size = 1 + static_cast<int>(rng() % std::min(n, 4));
        std::set<VertexId> verts;
        while (static_cast<int>(verts.size()) < size)
            verts.insert(static_cast<VertexId>(rng() % n));
        gen.push_back({verts.begin(), verts.end()});
    }
    return Complex::closure_of(gen);
}

// Clique complex of an explicit adjacency matrix, truncated at max_dim.
inline Complex flag_complex(const std::vector<std::vector<char>>& adj, int max_dim) {
    const int n = static_cast<int>(adj.size());
    std::vector<Cell> gen;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        frontier.push_back({i});
        gen.push_back({i});
    }
    for (int d = 0; d < max_dim; ++d) {
        std::vector<std::vector<int>> next;
        for (const auto& s : frontier) {
            for (int v = s.back() + 1; v < n; ++v) {
                if (!std::all_of(s.begin(), s.end(), [&](int u) { return adj[u][v]; }))
                    continue;
                auto ext = s;
                ext.push_back(v);
                gen.push_back({ext.begin(), ext.end()});
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    return Complex::closure_of(gen);
}

// Two cliques joined by one or two bridge nodes adjacent to every cluster
// node; bridges are not adjacent to each other. Returns the adjacency
// matrix; node ids are 0..a-1 (cluster A), a..a+b-1 (cluster B), bridges
// last.
inline std::vector<std::vector<char>> dumbbell_adjacency(int a, int b, int bridges) {
    const int n = a + b + bridges;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    auto connect = [&](int i, int j) { adj[i][j] = adj[j][i] = 1; };
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) connect(i, j);
    for (int i = a; i < a + b; ++i)
        for (int j = i + 1; j < a + b; ++j) connect(i, j);
    for (int bridge = a + b; bridge < n; ++bridge)
        for (int i = 0; i < a + b; ++i) connect(bridge, i);
    return adj;
}

// Random geometric network whose link complex keeps clique sizes modest.
inline NetworkModel random_sparse_network(uint64_t seed, int max_nodes, double area = 100.0,
                                          double radius = 30.0) {
    std::mt19937_64 rng(seed);
    const int n = 1 + static_cast<int>(rng() % max_nodes);
    return random_network(n, area, radius, rng());
}

// Monte Carlo witness masks for a disk configuration: the set of distinct
// "inside which disks, with margin above threshold" bitmasks seen over
// `samples` uniform draws from the bounding box.
inline std::set<uint32_t> witness_masks(const NetworkModel& net, double threshold,
                                        long samples, uint64_t seed) {
    double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
    for (const NodeGeom& d : net.nodes) {
        lo_x = std::min(lo_x, d.x - d.radius);
        lo_y = std::min(lo_y, d.y - d.radius);
        hi_x = std::max(hi_x, d.x + d.radius);
        hi_y = std::max(hi_y, d.y + d.radius);
    }
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    std::set<uint32_t> masks;
    const int n = static_cast<int>(net.nodes.size());
    for (long s = 0; s < samples; ++s) {
        const double px = lo_x + unit() * (hi_x - lo_x);
        const double py = lo_y + unit() * (hi_y - lo_y);
        uint32_t mask = 0;
        for (int i = 0; i < n; ++i) {
            const NodeGeom& d = net.nodes[i];
            const double eff = d.radius - threshold;
            if (eff <= 0.0) continue;
            const double dx = px - d.x, dy = py - d.y;
            if (dx * dx + dy * dy < eff * eff) mask |= uint32_t{1} << i;
        }
        masks.insert(mask);
    }
    return masks;
}

inline bool has_witness(const std::set<uint32_t>& masks, uint32_t subset) {
    return std::any_of(masks.begin(), masks.end(),
                       [&](uint32_t m) { return (m & subset) == subset; });
}

}  // namespace lhnet::testing
