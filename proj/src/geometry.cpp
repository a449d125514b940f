#include "lhnet/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "lhnet/errors.hpp"

namespace lhnet {
namespace {

double dist(const NodeGeom& a, const NodeGeom& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Decide the sign of a geometric margin; a margin within eps of zero means
// the input configuration is too close to a boundary case to trust.
bool decide(double margin, double eps) {
    if (std::abs(margin) < eps)
        throw degenerate_geometry("geometric predicate margin below epsilon");
    return margin > 0.0;
}

// Tri-state sub-predicate: +1 true, -1 false, 0 too close to call.
int soft(double margin, double eps) {
    if (std::abs(margin) < eps) return 0;
    return margin > 0.0 ? 1 : -1;
}

// Open disks around a and b share a point.
bool disks_overlap(const NodeGeom& a, const NodeGeom& b, double eps) {
    return decide(a.radius + b.radius - dist(a, b), eps);
}

// Intersection points of the boundary circles of a and b; valid only when
// the circles properly cross.
struct LensPoints {
    double x1, y1, x2, y2;
};

LensPoints circle_crossings(const NodeGeom& a, const NodeGeom& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double d = std::hypot(dx, dy);
    const double l = (a.radius * a.radius - b.radius * b.radius + d * d) / (2.0 * d);
    const double h2 = a.radius * a.radius - l * l;
    const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    const double mx = a.x + l * dx / d, my = a.y + l * dy / d;
    return {mx + h * dy / d, my - h * dx / d, mx - h * dy / d, my + h * dx / d};
}

// Open disks around a, b, c share a point, assuming all three pairs
// already overlap. Radical-axis construction; no sampling. A sub-predicate
// within eps of its boundary only matters if no other route settles the
// answer; an undecided final answer raises degenerate_geometry.
bool triple_overlap(const NodeGeom& a, const NodeGeom& b, const NodeGeom& c, double eps) {
    const NodeGeom* n[3] = {&a, &b, &c};
    bool uncertain = false;
    auto in_disk = [&](double px, double py, const NodeGeom& d) {
        const int s = soft(d.radius - std::hypot(px - d.x, py - d.y), eps);
        if (s == 0) uncertain = true;
        return s > 0;
    };

    // Containment collapses the triple to a pair test, already satisfied.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            const int s = soft(n[j]->radius - n[i]->radius - dist(*n[i], *n[j]), eps);
            if (s > 0) return true;
            if (s == 0) uncertain = true;
        }

    // A center lying in both other disks is a witness.
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        if (in_disk(n[i]->x, n[i]->y, *n[j]) && in_disk(n[i]->x, n[i]->y, *n[k])) return true;
    }

    // Otherwise a common point, if any, puts a corner of the intersection
    // region at a lens point of two properly-crossing circles inside the
    // third disk.
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        const double d = dist(*n[i], *n[j]);
        const int crosses =
            std::min(soft(d - std::abs(n[i]->radius - n[j]->radius), eps),
                     soft(n[i]->radius + n[j]->radius - d, eps));
        if (crosses == 0) uncertain = true;
        if (crosses <= 0) continue;
        const LensPoints lp = circle_crossings(*n[i], *n[j]);
        if (in_disk(lp.x1, lp.y1, *n[k])) return true;
        if (in_disk(lp.x2, lp.y2, *n[k])) return true;
    }
    if (uncertain)
        throw degenerate_geometry("triple-disk predicate margin below epsilon");
    return false;
}

// Maximal cliques of an adjacency matrix, pivoting Bron-Kerbosch.
void bron_kerbosch(const std::vector<std::vector<char>>& adj, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto& cand : {p, x}) {
        for (int u : cand) {
            std::size_t cnt = 0;
            for (int v : p) cnt += adj[u][v];
            if (pivot < 0 || cnt > best) { pivot = u; best = cnt; }
        }
    }
    std::vector<int> ext;
    for (int v : p)
        if (!adj[pivot][v]) ext.push_back(v);
    for (int v : ext) {
        std::vector<int> np, nx;
        for (int u : p)
            if (adj[v][u]) np.push_back(u);
        for (int u : x)
            if (adj[v][u]) nx.push_back(u);
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

std::vector<NodeGeom> sorted_by_id(const NetworkModel& net) {
    net.validate();
    std::vector<NodeGeom> nodes = net.nodes;
    std::sort(nodes.begin(), nodes.end(),
              [](const NodeGeom& a, const NodeGeom& b) { return a.id < b.id; });
    return nodes;
}

std::vector<std::vector<char>> link_adjacency(const std::vector<NodeGeom>& nodes) {
    const int n = static_cast<int>(nodes.size());
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = dist(nodes[i], nodes[j]);
            if (d < nodes[i].radius && d < nodes[j].radius) adj[i][j] = adj[j][i] = 1;
        }
    }
    return adj;
}

}  // namespace

void NetworkModel::validate() const {
    if (nodes.empty()) throw std::invalid_argument("network model has no nodes");
    std::vector<VertexId> ids;
    for (const NodeGeom& n : nodes) {
        if (n.id < 0) throw std::invalid_argument("negative node id");
        if (!(n.radius > 0.0)) throw std::invalid_argument("node radius must be positive");
        if (!std::isfinite(n.x) || !std::isfinite(n.y) || !std::isfinite(n.radius))
            throw std::invalid_argument("non-finite node geometry");
        ids.push_back(n.id);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("duplicate node id");
}

const NodeGeom& NetworkModel::node(VertexId id) const {
    for (const NodeGeom& n : nodes)
        if (n.id == id) return n;
    throw std::invalid_argument("unknown node id " + std::to_string(id));
}

Complex link_graph(const NetworkModel& net) {
    const auto nodes = sorted_by_id(net);
    const auto adj = link_adjacency(nodes);
    std::vector<Cell> gen;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        gen.push_back({nodes[i].id});
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (adj[i][j]) gen.push_back({nodes[i].id, nodes[j].id});
    }
    return Complex::closure_of(gen);
}

Complex link_complex(const NetworkModel& net) {
    const auto nodes = sorted_by_id(net);
    const auto adj = link_adjacency(nodes);
    const int n = static_cast<int>(nodes.size());
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<int> r;
    std::vector<std::vector<int>> cliques;
    bron_kerbosch(adj, r, std::move(p), {}, cliques);

    std::vector<Cell> gen;
    for (auto& q : cliques) {
        Cell c;
        for (int i : q) c.push_back(nodes[i].id);
        std::sort(c.begin(), c.end());
        gen.push_back(std::move(c));
    }
    return Complex::closure_of(gen);
}

Complex interference_complex(const NetworkModel& net, double eps, Exec exec) {
    const auto nodes = sorted_by_id(net);
    const int n = static_cast<int>(nodes.size());

    std::vector<std::vector<char>> pair_ok(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pair_ok[i][j] = pair_ok[j][i] = disks_overlap(nodes[i], nodes[j], eps);

    // Triple witness table, flat index over i<j<k.
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (pair_ok[i][j] && pair_ok[i][k] && pair_ok[j][k])
                    triples.push_back({i, j, k});
    std::vector<char> triple_result(triples.size(), 0);
    bool degenerate = false;
    const long count = static_cast<long>(triples.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long t = 0; t < count; ++t) {
            try {
                triple_result[t] = triple_overlap(nodes[triples[t][0]], nodes[triples[t][1]],
                                                  nodes[triples[t][2]], eps);
            } catch (const degenerate_geometry&) {
#pragma omp atomic write
                degenerate = true;
            }
        }
    } else {
        for (long t = 0; t < count; ++t)
            triple_result[t] = triple_overlap(nodes[triples[t][0]], nodes[triples[t][1]],
                                              nodes[triples[t][2]], eps);
    }
    if (degenerate)
        throw degenerate_geometry("geometric predicate margin below epsilon");

    auto triple_ok = [&](int i, int j, int k) {
        std::array<int, 3> key{i, j, k};
        std::sort(key.begin(), key.end());
        auto it = std::lower_bound(triples.begin(), triples.end(), key);
        return it != triples.end() && *it == key && triple_result[it - triples.begin()];
    };

    // Helly in the plane: a node set is a cell iff all its pairs and
    // triples are. Grow cells one dimension at a time.
    std::vector<std::vector<int>> frontier;
    std::vector<Cell> generated;
    for (int i = 0; i < n; ++i) {
        frontier.push_back({i});
        generated.push_back({nodes[i].id});
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& s : frontier) {
            for (int v = s.back() + 1; v < n; ++v) {
                bool ok = true;
                for (std::size_t a = 0; a < s.size() && ok; ++a) {
                    if (!pair_ok[s[a]][v]) ok = false;
                    for (std::size_t b = a + 1; b < s.size() && ok; ++b)
                        if (!triple_ok(s[a], s[b], v)) ok = false;
                }
                if (!ok) continue;
                auto ext = s;
                ext.push_back(v);
                Cell c;
                for (int i : ext) c.push_back(nodes[i].id);
                std::sort(c.begin(), c.end());
                generated.push_back(std::move(c));
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    return Complex::closure_of(generated);
}

std::vector<Cell> maximal_interference_sets(const NetworkModel& net, double eps) {
    return interference_complex(net, eps).facets();
}

NetworkModel random_network(int count, double area, double radius, uint64_t seed) {
    if (count <= 0) throw std::invalid_argument("node count must be positive");
    if (!(area > 0.0) || !(radius > 0.0))
        throw std::invalid_argument("area and radius must be positive");
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    NetworkModel net;
    for (int i = 0; i < count; ++i)
        net.nodes.push_back({i, unit() * area, unit() * area, radius});
    return net;
}

}  // namespace lhnet
