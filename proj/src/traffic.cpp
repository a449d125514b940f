#include "lhnet/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <queue>
#include <random>
#include <sstream>

#include "lhnet/errors.hpp"

namespace lhnet {
namespace {

// Rejection-sampled bounded draw; avoids std::uniform_int_distribution so
// traces are identical across standard library implementations.
uint64_t bounded(std::mt19937_64& rng, uint64_t n) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

}  // namespace

const char* to_string(Action a) {
    switch (a) {
        case Action::send: return "send";
        case Action::forward: return "forward";
        case Action::recv: return "recv";
        case Action::drop: return "drop";
    }
    return "?";
}

std::optional<Action> action_from_string(const std::string& s) {
    if (s == "send") return Action::send;
    if (s == "forward") return Action::forward;
    if (s == "recv") return Action::recv;
    if (s == "drop") return Action::drop;
    return std::nullopt;
}

std::vector<TraceRecord> simulate_on_graph(const Complex& link_graph, long packets,
                                           uint64_t seed) {
    const auto verts = link_graph.vertices();
    const int n = static_cast<int>(verts.size());
    if (n < 2 && packets > 0)
        throw std::invalid_argument("simulation needs at least two nodes");

    // Adjacency in index space; neighbor lists sorted ascending so the
    // lexicographic tie-break falls out of iteration order.
    std::vector<std::vector<int>> adj(n);
    for (const Cell& e : link_graph.cells(1)) {
        const int a = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), e[0]) -
                                       verts.begin());
        const int b = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), e[1]) -
                                       verts.begin());
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    // Hop distances toward each destination, filled lazily.
    std::vector<std::vector<int>> dist_to(n);
    auto distances = [&](int dst) -> const std::vector<int>& {
        auto& d = dist_to[dst];
        if (!d.empty()) return d;
        d.assign(n, -1);
        d[dst] = 0;
        std::queue<int> q;
        q.push(dst);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (d[v] < 0) {
                    d[v] = d[u] + 1;
                    q.push(v);
                }
        }
        return d;
    };

    std::mt19937_64 rng(seed);
    std::vector<TraceRecord> trace;
    for (long pkt = 0; pkt < packets; ++pkt) {
        int src = static_cast<int>(bounded(rng, n));
        int dst = static_cast<int>(bounded(rng, n));
        while (dst == src) dst = static_cast<int>(bounded(rng, n));

        const VertexId src_id = verts[src], dst_id = verts[dst];
        const auto& d = distances(dst);
        trace.push_back({pkt, src_id, dst_id, src_id, Action::send});
        if (d[src] < 0) {
            trace.push_back({pkt, src_id, dst_id, src_id, Action::drop});
            continue;
        }
        int at = src;
        while (at != dst) {
            int next = -1;
            for (int v : adj[at])
                if (d[v] == d[at] - 1) { next = v; break; }
            at = next;
            trace.push_back({pkt, src_id, dst_id, verts[at],
                             at == dst ? Action::recv : Action::forward});
        }
    }
    return trace;
}

std::vector<TraceRecord> simulate(const NetworkModel& net, long packets, uint64_t seed) {
    return simulate_on_graph(link_graph(net), packets, seed);
}

std::vector<TraceRecord> ingest_trace(std::istream& in,
                                      const std::set<VertexId>& known_nodes) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw parse_error("empty trace file");
    ++line_no;
    if (line != "packet_id,src,dst,hop_node,action")
        throw parse_error("expected header packet_id,src,dst,hop_node,action", line_no);

    std::vector<TraceRecord> out;
    std::set<long> seen_send;
    auto check_node = [&](VertexId v, int ln) {
        if (v < 0) throw parse_error("negative node id", ln);
        if (!known_nodes.empty() && !known_nodes.count(v))
            throw parse_error("unknown node id " + std::to_string(v), ln);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 5) throw parse_error("expected 5 fields", line_no);
        TraceRecord r;
        try {
            r.packet_id = std::stol(fields[0]);
            r.src = std::stoi(fields[1]);
            r.dst = std::stoi(fields[2]);
            r.hop_node = std::stoi(fields[3]);
        } catch (const std::exception&) {
            throw parse_error("malformed integer field", line_no);
        }
        const auto action = action_from_string(fields[4]);
        if (!action) throw parse_error("unknown action \"" + fields[4] + "\"", line_no);
        r.action = *action;
        check_node(r.src, line_no);
        check_node(r.dst, line_no);
        check_node(r.hop_node, line_no);
        if (r.action == Action::send && !seen_send.insert(r.packet_id).second)
            throw parse_error("duplicate send for packet " + std::to_string(r.packet_id),
                              line_no);
        out.push_back(r);
    }
    return out;
}

ForwardingStats forwarding_stats(const std::vector<TraceRecord>& trace) {
    ForwardingStats stats;
    std::set<long> packets;
    for (const TraceRecord& r : trace) {
        packets.insert(r.packet_id);
        stats.forward_counts.try_emplace(r.src, 0);
        stats.forward_counts.try_emplace(r.dst, 0);
        stats.forward_counts.try_emplace(r.hop_node, 0);
        if (r.action == Action::forward) ++stats.forward_counts[r.hop_node];
    }
    stats.total_packets = static_cast<long>(packets.size());
    return stats;
}

double ForwardingStats::probability(VertexId node) const {
    if (total_packets == 0) return 0.0;
    auto it = forward_counts.find(node);
    return it == forward_counts.end()
               ? 0.0
               : static_cast<double>(it->second) / static_cast<double>(total_packets);
}

std::vector<std::pair<VertexId, double>> ForwardingStats::sorted_probabilities() const {
    std::vector<std::pair<VertexId, double>> out;
    for (const auto& [node, count] : forward_counts) out.emplace_back(node, probability(node));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return out;
}

CorrelationReport correlate(const ForwardingStats& stats,
                            const std::vector<LocalHomologyScore>& lh,
                            const BinSpec& spec) {
    if (spec.bins <= 0) throw std::invalid_argument("bin count must be positive");

    std::map<VertexId, int> lh1;
    for (const LocalHomologyScore& s : lh)
        if (s.cell.size() == 1) lh1[s.cell[0]] = s.lh.size() > 1 ? s.lh[1] : 0;
    for (const auto& [node, count] : stats.forward_counts)
        if (!lh1.count(node))
            throw std::invalid_argument("node " + std::to_string(node) +
                                        " has no local homology score");

    CorrelationReport report;
    report.spec = spec;
    for (const auto& [node, count] : stats.forward_counts)
        report.max_count = std::max(report.max_count, count);

    // Equal-width bins over [0, max_count].
    report.bin_distribution.resize(spec.bins);
    report.bin_population.assign(spec.bins, 0);
    std::vector<std::map<int, long>> tallies(spec.bins);
    auto bin_of = [&](long count) {
        if (report.max_count == 0) return 0;
        int b = static_cast<int>((count * spec.bins) / (report.max_count + 1));
        return std::min(b, spec.bins - 1);
    };
    for (const auto& [node, count] : stats.forward_counts) {
        const int b = bin_of(count);
        ++report.bin_population[b];
        ++tallies[b][lh1.at(node)];
    }
    for (int b = 0; b < spec.bins; ++b)
        for (const auto& [value, tally] : tallies[b])
            report.bin_distribution[b][value] =
                static_cast<double>(tally) / static_cast<double>(report.bin_population[b]);

    // Top forwarding population: the heaviest top_percent of nodes (at
    // least one), zero forwarders never qualify.
    const auto sorted = stats.sorted_probabilities();
    const long node_count = static_cast<long>(sorted.size());
    const long top_n =
        std::max<long>(1, static_cast<long>(std::floor(node_count * spec.top_percent / 100.0)));
    long threshold = -1;
    if (top_n <= node_count && sorted[top_n - 1].second > 0.0)
        threshold = stats.forward_counts.at(sorted[top_n - 1].first);
    report.top_bin_all_high_lh = true;
    for (const auto& [node, count] : stats.forward_counts) {
        const bool top = threshold >= 0 && count >= threshold && count > 0;
        if (top) {
            report.top_bin_nodes.push_back(node);
            if (lh1.at(node) < 1) report.top_bin_all_high_lh = false;
        } else if (lh1.at(node) >= 1) {
            ++report.high_lh_outside_top;
        }
    }
    return report;
}

}  // namespace lhnet
