#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lhnet/geometry.hpp"
#include "lhnet/homology.hpp"

namespace lhnet {

enum class Action { send, forward, recv, drop };

const char* to_string(Action a);
std::optional<Action> action_from_string(const std::string& s);

struct TraceRecord {
    long packet_id = 0;
    VertexId src = 0;
    VertexId dst = 0;
    VertexId hop_node = 0;
    Action action = Action::send;

    bool operator==(const TraceRecord&) const = default;
};

// Deterministic shortest-hop routing simulator on an explicit link graph
// (1-dimensional complex). Ties broken toward the lexicographically
// smallest next hop. Unreachable destinations produce a drop at the source.
std::vector<TraceRecord> simulate_on_graph(const Complex& link_graph, long packets,
                                           uint64_t seed);

std::vector<TraceRecord> simulate(const NetworkModel& net, long packets, uint64_t seed);

// Parse and validate a trace CSV. `known_nodes`, when non-empty, bounds
// the node ids allowed to appear.
std::vector<TraceRecord> ingest_trace(std::istream& in,
                                      const std::set<VertexId>& known_nodes = {});

struct ForwardingStats {
    std::map<VertexId, long> forward_counts;  // every known node, zeros included
    long total_packets = 0;

    double probability(VertexId node) const;
    // Nodes sorted by descending probability, ties by ascending id.
    std::vector<std::pair<VertexId, double>> sorted_probabilities() const;
};

ForwardingStats forwarding_stats(const std::vector<TraceRecord>& trace);

struct BinSpec {
    int bins = 10;            // equal-width bins over forward counts
    double top_percent = 5.0; // top forwarding population size, percent of nodes
};

struct CorrelationReport {
    BinSpec spec;
    long max_count = 0;  // upper end of the binned range
    // bin index -> (LH_1 value -> empirical conditional probability)
    std::vector<std::map<int, double>> bin_distribution;
    std::vector<long> bin_population;
    // Nodes in the top forwarding population (count within the top
    // top_percent of nodes, excluding zero forwarders).
    std::vector<VertexId> top_bin_nodes;
    bool top_bin_all_high_lh = false;  // every top node has LH_1 >= 1
    long high_lh_outside_top = 0;      // LH_1 >= 1 but not a top forwarder
};

// Joins per-node forwarding counts with per-node LH_1 scores (vertex cells
// of `lh`). Throws if a node in `stats` lacks a score.
CorrelationReport correlate(const ForwardingStats& stats,
                            const std::vector<LocalHomologyScore>& lh,
                            const BinSpec& spec = {});

}  // namespace lhnet
