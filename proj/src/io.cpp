#include "lhnet/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "json.hpp"
#include "lhnet/errors.hpp"

namespace lhnet {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string join_ids(const Cell& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.push_back("");
    return out;
}

}  // namespace

std::string complex_to_json(const Complex& x) {
    ordered_json j;
    j["vertices"] = x.vertices();
    auto facets = x.facets();
    std::sort(facets.begin(), facets.end());
    j["facets"] = facets;
    return j.dump(2) + "\n";
}

Complex complex_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid complex JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("facets"))
        throw parse_error("complex JSON needs \"vertices\" and \"facets\"");
    std::vector<Cell> gen;
    for (const auto& v : j["vertices"]) gen.push_back({v.get<VertexId>()});
    for (const auto& f : j["facets"]) gen.push_back(f.get<Cell>());
    try {
        return Complex::closure_of(gen);
    } catch (const malformed_cell& e) {
        throw parse_error(e.what());
    }
}

NetworkModel nodes_from_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw parse_error("empty node file");
    ++line_no;
    if (line != "id,x,y,radius") throw parse_error("expected header id,x,y,radius", line_no);
    NetworkModel net;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 4) throw parse_error("expected 4 fields", line_no);
        NodeGeom n;
        try {
            n.id = std::stoi(fields[0]);
            n.x = std::stod(fields[1]);
            n.y = std::stod(fields[2]);
            n.radius = std::stod(fields[3]);
        } catch (const std::exception&) {
            throw parse_error("malformed numeric field", line_no);
        }
        net.nodes.push_back(n);
    }
    try {
        net.validate();
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
    return net;
}

std::string nodes_to_csv(const NetworkModel& net) {
    std::ostringstream out;
    out << "id,x,y,radius\n";
    out.precision(17);
    for (const NodeGeom& n : net.nodes)
        out << n.id << ',' << n.x << ',' << n.y << ',' << n.radius << '\n';
    return out.str();
}

std::string lh_to_csv(const std::vector<LocalHomologyScore>& scores, int max_k) {
    std::ostringstream out;
    out << "cell,dim";
    for (int k = 0; k <= max_k; ++k) out << ",lh" << k;
    out << '\n';
    for (const LocalHomologyScore& s : scores) {
        out << '"' << join_ids(s.cell) << "\"," << s.cell.size() - 1;
        for (int k = 0; k <= max_k; ++k)
            out << ',' << (k < static_cast<int>(s.lh.size()) ? s.lh[k] : 0);
        out << '\n';
    }
    return out.str();
}

std::vector<LocalHomologyScore> lh_from_csv(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw parse_error("empty lh file");
    ++line_no;
    const auto header = split(line, ',');
    if (header.size() < 3 || header[0] != "cell" || header[1] != "dim")
        throw parse_error("expected header cell,dim,lh0,...", line_no);
    std::vector<LocalHomologyScore> out;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        // The cell field is quoted and may contain commas.
        if (line.front() != '"') throw parse_error("cell field must be quoted", line_no);
        const auto close = line.find('"', 1);
        if (close == std::string::npos) throw parse_error("unterminated cell field", line_no);
        LocalHomologyScore s;
        for (const std::string& id : split(line.substr(1, close - 1), ',')) {
            try {
                s.cell.push_back(std::stoi(id));
            } catch (const std::exception&) {
                throw parse_error("malformed cell id", line_no);
            }
        }
        const auto rest = split(line.substr(close + 2), ',');
        if (rest.size() != header.size() - 1) throw parse_error("field count mismatch", line_no);
        try {
            for (std::size_t i = 1; i < rest.size(); ++i) s.lh.push_back(std::stoi(rest[i]));
        } catch (const std::exception&) {
            throw parse_error("malformed lh value", line_no);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string sections_to_json(const std::vector<Section>& sections) {
    ordered_json arr = ordered_json::array();
    for (const Section& s : sections) {
        ordered_json j;
        j["transmitters"] = s.transmitters();
        ordered_json assign = ordered_json::object();
        for (const auto& [cell, value] : s.assignment) {
            if (value == kBottom)
                assign[join_ids(cell)] = nullptr;
            else
                assign[join_ids(cell)] = value;
        }
        j["assignment"] = std::move(assign);
        arr.push_back(std::move(j));
    }
    ordered_json top;
    top["sections"] = std::move(arr);
    return top.dump(2) + "\n";
}

std::string trace_to_csv(const std::vector<TraceRecord>& trace) {
    std::ostringstream out;
    out << "packet_id,src,dst,hop_node,action\n";
    for (const TraceRecord& r : trace)
        out << r.packet_id << ',' << r.src << ',' << r.dst << ',' << r.hop_node << ','
            << to_string(r.action) << '\n';
    return out.str();
}

std::string cohomology_report_json(const std::map<int, int>& dims, int node_count) {
    ordered_json h = ordered_json::object();
    bool holds = true;
    for (const auto& [k, dim] : dims) {
        h[std::to_string(k)] = dim;
        if ((k == 0 && dim != node_count) || (k > 0 && dim != 0)) holds = false;
    }
    ordered_json j;
    j["h"] = std::move(h);
    j["node_count"] = node_count;
    j["theorem_holds"] = holds;
    return j.dump(2) + "\n";
}

std::string correlation_report_json(const CorrelationReport& report) {
    ordered_json j;
    j["binning"] = {{"bins", report.spec.bins},
                    {"top_percent", report.spec.top_percent},
                    {"max_forward_count", report.max_count}};
    ordered_json bins = ordered_json::array();
    for (std::size_t b = 0; b < report.bin_distribution.size(); ++b) {
        ordered_json dist = ordered_json::object();
        for (const auto& [value, p] : report.bin_distribution[b])
            dist[std::to_string(value)] = p;
        bins.push_back({{"bin", b},
                        {"population", report.bin_population[b]},
                        {"lh1_distribution", std::move(dist)}});
    }
    j["bins"] = std::move(bins);
    j["top_bin_nodes"] = report.top_bin_nodes;
    j["top_bin_all_high_lh"] = report.top_bin_all_high_lh;
    j["high_lh_outside_top"] = report.high_lh_outside_top;
    return j.dump(2) + "\n";
}

}  // namespace lhnet
