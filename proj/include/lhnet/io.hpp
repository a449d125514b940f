#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lhnet/activation.hpp"
#include "lhnet/complex.hpp"
#include "lhnet/geometry.hpp"
#include "lhnet/homology.hpp"
#include "lhnet/traffic.hpp"

namespace lhnet {

// Complex JSON: {"vertices":[int], "facets":[[int]]}; facets only,
// closure recomputed on load.
std::string complex_to_json(const Complex& x);
Complex complex_from_json(const std::string& text);

// Node CSV: header id,x,y,radius.
NetworkModel nodes_from_csv(std::istream& in);
std::string nodes_to_csv(const NetworkModel& net);

// LH CSV: header cell,dim,lh0,lh1,...; cell is the quoted comma-joined
// vertex list.
std::string lh_to_csv(const std::vector<LocalHomologyScore>& scores, int max_k);
// Vertex-cell scores only, keyed by node id; used to join with traces.
std::vector<LocalHomologyScore> lh_from_csv(std::istream& in);

// Sections JSON: [{"transmitters":[...], "assignment":{"0,1":0,"2":null}}].
std::string sections_to_json(const std::vector<Section>& sections);

std::string trace_to_csv(const std::vector<TraceRecord>& trace);

std::string cohomology_report_json(const std::map<int, int>& dims, int node_count);

std::string correlation_report_json(const CorrelationReport& report);

}  // namespace lhnet
