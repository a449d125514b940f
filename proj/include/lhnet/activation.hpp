#pragma once

#include <map>
#include <vector>

#include "lhnet/complex.hpp"

namespace lhnet {

// Sentinel for the bottom stalk symbol (no decodable transmitter).
// Distinct from every VertexId, which are non-negative.
constexpr VertexId kBottom = -1;

// Stalk of the activation sheaf at a cell: nodes sharing a coface with the
// cell, plus bottom (always present, kept implicit).
struct Stalk {
    Cell cell;
    std::vector<VertexId> members;  // sorted, bottom excluded

    bool has(VertexId n) const;
};

// Partial or total assignment cell -> node-or-bottom.
struct Section {
    std::map<Cell, VertexId> assignment;

    // Nodes n with assignment at the vertex {n} equal to n.
    std::vector<VertexId> transmitters() const;
};

Stalk stalk(const Complex& x, const Cell& c);

// Restriction along the face pair c subset-of d: identity if the value is
// in the stalk of d, bottom otherwise.
VertexId restrict_value(const Complex& x, const Cell& c, const Cell& d, VertexId n);

// True iff s assigns every cell of x a stalk value and every face pair
// satisfies the restriction equation. Throws incomplete_section if a cell
// of x has no assignment.
bool is_global_section(const Complex& x, const Section& s);

// All global sections, one per admissible transmitter set, deterministic
// order (transmitter sets ordered by size then lexicographically).
// Refuses complexes with more than `cap` vertices.
std::vector<Section> enumerate_global_sections(const Complex& x, int cap = 20);

// Cells assigned to node n in any global section where n transmits:
// closure(star({n})).
std::vector<Cell> active_region(const Complex& x, VertexId n);

// Union over f in F of star(closure(f)).
std::vector<Cell> region_of_influence(const Complex& x, const std::vector<Cell>& f);

// X minus roi, as a complex; throws invariant_violation if the complement
// is not closed.
Complex complement_complex(const Complex& x, const std::vector<Cell>& roi);

}  // namespace lhnet
