#pragma once

#include <vector>

#include "lhnet/errors.hpp"
#include "lhnet/gf2.hpp"

namespace lhnet {

using VertexId = int;

// A cell is a strictly increasing vertex sequence; dim = size - 1.
using Cell = std::vector<VertexId>;

bool is_canonical(const Cell& c);
bool is_face(const Cell& a, const Cell& b);  // a subset-of b

// Abstract simplicial complex: cells grouped by dimension, each group
// sorted lexicographically. Immutable after construction.
class Complex {
public:
    Complex() = default;

    // Closure of the given generating cells: every subset of every input
    // cell and nothing else. Throws malformed_cell on non-canonical input.
    static Complex closure_of(const std::vector<Cell>& cells);

    bool contains(const Cell& c) const;
    bool empty() const { return by_dim_.empty(); }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t cell_count() const;

    // Cells of dimension k, lex-sorted; empty if k out of range.
    const std::vector<Cell>& cells(int k) const;
    // All cells, dimension-major then lex.
    std::vector<Cell> all_cells() const;
    std::vector<VertexId> vertices() const;
    std::size_t vertex_count() const { return cells(0).size(); }

    // All cells of X having at least one face in Y. Throws not_in_complex
    // if Y is not a subset of X.
    std::vector<Cell> star(const std::vector<Cell>& y) const;
    // Cells with no strict coface.
    std::vector<Cell> facets() const;

    // Boundary map from k-chains to (k-1)-chains over GF(2). Rows are
    // (k-1)-cells, columns k-cells, both in lex order. Out-of-range k
    // yields a correctly-sized empty matrix.
    BinaryMatrix boundary_matrix(int k) const;

    bool operator==(const Complex& other) const { return by_dim_ == other.by_dim_; }

private:
    std::vector<std::vector<Cell>> by_dim_;
};

// Closure of a cell set within any ambient complex (subsets of members).
std::vector<Cell> closure_cells(const std::vector<Cell>& cells);

}  // namespace lhnet
