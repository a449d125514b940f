#pragma once

#include <map>
#include <vector>

#include "lhnet/activation.hpp"
#include "lhnet/complex.hpp"
#include "lhnet/geometry.hpp"

namespace lhnet {

struct LocalHomologyScore {
    Cell cell;
    std::vector<int> lh;  // index k -> dim H_k of the pair (X, X \ roi(cell))
};

// Boundary matrices of the quotient chain complex whose k-chains are the
// k-cells of roi; boundary entries leaving roi are dropped. Index k holds
// the map from k-chains to (k-1)-chains; index 0 is the zero map.
// Requires the complement of roi in x to be closed.
std::vector<BinaryMatrix> relative_chain_complex(const Complex& x,
                                                 const std::vector<Cell>& roi);

LocalHomologyScore local_homology(const Complex& x, const Cell& c, int max_k);

// Scores for every cell of x, dimension-major lex order. The parallel
// path distributes cells across threads; results are positionally stored,
// so output is identical to the serial reference.
std::vector<LocalHomologyScore> lh_field(const Complex& x, int max_k,
                                         Exec exec = Exec::parallel);

// Cochain complex of the vector activation sheaf: one basis vector per
// (cell, stalk member) pair, coboundaries assembled from basis projections
// over GF(2).
struct SheafCochainComplex {
    std::vector<int> dims;            // dims[k] = dim C^k
    std::vector<BinaryMatrix> delta;  // delta[k]: C^k -> C^{k+1}
    // Same maps with orientation signs; only this version is a cochain
    // complex over the rationals.
    std::vector<SparseIntMatrix> delta_signed;
};

SheafCochainComplex vector_sheaf_cochain(const Complex& x);

std::map<int, int> sheaf_cohomology_dims(const SheafCochainComplex& cc);

// Same dimension counts over the rationals; cross-check route for the
// characteristic-sensitive cohomology computation.
std::map<int, int> sheaf_cohomology_dims_rational(const SheafCochainComplex& cc);

}  // namespace lhnet
