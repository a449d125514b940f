#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace lhnet {

// Sparse matrix over GF(2): per-column sorted row index lists.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_rows_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c);
    bool get(int r, int c) const;
    const std::vector<int>& column(int c) const { return col_rows_[c]; }

    bool is_zero() const;
    BinaryMatrix multiply(const BinaryMatrix& rhs) const;  // this * rhs
    BinaryMatrix transpose() const;

    // Rank by Gaussian elimination on a bit-packed copy.
    int rank() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<int>> col_rows_;
};

// Sparse integer matrix; carrier for signed (oriented) incidence maps.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::array<int, 3>> entries;  // row, col, value
};

// Rank over the rationals, computed by elimination modulo two large
// primes (rank mod p never exceeds the rational rank). Fallback route for
// cross-checking characteristic-sensitive dimension counts.
int rank_rational(const BinaryMatrix& m);
int rank_rational(const SparseIntMatrix& m);

}  // namespace lhnet
