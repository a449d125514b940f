#include "lhnet/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace lhnet {

void BinaryMatrix::set(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("BinaryMatrix::set index out of range");
    auto& col = col_rows_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r);
    if (it == col.end() || *it != r) col.insert(it, r);
}

bool BinaryMatrix::get(int r, int c) const {
    const auto& col = col_rows_[c];
    return std::binary_search(col.begin(), col.end(), r);
}

bool BinaryMatrix::is_zero() const {
    for (const auto& col : col_rows_)
        if (!col.empty()) return false;
    return true;
}

BinaryMatrix BinaryMatrix::multiply(const BinaryMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("BinaryMatrix::multiply shape mismatch");
    BinaryMatrix out(rows_, rhs.cols_);
    std::vector<uint8_t> acc(rows_);
    for (int c = 0; c < rhs.cols_; ++c) {
        std::fill(acc.begin(), acc.end(), 0);
        for (int k : rhs.col_rows_[c])
            for (int r : col_rows_[k]) acc[r] ^= 1;
        for (int r = 0; r < rows_; ++r)
            if (acc[r]) out.set(r, c);
    }
    return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix out(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
        for (int r : col_rows_[c]) out.set(c, r);
    return out;
}

int BinaryMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    const int words = (cols_ + 63) / 64;
    std::vector<std::vector<uint64_t>> row_bits(rows_, std::vector<uint64_t>(words, 0));
    for (int c = 0; c < cols_; ++c)
        for (int r : col_rows_[c]) row_bits[r][c / 64] |= uint64_t{1} << (c % 64);

    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        const int w = c / 64;
        const uint64_t bit = uint64_t{1} << (c % 64);
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (row_bits[r][w] & bit) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(row_bits[rank], row_bits[pivot]);
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || !(row_bits[r][w] & bit)) continue;
            for (int k = 0; k < words; ++k) row_bits[r][k] ^= row_bits[rank][k];
        }
        ++rank;
    }
    return rank;
}

namespace {

// Rank of a dense residue matrix modulo a large odd prime.
int rank_mod_prime(std::vector<std::vector<uint64_t>> a, int rows, int cols, uint64_t p) {
    auto mulmod = [p](uint64_t x, uint64_t y) {
        return static_cast<uint64_t>(static_cast<__uint128_t>(x) * y % p);
    };
    auto powmod = [&](uint64_t base, uint64_t exp) {
        uint64_t out = 1;
        while (exp) {
            if (exp & 1) out = mulmod(out, base);
            base = mulmod(base, base);
            exp >>= 1;
        }
        return out;
    };

    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const uint64_t inv = powmod(a[rank][c], p - 2);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const uint64_t factor = mulmod(a[r][c], inv);
            for (int k = c; k < cols; ++k) {
                const uint64_t sub = mulmod(factor, a[rank][k]);
                a[r][k] = (a[r][k] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

constexpr uint64_t kPrimes[2] = {2147483647ULL, 998244353ULL};

}  // namespace

int rank_rational(const BinaryMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // Rank mod p never exceeds the rational rank; two independent large
    // primes make a missed minor implausible at these sizes.
    int rank = 0;
    for (uint64_t p : kPrimes) {
        std::vector<std::vector<uint64_t>> a(m.rows(), std::vector<uint64_t>(m.cols(), 0));
        for (int c = 0; c < m.cols(); ++c)
            for (int r : m.column(c)) a[r][c] = 1;
        rank = std::max(rank, rank_mod_prime(std::move(a), m.rows(), m.cols(), p));
    }
    return rank;
}

int rank_rational(const SparseIntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    int rank = 0;
    for (uint64_t p : kPrimes) {
        std::vector<std::vector<uint64_t>> a(m.rows, std::vector<uint64_t>(m.cols, 0));
        for (const auto& [r, c, v] : m.entries) {
            const int64_t res = ((v % static_cast<int64_t>(p)) + static_cast<int64_t>(p)) %
                                static_cast<int64_t>(p);
            a[r][c] = (a[r][c] + static_cast<uint64_t>(res)) % p;
        }
        rank = std::max(rank, rank_mod_prime(std::move(a), m.rows, m.cols, p));
    }
    return rank;
}

}  // namespace lhnet
