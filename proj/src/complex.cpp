#include "lhnet/complex.hpp"

#include <algorithm>
#include <set>

namespace lhnet {

bool is_canonical(const Cell& c) {
    if (c.empty()) return false;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i] >= c[i + 1]) return false;
    return c.front() >= 0;
}

bool is_face(const Cell& a, const Cell& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Cell> closure_cells(const std::vector<Cell>& cells) {
    std::set<Cell> out;
    for (const Cell& c : cells) {
        if (!is_canonical(c))
            throw malformed_cell("cell is not a strictly increasing vertex sequence");
        const std::size_t n = c.size();
        // All non-empty subsets; cells are small.
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            Cell face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t{1} << i)) face.push_back(c[i]);
            out.insert(std::move(face));
        }
    }
    return {out.begin(), out.end()};
}

Complex Complex::closure_of(const std::vector<Cell>& cells) {
    Complex x;
    for (Cell& c : closure_cells(cells)) {
        const std::size_t k = c.size() - 1;
        if (x.by_dim_.size() <= k) x.by_dim_.resize(k + 1);
        x.by_dim_[k].push_back(std::move(c));
    }
    for (auto& group : x.by_dim_) std::sort(group.begin(), group.end());
    return x;
}

bool Complex::contains(const Cell& c) const {
    const int k = static_cast<int>(c.size()) - 1;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return false;
    const auto& group = by_dim_[k];
    return std::binary_search(group.begin(), group.end(), c);
}

std::size_t Complex::cell_count() const {
    std::size_t n = 0;
    for (const auto& group : by_dim_) n += group.size();
    return n;
}

const std::vector<Cell>& Complex::cells(int k) const {
    static const std::vector<Cell> kEmpty;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return kEmpty;
    return by_dim_[k];
}

std::vector<Cell> Complex::all_cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count());
    for (const auto& group : by_dim_) out.insert(out.end(), group.begin(), group.end());
    return out;
}

std::vector<VertexId> Complex::vertices() const {
    std::vector<VertexId> out;
    out.reserve(cells(0).size());
    for (const Cell& v : cells(0)) out.push_back(v[0]);
    return out;
}

std::vector<Cell> Complex::star(const std::vector<Cell>& y) const {
    for (const Cell& b : y)
        if (!contains(b)) throw not_in_complex("star: cell not in complex");
    std::vector<Cell> out;
    for (const auto& group : by_dim_) {
        for (const Cell& c : group) {
            for (const Cell& b : y) {
                if (is_face(b, c)) {
                    out.push_back(c);
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<Cell> Complex::facets() const {
    std::vector<Cell> out;
    const int top = dim();
    for (int k = 0; k <= top; ++k) {
        for (const Cell& c : by_dim_[k]) {
            bool has_strict_coface = false;
            for (int j = k + 1; j <= top && !has_strict_coface; ++j)
                for (const Cell& d : by_dim_[j])
                    if (is_face(c, d)) { has_strict_coface = true; break; }
            if (!has_strict_coface) out.push_back(c);
        }
    }
    return out;
}

BinaryMatrix Complex::boundary_matrix(int k) const {
    const auto& rows = cells(k - 1);
    const auto& cols = cells(k);
    BinaryMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    if (m.rows() == 0 || m.cols() == 0) return m;
    for (int c = 0; c < m.cols(); ++c) {
        const Cell& cell = cols[c];
        for (std::size_t drop = 0; drop < cell.size(); ++drop) {
            Cell face;
            face.reserve(cell.size() - 1);
            for (std::size_t i = 0; i < cell.size(); ++i)
                if (i != drop) face.push_back(cell[i]);
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            m.set(static_cast<int>(it - rows.begin()), c);
        }
    }
    return m;
}

}  // namespace lhnet
