#include "lhnet/homology.hpp"

#include <algorithm>

#include "lhnet/errors.hpp"

namespace lhnet {
namespace {

// roi cells split by dimension, each group lex-sorted.
std::vector<std::vector<Cell>> by_dimension(const std::vector<Cell>& roi) {
    std::vector<std::vector<Cell>> out;
    for (const Cell& c : roi) {
        const std::size_t k = c.size() - 1;
        if (out.size() <= k) out.resize(k + 1);
        out[k].push_back(c);
    }
    for (auto& group : out) std::sort(group.begin(), group.end());
    return out;
}

}  // namespace

std::vector<BinaryMatrix> relative_chain_complex(const Complex& x,
                                                 const std::vector<Cell>& roi) {
    complement_complex(x, roi);  // throws if the complement is not closed
    const auto basis = by_dimension(roi);
    std::vector<BinaryMatrix> out;
    out.emplace_back(0, basis.empty() ? 0 : static_cast<int>(basis[0].size()));
    for (std::size_t k = 1; k < basis.size(); ++k) {
        const auto& rows = basis[k - 1];
        const auto& cols = basis[k];
        BinaryMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (int c = 0; c < m.cols(); ++c) {
            const Cell& cell = cols[c];
            for (std::size_t drop = 0; drop < cell.size(); ++drop) {
                Cell face;
                for (std::size_t i = 0; i < cell.size(); ++i)
                    if (i != drop) face.push_back(cell[i]);
                auto it = std::lower_bound(rows.begin(), rows.end(), face);
                if (it != rows.end() && *it == face)
                    m.set(static_cast<int>(it - rows.begin()), c);
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

LocalHomologyScore local_homology(const Complex& x, const Cell& c, int max_k) {
    if (!x.contains(c)) throw not_in_complex("local_homology: cell not in complex");
    const auto roi = region_of_influence(x, {c});
    const auto chain = relative_chain_complex(x, roi);

    LocalHomologyScore score{c, std::vector<int>(max_k + 1, 0)};
    for (int k = 0; k <= max_k; ++k) {
        if (k >= static_cast<int>(chain.size())) break;
        const int dim_ck = chain[k].cols();
        const int rank_dk = chain[k].rank();
        const int rank_dk1 =
            k + 1 < static_cast<int>(chain.size()) ? chain[k + 1].rank() : 0;
        score.lh[k] = dim_ck - rank_dk - rank_dk1;
    }
    return score;
}

std::vector<LocalHomologyScore> lh_field(const Complex& x, int max_k, Exec exec) {
    const auto cells = x.all_cells();
    std::vector<LocalHomologyScore> out(cells.size());
    const long n = static_cast<long>(cells.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) out[i] = local_homology(x, cells[i], max_k);
    } else {
        for (long i = 0; i < n; ++i) out[i] = local_homology(x, cells[i], max_k);
    }
    return out;
}

SheafCochainComplex vector_sheaf_cochain(const Complex& x) {
    const int top = x.dim();
    SheafCochainComplex cc;

    // Basis offsets: per dimension, per cell, a contiguous block of stalk
    // members in sorted order.
    std::vector<std::vector<std::vector<VertexId>>> members(top + 1);
    std::vector<std::vector<int>> offset(top + 1);
    for (int k = 0; k <= top; ++k) {
        const auto& cells = x.cells(k);
        members[k].resize(cells.size());
        offset[k].resize(cells.size());
        int dim = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            members[k][i] = stalk(x, cells[i]).members;
            offset[k][i] = dim;
            dim += static_cast<int>(members[k][i].size());
        }
        cc.dims.push_back(dim);
    }

    for (int k = 0; k < top; ++k) {
        const auto& lo = x.cells(k);
        const auto& hi = x.cells(k + 1);
        BinaryMatrix d(cc.dims[k + 1], cc.dims[k]);
        SparseIntMatrix ds{cc.dims[k + 1], cc.dims[k], {}};
        for (std::size_t ci = 0; ci < lo.size(); ++ci) {
            for (std::size_t di = 0; di < hi.size(); ++di) {
                if (!is_face(lo[ci], hi[di])) continue;
                // Incidence sign from the position of the vertex of the
                // coface missing in the face.
                int missing = 0;
                while (std::binary_search(lo[ci].begin(), lo[ci].end(), hi[di][missing]))
                    ++missing;
                const int sign = missing % 2 == 0 ? 1 : -1;
                // Basis projection: node survives iff it is in the
                // higher cell's stalk.
                for (std::size_t m = 0; m < members[k][ci].size(); ++m) {
                    const VertexId n = members[k][ci][m];
                    const auto& tgt = members[k + 1][di];
                    auto it = std::lower_bound(tgt.begin(), tgt.end(), n);
                    if (it == tgt.end() || *it != n) continue;
                    const int row = offset[k + 1][di] + static_cast<int>(it - tgt.begin());
                    const int col = offset[k][ci] + static_cast<int>(m);
                    d.set(row, col);
                    ds.entries.push_back({row, col, sign});
                }
            }
        }
        cc.delta.push_back(std::move(d));
        cc.delta_signed.push_back(std::move(ds));
    }
    return cc;
}

namespace {

std::map<int, int> cohomology_dims(const SheafCochainComplex& cc,
                                   int (*rank_fn)(const BinaryMatrix&)) {
    std::map<int, int> out;
    for (std::size_t k = 0; k < cc.dims.size(); ++k) {
        const int rank_dk = k < cc.delta.size() ? rank_fn(cc.delta[k]) : 0;
        const int rank_prev = k > 0 ? rank_fn(cc.delta[k - 1]) : 0;
        out[static_cast<int>(k)] = cc.dims[k] - rank_dk - rank_prev;
    }
    return out;
}

int gf2_rank(const BinaryMatrix& m) { return m.rank(); }

}  // namespace

std::map<int, int> sheaf_cohomology_dims(const SheafCochainComplex& cc) {
    return cohomology_dims(cc, gf2_rank);
}

std::map<int, int> sheaf_cohomology_dims_rational(const SheafCochainComplex& cc) {
    std::map<int, int> out;
    for (std::size_t k = 0; k < cc.dims.size(); ++k) {
        const int rank_dk =
            k < cc.delta_signed.size() ? rank_rational(cc.delta_signed[k]) : 0;
        const int rank_prev = k > 0 ? rank_rational(cc.delta_signed[k - 1]) : 0;
        out[static_cast<int>(k)] = cc.dims[k] - rank_dk - rank_prev;
    }
    return out;
}

}  // namespace lhnet
