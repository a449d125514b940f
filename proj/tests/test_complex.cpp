#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "lhnet/complex.hpp"
#include "support/oracles.hpp"

using namespace lhnet;

namespace {

const Complex kPath = Complex::closure_of({{0, 1}, {1, 2}});
const Complex kTriangle = Complex::closure_of({{0, 1, 2}});

std::vector<Cell> sorted(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace

TEST_CASE("closure of a full simplex") {
    CHECK(kTriangle.cell_count() == 7);
    CHECK(kTriangle.contains({0, 1, 2}));
    CHECK(kTriangle.contains({0, 2}));
    CHECK(kTriangle.contains({1}));
}

TEST_CASE("closure of a singleton") {
    const Complex x = Complex::closure_of({{0}});
    CHECK(x.cell_count() == 1);
    CHECK(x.dim() == 0);
}

TEST_CASE("closure of the path edges") {
    CHECK(kPath.cell_count() == 5);
    CHECK(kPath.contains({0, 1}));
    CHECK(kPath.contains({1, 2}));
    CHECK_FALSE(kPath.contains({0, 2}));
}

TEST_CASE("closure rejects malformed cells") {
    CHECK_THROWS_AS(Complex::closure_of({{1, 1}}), malformed_cell);
    CHECK_THROWS_AS(Complex::closure_of({{2, 1}}), malformed_cell);
    CHECK_THROWS_AS(Complex::closure_of({Cell{}}), malformed_cell);
}

TEST_CASE("closure is idempotent") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        const Complex x = testing::random_complex(seed);
        CHECK(Complex::closure_of(x.all_cells()) == x);
    }
}

TEST_CASE("star of the middle vertex of the path") {
    CHECK(sorted(kPath.star({{1}})) == sorted({{1}, {0, 1}, {1, 2}}));
}

TEST_CASE("star of everything is everything") {
    CHECK(sorted(kPath.star(kPath.all_cells())) == sorted(kPath.all_cells()));
}

TEST_CASE("star of a maximal edge is itself") {
    CHECK(kPath.star({{0, 1}}) == std::vector<Cell>{{0, 1}});
}

TEST_CASE("star rejects cells outside the complex") {
    CHECK_THROWS_AS(kPath.star({{0, 2}}), not_in_complex);
}

TEST_CASE("star is monotone and dominated by closure") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        const Complex x = testing::random_complex(seed);
        const auto cells = x.all_cells();
        const std::vector<Cell> y{cells[seed % cells.size()]};
        const auto st_y = sorted(x.star(y));
        const auto st_cl = sorted(x.star(closure_cells(y)));
        CHECK(std::includes(st_cl.begin(), st_cl.end(), st_y.begin(), st_y.end()));
    }
}

TEST_CASE("facets of the path are its edges") {
    CHECK(sorted(kPath.facets()) == sorted({{0, 1}, {1, 2}}));
}

TEST_CASE("facets of a full simplex") {
    CHECK(kTriangle.facets() == std::vector<Cell>{{0, 1, 2}});
}

TEST_CASE("facets across dimensions") {
    const Complex x = Complex::closure_of({{5}, {0, 1}});
    CHECK(sorted(x.facets()) == sorted({{5}, {0, 1}}));
}

TEST_CASE("every cell lies under a facet and facets are incomparable") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        const Complex x = testing::random_complex(seed);
        const auto facets = x.facets();
        for (const Cell& c : x.all_cells()) {
            CHECK(std::any_of(facets.begin(), facets.end(),
                              [&](const Cell& f) { return is_face(c, f); }));
        }
        for (const Cell& f : facets)
            for (const Cell& g : facets)
                if (f != g) CHECK_FALSE(is_face(f, g));
    }
}

TEST_CASE("boundary matrix of the triangle in degree 1") {
    const BinaryMatrix m = kTriangle.boundary_matrix(1);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 3);
    for (int c = 0; c < 3; ++c) CHECK(m.column(c).size() == 2);
    CHECK(m.rank() == 2);
}

TEST_CASE("boundary matrix of the path in degree 1") {
    const BinaryMatrix m = kPath.boundary_matrix(1);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 2);
    CHECK(m.rank() == 2);
}

TEST_CASE("boundary matrix out of range is empty") {
    const BinaryMatrix m = kPath.boundary_matrix(2);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 0);
    CHECK(m.rank() == 0);
}

TEST_CASE("boundary composition vanishes") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        const Complex x = testing::random_complex(seed);
        for (int k = 1; k <= x.dim(); ++k)
            CHECK(x.boundary_matrix(k).multiply(x.boundary_matrix(k + 1)).is_zero());
    }
}

TEST_CASE("gf2 rank basics") {
    BinaryMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i);
    CHECK(id.rank() == 3);

    CHECK(BinaryMatrix(4, 2).rank() == 0);

    BinaryMatrix dep(2, 2);
    dep.set(0, 0);
    dep.set(1, 0);
    dep.set(0, 1);
    dep.set(1, 1);
    CHECK(dep.rank() == 1);
}

TEST_CASE("rank agrees with transpose rank and rational rank on 0/1 matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        BinaryMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng() % 2) m.set(r, c);
        CHECK(m.rank() == m.transpose().rank());
        // GF(2) rank can only drop relative to the rational rank.
        CHECK(m.rank() <= rank_rational(m));
    }
}

TEST_CASE("betti numbers match the exhaustive span oracle") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const Complex x = testing::random_complex(seed);
        for (int k = 0; k <= 2; ++k) {
            const int n_k = static_cast<int>(x.cells(k).size());
            const int betti = n_k - x.boundary_matrix(k).rank() - x.boundary_matrix(k + 1).rank();
            CHECK(betti == testing::oracle_betti(x, k));
        }
    }
}
