#include "common.hpp"

#include "crossact/errors.hpp"
#include "crossact/linalg.hpp"

#include <doctest.h>

using namespace crossact;
using namespace testing;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int r, int c, int N) {
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, random_cyclotomic(rng, N));
    return m;
}

}  // namespace

TEST_CASE("set, get and sparsity") {
    Matrix m(3, 3);
    m.set(1, 2, Cyclotomic(5));
    m.add(1, 2, Cyclotomic(-5));
    CHECK(m.is_zero());
    m.set(0, 1, Cyclotomic(2));
    m.set(0, 0, Cyclotomic(1));
    CHECK(m.row(0)[0].first == 0);
    CHECK(m.get(0, 1) == Cyclotomic(2));
    CHECK(m.transpose().get(1, 0) == Cyclotomic(2));
}

TEST_CASE("inverse over Q(zeta_N)") {
    std::mt19937_64 rng(3);
    for (int N : {1, 3, 4, 5}) {
        for (int trial = 0; trial < 5; ++trial) {
            Matrix a = random_matrix(rng, 4, 4, N);
            auto inv = a.inverse();
            if (!inv) {
                CHECK(a.rank() < 4);
                continue;
            }
            CHECK(a * *inv == Matrix::identity(4));
            CHECK(*inv * a == Matrix::identity(4));
        }
    }
    Matrix sing(2, 2);
    sing.set(0, 0, Cyclotomic(1));
    sing.set(1, 0, Cyclotomic(2));
    CHECK_FALSE(sing.inverse().has_value());
    CHECK(sing.rank() == 1);
}

TEST_CASE("kron mixed product") {
    std::mt19937_64 rng(5);
    Matrix a = random_matrix(rng, 2, 3, 3), b = random_matrix(rng, 2, 2, 3);
    Matrix c = random_matrix(rng, 3, 2, 3), d = random_matrix(rng, 2, 3, 3);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    CHECK(kron(a, b).get(1 * 2 + 0, 2 * 2 + 1) == a.get(1, 2) * b.get(0, 1));
    Matrix s = direct_sum(a, b);
    CHECK(s.rows() == 4);
    CHECK(s.get(2, 3) == b.get(0, 0));
}

TEST_CASE("solve statuses") {
    LinearSystem sys;
    sys.nvars = 2;
    sys.add_row({{0, Cyclotomic(1)}, {1, Cyclotomic(1)}}, Cyclotomic(3));
    sys.add_row({{0, Cyclotomic(1)}, {1, Cyclotomic(-1)}}, Cyclotomic(1));
    SolveResult r = solve(sys);
    REQUIRE(r.status == SolveResult::unique);
    CHECK(r.solution[0] == Cyclotomic(2));
    CHECK(r.solution[1] == Cyclotomic(1));

    LinearSystem under = sys;
    under.rows.pop_back();
    under.rhs.pop_back();
    CHECK(solve(under).status == SolveResult::underdetermined);

    LinearSystem bad = sys;
    bad.add_row({{0, Cyclotomic(2)}, {1, Cyclotomic(2)}}, Cyclotomic(7));
    CHECK(solve(bad).status == SolveResult::inconsistent);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(9);
    Matrix a = random_matrix(rng, 2, 3, 5);
    CHECK(matrix_from_json(matrix_to_json(a), 2, 3) == a);
    CHECK_THROWS_AS(matrix_from_json(matrix_to_json(a), 3, 3), ParseError);
    CHECK_THROWS_AS(Matrix(2, 2) * Matrix(3, 3), ShapeMismatch);
}
