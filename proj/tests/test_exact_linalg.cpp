#include "legdet/exact_linalg.hpp"

#include "oracles.hpp"

#include <doctest.h>

using legdet::BigInt;
using legdet::IntMatrix;
using legdet::IntPolynomial;
using legdet::IntVector;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (int v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntVector vec(std::initializer_list<int> values) {
    IntVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (int x : values) v(i++) = x;
    return v;
}

IntPolynomial poly(std::initializer_list<long> ascending) {
    std::vector<BigInt> c;
    for (long x : ascending) c.emplace_back(x);
    return IntPolynomial(std::move(c));
}

// Horner evaluation of p at a square matrix.
IntMatrix evaluate_at(const IntPolynomial& p, const IntMatrix& m) {
    IntMatrix acc = IntMatrix::Zero(m.rows(), m.cols());
    const IntMatrix identity = IntMatrix::Identity(m.rows(), m.cols());
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = IntMatrix(m * acc) + *it * identity;
    return acc;
}

} // namespace

TEST_CASE("determinant: examples") {
    CHECK(legdet::determinant(IntMatrix::Identity(3, 3)) == 1);
    CHECK(legdet::determinant(mat({{1, 1}, {1, 0}})) == -1);
    const IntMatrix m7 = mat({{1, 1, 1, 1}, {1, 0, -1, -1}, {1, 1, 0, -1}, {-1, 1, 1, 0}});
    CHECK(oracle::leibniz_det(m7) == 1);
    CHECK(legdet::determinant(m7) == 1);
}

TEST_CASE("determinant: zero pivots need row swaps") {
    CHECK(legdet::determinant(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(legdet::determinant(mat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
    CHECK(legdet::determinant(mat({{0, 2, 3}, {0, 4, 5}, {0, 6, 7}})) == 0);
    CHECK(legdet::determinant(mat({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}})) == 0);
    CHECK(legdet::determinant(mat({{5}})) == 5);
}

TEST_CASE("determinant: Bareiss equals Leibniz on random matrices up to 5x5") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        const Eigen::Index dim = 1 + trial % 5;
        // Small entry range so that singular and zero-pivot cases occur.
        const IntMatrix m = oracle::random_int_matrix(rng, dim, dim, -2, 2);
        REQUIRE(legdet::determinant(m) == oracle::leibniz_det(m));
    }
}

TEST_CASE("determinant: multiplicative on random 4x4") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix a = oracle::random_int_matrix(rng, 4, 4, -9, 9);
        const IntMatrix b = oracle::random_int_matrix(rng, 4, 4, -9, 9);
        REQUIRE(legdet::determinant(IntMatrix(a * b)) == legdet::determinant(a) * legdet::determinant(b));
    }
}

TEST_CASE("determinant: large entries stay exact") {
    IntMatrix m(2, 2);
    const BigInt big = legdet::mp::pow(BigInt(10), 60);
    m << big, 1, 1, big;
    CHECK(legdet::determinant(m) == big * big - 1);
}

TEST_CASE("charpoly: examples") {
    CHECK(legdet::charpoly(mat({{0, 1}, {-1, 0}})) == poly({1, 0, 1}));
    CHECK(legdet::charpoly(mat({{0, 1, -1, 1}, {-1, 0, 1, -1}, {1, -1, 0, 1}, {-1, 1, -1, 0}})).coeffs.size() == 5);
}

TEST_CASE("charpoly: constant term and Cayley-Hamilton") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index dim = 1 + trial % 6;
        const IntMatrix m = oracle::random_int_matrix(rng, dim, dim, -5, 5);
        const IntPolynomial c = legdet::charpoly(m);
        REQUIRE(c.is_monic());
        REQUIRE(c.degree() == dim);
        const BigInt expected_constant = (dim % 2 == 0 ? 1 : -1) * legdet::determinant(m);
        REQUIRE(c.evaluate(0) == expected_constant);
        REQUIRE(evaluate_at(c, m) == IntMatrix::Zero(dim, dim));
    }
}

TEST_CASE("adjugate: examples and defining identity") {
    CHECK(legdet::adjugate(IntMatrix::Identity(4, 4)) == IntMatrix::Identity(4, 4));
    CHECK(legdet::adjugate(mat({{1, 2}, {3, 4}})) == mat({{4, -2}, {-3, 1}}));
    CHECK(legdet::adjugate(mat({{1, 2, 3}, {2, 4, 6}, {-1, -2, -3}})) == IntMatrix::Zero(3, 3));
    CHECK_THROWS_AS(legdet::adjugate(mat({{1}})), std::invalid_argument);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Eigen::Index dim = 2 + trial % 7;
        const IntMatrix m = oracle::random_int_matrix(rng, dim, dim, -4, 4);
        const IntMatrix product = m * legdet::adjugate(m);
        REQUIRE(product == legdet::determinant(m) * IntMatrix::Identity(dim, dim));
    }
}

TEST_CASE("rank_one_update_det: examples") {
    CHECK(legdet::rank_one_update_det(IntMatrix::Identity(2, 2), vec({1, 0}), vec({1, 0})) == 2);
    CHECK(legdet::rank_one_update_det(IntMatrix::Zero(2, 2), vec({1, 2}), vec({3, 4})) == 0);
    CHECK(legdet::rank_one_update_det(mat({{1, 1}, {1, 0}}), vec({1, 1}), vec({1, 1})) == -2);
    CHECK_THROWS_AS(legdet::rank_one_update_det(IntMatrix::Identity(2, 2), vec({1}), vec({1, 0})), std::invalid_argument);
}

TEST_CASE("rank_one_update_det: matrix determinant lemma on random instances") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const Eigen::Index dim = 1 + trial % 6;
        const IntMatrix h = oracle::random_int_matrix(rng, dim, dim, -3, 3);
        const IntVector u = oracle::random_int_matrix(rng, dim, 1, -3, 3);
        const IntVector v = oracle::random_int_matrix(rng, dim, 1, -3, 3);
        const BigInt value = legdet::rank_one_update_det(h, u, v);
        REQUIRE(value == legdet::determinant(IntMatrix(h + u * v.transpose())));
    }
}

TEST_CASE("field_determinant over rationals matches Bareiss") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index dim = 1 + trial % 5;
        const IntMatrix m = oracle::random_int_matrix(rng, dim, dim, -3, 3);
        const legdet::RationalMatrix r = m.cast<legdet::BigRational>();
        REQUIRE(legdet::field_determinant(r) == legdet::BigRational(legdet::determinant(m)));
    }
}

TEST_CASE("IntPolynomial helpers") {
    const IntPolynomial p = poly({5, 0, -6, 0, 1});
    CHECK(p.to_string() == "t^4 - 6*t^2 + 5");
    CHECK(poly({1, 0, -1}) * poly({-5, 0, 1}) == poly({-5, 0, 6, 0, -1}));
    CHECK(legdet::pow(poly({7, 0, 1}), 2) * poly({1, 0, 1}) == poly({49, 0, 63, 0, 15, 0, 1}));
    CHECK(poly({0, 0}).degree() == -1);
    CHECK(poly({-1, 0, 0, 1}).to_string() == "t^3 - 1");
}
