#include <doctest.h>

#include "lieposet/exactla.hpp"
#include "lieposet/rng.hpp"
#include "oracles.hpp"

using namespace lieposet;

namespace {

Matrix<Rational> random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = lo + static_cast<int>(rng.below(hi - lo + 1));
    return m;
}

Matrix<Fp> reduce_mod(const Matrix<Rational>& m, std::uint32_t p) {
    Matrix<Fp> f(m.rows(), m.cols(), Fp::raw(0, p));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int num = numerator(m(i, j));
            REQUIRE(denominator(m(i, j)) == 1);
            f(i, j) = Fp(static_cast<std::int64_t>(num), p);
        }
    return f;
}

}  // namespace

TEST_CASE("rank: identity and zero") {
    CHECK(rank(Matrix<Rational>::identity(2)) == 2);
    CHECK(rank(Matrix<Rational>(3, 4)) == 0);
}

TEST_CASE("rank: M of the solid path 1-2-3") {
    auto m = oracles::from_rows({{-1, -1, 0}, {0, -1, -1}});
    CHECK(oracles::rank_by_minors(m) == 2);  // independent oracle
    CHECK(rank(m) == 2);
}

TEST_CASE("determinant: basics") {
    CHECK(determinant(Matrix<Rational>::identity(3)) == 1);

    // Odd-dimensional skew-symmetric matrix has determinant zero.
    auto skew = oracles::from_rows({{0, 2, -1}, {-2, 0, 3}, {1, -3, 0}});
    CHECK(determinant(skew) == 0);

    auto rect = Matrix<Rational>(2, 3);
    CHECK_THROWS_AS(determinant(rect), NonSquare);
}

TEST_CASE("determinant: extended matrix of the one-solid-edge poset") {
    // Cross-checked by cofactor expansion in the oracle.
    auto m = oracles::from_rows({{0, 1, 0, 1}, {-1, 0, 0, 1}, {0, 0, 0, 1}, {-1, -1, -1, 0}});
    CHECK(oracles::cofactor_det(m, {0, 1, 2, 3}, {0, 1, 2, 3}) == 1);
    CHECK(determinant(m) == 1);
}

TEST_CASE("duplicated row forces determinant zero") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + rng.below(4);
        auto m = random_int_matrix(rng, n, n, -5, 5);
        std::size_t src = rng.below(n), dst = (src + 1 + rng.below(n - 1)) % n;
        for (std::size_t j = 0; j < n; ++j) m(dst, j) = m(src, j);
        CHECK(determinant(m) == 0);
    }
}

TEST_CASE("rank(m) == rank(transpose(m)) on random matrices") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        auto m = random_int_matrix(rng, r, c, -3, 3);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("rank agrees with both independent oracles") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        auto m = random_int_matrix(rng, r, c, -3, 3);
        std::size_t expected = oracles::rank_by_minors(m);
        CHECK(rank(m) == expected);
        CHECK(oracles::rank_by_gauss(m) == expected);
    }
}

TEST_CASE("rank over rationals equals rank over F_p for p = 2^31 - 1") {
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
        std::size_t r = 1 + rng.below(12), c = 1 + rng.below(12);
        auto m = random_int_matrix(rng, r, c, -3, 3);
        CHECK(rank(m) == rank(reduce_mod(m, kDefaultPrime)));
    }
}

TEST_CASE("Fp field arithmetic") {
    const std::uint32_t p = 101;
    Fp a(45, p), b(-7, p);
    CHECK(b.value() == 94);
    CHECK((a * a.inverse()).value() == 1);
    CHECK((a / a).value() == 1);
    CHECK((a - a).is_zero());
    CHECK(Fp(101, p).is_zero());
    CHECK(is_prime(kDefaultPrime));
    CHECK_FALSE(is_prime(2147483649ull));
}

TEST_CASE("Fp determinant matches rational determinant mod p") {
    Rng rng(23);
    const std::uint32_t p = 99991;
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng.below(6);
        auto m = random_int_matrix(rng, n, n, -4, 4);
        Rational d = determinant(m);
        REQUIRE(denominator(d) == 1);
        Fp expected(static_cast<std::int64_t>(Int(numerator(d) % p)), p);
        CHECK(determinant(reduce_mod(m, p)) == expected);
    }
}
