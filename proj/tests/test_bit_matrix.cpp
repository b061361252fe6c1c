#include <catch2/catch_amalgamated.hpp>

#include "hgpopt/bit_matrix.hpp"
#include "support/naive_gf2.hpp"

using namespace hgpopt;
using namespace hgpopt::testsupport;

TEST_CASE("rank: small cases") {
    CHECK(rank(BitMatrix(3, 5)) == 0);
    CHECK(rank(BitMatrix::identity(4)) == 4);

    // Row space of [[1,1,0],[0,1,1]] has the 3 distinct nonzero combinations
    // 110, 011, 101, so the rank is 2.
    const auto h = BitMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    CHECK(rank(h) == 2);

    CHECK(rank(BitMatrix(0, 7)) == 0);
    CHECK(rank(BitMatrix(7, 0)) == 0);
}

TEST_CASE("rank: agrees with naive elimination on random matrices") {
    Rng rng(0xb17ul);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = rng.below(8), c = rng.below(130);
        const auto m = random_bit_matrix(r, c, 0.3, rng);
        CHECK(rank(m) == naive_rank(to_int_matrix(m)));
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(rank(m) <= std::min(r, c));
        CHECK(m.padding_is_zero());
    }
}

TEST_CASE("kernel_basis: small cases") {
    CHECK(kernel_basis(BitMatrix::identity(3)).rows() == 0);

    const auto full = kernel_basis(BitMatrix(2, 3));
    CHECK(full.rows() == 3);
    CHECK(rank(full) == 3);

    const auto k = kernel_basis(BitMatrix::from_rows({{1, 1}}));
    REQUIRE(k.rows() == 1);
    CHECK(k.get(0, 0));
    CHECK(k.get(0, 1));
}

TEST_CASE("kernel_basis: m * basis^T = 0 and dimension matches") {
    Rng rng(0x5eed);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = rng.below(7), c = rng.below(90);
        const auto m = random_bit_matrix(r, c, 0.4, rng);
        const auto k = kernel_basis(m);
        CHECK(k.rows() == c - rank(m));
        CHECK(rank(k) == k.rows());
        if (r > 0 && c > 0) CHECK(mul(m, k.transpose()).is_zero());
        CHECK(k.padding_is_zero());
    }
}

TEST_CASE("mul: identities and dimension checks") {
    const auto i2 = BitMatrix::identity(2);
    CHECK(mul(i2, i2) == i2);
    Rng rng(1);
    CHECK(mul(random_bit_matrix(3, 4, 0.5, rng), BitMatrix(4, 2)).is_zero());
    CHECK(mul(BitMatrix::from_rows({{1, 1}}), BitMatrix::from_rows({{1}, {1}})) ==
          BitMatrix(1, 1));  // 1 + 1 = 0
    CHECK_THROWS_AS(mul(BitMatrix(2, 3), BitMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("mul: agrees with naive product") {
    Rng rng(0x77);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = rng.below(6), k = rng.below(70) + 1, m = rng.below(6);
        const auto a = random_bit_matrix(n, k, 0.4, rng);
        const auto b = random_bit_matrix(k, m, 0.4, rng);
        CHECK(to_int_matrix(mul(a, b)) == naive_mul(to_int_matrix(a), to_int_matrix(b)));
    }
}

TEST_CASE("kron: small cases") {
    CHECK(kron(BitMatrix::identity(2), BitMatrix::identity(3)) == BitMatrix::identity(6));

    const auto b = BitMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
    CHECK(kron(BitMatrix::from_rows({{1}}), b) == b);

    CHECK(kron(BitMatrix::from_rows({{1, 1}}), BitMatrix::identity(2)) ==
          BitMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}}));
}

TEST_CASE("kron: rank is multiplicative, checked against naive elimination") {
    Rng rng(0x42);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t ar = rng.below(4) + 1, ac = rng.below(4) + 1;
        const std::size_t br = rng.below(4) + 1, bc = rng.below(4) + 1;
        const auto a = random_bit_matrix(ar, ac, 0.5, rng);
        const auto b = random_bit_matrix(br, bc, 0.5, rng);
        const auto k = kron(a, b);
        CHECK(to_int_matrix(k) == naive_kron(to_int_matrix(a), to_int_matrix(b)));
        CHECK(rank(k) == naive_rank(to_int_matrix(k)));
        CHECK(rank(k) == naive_rank(to_int_matrix(a)) * naive_rank(to_int_matrix(b)));
    }
}

TEST_CASE("hstack") {
    const auto a = BitMatrix::identity(2);
    CHECK(hstack(a, BitMatrix(2, 1)) == BitMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
    CHECK(hstack(a, BitMatrix(2, 0)) == a);
    CHECK(hstack(BitMatrix::from_rows({{1}}), BitMatrix::from_rows({{0}})) ==
          BitMatrix::from_rows({{1, 0}}));
    CHECK_THROWS_AS(hstack(BitMatrix(2, 1), BitMatrix(3, 1)), std::invalid_argument);

    Rng rng(9);
    const auto x = random_bit_matrix(4, 70, 0.4, rng);
    const auto y = random_bit_matrix(4, 3, 0.4, rng);
    const auto s = hstack(x, y);
    CHECK(s.rows() == 4);
    CHECK(s.cols() == 73);
    CHECK(rank(s) >= std::max(rank(x), rank(y)));
    CHECK(s.padding_is_zero());
}

TEST_CASE("select_columns") {
    const auto m = BitMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
    CHECK(select_columns(m, std::vector<std::size_t>{0, 1, 2}) == m);
    CHECK(select_columns(m, std::vector<std::size_t>{}).cols() == 0);
    CHECK(select_columns(m, std::vector<std::size_t>{0, 2}) ==
          BitMatrix::from_rows({{1, 1}, {0, 1}}));
    CHECK_THROWS_AS(select_columns(m, std::vector<std::size_t>{0, 3}), std::out_of_range);
    CHECK_THROWS_AS(select_columns(m, std::vector<std::size_t>{1, 1}), std::invalid_argument);
}

TEST_CASE("GaussEliminator matches batch rank and stops when full") {
    Rng rng(0xabc);
    const auto m = random_bit_matrix(40, 17, 0.3, rng);
    GaussEliminator elim;
    elim.reset(m.cols());
    std::size_t fed = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (elim.full()) break;
        elim.insert(m.row(i));
        ++fed;
    }
    CHECK(elim.rank() == rank(m));
    if (elim.full()) CHECK(fed < m.rows());
}
