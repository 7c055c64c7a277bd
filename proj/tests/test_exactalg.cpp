#include <catch2/catch_amalgamated.hpp>

#include "hws/bigint.hpp"
#include "hws/combinatorics.hpp"
#include "hws/finite_field.hpp"
#include "hws/matrix.hpp"

using namespace hws;

TEST_CASE("prime fields basic arithmetic") {
    auto F = make_field(7, 1);
    REQUIRE(F->q() == 7);
    REQUIRE(F->add(3, 5) == 1);
    REQUIRE(F->mul(3, 5) == 1);
    REQUIRE(F->inv(3) == 5);
    REQUIRE(F->neg(2) == 5);
    for (long a = 1; a < 7; ++a) REQUIRE(F->mul(a, F->inv(a)) == 1);
}

TEST_CASE("GF(4) uses x^2+x+1 and GF(9) uses x^2+1") {
    auto F4 = make_field(2, 2);
    // modulus coefficients constant term first
    REQUIRE(F4->modulus() == std::vector<long>({1, 1, 1}));
    // x * x = x + 1:  x encodes as 2, x+1 as 3
    REQUIRE(F4->mul(2, 2) == 3);
    REQUIRE(F4->mul(2, 3) == 1);

    auto F9 = make_field(3, 2);
    REQUIRE(F9->modulus() == std::vector<long>({1, 0, 1}));
    // x * x = -1 = 2
    REQUIRE(F9->mul(3, 3) == 2);
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 13L, 16L}) {
        auto F = make_field_q(q);
        for (long a = 0; a < q; ++a) {
            REQUIRE(F->add(a, 0) == a);
            REQUIRE(F->mul(a, 1) == a);
            REQUIRE(F->add(a, F->neg(a)) == 0);
            if (a != 0) REQUIRE(F->mul(a, F->inv(a)) == 1);
            for (long b = 0; b < q; ++b) {
                REQUIRE(F->add(a, b) == F->add(b, a));
                REQUIRE(F->mul(a, b) == F->mul(b, a));
                for (long c = 0; c < q; ++c) {
                    REQUIRE(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
                    REQUIRE(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
                    REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("multiplicative order and pow") {
    auto F = make_field_q(9);
    int generators = 0;
    for (long a = 1; a < 9; ++a) {
        REQUIRE(8 % F->order(a) == 0);
        if (F->order(a) == 8) ++generators;
        REQUIRE(F->pow(a, 8) == 1);
    }
    REQUIRE(generators == 4); // phi(8)
}

TEST_CASE("field constructor rejects bad input") {
    REQUIRE_THROWS_AS(make_field(6, 1), NotPrime);
    REQUIRE_THROWS_AS(make_field(4, 1), NotPrime);
    REQUIRE_THROWS_AS(factor_prime_power(12), NotPrime);
    REQUIRE(factor_prime_power(8) == std::make_pair(2L, 3L));
    REQUIRE(factor_prime_power(81) == std::make_pair(3L, 4L));
}

TEST_CASE("rref and rank over GF(4)") {
    auto F = make_field_q(4);
    FFMatrix m(F, 3, 4);
    // second row is x times the first, so only two independent rows
    long r1[4] = {1, 2, 3, 0}, r2[4] = {2, 3, 1, 0}, r3[4] = {0, 0, 0, 1};
    for (int j = 0; j < 4; ++j) {
        m.set(0, j, r1[j]);
        m.set(1, j, r2[j]);
        m.set(2, j, r3[j]);
    }
    auto rr = rref(m);
    REQUIRE(rr.rank == 2);
    REQUIRE(rr.pivots == std::vector<int>({0, 3}));
}

TEST_CASE("left kernel recovers dependencies") {
    auto F = make_field_q(5);
    FFMatrix m(F, 3, 3);
    // row2 = 2*row0 + 3*row1
    long r0[3] = {1, 2, 0}, r1[3] = {0, 1, 4};
    for (int j = 0; j < 3; ++j) {
        m.set(0, j, r0[j]);
        m.set(1, j, r1[j]);
        m.set(2, j, F->add(F->mul(2, r0[j]), F->mul(3, r1[j])));
    }
    auto ker = left_kernel(m);
    REQUIRE(ker.size() == 1);
    // kernel vector v with v * m = 0
    for (int j = 0; j < 3; ++j) {
        long s = 0;
        for (int i = 0; i < 3; ++i) s = F->add(s, F->mul(ker[0][i], m.at(i, j)));
        REQUIRE(s == 0);
    }
}

TEST_CASE("exact rational solve") {
    // x + y = 3, x - y = 1  (over Q, as 2x2)
    std::vector<std::vector<BigRat>> a = {{1, 1}, {1, -1}};
    std::vector<BigRat> b = {3, 1};
    auto x = solve_exact(a, b);
    REQUIRE(x[0] == 2);
    REQUIRE(x[1] == 1);

    std::vector<std::vector<BigRat>> under = {{1, 1}};
    REQUIRE_THROWS_AS(solve_exact(under, {BigRat(1)}), Underdetermined);
    std::vector<std::vector<BigRat>> over = {{1, 0}, {0, 1}, {1, 1}};
    REQUIRE_THROWS_AS(solve_exact(over, {BigRat(1), BigRat(1), BigRat(3)}), Inconsistent);
    REQUIRE(solve_exact(over, {BigRat(1), BigRat(1), BigRat(2)})[0] == 1);
}

TEST_CASE("binomial and gaussian binomial") {
    REQUIRE(binomial(10, 3) == 120);
    REQUIRE(binomial(3, 5) == 0);
    REQUIRE(gaussian_binomial(4, 2, 2) == 35);
    REQUIRE(gaussian_binomial(2, 1, 3) == 4);
    REQUIRE(gaussian_binomial(3, 1, 9) == 91);
    REQUIRE(gaussian_binomial(3, 2, 9) == 91);
    REQUIRE_THROWS_AS(binomial(-1, 0), OutOfRange);
}

TEST_CASE("bigint helpers") {
    REQUIRE(big_pow(3, 20) == BigInt("3486784401"));
    REQUIRE(exact_div(BigInt(84), BigInt(6)) == 14);
    REQUIRE_THROWS(exact_div(BigInt(5), BigInt(2)));
    BigRat half(1, 2);
    REQUIRE_FALSE(is_integral(half));
    REQUIRE(is_integral(BigRat(6, 3)));
}
