#include <doctest.h>

#include "qfano/gf.hpp"

using namespace qfano;

namespace {

// Independent polynomial-arithmetic oracle: multiply two GF(p)[x] elements
// given by coefficient vectors and reduce modulo a monic modulus.
int poly_mul_mod(int a, int b, int p, int m, const std::vector<int>& mod) {
    std::vector<int> ca(m), cb(m);
    for (int i = 0; i < m; ++i, a /= p) ca[i] = a % p;
    for (int i = 0; i < m; ++i, b /= p) cb[i] = b % p;
    std::vector<int> prod(2 * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    for (int d = 2 * m - 1; d >= m; --d)
        while (prod[d]) {
            for (int j = 0; j <= m; ++j)
                prod[d - m + j] = ((prod[d - m + j] - mod[j]) % p + p) % p;
        }
    int code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * p + prod[i];
    return code;
}

} // namespace

TEST_CASE("prime detection") {
    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("field construction basics") {
    Field f2(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.alpha() == 1);

    Field f3(3, 1);
    CHECK(f3.alpha() == 2);
    CHECK(f3.mul(2, 2) == 1); // 2 has order 2

    Field f4(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.poly() == std::vector<int>{1, 1, 1});
    CHECK(f4.alpha() == 2);
    CHECK(f4.order(2) == 3);

    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 5), std::invalid_argument);
}

TEST_CASE("x^2+x+1 is the only monic irreducible quadratic over GF(2)") {
    // brute force: x^2 + bx + c irreducible iff it has no roots
    for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
            bool has_root = false;
            for (int x = 0; x < 2; ++x)
                if (((x * x + b * x + c) % 2) == 0) has_root = true;
            CHECK(has_root == !(b == 1 && c == 1));
        }
}

TEST_CASE("arithmetic matches the polynomial oracle") {
    Field f4(2, 2);
    std::vector<int> mod4{1, 1, 1};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(f4.mul(a, b) == poly_mul_mod(a, b, 2, 2, mod4));
    CHECK(f4.mul(2, 2) == 3);

    Field f8(2, 3);
    std::vector<int> mod8{1, 1, 0, 1};
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) CHECK(f8.mul(a, b) == poly_mul_mod(a, b, 2, 3, mod8));

    Field f9(3, 2);
    std::vector<int> mod9{2, 2, 1};
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b) CHECK(f9.mul(a, b) == poly_mul_mod(a, b, 3, 2, mod9));
}

TEST_CASE("field axioms hold exhaustively for all supported q") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        Field f = field_from_q(q);
        REQUIRE(f.q() == q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("alpha is primitive and minimal") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        Field f = field_from_q(q);
        CHECK(f.pow(f.alpha(), q - 1) == 1);
        for (int k = 1; k < q - 1; ++k) CHECK(f.pow(f.alpha(), k) != 1);
        for (int a = 1; a < f.alpha(); ++a) CHECK(f.order(a) < q - 1);
    }
}

TEST_CASE("error cases") {
    Field f5(5, 1);
    CHECK(f5.inv(2) == 3);
    CHECK_THROWS_AS(f5.inv(0), std::domain_error);
    CHECK_THROWS_AS(f5.add(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(field_from_q(6), std::invalid_argument);
    CHECK_THROWS_AS(field_from_q(0), std::invalid_argument);
}

TEST_CASE("pow handles negative exponents") {
    Field f7(7, 1);
    for (int a = 1; a < 7; ++a) CHECK(f7.mul(f7.pow(a, -1), a) == 1);
    CHECK(f7.pow(3, 0) == 1);
}
