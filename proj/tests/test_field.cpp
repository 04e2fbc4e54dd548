#include <doctest.h>

#include <random>
#include <set>

#include "adlv/field.hpp"

using namespace adlv;

namespace {
// independent oracle for F_4 = F_2[x]/(x^2+x+1): elements (c0, c1)
struct F4 {
    int c0, c1;
    friend F4 operator*(F4 a, F4 b) {
        int d0 = a.c0 * b.c0, d1 = a.c0 * b.c1 + a.c1 * b.c0, d2 = a.c1 * b.c1;
        // x^2 = x + 1
        return {(d0 + d2) % 2, (d1 + d2) % 2};
    }
};
} // namespace

TEST_CASE("frobenius fixes the base field and matches the defining polynomial") {
    FieldCtx F(2, 1, 2); // F_4 over F_2
    CHECK(F.size() == 4);
    CHECK(F.frob(0) == 0);
    CHECK(F.frob(1) == 1);

    // generator of F_4: code 2 is the class of x; sigma(x) = x^2 = x + 1 (code 3)
    uint16_t g = 2;
    CHECK(F.frob(g) == F.mul(g, g));
    F4 xx = F4{0, 1} * F4{0, 1};
    uint16_t oracle = static_cast<uint16_t>(xx.c0 + 2 * xx.c1);
    CHECK(oracle == 3);
    CHECK(F.frob(g) == oracle);
    CHECK(F.frob(g) == F.add(g, 1));

    // full multiplication table against the oracle
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            F4 pa{a & 1, a >> 1}, pb{b & 1, b >> 1};
            F4 pc = pa * pb;
            CHECK(F.mul(static_cast<uint16_t>(a), static_cast<uint16_t>(b)) ==
                  static_cast<uint16_t>(pc.c0 + 2 * pc.c1));
        }
}

TEST_CASE("enumerate_field yields each element once") {
    struct Row {
        uint32_t q, n;
        size_t expect;
    };
    for (Row row : {Row{2, 1, 2}, Row{2, 2, 4}, Row{3, 2, 9}}) {
        auto [q, n, expect] = row;
        FieldCtx F = FieldCtx::for_q(q, n);
        auto all = enumerate_field(F);
        CHECK(all.size() == expect);
        std::set<uint16_t> codes;
        for (auto& x : all) codes.insert(x.code());
        CHECK(codes.size() == expect);
    }
}

TEST_CASE("field axioms and frobenius on random triples") {
    for (auto [q, n] : {std::pair<uint32_t, uint32_t>{2, 2}, std::pair<uint32_t, uint32_t>{3, 2},
                        std::pair<uint32_t, uint32_t>{4, 2}, std::pair<uint32_t, uint32_t>{5, 1}}) {
        FieldCtx F = FieldCtx::for_q(q, n);
        std::mt19937_64 rng(7);
        for (int k = 0; k < 500; ++k) {
            uint16_t a = static_cast<uint16_t>(rng() % F.size());
            uint16_t b = static_cast<uint16_t>(rng() % F.size());
            uint16_t c = static_cast<uint16_t>(rng() % F.size());
            CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
            CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b)));
            CHECK(F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b)));
        }
    }
}

TEST_CASE("fixed field of frobenius is exactly F_q") {
    for (auto [q, n] : {std::pair<uint32_t, uint32_t>{2, 2}, std::pair<uint32_t, uint32_t>{3, 2},
                        std::pair<uint32_t, uint32_t>{2, 3}, std::pair<uint32_t, uint32_t>{3, 4}}) {
        FieldCtx F = FieldCtx::for_q(q, n);
        REQUIRE(F.size() <= 81);
        size_t fixed = 0;
        for (uint32_t c = 0; c < F.size(); ++c)
            if (F.rational(static_cast<uint16_t>(c))) ++fixed;
        CHECK(fixed == q);
        // sigma^n is the identity
        for (uint32_t c = 0; c < F.size(); ++c) {
            uint16_t x = static_cast<uint16_t>(c);
            for (uint32_t k = 0; k < n; ++k) x = F.frob(x);
            CHECK(x == c);
        }
    }
}

TEST_CASE("x^{q^n} = x and inverses throw on zero") {
    FieldCtx F = FieldCtx::for_q(3, 2);
    for (uint32_t c = 0; c < F.size(); ++c)
        CHECK(F.pow(static_cast<uint16_t>(c), F.size()) == c);
    CHECK_THROWS_AS(F.inv(0), DivisionByZero);
}

TEST_CASE("context limits") {
    CHECK_THROWS_AS(FieldCtx(4, 1, 1), ConfigError);  // 4 is not prime
    CHECK_THROWS_AS(FieldCtx(2, 1, 17), ConfigError); // beyond 2^16
    CHECK_THROWS_AS(FieldCtx::for_q(6, 1), ConfigError);
}
