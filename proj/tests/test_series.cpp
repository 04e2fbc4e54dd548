#include <doctest.h>

#include <random>

#include "adlv/series.hpp"

using namespace adlv;

namespace {
TruncatedSeries poly(const FieldCtx& F, int lo, std::vector<uint16_t> cs,
                     int prec = TruncatedSeries::kInf) {
    return TruncatedSeries::from_coeffs(F, lo, cs, prec);
}
} // namespace

TEST_CASE("valuation basics") {
    FieldCtx F = FieldCtx::for_q(2, 1);
    CHECK(poly(F, 3, {1, 0, 1}).valuation() == 3); // t^3 + t^5
    CHECK(TruncatedSeries::zero(F).valuation() == TruncatedSeries::kInf);
    // (1 + t)(1 - t) has constant term 1
    TruncatedSeries a = poly(F, 0, {1, 1});
    TruncatedSeries b = poly(F, 0, {1, F.neg(1)});
    CHECK((a * b).valuation() == 0);
    CHECK_THROWS_AS(TruncatedSeries::unknown(F, 5).valuation(), PrecisionExhausted);
}

TEST_CASE("sigma acts coefficientwise") {
    FieldCtx F = FieldCtx::for_q(2, 2);
    // rational coefficients are fixed
    TruncatedSeries r = poly(F, -1, {1, 0, 1});
    CHECK(sigma_series(r) == r);
    // a * t with a a generator of F_4 maps to a^2 * t
    uint16_t a = 2;
    TruncatedSeries x = TruncatedSeries::monomial(F, a, 1);
    CHECK(sigma_series(x) == TruncatedSeries::monomial(F, F.mul(a, a), 1));
    CHECK(sigma_series(TruncatedSeries::zero(F)).exact_zero());
}

TEST_CASE("invert basics") {
    FieldCtx F = FieldCtx::for_q(2, 1);
    CHECK(invert(TruncatedSeries::one(F)) == TruncatedSeries::one(F));
    // t -> t^-1, exactly
    TruncatedSeries t = TruncatedSeries::monomial(F, 1, 1);
    CHECK(invert(t) == TruncatedSeries::monomial(F, 1, -1));
    // 1 + t -> alternating geometric series, checked by multiplying back
    TruncatedSeries g = poly(F, 0, {1, 1});
    TruncatedSeries gi = invert(g, 12);
    CHECK(agrees(g * gi, TruncatedSeries::one(F)));
    CHECK(gi.prec() == 12);
    for (int e = 0; e < 12; ++e) CHECK(gi.coeff(e) == 1); // 1/(1+t) = 1 + t + ... over F_2
    CHECK_THROWS_AS(invert(TruncatedSeries::zero(F)), DivisionByZero);
    CHECK_THROWS_AS(invert(TruncatedSeries::unknown(F, 4)), PrecisionExhausted);
}

TEST_CASE("valuation laws and inverses on random elements") {
    FieldCtx F = FieldCtx::for_q(3, 2);
    std::mt19937_64 rng(99);
    auto random_nonzero = [&](int prec) {
        for (;;) {
            int lo = static_cast<int>(rng() % 7) - 3;
            std::vector<uint16_t> cs;
            for (int i = 0; i < 5; ++i) cs.push_back(static_cast<uint16_t>(rng() % F.size()));
            TruncatedSeries s = poly(F, lo, cs, prec == 0 ? TruncatedSeries::kInf : lo + prec);
            if (s.known_nonzero()) return s;
        }
    };
    for (int k = 0; k < 1000; ++k) {
        TruncatedSeries x = random_nonzero(8), y = random_nonzero(8);
        CHECK((x * y).valuation() == x.valuation() + y.valuation());
        TruncatedSeries s = x + y;
        if (x.valuation() != y.valuation())
            CHECK(s.valuation() == std::min(x.valuation(), y.valuation()));
        TruncatedSeries xi = invert(x, 10);
        CHECK(agrees(x * xi, TruncatedSeries::one(F)));
        CHECK(agrees(xi * x, TruncatedSeries::one(F)));
    }
}

TEST_CASE("division tracks precision") {
    FieldCtx F = FieldCtx::for_q(2, 1);
    // quotient of exact polynomials terminating exactly
    TruncatedSeries num = poly(F, 0, {1, 0, 1}); // 1 + t^2 = (1+t)^2 over F_2
    TruncatedSeries den = poly(F, 0, {1, 1});
    TruncatedSeries q = div_to(num, den, 10);
    CHECK(agrees(q * den, num));
    // truncated divisor limits the quotient precision
    TruncatedSeries den2 = poly(F, 0, {1, 1}, 4);
    TruncatedSeries q2 = div_to(TruncatedSeries::one(F), den2, 100);
    CHECK(q2.prec() == 4);
    // a/b * b agrees with a within the common window
    TruncatedSeries a = poly(F, 2, {1, 1, 0, 1}, 9);
    TruncatedSeries q3 = div_to(a, den, 20);
    CHECK(agrees(q3 * den, a));
}

TEST_CASE("exact division of products terminates on the factor") {
    FieldCtx F = FieldCtx::for_q(3, 2);
    std::mt19937_64 rng(31);
    for (int k = 0; k < 300; ++k) {
        auto rand_poly = [&](bool nonzero) {
            for (;;) {
                int lo = static_cast<int>(rng() % 7) - 3;
                std::vector<uint16_t> cs;
                for (int i = 0; i < 4; ++i) cs.push_back(static_cast<uint16_t>(rng() % F.size()));
                TruncatedSeries s = TruncatedSeries::from_coeffs(F, lo, cs);
                if (!nonzero || s.known_nonzero()) return s;
            }
        };
        TruncatedSeries x = rand_poly(true), y = rand_poly(true);
        TruncatedSeries q = div_to(x * y, y, 40);
        // the quotient carries the full window and restricts to x on it
        CHECK(agrees(q, x));
        CHECK(q.prec() >= 30);
    }
}

TEST_CASE("string form round-trips") {
    FieldCtx F = FieldCtx::for_q(3, 2);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        int lo = static_cast<int>(rng() % 9) - 4;
        std::vector<uint16_t> cs;
        for (int i = 0; i < 4; ++i) cs.push_back(static_cast<uint16_t>(rng() % F.size()));
        int prec = (k % 3 == 0) ? TruncatedSeries::kInf : lo + 6;
        TruncatedSeries s = poly(F, lo, cs, prec);
        CHECK(TruncatedSeries::parse(F, s.str()) == s);
    }
    CHECK(TruncatedSeries::parse(F, "0").exact_zero());
    CHECK(TruncatedSeries::parse(F, "O(t^7)").unknown_zero());
    CHECK(TruncatedSeries::parse(F, "t^-2*(3 + 1*t) + O(t^5)").prec() == 5);
}

TEST_CASE("arithmetic keeps certified zeros distinct from unknown zeros") {
    FieldCtx F = FieldCtx::for_q(2, 1);
    TruncatedSeries x = poly(F, 0, {1, 1}, 6);
    TruncatedSeries d = x - x;
    CHECK(d.unknown_zero());
    CHECK(d.prec() == 6);
    TruncatedSeries z = TruncatedSeries::zero(F) * TruncatedSeries::unknown(F, 3);
    CHECK(z.exact_zero());
}
