#pragma once

#include "adlv/series.hpp"

namespace adlv {

/// 2x2 matrix over truncated Laurent series, row-major.
struct Mat2 {
    TruncatedSeries a, b, c, d;

    static Mat2 identity(const FieldCtx& F) {
        return {TruncatedSeries::one(F), TruncatedSeries::zero(F), TruncatedSeries::zero(F),
                TruncatedSeries::one(F)};
    }
    /// diag(t^i, t^j)
    static Mat2 diag_t(const FieldCtx& F, int i, int j) {
        return {TruncatedSeries::monomial(F, 1, i), TruncatedSeries::zero(F), TruncatedSeries::zero(F),
                TruncatedSeries::monomial(F, 1, j)};
    }

    TruncatedSeries det() const { return a * d - b * c; }
    Mat2 adjugate() const { return {d, -b, -c, a}; }
    Mat2 sigma() const { return {a.sigma(), b.sigma(), c.sigma(), d.sigma()}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

} // namespace adlv
