#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>

#include "adlv/errors.hpp"
#include "adlv/field.hpp"

namespace adlv {

/// Fixed-capacity coefficient buffer. Trivially copyable; overflowing the
/// capacity indicates a computation outside the supported window budget.
template <class T, unsigned Cap>
struct InlineVec {
    std::array<T, Cap> d{};
    uint32_t n = 0;

    uint32_t size() const { return n; }
    bool empty() const { return n == 0; }
    T operator[](uint32_t i) const { return d[i]; }
    T& operator[](uint32_t i) { return d[i]; }
    void clear() { n = 0; }
    void push_back(T v) {
        if (n >= Cap) throw PrecisionExhausted("coefficient window capacity exceeded");
        d[n++] = v;
    }
    void resize(uint32_t m, T fill = T{}) {
        if (m > Cap) throw PrecisionExhausted("coefficient window capacity exceeded");
        for (uint32_t i = n; i < m; ++i) d[i] = fill;
        n = m;
    }
    friend bool operator==(const InlineVec& a, const InlineVec& b) {
        if (a.n != b.n) return false;
        for (uint32_t i = 0; i < a.n; ++i)
            if (a.d[i] != b.d[i]) return false;
        return true;
    }
};

/// Element of F_{q^n}((t)) tracked to a finite absolute precision.
///
/// States:
///   exact zero       -- certified 0 (prec = kInf, no coefficients);
///   O(t^N)           -- all tracked coefficients zero, nothing certified
///                       (no coefficients, prec = N finite);
///   nonzero          -- coefficients for exponents [val, val+len), leading
///                       and trailing coefficient nonzero; exponents >= prec
///                       are unknown, exponents in between are exactly zero.
/// prec = kInf marks an exact Laurent polynomial.
class TruncatedSeries {
  public:
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;
    static constexpr unsigned kCap = 96;

    static TruncatedSeries zero(const FieldCtx& F) { return TruncatedSeries(F, kInf); }
    static TruncatedSeries unknown(const FieldCtx& F, int prec) { return TruncatedSeries(F, prec); }
    static TruncatedSeries monomial(const FieldCtx& F, uint16_t c, int e, int prec = kInf);
    static TruncatedSeries one(const FieldCtx& F) { return monomial(F, 1, 0); }
    /// coeffs[i] is the coefficient of t^(lo+i).
    static TruncatedSeries from_coeffs(const FieldCtx& F, int lo, const std::vector<uint16_t>& coeffs,
                                       int prec = kInf);

    const FieldCtx& field() const { return *F_; }
    int prec() const { return prec_; }
    bool exact() const { return prec_ == kInf; }
    bool exact_zero() const { return c_.empty() && prec_ == kInf; }
    bool unknown_zero() const { return c_.empty() && prec_ != kInf; }
    bool known_nonzero() const { return !c_.empty(); }

    /// Valuation; kInf for the exact zero. PrecisionExhausted when no nonzero
    /// coefficient is tracked but the element is not certified zero.
    int valuation() const;
    /// Leading coefficient code (valuation() must be finite).
    uint16_t leading() const { return c_[0]; }
    /// Coefficient of t^e; throws PrecisionExhausted for e >= prec.
    uint16_t coeff(int e) const;
    int lo() const { return lo_; }
    uint32_t length() const { return c_.size(); }

    TruncatedSeries truncated(int new_prec) const;
    TruncatedSeries shifted(int k) const;            // * t^k
    TruncatedSeries scaled(uint16_t c) const;        // * constant
    TruncatedSeries sigma() const;                   // coefficientwise x -> x^q

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;

    /// Structural equality (same value, precision and certification state).
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.lo_ == b.lo_ && a.prec_ == b.prec_ && a.c_ == b.c_;
    }

    std::string str() const;
    static TruncatedSeries parse(const FieldCtx& F, const std::string& s);

  private:
    TruncatedSeries(const FieldCtx& F, int prec) : F_(&F), lo_(prec), prec_(prec) {}

    const FieldCtx* F_;
    int lo_ = 0;   // exponent of c_[0]; equals prec_ when c_ is empty
    int prec_ = kInf;
    InlineVec<uint16_t, kCap> c_;

    void normalize();
    friend TruncatedSeries div_to(const TruncatedSeries&, const TruncatedSeries&, int);
};

/// True when a and b have identical known coefficients below min(prec a, prec b).
bool agrees(const TruncatedSeries& a, const TruncatedSeries& b);

/// Quotient a/b computed for exponents < cap (and never beyond what the
/// operand precisions justify). DivisionByZero on certified-zero b,
/// PrecisionExhausted when b has no tracked leading term.
TruncatedSeries div_to(const TruncatedSeries& a, const TruncatedSeries& b, int cap);

/// Two-sided inverse up to precision. For inputs of infinite precision a cap
/// must bound the expansion unless the input is a monomial.
TruncatedSeries invert(const TruncatedSeries& x, int cap = TruncatedSeries::kInf);

/// Coefficientwise q-power Frobenius.
inline TruncatedSeries sigma_series(const TruncatedSeries& x) { return x.sigma(); }

} // namespace adlv
