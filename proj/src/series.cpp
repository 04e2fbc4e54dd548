#include "adlv/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace adlv {

namespace {
int add_clamped(int a, int b) {
    if (a >= TruncatedSeries::kInf || b >= TruncatedSeries::kInf) return TruncatedSeries::kInf;
    return a + b;
}
} // namespace

void TruncatedSeries::normalize() {
    // drop coefficients at or beyond the precision bound
    if (prec_ != kInf && lo_ + static_cast<int>(c_.size()) > prec_) {
        int keep = prec_ - lo_;
        c_.resize(keep > 0 ? static_cast<uint32_t>(keep) : 0);
    }
    uint32_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        lo_ = prec_;
        return;
    }
    uint32_t tail = c_.size();
    while (tail > lead && c_[tail - 1] == 0) --tail;
    if (lead > 0) {
        for (uint32_t i = lead; i < tail; ++i) c_[i - lead] = c_[i];
    }
    c_.resize(tail - lead);
    lo_ += static_cast<int>(lead);
}

TruncatedSeries TruncatedSeries::monomial(const FieldCtx& F, uint16_t c, int e, int prec) {
    TruncatedSeries r(F, prec);
    if (c != 0 && e < prec) {
        r.lo_ = e;
        r.c_.push_back(c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::from_coeffs(const FieldCtx& F, int lo, const std::vector<uint16_t>& coeffs,
                                             int prec) {
    TruncatedSeries r(F, prec);
    r.lo_ = lo;
    for (uint16_t c : coeffs) r.c_.push_back(c);
    r.normalize();
    return r;
}

int TruncatedSeries::valuation() const {
    if (!c_.empty()) return lo_;
    if (prec_ == kInf) return kInf;
    throw PrecisionExhausted("valuation undetermined: all tracked coefficients vanish");
}

uint16_t TruncatedSeries::coeff(int e) const {
    if (e >= prec_) throw PrecisionExhausted("coefficient beyond precision");
    if (c_.empty() || e < lo_ || e >= lo_ + static_cast<int>(c_.size())) return 0;
    return c_[static_cast<uint32_t>(e - lo_)];
}

TruncatedSeries TruncatedSeries::truncated(int new_prec) const {
    TruncatedSeries r = *this;
    if (new_prec < r.prec_) {
        r.prec_ = new_prec;
        r.normalize();
    }
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    TruncatedSeries r = *this;
    if (r.prec_ != kInf) r.prec_ += k;
    r.lo_ = r.c_.empty() ? r.prec_ : r.lo_ + k;
    return r;
}

TruncatedSeries TruncatedSeries::scaled(uint16_t c) const {
    if (c == 0) {
        // known-zero value, but an unknown tail stays unknown
        TruncatedSeries r(*F_, prec_);
        return r;
    }
    TruncatedSeries r = *this;
    for (uint32_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_->mul(r.c_[i], c);
    return r;
}

TruncatedSeries TruncatedSeries::sigma() const {
    TruncatedSeries r = *this;
    for (uint32_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_->frob(r.c_[i]);
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const FieldCtx& F = a.field();
    int prec = std::min(a.prec_, b.prec_);
    TruncatedSeries r(F, prec);
    if (a.c_.empty() && b.c_.empty()) return r;
    int lo = TruncatedSeries::kInf, hi = -TruncatedSeries::kInf;
    if (!a.c_.empty()) {
        lo = a.lo_;
        hi = a.lo_ + static_cast<int>(a.c_.size());
    }
    if (!b.c_.empty()) {
        lo = std::min(lo, b.lo_);
        hi = std::max(hi, b.lo_ + static_cast<int>(b.c_.size()));
    }
    hi = std::min(hi, prec);
    r.lo_ = lo;
    for (int e = lo; e < hi; ++e) {
        uint16_t x = (e >= a.lo_ && e < a.lo_ + static_cast<int>(a.c_.size())) ? a.c_[e - a.lo_] : 0;
        uint16_t y = (e >= b.lo_ && e < b.lo_ + static_cast<int>(b.c_.size())) ? b.c_[e - b.lo_] : 0;
        r.c_.push_back(F.add(x, y));
    }
    r.normalize();
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (uint32_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F_->neg(r.c_[i]);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const FieldCtx& F = a.field();
    if (a.exact_zero() || b.exact_zero()) return TruncatedSeries::zero(F);
    // val lower bound of each factor is lo_ (== prec for unknown zeros)
    int prec = std::min(add_clamped(a.lo_, b.prec_), add_clamped(b.lo_, a.prec_));
    TruncatedSeries r(F, prec);
    if (a.c_.empty() || b.c_.empty()) return r; // unknown zero
    int lo = a.lo_ + b.lo_;
    int hi = lo + static_cast<int>(a.c_.size() + b.c_.size()) - 1;
    if (prec != TruncatedSeries::kInf) hi = std::min(hi, prec);
    if (hi <= lo) return r;
    r.lo_ = lo;
    r.c_.resize(static_cast<uint32_t>(hi - lo), 0);
    for (uint32_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (uint32_t j = 0; j < b.c_.size(); ++j) {
            int e = static_cast<int>(i + j);
            if (e >= hi - lo) break;
            r.c_[e] = F.add(r.c_[e], F.mul(a.c_[i], b.c_[j]));
        }
    }
    r.normalize();
    return r;
}

bool agrees(const TruncatedSeries& a, const TruncatedSeries& b) {
    int prec = std::min(a.prec(), b.prec());
    TruncatedSeries d = (a - b).truncated(prec);
    return !d.known_nonzero();
}

TruncatedSeries div_to(const TruncatedSeries& a, const TruncatedSeries& b, int cap) {
    const FieldCtx& F = a.field();
    if (b.exact_zero()) throw DivisionByZero("series division by certified zero");
    if (b.unknown_zero()) throw PrecisionExhausted("divisor has no tracked leading coefficient");
    if (a.exact_zero()) return TruncatedSeries::zero(F);
    int vb = b.lo_;
    int prec = std::min(cap, std::min(add_clamped(a.prec_, -vb), add_clamped(b.prec_, a.lo_ - 2 * vb)));
    if (a.unknown_zero()) return TruncatedSeries::unknown(F, prec);

    int vq = a.lo_ - vb;
    if (prec != TruncatedSeries::kInf && vq >= prec) return TruncatedSeries::unknown(F, prec);

    uint16_t linv = F.inv(b.leading());
    // long division; rem holds a - q*b over the window that still matters
    TruncatedSeries rem = a;
    TruncatedSeries q(F, prec);
    q.lo_ = vq;
    int e = vq;
    while (true) {
        if (prec != TruncatedSeries::kInf && e >= prec) break;
        if (rem.c_.empty()) break; // division came out exact
        if (prec == TruncatedSeries::kInf && e - vq >= static_cast<int>(TruncatedSeries::kCap))
            throw PrecisionExhausted("unbounded exact division; supply a cap");
        int need = e + vb;
        uint16_t cr = (need == rem.lo_) ? rem.c_[0] : 0;
        if (need < rem.lo_) cr = 0;
        uint16_t qc = F.mul(cr, linv);
        q.c_.push_back(qc);
        if (qc != 0) rem = rem - b.shifted(e).scaled(qc);
        ++e;
    }
    if (prec == TruncatedSeries::kInf && !rem.c_.empty()) {
        // ran to cap without terminating (cannot happen: loop above throws)
        throw PrecisionExhausted("exact division did not terminate");
    }
    // If we stopped at a finite bound the quotient is only known to that bound.
    q.normalize();
    return q;
}

TruncatedSeries invert(const TruncatedSeries& x, int cap) {
    const FieldCtx& F = x.field();
    if (x.exact_zero()) throw DivisionByZero("inverse of certified zero series");
    if (x.unknown_zero()) throw PrecisionExhausted("inverse of series with unknown leading term");
    if (x.exact() && x.length() == 1) // monomial: exact inverse
        return TruncatedSeries::monomial(F, F.inv(x.leading()), -x.lo());
    if (x.exact() && cap == TruncatedSeries::kInf)
        throw std::invalid_argument("invert of an exact non-monomial series requires a cap");
    return div_to(TruncatedSeries::one(F), x, cap);
}

std::string TruncatedSeries::str() const {
    if (exact_zero()) return "0";
    std::ostringstream os;
    if (unknown_zero()) {
        os << "O(t^" << prec_ << ")";
        return os.str();
    }
    os << "t^" << lo_ << "*(";
    for (uint32_t i = 0; i < c_.size(); ++i) {
        if (i) os << " + ";
        os << c_[i];
        if (i == 1) os << "*t";
        if (i > 1) os << "*t^" << i;
    }
    os << ")";
    if (prec_ != kInf) os << " + O(t^" << prec_ << ")";
    return os.str();
}

TruncatedSeries TruncatedSeries::parse(const FieldCtx& F, const std::string& s) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto read_int = [&]() -> long {
        skip_ws();
        size_t j = i;
        if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
        size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw std::invalid_argument("series parse: expected integer in '" + s + "'");
        long v = std::stol(s.substr(i, k - i));
        i = k;
        return v;
    };
    auto expect = [&](const std::string& tok) {
        skip_ws();
        if (s.compare(i, tok.size(), tok) != 0)
            throw std::invalid_argument("series parse: expected '" + tok + "' in '" + s + "'");
        i += tok.size();
    };
    skip_ws();
    if (s.compare(i, 1, "0") == 0 && i + 1 >= s.size()) return zero(F);
    if (s.compare(i, 4, "O(t^") == 0) {
        i += 4;
        long prec = read_int();
        expect(")");
        return unknown(F, static_cast<int>(prec));
    }
    expect("t^");
    long lo = read_int();
    expect("*");
    expect("(");
    std::vector<uint16_t> coeffs;
    while (true) {
        long c = read_int();
        coeffs.push_back(static_cast<uint16_t>(c));
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            expect("t");
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                long e = read_int();
                if (e != static_cast<long>(coeffs.size()) - 1)
                    throw std::invalid_argument("series parse: exponent mismatch in '" + s + "'");
            }
        }
        skip_ws();
        if (i < s.size() && s[i] == '+' && s.compare(i, 4, "+ O(") != 0 && s.compare(i, 3, "+O(") != 0) {
            ++i;
            continue;
        }
        break;
    }
    expect(")");
    int prec = kInf;
    skip_ws();
    if (i < s.size()) {
        expect("+");
        expect("O(t^");
        prec = static_cast<int>(read_int());
        expect(")");
    }
    return from_coeffs(F, static_cast<int>(lo), coeffs, prec);
}

} // namespace adlv
