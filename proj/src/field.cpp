#include "adlv/field.hpp"

#include <algorithm>
#include <numeric>

namespace adlv {

namespace {

bool is_prime(uint32_t m) {
    if (m < 2) return false;
    for (uint32_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// Dense polynomial arithmetic over F_p on digit vectors; construction-time only.
using PolyFp = std::vector<uint8_t>;

void trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyFp poly_mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PolyFp r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint8_t>((r[i + j] + a[i] * b[j]) % p);
    // reduce mod the monic f
    size_t d = f.size() - 1;
    for (size_t k = r.size(); k-- > d;) {
        uint8_t c = r[k];
        if (c == 0) continue;
        r[k] = 0;
        for (size_t j = 0; j < d; ++j)
            r[k - d + j] = static_cast<uint8_t>((r[k - d + j] + (p - 1u) * c % p * f[j]) % p);
    }
    r.resize(std::min(r.size(), d));
    trim(r);
    return r;
}

PolyFp poly_powmod(PolyFp base, uint64_t k, const PolyFp& f, uint32_t p) {
    PolyFp acc = {1};
    while (k) {
        if (k & 1) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        k >>= 1;
    }
    return acc;
}

PolyFp poly_gcd(PolyFp a, PolyFp b, uint32_t p) {
    auto inv_mod_p = [p](uint32_t x) {
        uint32_t r = 1;
        for (uint32_t k = p - 2; k; k >>= 1, x = x * x % p)
            if (k & 1) r = r * x % p;
        return r;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        uint32_t lead_inv = inv_mod_p(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            uint32_t c = a.back() * lead_inv % p;
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = static_cast<uint8_t>((a[shift + j] + (p - c) * b[j]) % p);
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<uint32_t> prime_divisors(uint32_t m) {
    std::vector<uint32_t> ps;
    for (uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            ps.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) ps.push_back(m);
    return ps;
}

// Rabin test: f (monic, degree d) is irreducible over F_p iff x^{p^d} = x mod f
// and x^{p^{d/r}} - x is coprime to f for every prime r | d.
bool irreducible(const PolyFp& f, uint32_t p) {
    size_t d = f.size() - 1;
    PolyFp x = {0, 1};
    auto x_pow_pk = [&](uint32_t k) {
        uint64_t e = 1;
        for (uint32_t i = 0; i < k; ++i) e *= p;
        return poly_powmod(x, e, f, p);
    };
    PolyFp top = x_pow_pk(static_cast<uint32_t>(d));
    PolyFp xred = x;
    if (d == 1) { // x mod f has degree 0
        xred = poly_mulmod(x, {1}, f, p);
    }
    if (top != xred) return false;
    for (uint32_t r : prime_divisors(static_cast<uint32_t>(d))) {
        PolyFp h = x_pow_pk(static_cast<uint32_t>(d / r));
        // h - x
        PolyFp diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<uint8_t>((diff[1] + p - 1) % p);
        trim(diff);
        PolyFp g = poly_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

FieldCtx::FieldCtx(uint32_t p, uint32_t e, uint32_t n) : p_(p), e_(e), n_(n) {
    if (!is_prime(p)) throw ConfigError("field characteristic must be prime");
    if (e == 0 || n == 0) throw ConfigError("field exponents must be positive");
    deg_ = e * n;
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) q *= p;
    uint64_t N = 1;
    for (uint32_t i = 0; i < deg_; ++i) {
        N *= p;
        if (N > 65536) throw ConfigError("field size q^n exceeds 2^16");
    }
    q_ = static_cast<uint32_t>(q);
    size_ = static_cast<uint32_t>(N);

    // lexicographically first monic irreducible of degree deg_ over F_p
    for (uint64_t code = 0;; ++code) {
        if (code >= N) throw ConfigError("no irreducible polynomial found");
        PolyFp f(deg_ + 1, 0);
        uint64_t c = code;
        for (uint32_t i = 0; i < deg_; ++i) {
            f[i] = static_cast<uint8_t>(c % p);
            c /= p;
        }
        f[deg_] = 1;
        if (irreducible(f, p)) {
            mod_ = f;
            break;
        }
    }

    if (size_ <= 4096) {
        addtab_.assign(static_cast<size_t>(size_) * size_, 0);
        for (uint32_t a = 0; a < size_; ++a)
            for (uint32_t b = 0; b < size_; ++b) {
                uint32_t s = 0, pw = 1, x = a, y = b;
                for (uint32_t i = 0; i < deg_; ++i) {
                    s += (x % p + y % p) % p * pw;
                    pw *= p;
                    x /= p;
                    y /= p;
                }
                addtab_[static_cast<size_t>(a) * size_ + b] = static_cast<uint16_t>(s);
            }
    }

    // discrete-log tables over the smallest primitive element
    log_.assign(size_, 0);
    exp_.assign(size_ > 1 ? size_ - 1 : 1, 1);
    uint32_t group = size_ - 1;
    auto ps = prime_divisors(group);
    for (uint32_t g = 1; g < size_; ++g) {
        if (group == 1) { gen_ = 1; break; }
        bool primitive = true;
        for (uint32_t r : ps) {
            // g^(group/r) via slow multiplication
            uint16_t acc = 1, base = static_cast<uint16_t>(g);
            uint32_t k = group / r;
            while (k) {
                if (k & 1) acc = slow_mul(acc, base);
                base = slow_mul(base, base);
                k >>= 1;
            }
            if (acc == 1) { primitive = false; break; }
        }
        if (primitive) { gen_ = static_cast<uint16_t>(g); break; }
    }
    if (gen_ == 0) throw ConfigError("no primitive element found");
    uint16_t cur = 1;
    for (uint32_t k = 0; k < group; ++k) {
        exp_[k] = cur;
        log_[cur] = k;
        cur = slow_mul(cur, gen_);
    }

    frob_.assign(size_, 0);
    for (uint32_t a = 1; a < size_; ++a) {
        uint64_t k = static_cast<uint64_t>(log_[a]) * q_ % (group == 0 ? 1 : group);
        frob_[a] = exp_[k];
    }
}

FieldCtx FieldCtx::for_q(uint32_t q, uint32_t n) {
    for (uint32_t p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        uint32_t e = 0;
        uint64_t v = 1;
        while (v < q) {
            v *= p;
            ++e;
        }
        if (v == q) return FieldCtx(p, e, n);
        if (q % p == 0) break;
    }
    throw ConfigError("q is not a prime power");
}

uint16_t FieldCtx::slow_mul(uint16_t a, uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    PolyFp pa(deg_, 0), pb(deg_, 0);
    uint32_t x = a, y = b;
    for (uint32_t i = 0; i < deg_; ++i) {
        pa[i] = static_cast<uint8_t>(x % p_);
        pb[i] = static_cast<uint8_t>(y % p_);
        x /= p_;
        y /= p_;
    }
    trim(pa);
    trim(pb);
    PolyFp r = poly_mulmod(pa, pb, mod_, p_);
    uint32_t code = 0, pw = 1;
    for (size_t i = 0; i < r.size(); ++i) {
        code += r[i] * pw;
        pw *= p_;
    }
    return static_cast<uint16_t>(code);
}

uint16_t FieldCtx::add(uint16_t a, uint16_t b) const {
    if (!addtab_.empty()) return addtab_[static_cast<size_t>(a) * size_ + b];
    uint32_t s = 0, pw = 1, x = a, y = b;
    for (uint32_t i = 0; i < deg_; ++i) {
        s += (x % p_ + y % p_) % p_ * pw;
        pw *= p_;
        x /= p_;
        y /= p_;
    }
    return static_cast<uint16_t>(s);
}

uint16_t FieldCtx::neg(uint16_t a) const {
    uint32_t s = 0, pw = 1, x = a;
    for (uint32_t i = 0; i < deg_; ++i) {
        s += (p_ - x % p_) % p_ * pw;
        pw *= p_;
        x /= p_;
    }
    return static_cast<uint16_t>(s);
}

uint16_t FieldCtx::sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }

uint16_t FieldCtx::mul(uint16_t a, uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t group = size_ - 1;
    uint32_t k = log_[a] + log_[b];
    if (k >= group) k -= group;
    return exp_[k];
}

uint16_t FieldCtx::inv(uint16_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero field element");
    uint32_t group = size_ - 1;
    return exp_[(group - log_[a]) % group];
}

uint16_t FieldCtx::pow(uint16_t a, uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    uint32_t group = size_ - 1;
    if (group == 0) return 1;
    return exp_[static_cast<uint64_t>(log_[a]) * (k % group) % group];
}

uint16_t FieldCtx::scalar(uint64_t m) const { return static_cast<uint16_t>(m % p_); }

std::vector<FieldElem> enumerate_field(const FieldCtx& F) {
    std::vector<FieldElem> out;
    out.reserve(F.size());
    for (uint32_t c = 0; c < F.size(); ++c) out.emplace_back(F, static_cast<uint16_t>(c));
    return out;
}

} // namespace adlv
