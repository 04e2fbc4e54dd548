#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adlv/errors.hpp"

namespace adlv {

/// Arithmetic context for the tower F_p <= F_q <= F_{q^n}, q = p^e.
///
/// Elements are codes in [0, p^{e*n}); the base-p digits of a code are the
/// coordinates in the power basis of F_p[x]/(f), where f is the
/// lexicographically first monic irreducible polynomial of degree e*n over
/// F_p (coefficients read as a base-p integer, constant digit least
/// significant). Multiplication and inversion go through discrete-log tables
/// over the smallest primitive element; the q-power map is tabulated.
///
/// Immutable after construction; all operations are const and thread-safe.
class FieldCtx {
  public:
    FieldCtx(uint32_t p, uint32_t e, uint32_t n);

    /// Builds a context from a prime power q = p^e and extension degree n.
    static FieldCtx for_q(uint32_t q, uint32_t n);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t n() const { return n_; }
    uint32_t q() const { return q_; }
    uint32_t size() const { return size_; } // q^n
    uint32_t degree() const { return deg_; } // e*n over F_p
    const std::vector<uint8_t>& modulus() const { return mod_; }

    uint16_t add(uint16_t a, uint16_t b) const;
    uint16_t sub(uint16_t a, uint16_t b) const;
    uint16_t neg(uint16_t a) const;
    uint16_t mul(uint16_t a, uint16_t b) const;
    uint16_t inv(uint16_t a) const; // DivisionByZero on 0
    uint16_t pow(uint16_t a, uint64_t k) const;
    /// x -> x^q (the relative Frobenius of F_{q^n}/F_q).
    uint16_t frob(uint16_t a) const { return frob_[a]; }
    /// True iff a is fixed by frob, i.e. lies in the q-element subfield.
    bool rational(uint16_t a) const { return frob_[a] == a; }
    /// Canonical image of a small integer (repeated addition of 1).
    uint16_t scalar(uint64_t m) const;
    uint16_t generator() const { return gen_; }

  private:
    uint32_t p_, e_, n_, q_, deg_, size_;
    std::vector<uint8_t> mod_;     // f, deg_+1 coefficients, monic
    std::vector<uint16_t> exp_;    // exp_[k] = g^k, k in [0, size-1)
    std::vector<uint32_t> log_;    // inverse of exp_ on nonzero codes
    std::vector<uint16_t> frob_;   // x -> x^q
    std::vector<uint16_t> addtab_; // full add table when size_ is small
    uint16_t gen_ = 0;

    uint16_t slow_mul(uint16_t a, uint16_t b) const;
};

/// Value type over a FieldCtx. Mixing elements of different contexts is a
/// programming error (checked by assert-style throws in debug paths).
class FieldElem {
  public:
    FieldElem() : F_(nullptr), v_(0) {}
    FieldElem(const FieldCtx& F, uint16_t code) : F_(&F), v_(code) {}

    uint16_t code() const { return v_; }
    const FieldCtx& field() const { return *F_; }

    bool is_zero() const { return v_ == 0; }
    bool rational() const { return F_->rational(v_); }

    friend FieldElem operator+(FieldElem a, FieldElem b) { return {*a.F_, a.F_->add(a.v_, b.v_)}; }
    friend FieldElem operator-(FieldElem a, FieldElem b) { return {*a.F_, a.F_->sub(a.v_, b.v_)}; }
    friend FieldElem operator*(FieldElem a, FieldElem b) { return {*a.F_, a.F_->mul(a.v_, b.v_)}; }
    friend FieldElem operator/(FieldElem a, FieldElem b) { return {*a.F_, a.F_->mul(a.v_, b.F_->inv(b.v_))}; }
    FieldElem operator-() const { return {*F_, F_->neg(v_)}; }
    FieldElem inverse() const { return {*F_, F_->inv(v_)}; }
    FieldElem pow(uint64_t k) const { return {*F_, F_->pow(v_, k)}; }

    friend bool operator==(FieldElem a, FieldElem b) { return a.v_ == b.v_; }
    friend bool operator!=(FieldElem a, FieldElem b) { return a.v_ != b.v_; }

  private:
    const FieldCtx* F_;
    uint16_t v_;
};

/// x -> x^q.
inline FieldElem frobenius(FieldElem x) { return {x.field(), x.field().frob(x.code())}; }

/// All q^n elements, each exactly once (code order).
std::vector<FieldElem> enumerate_field(const FieldCtx& F);

} // namespace adlv
