#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlv/field.hpp"

namespace adlv {

enum class SubgroupTag { G, Borel, Torus, LowerBorel, TorusNormalizer };

/// GL_2(F_q): element list, conjugacy classes, and the standard subgroups.
/// All class-function values in scope are rational integers, so inner
/// products are exact fractions over int64.
class FiniteGroupCtx {
  public:
    explicit FiniteGroupCtx(uint32_t q);

    uint32_t q() const { return F_->q(); }
    const FieldCtx& coeffs() const { return *F_; }
    uint32_t order() const { return static_cast<uint32_t>(elems_.size()); }
    const std::vector<uint32_t>& members(SubgroupTag t) const;
    uint32_t subgroup_order(SubgroupTag t) const { return static_cast<uint32_t>(members(t).size()); }

    uint32_t num_classes() const { return static_cast<uint32_t>(class_reps_.size()); }
    uint32_t class_of(uint32_t g) const { return class_of_[g]; }
    uint32_t class_rep(uint32_t c) const { return class_reps_[c]; }
    uint32_t class_size(uint32_t c) const { return class_sizes_[c]; }

    std::array<uint16_t, 4> entries(uint32_t g) const { return elems_[g]; }
    uint32_t mul(uint32_t x, uint32_t y) const;
    uint32_t inverse(uint32_t x) const { return inv_[x]; }
    uint32_t index_of(const std::array<uint16_t, 4>& m) const;
    uint16_t det(uint32_t g) const;

    /// Number of fixed points on P^1(F_q).
    int fixed_lines(uint32_t g) const;

  private:
    std::unique_ptr<FieldCtx> F_;
    std::vector<std::array<uint16_t, 4>> elems_;
    std::unordered_map<uint64_t, uint32_t> index_;
    std::vector<uint32_t> inv_;
    std::vector<uint32_t> class_of_, class_reps_, class_sizes_;
    std::vector<uint32_t> g_, borel_, torus_, lower_, normalizer_;
};

/// Integer-valued class function on GL_2(F_q).
struct ClassFunction {
    const FiniteGroupCtx* ctx = nullptr;
    std::vector<long long> by_class;

    long long value(uint32_t elem) const { return by_class[ctx->class_of(elem)]; }
    long long dim() const; // value at the identity
    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.by_class == b.by_class;
    }
};

/// Integer-valued function on a subgroup (not necessarily a class function
/// of the ambient group), indexed by position in members(H).
struct SubgroupFunction {
    const FiniteGroupCtx* ctx = nullptr;
    SubgroupTag H = SubgroupTag::G;
    std::vector<long long> values;
};

struct Frac {
    long long num = 0;
    long long den = 1;
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num * b.den == b.num * a.den;
    }
};

ClassFunction trivial_character(const FiniteGroupCtx& G);
/// Character of the permutation action on P^1(F_q).
ClassFunction perm_character_P1(const FiniteGroupCtx& G);
/// perm - trivial: the q-dimensional irreducible constituent.
ClassFunction steinberg_character(const FiniteGroupCtx& G);

/// Depth-1 characters used in the Hom shadows. Quadratic exists only for odd q.
enum class Depth1 { Trivial, Quadratic };
long long depth1_value(const FieldCtx& F, Depth1 chi, uint16_t x); // InvalidCharacter at q=2

SubgroupFunction trivial_on(const FiniteGroupCtx& G, SubgroupTag H);
/// chi1 (x) chi2 on diag(a, d); also its pullback to the Borel.
SubgroupFunction torus_character(const FiniteGroupCtx& G, Depth1 chi1, Depth1 chi2);
SubgroupFunction borel_character(const FiniteGroupCtx& G, Depth1 chi1, Depth1 chi2);
SubgroupFunction restrict_to(const FiniteGroupCtx& G, SubgroupTag H, const ClassFunction& f);

ClassFunction det_character(const FiniteGroupCtx& G, Depth1 phi);
ClassFunction twisted_steinberg(const FiniteGroupCtx& G, Depth1 phi);

/// Averages f over H-conjugation (times |H|), producing a class function
/// of the subgroup with integer values.
SubgroupFunction symmetrize(const FiniteGroupCtx& G, const SubgroupFunction& f);

/// Standard induced character from H to the full group. Requires f to be a
/// class function of H.
ClassFunction induce(const FiniteGroupCtx& G, const SubgroupFunction& f);
/// Induced character landing in an intermediate subgroup K >= H.
SubgroupFunction induce_to(const FiniteGroupCtx& G, SubgroupTag K, const SubgroupFunction& f);

Frac inner_product(const FiniteGroupCtx& G, const ClassFunction& a, const ClassFunction& b);
Frac inner_product_on(const FiniteGroupCtx& G, SubgroupTag H, const SubgroupFunction& a,
                      const SubgroupFunction& b);
Frac inner_product_on(const FiniteGroupCtx& G, SubgroupTag H, const SubgroupFunction& a,
                      const ClassFunction& b);

/// St|_B == Ind_T^B 1 as functions on the Borel.
bool mackey_restriction_check(const FiniteGroupCtx& G);

enum class ShadowSource { TrivialOnK, SteinbergOnK };
enum class ShadowTarget { PrincipalSeries, OneDimensional, TwistedSteinberg };
/// Finite Hom-dimension over GL_2(F_q) mirroring the depth-1 reduction steps
/// of the Hom theorems; `unramified` selects the trivial depth-1 character,
/// otherwise the quadratic one (InvalidCharacter at q = 2).
long long finite_hom_shadow(const FiniteGroupCtx& G, ShadowSource src, ShadowTarget tgt,
                            bool unramified);

const char* shadow_source_name(ShadowSource s);
const char* shadow_target_name(ShadowTarget t);

} // namespace adlv
