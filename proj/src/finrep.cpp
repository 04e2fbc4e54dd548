#include "adlv/finrep.hpp"

#include <algorithm>
#include <numeric>

namespace adlv {

namespace {
uint64_t pack(const std::array<uint16_t, 4>& m) {
    return (static_cast<uint64_t>(m[0]) << 48) | (static_cast<uint64_t>(m[1]) << 32) |
           (static_cast<uint64_t>(m[2]) << 16) | m[3];
}
} // namespace

FiniteGroupCtx::FiniteGroupCtx(uint32_t q) : F_(std::make_unique<FieldCtx>(FieldCtx::for_q(q, 1))) {
    const FieldCtx& F = *F_;
    uint32_t N = F.size();
    for (uint32_t a = 0; a < N; ++a)
        for (uint32_t b = 0; b < N; ++b)
            for (uint32_t c = 0; c < N; ++c)
                for (uint32_t d = 0; d < N; ++d) {
                    uint16_t det = F.sub(F.mul(a, d), F.mul(b, c));
                    if (det == 0) continue;
                    std::array<uint16_t, 4> m{static_cast<uint16_t>(a), static_cast<uint16_t>(b),
                                              static_cast<uint16_t>(c), static_cast<uint16_t>(d)};
                    index_[pack(m)] = static_cast<uint32_t>(elems_.size());
                    elems_.push_back(m);
                }

    inv_.resize(elems_.size());
    for (uint32_t g = 0; g < elems_.size(); ++g) {
        auto m = elems_[g];
        uint16_t det = F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]));
        uint16_t di = F.inv(det);
        std::array<uint16_t, 4> w{F.mul(m[3], di), F.mul(F.neg(m[1]), di), F.mul(F.neg(m[2]), di),
                                  F.mul(m[0], di)};
        inv_[g] = index_.at(pack(w));
    }

    // conjugacy classes by orbit scan
    class_of_.assign(elems_.size(), UINT32_MAX);
    for (uint32_t g = 0; g < elems_.size(); ++g) {
        if (class_of_[g] != UINT32_MAX) continue;
        uint32_t cls = static_cast<uint32_t>(class_reps_.size());
        class_reps_.push_back(g);
        uint32_t count = 0;
        for (uint32_t x = 0; x < elems_.size(); ++x) {
            uint32_t y = mul(mul(x, g), inv_[x]);
            if (class_of_[y] == UINT32_MAX) {
                class_of_[y] = cls;
                ++count;
            }
        }
        class_sizes_.push_back(count);
    }

    for (uint32_t g = 0; g < elems_.size(); ++g) {
        auto m = elems_[g];
        g_.push_back(g);
        if (m[2] == 0) borel_.push_back(g);
        if (m[1] == 0) lower_.push_back(g);
        if (m[1] == 0 && m[2] == 0) torus_.push_back(g);
        if ((m[1] == 0 && m[2] == 0) || (m[0] == 0 && m[3] == 0)) normalizer_.push_back(g);
    }
}

const std::vector<uint32_t>& FiniteGroupCtx::members(SubgroupTag t) const {
    switch (t) {
        case SubgroupTag::G: return g_;
        case SubgroupTag::Borel: return borel_;
        case SubgroupTag::Torus: return torus_;
        case SubgroupTag::LowerBorel: return lower_;
        case SubgroupTag::TorusNormalizer: return normalizer_;
    }
    throw UnsupportedSubgroup("unknown subgroup tag");
}

uint32_t FiniteGroupCtx::mul(uint32_t x, uint32_t y) const {
    const FieldCtx& F = *F_;
    auto a = elems_[x];
    auto b = elems_[y];
    std::array<uint16_t, 4> m{
        F.add(F.mul(a[0], b[0]), F.mul(a[1], b[2])), F.add(F.mul(a[0], b[1]), F.mul(a[1], b[3])),
        F.add(F.mul(a[2], b[0]), F.mul(a[3], b[2])), F.add(F.mul(a[2], b[1]), F.mul(a[3], b[3]))};
    return index_.at(pack(m));
}

uint32_t FiniteGroupCtx::index_of(const std::array<uint16_t, 4>& m) const { return index_.at(pack(m)); }

uint16_t FiniteGroupCtx::det(uint32_t g) const {
    auto m = elems_[g];
    return F_->sub(F_->mul(m[0], m[3]), F_->mul(m[1], m[2]));
}

int FiniteGroupCtx::fixed_lines(uint32_t g) const {
    const FieldCtx& F = *F_;
    auto m = elems_[g];
    int fixed = 0;
    // lines (1 : z) and (0 : 1)
    for (uint32_t z = 0; z < F.size(); ++z) {
        uint16_t x = F.add(m[0], F.mul(m[1], static_cast<uint16_t>(z)));
        uint16_t y = F.add(m[2], F.mul(m[3], static_cast<uint16_t>(z)));
        // image of (1, z); fixed iff y == z * x with x != 0
        if (x != 0 && y == F.mul(static_cast<uint16_t>(z), x)) ++fixed;
    }
    if (m[1] == 0) ++fixed; // (0 : 1) fixed iff b == 0
    return fixed;
}

long long ClassFunction::dim() const {
    uint32_t id = ctx->index_of({1, 0, 0, 1});
    return value(id);
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction r = a;
    for (size_t i = 0; i < r.by_class.size(); ++i) r.by_class[i] += b.by_class[i];
    return r;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction r = a;
    for (size_t i = 0; i < r.by_class.size(); ++i) r.by_class[i] -= b.by_class[i];
    return r;
}

ClassFunction trivial_character(const FiniteGroupCtx& G) {
    return {&G, std::vector<long long>(G.num_classes(), 1)};
}

ClassFunction perm_character_P1(const FiniteGroupCtx& G) {
    ClassFunction f{&G, std::vector<long long>(G.num_classes(), 0)};
    for (uint32_t c = 0; c < G.num_classes(); ++c) f.by_class[c] = G.fixed_lines(G.class_rep(c));
    return f;
}

ClassFunction steinberg_character(const FiniteGroupCtx& G) {
    return perm_character_P1(G) - trivial_character(G);
}

long long depth1_value(const FieldCtx& F, Depth1 chi, uint16_t x) {
    if (x == 0) throw InvalidCharacter("depth-1 characters are defined on units");
    if (chi == Depth1::Trivial) return 1;
    if (F.q() == 2) throw InvalidCharacter("no nontrivial depth-1 character at q = 2");
    // quadratic character: 1 on squares of the cyclic unit group
    uint32_t group = F.size() - 1;
    uint16_t g = F.generator();
    uint16_t cur = 1;
    for (uint32_t k = 0; k < group; ++k) {
        if (cur == x) return k % 2 == 0 ? 1 : -1;
        cur = F.mul(cur, g);
    }
    throw InvalidCharacter("unit not found");
}

SubgroupFunction trivial_on(const FiniteGroupCtx& G, SubgroupTag H) {
    return {&G, H, std::vector<long long>(G.members(H).size(), 1)};
}

SubgroupFunction torus_character(const FiniteGroupCtx& G, Depth1 chi1, Depth1 chi2) {
    const auto& mem = G.members(SubgroupTag::Torus);
    SubgroupFunction f{&G, SubgroupTag::Torus, std::vector<long long>(mem.size(), 0)};
    for (size_t i = 0; i < mem.size(); ++i) {
        auto m = G.entries(mem[i]);
        f.values[i] = depth1_value(G.coeffs(), chi1, m[0]) * depth1_value(G.coeffs(), chi2, m[3]);
    }
    return f;
}

SubgroupFunction borel_character(const FiniteGroupCtx& G, Depth1 chi1, Depth1 chi2) {
    const auto& mem = G.members(SubgroupTag::Borel);
    SubgroupFunction f{&G, SubgroupTag::Borel, std::vector<long long>(mem.size(), 0)};
    for (size_t i = 0; i < mem.size(); ++i) {
        auto m = G.entries(mem[i]);
        f.values[i] = depth1_value(G.coeffs(), chi1, m[0]) * depth1_value(G.coeffs(), chi2, m[3]);
    }
    return f;
}

SubgroupFunction restrict_to(const FiniteGroupCtx& G, SubgroupTag H, const ClassFunction& f) {
    const auto& mem = G.members(H);
    SubgroupFunction r{&G, H, std::vector<long long>(mem.size(), 0)};
    for (size_t i = 0; i < mem.size(); ++i) r.values[i] = f.value(mem[i]);
    return r;
}

ClassFunction det_character(const FiniteGroupCtx& G, Depth1 phi) {
    ClassFunction f{&G, std::vector<long long>(G.num_classes(), 0)};
    for (uint32_t c = 0; c < G.num_classes(); ++c)
        f.by_class[c] = depth1_value(G.coeffs(), phi, G.det(G.class_rep(c)));
    return f;
}

ClassFunction twisted_steinberg(const FiniteGroupCtx& G, Depth1 phi) {
    ClassFunction st = steinberg_character(G);
    ClassFunction d = det_character(G, phi);
    ClassFunction f{&G, std::vector<long long>(G.num_classes(), 0)};
    for (uint32_t c = 0; c < G.num_classes(); ++c) f.by_class[c] = st.by_class[c] * d.by_class[c];
    return f;
}

SubgroupFunction symmetrize(const FiniteGroupCtx& G, const SubgroupFunction& f) {
    const auto& mem = G.members(f.H);
    std::unordered_map<uint32_t, size_t> pos;
    for (size_t i = 0; i < mem.size(); ++i) pos[mem[i]] = i;
    SubgroupFunction r{&G, f.H, std::vector<long long>(mem.size(), 0)};
    for (size_t i = 0; i < mem.size(); ++i)
        for (uint32_t x : mem) {
            uint32_t y = G.mul(G.mul(x, mem[i]), G.inverse(x));
            r.values[i] += f.values[pos.at(y)];
        }
    return r;
}

ClassFunction induce(const FiniteGroupCtx& G, const SubgroupFunction& f) {
    const auto& mem = G.members(f.H);
    std::unordered_map<uint32_t, long long> val; // element -> f value, for H members
    for (size_t i = 0; i < mem.size(); ++i) val[mem[i]] = f.values[i];
    ClassFunction r{&G, std::vector<long long>(G.num_classes(), 0)};
    for (uint32_t c = 0; c < G.num_classes(); ++c) {
        uint32_t g = G.class_rep(c);
        long long sum = 0;
        for (uint32_t x = 0; x < G.order(); ++x) {
            uint32_t y = G.mul(G.mul(G.inverse(x), g), x);
            auto it = val.find(y);
            if (it != val.end()) sum += it->second;
        }
        if (sum % static_cast<long long>(mem.size()) != 0)
            throw std::logic_error("induced character value is not integral");
        r.by_class[c] = sum / static_cast<long long>(mem.size());
    }
    return r;
}

SubgroupFunction induce_to(const FiniteGroupCtx& G, SubgroupTag K, const SubgroupFunction& f) {
    const auto& hm = G.members(f.H);
    const auto& km = G.members(K);
    std::unordered_map<uint32_t, long long> val;
    for (size_t i = 0; i < hm.size(); ++i) val[hm[i]] = f.values[i];
    SubgroupFunction r{&G, K, std::vector<long long>(km.size(), 0)};
    for (size_t i = 0; i < km.size(); ++i) {
        long long sum = 0;
        for (uint32_t x : km) {
            uint32_t y = G.mul(G.mul(G.inverse(x), km[i]), x);
            auto it = val.find(y);
            if (it != val.end()) sum += it->second;
        }
        if (sum % static_cast<long long>(hm.size()) != 0)
            throw std::logic_error("induced character value is not integral");
        r.values[i] = sum / static_cast<long long>(hm.size());
    }
    return r;
}

Frac inner_product(const FiniteGroupCtx& G, const ClassFunction& a, const ClassFunction& b) {
    long long sum = 0;
    for (uint32_t c = 0; c < G.num_classes(); ++c)
        sum += static_cast<long long>(G.class_size(c)) * a.by_class[c] * b.by_class[c];
    return {sum, static_cast<long long>(G.order())};
}

Frac inner_product_on(const FiniteGroupCtx& G, SubgroupTag H, const SubgroupFunction& a,
                      const SubgroupFunction& b) {
    const auto& mem = G.members(H);
    long long sum = 0;
    for (size_t i = 0; i < mem.size(); ++i) sum += a.values[i] * b.values[i];
    return {sum, static_cast<long long>(mem.size())};
}

Frac inner_product_on(const FiniteGroupCtx& G, SubgroupTag H, const SubgroupFunction& a,
                      const ClassFunction& b) {
    return inner_product_on(G, H, a, restrict_to(G, H, b));
}

bool mackey_restriction_check(const FiniteGroupCtx& G) {
    SubgroupFunction st = restrict_to(G, SubgroupTag::Borel, steinberg_character(G));
    SubgroupFunction ind =
        induce_to(G, SubgroupTag::Borel, trivial_on(G, SubgroupTag::Torus));
    return st.values == ind.values;
}

long long finite_hom_shadow(const FiniteGroupCtx& G, ShadowSource src, ShadowTarget tgt,
                            bool unramified) {
    Depth1 chi = unramified ? Depth1::Trivial : Depth1::Quadratic;
    auto as_int = [](Frac f) {
        if (f.num % f.den != 0) throw std::logic_error("hom dimension not integral");
        return f.num / f.den;
    };
    switch (src) {
        case ShadowSource::TrivialOnK:
            switch (tgt) {
                case ShadowTarget::PrincipalSeries:
                    // Hom_{B cap K}(1, chi) at depth 1
                    return as_int(inner_product_on(G, SubgroupTag::Borel,
                                                   trivial_on(G, SubgroupTag::Borel),
                                                   borel_character(G, chi, chi)));
                case ShadowTarget::OneDimensional:
                    return as_int(inner_product(G, trivial_character(G), det_character(G, chi)));
                case ShadowTarget::TwistedSteinberg:
                    return as_int(inner_product(G, trivial_character(G), twisted_steinberg(G, chi)));
            }
            break;
        case ShadowSource::SteinbergOnK:
            switch (tgt) {
                case ShadowTarget::PrincipalSeries:
                    // Hom_{B cap U}(1, chi) at depth 1: <St|_B, chi>_B
                    return as_int(inner_product_on(G, SubgroupTag::Borel,
                                                   restrict_to(G, SubgroupTag::Borel,
                                                               steinberg_character(G)),
                                                   borel_character(G, chi, chi)));
                case ShadowTarget::OneDimensional:
                    return as_int(inner_product(G, steinberg_character(G), det_character(G, chi)));
                case ShadowTarget::TwistedSteinberg:
                    return as_int(
                        inner_product(G, steinberg_character(G), twisted_steinberg(G, chi)));
            }
            break;
    }
    throw InvalidTarget("unknown shadow combination");
}

const char* shadow_source_name(ShadowSource s) {
    return s == ShadowSource::TrivialOnK ? "trivial-on-K" : "Steinberg-on-K";
}

const char* shadow_target_name(ShadowTarget t) {
    switch (t) {
        case ShadowTarget::PrincipalSeries: return "principal-series";
        case ShadowTarget::OneDimensional: return "one-dimensional";
        case ShadowTarget::TwistedSteinberg: return "twisted-Steinberg";
    }
    return "?";
}

} // namespace adlv
