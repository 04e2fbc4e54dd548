#include "adlv/adlv_sets.hpp"

#include <algorithm>
#include <random>

namespace adlv {

// ---------------------------------------------------------------------------
// cases

BCase BCase::diagonal(int alpha) {
    if (alpha <= 0) throw std::invalid_argument("diagonal case needs alpha > 0");
    return {Kind::Diagonal, alpha};
}

int BCase::det_valuation() const {
    switch (kind) {
        case Kind::Identity: return 0;
        case Kind::Diagonal: return alpha;
        case Kind::Supersingular: return 1;
    }
    return 0;
}

SubcomplexId BCase::reference() const {
    switch (kind) {
        case Kind::Identity: return SubcomplexId::RationalBuilding;
        case Kind::Diagonal: return SubcomplexId::StandardApartment;
        case Kind::Supersingular: return SubcomplexId::BaseAlcoveClosure;
    }
    return SubcomplexId::RationalBuilding;
}

Mat2 BCase::realization(const FieldCtx& F) const {
    switch (kind) {
        case Kind::Identity: return Mat2::identity(F);
        case Kind::Diagonal: return Mat2::diag_t(F, 0, alpha);
        case Kind::Supersingular:
            return {TruncatedSeries::zero(F), TruncatedSeries::one(F),
                    TruncatedSeries::monomial(F, 1, 1), TruncatedSeries::zero(F)};
    }
    return Mat2::identity(F);
}

std::string BCase::name() const {
    switch (kind) {
        case Kind::Identity: return "identity";
        case Kind::Diagonal: return "diagonal(alpha=" + std::to_string(alpha) + ")";
        case Kind::Supersingular: return "supersingular";
    }
    return "?";
}

bool nonempty(const BCase& b, WeylElt w) {
    int l = w.length();
    switch (b.kind) {
        case BCase::Kind::Identity: return l == 0 || l % 2 == 1;
        case BCase::Kind::Diagonal: return l == b.alpha || (l > b.alpha && (l - b.alpha) % 2 == 1);
        case BCase::Kind::Supersingular: return l % 2 == 0;
    }
    return false;
}

int departure_type(int i, int index_sign) {
    // type 1 when (i odd, index positive) or (i even, index negative)
    bool odd = (i % 2) == 1;
    return (odd == (index_sign > 0)) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// the b.sigma action, specialised per case (validated against Tree::act)

namespace {

TruncatedSeries vpoly_series(const FieldCtx& F, const VPoly& c) {
    std::vector<uint16_t> coeffs(c.a.begin(), c.a.begin() + c.len);
    return TruncatedSeries::from_coeffs(F, c.len ? c.lo : 0, coeffs);
}

VPoly series_window(const TruncatedSeries& s) {
    VPoly r;
    if (!s.known_nonzero()) return r;
    if (s.length() > kVertexPolyCap) throw PrecisionExhausted("vertex coefficient window exceeded");
    r.lo = static_cast<int16_t>(s.lo());
    r.len = static_cast<uint16_t>(s.length());
    for (unsigned i = 0; i < r.len; ++i) r.a[i] = s.coeff(s.lo() + static_cast<int>(i));
    return r;
}

Vertex bcase_act_vertex(const Tree& T, const BCase& b, const Vertex& v) {
    switch (b.kind) {
        case BCase::Kind::Identity: return v;
        case BCase::Kind::Diagonal: {
            Vertex w = v;
            w.b += b.alpha;
            if (w.c.len) w.c.lo = static_cast<int16_t>(w.c.lo + b.alpha);
            return w;
        }
        case BCase::Kind::Supersingular: {
            if (v.c.zero()) {
                Vertex w;
                w.b = 1 - v.b;
                return w;
            }
            int kappa = v.c.lo;
            Vertex w;
            w.b = v.b + 1 - 2 * kappa;
            const FieldCtx& F = T.field();
            TruncatedSeries cs =
                div_to(TruncatedSeries::monomial(F, 1, 1), vpoly_series(F, v.c), w.b);
            if (cs.prec() < w.b) throw PrecisionExhausted("insufficient precision in reflection");
            w.c = series_window(cs);
            return w;
        }
    }
    return v;
}

} // namespace

Alcove b_sigma_image(const Tree& T, const Alcove& D, const BCase& b) {
    Vertex u0 = bcase_act_vertex(T, b, T.sigma(D.v0));
    Vertex u1 = bcase_act_vertex(T, b, T.sigma(D.v1));
    return Alcove::of(u0, u1);
}

WeylElt relative_position(const Tree& T, const Alcove& D, const BCase& b) {
    return T.inv(D, b_sigma_image(T, D, b));
}

// ---------------------------------------------------------------------------
// composed galleries

int gamma_length_formula(const BCase& b, int d) {
    switch (b.kind) {
        case BCase::Kind::Identity: return 2 * d - 1;
        case BCase::Kind::Diagonal: return 2 * d + b.alpha - 1;
        case BCase::Kind::Supersingular: return 2 * d;
    }
    return 0;
}

Gallery gamma_gallery(const Tree& T, const Alcove& D, const BCase& b) {
    SubcomplexId ref = b.reference();
    auto [P, head] = T.vertex_of_departure(D, ref); // throws when D lies in ref
    Gallery tail;
    tail.reserve(head.size());
    for (auto it = head.rbegin(); it != head.rend(); ++it)
        tail.push_back(b_sigma_image(T, *it, b));

    Gallery out = head;
    if (b.kind == BCase::Kind::Diagonal) {
        // connecting stretch inside the apartment, from P = (a,0) to (a+alpha,0)
        int a = P.b;
        for (int j = a; j < a + b.alpha; ++j) out.push_back(T.apartment_alcove(j));
    } else if (b.kind == BCase::Kind::Supersingular) {
        out.push_back(Tree::base_alcove());
    }
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

// ---------------------------------------------------------------------------
// structural description

namespace {

// length of the stretched gallery from an apartment vertex (a,0) to the base alcove
int apartment_offset(int a) { return a >= 1 ? a - 1 : -a; }

std::vector<Vertex> rational_vertices_within(const Tree& T, int K, int type) {
    std::unordered_set<Vertex, VertexHash> seen;
    auto consider = [&](const Vertex& v) {
        if (v.type() == type) seen.insert(v);
    };
    consider(Tree::base_vertex(0));
    consider(Tree::base_vertex(1));
    if (K > 0)
        T.for_rational_ball(K, [&](const Alcove& A, int) {
            consider(A.v0);
            consider(A.v1);
        });
    std::vector<Vertex> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), vertex_less);
    // keep only vertices whose stretched gallery to the base alcove has length <= K
    std::vector<Vertex> kept;
    for (const Vertex& v : out)
        if (T.base_alcove_offset(v) <= K) kept.push_back(v);
    return kept;
}

} // namespace

StructuralPrediction structural_sets(const Tree& T, const BCase& b, WeylElt w, int R,
                                     bool flip_parity) {
    if (!nonempty(b, w)) throw EmptyADLV("X_w(b) is empty for " + b.name());
    StructuralPrediction out;
    int idx = w.index;
    int l = w.length();

    // degenerate rows: point lists
    if (b.kind == BCase::Kind::Identity && idx == 0) {
        out.degenerate = true;
        T.for_rational_ball(R, [&](const Alcove& A, int) { out.points.push_back(A); });
        std::sort(out.points.begin(), out.points.end(), alcove_less);
        return out;
    }
    if (b.kind == BCase::Kind::Diagonal && l == b.alpha) {
        out.degenerate = true;
        int par = idx > 0 ? 0 : 1; // C^{2j} for +alpha, C^{2j+1} for -alpha
        for (int j = -R; j <= R; ++j)
            if (((j % 2) + 2) % 2 == par) out.points.push_back(T.apartment_alcove(j));
        return out;
    }
    if (b.kind == BCase::Kind::Supersingular && idx == 0) {
        out.degenerate = true;
        out.points.push_back(Tree::base_alcove());
        return out;
    }

    int i = 0;
    switch (b.kind) {
        case BCase::Kind::Identity: i = (l + 1) / 2; break;
        case BCase::Kind::Diagonal: i = (l - b.alpha + 1) / 2; break;
        case BCase::Kind::Supersingular: i = l / 2; break;
    }
    int m = departure_type(i, idx > 0 ? 1 : -1);
    if (flip_parity) m ^= 1;
    int K = R - i; // members of D^i(P) sit at alcove-distance i + h(P)
    if (K < 0) return out;

    SubcomplexId sub = b.reference();
    switch (b.kind) {
        case BCase::Kind::Identity: {
            for (const Vertex& P : rational_vertices_within(T, K, m))
                out.sets.push_back({P, i, sub});
            break;
        }
        case BCase::Kind::Diagonal: {
            for (int a = -K; a <= K + 1; ++a) {
                if ((((a % 2) + 2) % 2) != m) continue;
                if (apartment_offset(a) > K) continue;
                out.sets.push_back({Tree::apartment_vertex(a), i, sub});
            }
            break;
        }
        case BCase::Kind::Supersingular: {
            out.sets.push_back({Tree::base_vertex(m), i, sub});
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// departure-set enumeration

namespace {

enum class FarEnd { Child, Parent };

void expand_away(const Tree& T, const Alcove& A, FarEnd far, int depth, int target,
                 std::vector<Alcove>& out) {
    if (depth == target) {
        out.push_back(A);
        return;
    }
    if (far == FarEnd::Child) {
        const Vertex& c = A.child();
        for (const Vertex& w : T.children(c))
            expand_away(T, Alcove::of(w, c), FarEnd::Child, depth + 1, target, out);
    } else {
        const Vertex& p = A.parent();
        const Vertex& entry = A.child();
        for (const Vertex& w : T.children(p)) {
            if (w == entry) continue;
            expand_away(T, Alcove::of(w, p), FarEnd::Child, depth + 1, target, out);
        }
        expand_away(T, Alcove::of(p, T.rootward(p)), FarEnd::Parent, depth + 1, target, out);
    }
}

struct FirstStep {
    Alcove A;
    FarEnd far;
};

std::vector<FirstStep> first_steps(const Tree& T, const Vertex& P, SubcomplexId sub) {
    std::vector<FirstStep> out;
    for (const Vertex& w : T.children(P)) {
        Alcove A = Alcove::of(w, P);
        if (!T.contains(sub, A)) out.push_back({A, FarEnd::Child});
    }
    Alcove up = Alcove::of(P, T.rootward(P));
    if (!T.contains(sub, up)) out.push_back({up, FarEnd::Parent});
    return out;
}

} // namespace

std::vector<Alcove> enumerate_members(const Tree& T, const DepartureSet& s) {
    if (s.i < 1) throw std::invalid_argument("departure distance must be positive");
    if (!T.contains(s.sub, s.P)) throw std::invalid_argument("departure vertex outside subcomplex");
    if (s.i + 2 > T.budget()) throw PrecisionExhausted("departure distance beyond precision budget");
    std::vector<Alcove> out;
    for (const FirstStep& f : first_steps(T, s.P, s.sub))
        expand_away(T, f.A, f.far, 1, s.i, out);
    return out;
}

unsigned long long member_count(const Tree& T, const DepartureSet& s) {
    unsigned long long Q = T.field().size();
    unsigned long long first = 0;
    switch (s.sub) {
        case SubcomplexId::RationalBuilding: first = Q - T.field().q(); break;
        case SubcomplexId::StandardApartment: first = Q - 1; break;
        case SubcomplexId::BaseAlcoveClosure: first = Q; break;
    }
    unsigned long long r = first;
    for (int k = 1; k < s.i; ++k) r *= Q;
    return r;
}

// ---------------------------------------------------------------------------
// window sweep

SweepResult sweep(const Tree& T, const BCase& b, int R, int collect_max) {
    if (2 * R + b.alpha + 2 > T.budget())
        throw PrecisionExhausted("precision budget does not cover the requested radius");
    SweepResult res;
    res.R = R;
    res.collect_max = collect_max;
    SubcomplexId ref = b.reference();
    T.for_ball(R, [&](const Alcove& D, int) {
        Alcove E = b_sigma_image(T, D, b);
        int idx = T.inv(D, E).index;
        ++res.bucket_sizes[idx];
        ++res.total;
        if (idx > collect_max || idx < -collect_max) return;
        if (T.contains(ref, D)) {
            res.degenerate[idx].push_back(D);
            return;
        }
        Tree::Gate g0 = T.gate(ref, D.v0);
        Tree::Gate g1 = T.gate(ref, D.v1);
        const Vertex& P = g0.dist <= g1.dist ? g0.P : g1.P;
        res.members[idx][P].push_back(D);
    });
    return res;
}

std::vector<Alcove> brute_force_adlv(const Tree& T, const BCase& b, WeylElt w, int R) {
    if (2 * R + b.alpha + 2 > T.budget())
        throw PrecisionExhausted("precision budget does not cover the requested radius");
    std::vector<Alcove> out;
    T.for_ball(R, [&](const Alcove& D, int) {
        if (relative_position(T, D, b) == w) out.push_back(D);
    });
    std::sort(out.begin(), out.end(), alcove_less);
    return out;
}

// ---------------------------------------------------------------------------
// Schubert charts

namespace {

void check_chart_args(const Tree& T, const Vertex& P, const std::vector<Alcove>& V, int l,
                      size_t ncoords) {
    if (!(P == Tree::base_vertex(0) || P == Tree::base_vertex(1)))
        throw InvalidTarget("chart base point must be a vertex of the base alcove");
    if (l < 0 || ncoords != static_cast<size_t>(l) + 1)
        throw std::invalid_argument("chart needs l+1 coordinates");
    bool has_base = false;
    for (const Alcove& A : V) {
        if (!A.has_vertex(P)) throw InvalidTarget("excluded alcoves must touch the base point");
        if (A == Tree::base_alcove()) has_base = true;
    }
    if (!has_base) throw InvalidTarget("excluded set must contain the base alcove");
    if (l + 3 > T.budget()) throw PrecisionExhausted("chart parameter beyond precision budget");
}

Alcove chart_at_p0(const Tree& T, int l, const std::vector<uint16_t>& coords) {
    const FieldCtx& F = T.field();
    std::vector<uint16_t> cs(coords.begin(), coords.end());
    TruncatedSeries A = TruncatedSeries::from_coeffs(F, 0, cs);
    TruncatedSeries one = TruncatedSeries::one(F);
    TruncatedSeries zero = TruncatedSeries::zero(F);
    Mat2 inner{A, TruncatedSeries::monomial(F, 1, l + 1), one, zero};
    Mat2 outer{A, TruncatedSeries::monomial(F, 1, l), one, zero};
    return Alcove::of(T.canonical_vertex(inner), T.canonical_vertex(outer));
}

} // namespace

Alcove schubert_chart(const Tree& T, const Vertex& P, const std::vector<Alcove>& V, int l,
                      const std::vector<uint16_t>& coords) {
    check_chart_args(T, P, V, l, coords.size());
    if (P == Tree::base_vertex(1)) {
        // transport through the base-alcove reflection, which fixes C^0 and
        // swaps the two base vertices
        Mat2 b1 = BCase::supersingular().realization(T.field());
        std::vector<Alcove> Vp;
        Vp.reserve(V.size());
        for (const Alcove& A : V) Vp.push_back(T.act(b1, A));
        return T.act(b1, schubert_chart(T, Tree::base_vertex(0), Vp, l, coords));
    }
    if (V.size() > 1) {
        Alcove first = chart_at_p0(T, 0, {coords[0]});
        for (const Alcove& A : V)
            if (A == first) throw CoordinateExcluded("first-alcove coordinate lies in V");
    }
    return chart_at_p0(T, l, coords);
}

Alcove schubert_chart_roots(const Tree& T, const std::vector<uint16_t>& coords, int l) {
    if (l < 0 || coords.size() != static_cast<size_t>(l) + 1)
        throw std::invalid_argument("chart needs l+1 coordinates");
    const FieldCtx& F = T.field();
    std::vector<uint16_t> cs(coords.begin(), coords.end());
    TruncatedSeries A = TruncatedSeries::from_coeffs(F, 0, cs);
    Mat2 u{TruncatedSeries::one(F), A, TruncatedSeries::zero(F), TruncatedSeries::one(F)};
    Mat2 v = Mat2::identity(F);
    if ((l + 1) % 2 == 0) {
        int s = (l + 1) / 2;
        v = Mat2::diag_t(F, s, -s);
    } else {
        int s = l / 2;
        v = {TruncatedSeries::zero(F), TruncatedSeries::monomial(F, 1, s),
             TruncatedSeries::monomial(F, F.neg(1), -s), TruncatedSeries::zero(F)};
    }
    return T.act(u * v, Tree::base_alcove());
}

std::vector<Alcove> chart_members(const Tree& T, const Vertex& P, const std::vector<Alcove>& V,
                                  int l) {
    auto in_v = [&](const Alcove& A) {
        for (const Alcove& B : V)
            if (A == B) return true;
        return false;
    };
    std::vector<Alcove> out;
    for (const Vertex& w : T.children(P)) {
        Alcove A = Alcove::of(w, P);
        if (!in_v(A)) expand_away(T, A, FarEnd::Child, 0, l, out);
    }
    Alcove up = Alcove::of(P, T.rootward(P));
    if (!in_v(up)) expand_away(T, up, FarEnd::Parent, 0, l, out);
    std::sort(out.begin(), out.end(), alcove_less);
    return out;
}

// ---------------------------------------------------------------------------
// components and stabilizers

ComponentDescriptor component_decomposition(const BCase& b) {
    switch (b.kind) {
        case BCase::Kind::Identity: return {"Z", "J_b/K^(m)_b cosets"};
        case BCase::Kind::Diagonal: return {"Z", "Z^2"};
        case BCase::Kind::Supersingular: return {"Z", "Z"};
    }
    return {"Z", "?"};
}

Mat2 component_representative(const FieldCtx& F, const BCase& b, int v) {
    if (b.kind == BCase::Kind::Supersingular) {
        // powers of the reflection (0 1; t 0); its square is the homothety t
        Mat2 b1 = BCase::supersingular().realization(F);
        Mat2 b1inv{TruncatedSeries::zero(F), TruncatedSeries::monomial(F, 1, -1),
                   TruncatedSeries::one(F), TruncatedSeries::zero(F)};
        Mat2 r = Mat2::identity(F);
        for (int k = 0; k < (v >= 0 ? v : -v); ++k) r = r * (v >= 0 ? b1 : b1inv);
        return r;
    }
    return Mat2::diag_t(F, 0, v);
}

bool in_j_b(const Tree& T, const BCase& b, const Mat2& g) {
    Mat2 bm = b.realization(T.field());
    return bm * g.sigma() == g * bm;
}

StabilizerReport stabilizer_checks(const Tree& T, const BCase& b, int samples, uint64_t seed) {
    const FieldCtx& F = T.field();
    StabilizerReport rep;
    std::mt19937_64 rng(seed);

    // component representatives realize every determinant valuation in [-3, 3]
    for (int v = -3; v <= 3; ++v) {
        Mat2 g = component_representative(F, b, v);
        TruncatedSeries det = g.det();
        bool ok = det.known_nonzero() && det.valuation() == v && in_j_b(T, b, g);
        if (!ok)
            rep.failures.push_back(b.name() + ": representative for det valuation " +
                                   std::to_string(v) + " fails");
        ++rep.representatives_checked;
    }

    std::vector<uint16_t> rational_codes;
    for (uint32_t c = 0; c < F.size(); ++c)
        if (F.rational(static_cast<uint16_t>(c))) rational_codes.push_back(static_cast<uint16_t>(c));

    if (b.kind == BCase::Kind::Identity || b.kind == BCase::Kind::Diagonal) {
        for (int k = 0; k < samples; ++k) {
            int m = static_cast<int>(rng() % 2);
            int s = static_cast<int>(rng() % 5) - 2;
            Vertex P;
            if (b.kind == BCase::Kind::Identity) {
                P.b = m + 2 * s;
                // random rational coefficient window below b
                int span = static_cast<int>(rng() % 4);
                std::vector<uint16_t> cs;
                for (int i = 0; i < span; ++i)
                    cs.push_back(rational_codes[rng() % rational_codes.size()]);
                TruncatedSeries c = TruncatedSeries::from_coeffs(F, P.b - span, cs);
                P.c = series_window(c);
            } else {
                P.b = m + 2 * s; // apartment vertex
            }
            int shift = (P.b - m) / 2;
            Mat2 x = b.kind == BCase::Kind::Identity
                         ? T.basis_matrix(P) * Mat2::diag_t(F, -shift, -shift - m)
                         : Mat2::diag_t(F, -shift, shift);
            bool ok = x.det() == TruncatedSeries::one(F) && x.sigma() == x &&
                      T.act(x, Tree::base_vertex(m)) == P && in_j_b(T, b, x);
            if (!ok)
                rep.failures.push_back(b.name() + ": transitivity witness fails for " +
                                       T.vertex_str(P));
            ++rep.transitivity_checked;
        }
    }

    if (b.kind == BCase::Kind::Supersingular) {
        if (F.n() % 2 != 0) {
            rep.failures.push_back(
                "supersingular sampling needs an even level n (quadratic subfield)");
            return rep;
        }
        // codes of the quadratic subfield E = F_{q^2} inside F_{q^n}
        std::vector<uint16_t> ecodes;
        for (uint32_t c = 0; c < F.size(); ++c) {
            uint16_t cc = static_cast<uint16_t>(c);
            if (F.frob(F.frob(cc)) == cc) ecodes.push_back(cc);
        }
        auto random_e_series = [&](int lo) {
            std::vector<uint16_t> cs;
            for (int i = 0; i < 4; ++i) cs.push_back(ecodes[rng() % ecodes.size()]);
            return TruncatedSeries::from_coeffs(F, lo, cs);
        };
        int attempts = 0;
        while (rep.iwahori_checked < samples && attempts < samples * 64) {
            ++attempts;
            TruncatedSeries a = random_e_series(static_cast<int>(rng() % 5) - 2);
            TruncatedSeries c = random_e_series(static_cast<int>(rng() % 5) - 2);
            Mat2 g{a, c.sigma(), c.shifted(1), a.sigma()};
            TruncatedSeries det = g.det();
            if (!det.known_nonzero() || det.valuation() != 0) continue;
            ++rep.iwahori_checked;
            bool ok = in_j_b(T, b, g);
            // the four Iwahori entry conditions
            ok = ok && g.a.known_nonzero() && g.a.valuation() == 0;
            ok = ok && (g.b.exact_zero() || g.b.valuation() >= 0);
            ok = ok && (g.c.exact_zero() || g.c.valuation() >= 1);
            ok = ok && g.d.known_nonzero() && g.d.valuation() == 0;
            if (!ok) rep.failures.push_back("supersingular det-valuation-0 sample outside Iwahori");
        }
        if (rep.iwahori_checked < samples)
            rep.failures.push_back("could not draw enough determinant-valuation-0 samples");
    }
    return rep;
}

} // namespace adlv
