#include "adlv/counting.hpp"

#include <random>
#include <sstream>

namespace adlv {

namespace {
unsigned long long upow(unsigned long long b, unsigned long long e) {
    unsigned long long r = 1;
    while (e--) r *= b;
    return r;
}
} // namespace

const char* inducing_tag_name(InducingTag t) {
    switch (t) {
        case InducingTag::IwahoriLevel0: return "I^(0)";
        case InducingTag::MaxCompactSteinberg: return "K^(m) Steinberg";
        case InducingTag::MaxCompactTrivial: return "K^(m) trivial";
        case InducingTag::TorusUnits: return "T(o_F)";
        case InducingTag::QuaternionUnits: return "H_{b1}";
    }
    return "?";
}

CohomProfile cohom_profile(const BCase& b, WeylElt w, uint32_t q) {
    if (!nonempty(b, w)) throw EmptyADLV("no cohomology: X_w(b) is empty");
    CohomProfile p{b, w, {}};
    int l = w.length();
    switch (b.kind) {
        case BCase::Kind::Identity:
            if (l == 0) {
                p.entries.push_back({0, 1, 0, InducingTag::IwahoriLevel0});
            } else {
                p.entries.push_back({l, q, (l - 1) / 2, InducingTag::MaxCompactSteinberg});
                p.entries.push_back({l + 1, 1, (l - 3) / 2, InducingTag::MaxCompactTrivial});
            }
            break;
        case BCase::Kind::Diagonal:
            if (l == b.alpha) {
                p.entries.push_back({0, 1, 0, InducingTag::TorusUnits});
            } else {
                p.entries.push_back({l - b.alpha, 1, (l - b.alpha - 1) / 2, InducingTag::TorusUnits});
                p.entries.push_back(
                    {l - b.alpha + 1, 1, (l - b.alpha - 3) / 2, InducingTag::TorusUnits});
            }
            break;
        case BCase::Kind::Supersingular:
            p.entries.push_back({l, 1, l / 2, InducingTag::QuaternionUnits});
            break;
    }
    return p;
}

unsigned long long component_point_count(const BCase& b, WeylElt w, uint32_t q, uint32_t m) {
    if (!nonempty(b, w)) throw EmptyADLV("no point count: X_w(b) is empty");
    int l = w.length();
    unsigned long long qm = upow(q, m);
    switch (b.kind) {
        case BCase::Kind::Identity:
            if (l == 0) return 1;
            return upow(qm, static_cast<unsigned>((l - 1) / 2)) * (qm - q);
        case BCase::Kind::Diagonal:
            if (l == b.alpha) return 1;
            return upow(qm, static_cast<unsigned>((l - b.alpha - 1) / 2)) * (qm - 1);
        case BCase::Kind::Supersingular:
            return upow(qm, static_cast<unsigned>(l / 2));
    }
    return 0;
}

unsigned long long lefschetz_abs(const BCase& b, WeylElt w, uint32_t q, uint32_t m) {
    if (!nonempty(b, w)) throw EmptyADLV("no trace: X_w(b) is empty");
    int l = w.length();
    unsigned long long qm = upow(q, m);
    // arithmetic-Frobenius traces of the two component cohomology groups; the
    // signs cancel to the point count of the component
    long long total = 0;
    switch (b.kind) {
        case BCase::Kind::Identity: {
            if (l == 0) return 1;
            long long h_l = static_cast<long long>(q) *
                            static_cast<long long>(upow(qm, static_cast<unsigned>((l - 1) / 2)));
            long long h_l1 = static_cast<long long>(upow(qm, static_cast<unsigned>((l + 1) / 2)));
            total = (l % 2 ? -h_l : h_l) + ((l + 1) % 2 ? -h_l1 : h_l1);
            break;
        }
        case BCase::Kind::Diagonal: {
            if (l == b.alpha) return 1;
            int r = l - b.alpha;
            long long h_r = static_cast<long long>(upow(qm, static_cast<unsigned>((r - 1) / 2)));
            long long h_r1 = static_cast<long long>(upow(qm, static_cast<unsigned>((r + 1) / 2)));
            total = (r % 2 ? -h_r : h_r) + ((r + 1) % 2 ? -h_r1 : h_r1);
            break;
        }
        case BCase::Kind::Supersingular:
            total = static_cast<long long>(upow(qm, static_cast<unsigned>(l / 2)));
            break;
    }
    return static_cast<unsigned long long>(total < 0 ? -total : total);
}

HomDim hom_dim_table(const BCase& b, WeylElt w, int degree, RepTarget target, bool unramified) {
    if (!nonempty(b, w)) throw EmptyADLV("no Hom spaces: X_w(b) is empty");
    int l = w.length();
    auto dim1 = [&](int twist) { return unramified ? HomDim{1, twist, true} : HomDim{0, 0, false}; };
    auto zero = [] { return HomDim{0, 0, false}; };
    switch (b.kind) {
        case BCase::Kind::Identity: {
            if (l == 0) throw InvalidTarget("Hom table covers w != 1 in the identity case");
            if (degree == l + 1) {
                switch (target) {
                    case RepTarget::PrincipalSeries: return dim1((3 - l) / 2);
                    case RepTarget::OneDimensional: return dim1((3 - l) / 2);
                    case RepTarget::TwistedSteinberg: return zero();
                    case RepTarget::Cuspidal: return zero();
                    default: break;
                }
            } else if (degree == l) {
                switch (target) {
                    case RepTarget::PrincipalSeries: return dim1((1 - l) / 2);
                    case RepTarget::OneDimensional: return zero();
                    case RepTarget::TwistedSteinberg: return dim1((1 - l) / 2);
                    case RepTarget::Cuspidal: return zero();
                    default: break;
                }
            }
            throw InvalidTarget("no clause for this degree/target in the identity case");
        }
        case BCase::Kind::Diagonal: {
            if (target != RepTarget::PrincipalSeries)
                throw InvalidTarget("diagonal-case Hom spaces take characters of the torus");
            if (l == b.alpha) {
                if (degree == 0) return dim1(0);
            } else {
                if (degree == l - b.alpha) return dim1((b.alpha + 1 - l) / 2);
                if (degree == l - b.alpha + 1) return dim1((b.alpha + 3 - l) / 2);
            }
            throw InvalidTarget("degree carries no cohomology in the diagonal case");
        }
        case BCase::Kind::Supersingular: {
            if (degree != l) throw InvalidTarget("single nonzero degree in the supersingular case");
            switch (target) {
                case RepTarget::DCharacter: return dim1(-(l / 2));
                case RepTarget::HighDimD: return zero();
                default: throw InvalidTarget("supersingular targets are D^x-representations");
            }
        }
    }
    throw InvalidTarget("unhandled case");
}

RegularRepDescriptor regular_rep_descriptor(const BCase& b) {
    switch (b.kind) {
        case BCase::Kind::Diagonal: return {2, "Z^2"};
        case BCase::Kind::Supersingular: return {1, "Z"};
        case BCase::Kind::Identity: break;
    }
    throw InvalidTarget("regular-representation description applies to the nonsplit cases");
}

bool regular_translation_check(const FieldCtx& F, int samples_count, uint64_t seed,
                               std::string* fail) {
    std::mt19937_64 rng(seed);
    std::vector<uint16_t> rational;
    for (uint32_t c = 0; c < F.size(); ++c)
        if (F.rational(static_cast<uint16_t>(c))) rational.push_back(static_cast<uint16_t>(c));
    auto random_unit = [&]() {
        std::vector<uint16_t> cs;
        do {
            cs.assign(1, rational[rng() % rational.size()]);
        } while (cs[0] == 0);
        for (int i = 0; i < 3; ++i) cs.push_back(rational[rng() % rational.size()]);
        return TruncatedSeries::from_coeffs(F, 0, cs);
    };
    // coset of a diagonal matrix in T(F)/T(o_F) from the two valuations
    auto coset = [&](const Mat2& m) -> std::pair<int, int> {
        if (!m.b.exact_zero() || !m.c.exact_zero()) throw std::invalid_argument("not diagonal");
        return {m.a.valuation(), m.d.valuation()};
    };
    auto mistake = [&](const std::string& msg) {
        if (fail) *fail = msg;
        return false;
    };
    for (int k = 0; k < samples_count; ++k) {
        int c = static_cast<int>(rng() % 9) - 4;
        int d = static_cast<int>(rng() % 9) - 4;
        int a = static_cast<int>(rng() % 9) - 4;
        int bb = static_cast<int>(rng() % 9) - 4;
        // g = diag(t^c u1, t^d u2) represents the coset (c, d)
        Mat2 g{random_unit().shifted(c), TruncatedSeries::zero(F), TruncatedSeries::zero(F),
               random_unit().shifted(d)};
        if (coset(g) != std::make_pair(c, d)) return mistake("coset extraction failed");
        // the indicator e_{a,b} is supported on t^(-a,-b) T(o_F); translating a
        // point y of that coset by g lands it in t^(c-a, d-b) T(o_F), so
        // g.e_{a,b} = e_{a+c, b+d} as a basis function
        Mat2 y{random_unit().shifted(-a), TruncatedSeries::zero(F), TruncatedSeries::zero(F),
               random_unit().shifted(-bb)};
        Mat2 gy = g * y;
        if (coset(gy) != std::make_pair(c - a, d - bb)) return mistake("translation mismatch");
        // so the support of (g.e_{a,b})(y) = e_{a,b}(g y) is the coset (-a-c, -b-d)
        Mat2 y2{random_unit().shifted(-a - c), TruncatedSeries::zero(F), TruncatedSeries::zero(F),
                random_unit().shifted(-bb - d)};
        if (coset(g * y2) != std::make_pair(-a, -bb)) return mistake("support mismatch");
    }
    return true;
}

std::vector<Table1Row> table1_rows() {
    return {
        {"1", "l(w) > 0 odd", "GL_2(F)", "g_m GL_2(o_F) g_m^-1",
         "A^{(l(w)-1)/2} x (P^1 - P^1(k))"},
        {"diag(1, t^a), a > 0", "l(w) - a > 0 odd", "T(F)", "T(o_F)",
         "A^{(l(w)-a-1)/2} x (P^1 - {0,inf})"},
        {"b_1", "l(w) even", "D^x", "U_D", "A^{l(w)/2}"},
    };
}

namespace {
std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}
} // namespace

std::string table1_csv() {
    std::ostringstream os;
    os << "b,nonempty_iff,J_b,K_b,S\n";
    for (const Table1Row& r : table1_rows())
        os << csv_field(r.b) << "," << csv_field(r.cond) << "," << csv_field(r.jb) << ","
           << csv_field(r.kb) << "," << csv_field(r.s) << "\n";
    return os.str();
}

std::string table1_text() {
    std::ostringstream os;
    os << "b                    | nonempty iff       | J_b      | K_b                    | S\n";
    os << "---------------------+--------------------+----------+------------------------+---------------------------------\n";
    for (const Table1Row& r : table1_rows()) {
        os << r.b;
        for (size_t i = r.b.size(); i < 21; ++i) os << ' ';
        os << "| " << r.cond;
        for (size_t i = r.cond.size(); i < 19; ++i) os << ' ';
        os << "| " << r.jb;
        for (size_t i = r.jb.size(); i < 9; ++i) os << ' ';
        os << "| " << r.kb;
        for (size_t i = r.kb.size(); i < 23; ++i) os << ' ';
        os << "| " << r.s << "\n";
    }
    return os.str();
}

} // namespace adlv
