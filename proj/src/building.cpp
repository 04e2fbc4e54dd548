#include "adlv/building.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace adlv {

Alcove Alcove::of(const Vertex& x, const Vertex& y) {
    if (x.type() == y.type()) throw std::invalid_argument("alcove endpoints must have distinct types");
    Alcove A;
    if (x.type() == 0) {
        A.v0 = x;
        A.v1 = y;
    } else {
        A.v0 = y;
        A.v1 = x;
    }
    return A;
}

Tree::Tree(const FieldCtx& F, int precision_budget) : F_(&F), budget_(precision_budget) {
    if (precision_budget < 4) throw ConfigError("precision budget too small");
}

bool vertex_less(const Vertex& x, const Vertex& y) {
    if (x.b != y.b) return x.b < y.b;
    if (x.c.lo != y.c.lo) return x.c.lo < y.c.lo;
    if (x.c.len != y.c.len) return x.c.len < y.c.len;
    for (unsigned i = 0; i < x.c.len; ++i)
        if (x.c.a[i] != y.c.a[i]) return x.c.a[i] < y.c.a[i];
    return false;
}

bool alcove_less(const Alcove& x, const Alcove& y) {
    if (!(x.v0 == y.v0)) return vertex_less(x.v0, y.v0);
    return vertex_less(x.v1, y.v1);
}

Vertex Tree::base_vertex(int m) {
    Vertex v;
    v.b = m;
    return v;
}

Vertex Tree::apartment_vertex(int a) {
    Vertex v;
    v.b = a;
    return v;
}

Alcove Tree::base_alcove() {
    Alcove A;
    A.v0 = base_vertex(0);
    A.v1 = base_vertex(1);
    return A;
}

Alcove Tree::apartment_alcove(int i) const {
    int m = i < 0 ? -i : i;
    if (m + 1 > budget_) throw PrecisionExhausted("apartment index beyond precision budget");
    return Alcove::of(apartment_vertex(i), apartment_vertex(i + 1));
}

// ---------------------------------------------------------------------------
// canonical forms

namespace {
// lower bound for the valuation: exact for tracked-nonzero entries
int val_lb(const TruncatedSeries& s) {
    return s.known_nonzero() ? s.lo() : s.prec();
}
} // namespace

Vertex Tree::canonical_vertex(const Mat2& M) const {
    const TruncatedSeries* r1c1 = &M.a;
    const TruncatedSeries* r1c2 = &M.b;
    const TruncatedSeries* r2c1 = &M.c;
    const TruncatedSeries* r2c2 = &M.d;
    if (val_lb(*r1c2) < val_lb(*r1c1)) {
        std::swap(r1c1, r1c2);
        std::swap(r2c1, r2c2);
    }
    if (!r1c1->known_nonzero()) {
        if (r1c1->exact_zero() && r1c2->exact_zero())
            throw SingularBasis("basis with zero first row");
        throw PrecisionExhausted("pivot valuation not certified");
    }
    int a0 = r1c1->valuation();

    TruncatedSeries det = M.det();
    if (det.exact_zero()) throw SingularBasis("basis has zero determinant");
    int delta = det.valuation(); // throws PrecisionExhausted when uncertified

    Vertex v;
    v.b = delta - 2 * a0;

    TruncatedSeries cs = div_to(*r2c1, *r1c1, v.b);
    if (cs.prec() < v.b) throw PrecisionExhausted("insufficient precision for canonical form");
    if (cs.known_nonzero()) {
        // cs is normalized with leading/trailing coefficients nonzero and all
        // exponents below v.b
        if (cs.length() > kVertexPolyCap)
            throw PrecisionExhausted("canonical form exceeds coefficient window");
        v.c.lo = static_cast<int16_t>(cs.lo());
        v.c.len = static_cast<uint16_t>(cs.length());
        for (unsigned i = 0; i < v.c.len; ++i) v.c.a[i] = cs.coeff(cs.lo() + static_cast<int>(i));
    }
    return v;
}

Mat2 Tree::basis_matrix(const Vertex& v) const {
    const FieldCtx& F = *F_;
    std::vector<uint16_t> coeffs(v.c.a.begin(), v.c.a.begin() + v.c.len);
    return {TruncatedSeries::one(F), TruncatedSeries::zero(F),
            TruncatedSeries::from_coeffs(F, v.c.len ? v.c.lo : 0, coeffs),
            TruncatedSeries::monomial(F, 1, v.b)};
}

Vertex Tree::act(const Mat2& g, const Vertex& v) const { return canonical_vertex(g * basis_matrix(v)); }

Alcove Tree::act(const Mat2& g, const Alcove& A) const { return Alcove::of(act(g, A.v0), act(g, A.v1)); }

Vertex Tree::sigma(const Vertex& v) const {
    Vertex w = v;
    for (unsigned i = 0; i < w.c.len; ++i) w.c.a[i] = F_->frob(w.c.a[i]);
    return w;
}

Alcove Tree::sigma(const Alcove& A) const {
    Alcove B;
    B.v0 = sigma(A.v0);
    B.v1 = sigma(A.v1);
    return B;
}

// ---------------------------------------------------------------------------
// local structure

VPoly Tree::truncate_poly(const VPoly& c, int e) const {
    VPoly r;
    if (c.len == 0 || e <= c.lo) return r;
    int len = std::min<int>(c.len, e - c.lo);
    while (len > 0 && c.a[static_cast<unsigned>(len - 1)] == 0) --len;
    if (len == 0) return r;
    r.lo = c.lo;
    r.len = static_cast<uint16_t>(len);
    for (int i = 0; i < len; ++i) r.a[static_cast<unsigned>(i)] = c.a[static_cast<unsigned>(i)];
    return r;
}

Vertex Tree::rootward(const Vertex& v) const {
    Vertex w;
    w.b = v.b - 1;
    w.c = truncate_poly(v.c, v.b - 1);
    return w;
}

std::vector<Vertex> Tree::children(const Vertex& v) const {
    std::vector<Vertex> out;
    out.reserve(F_->size());
    for (uint32_t z = 0; z < F_->size(); ++z) {
        Vertex w;
        w.b = v.b + 1;
        if (z == 0) {
            w.c = v.c;
        } else {
            if (v.c.len == 0) {
                w.c.lo = static_cast<int16_t>(v.b);
                w.c.len = 1;
                w.c.a[0] = static_cast<uint16_t>(z);
            } else {
                w.c = v.c;
                int pos = v.b - v.c.lo;
                if (pos + 1 > static_cast<int>(kVertexPolyCap))
                    throw PrecisionExhausted("vertex coefficient window exceeded");
                for (int i = w.c.len; i < pos; ++i) w.c.a[static_cast<unsigned>(i)] = 0;
                w.c.a[static_cast<unsigned>(pos)] = static_cast<uint16_t>(z);
                w.c.len = static_cast<uint16_t>(pos + 1);
            }
        }
        out.push_back(w);
    }
    return out;
}

std::vector<Vertex> Tree::neighbors(const Vertex& v) const {
    std::vector<Vertex> out = children(v);
    out.push_back(rootward(v));
    return out;
}

bool Tree::adjacent(const Vertex& u, const Vertex& w) const { return graph_distance(u, w) == 1; }

// ---------------------------------------------------------------------------
// metric structure

int Tree::diff_valuation(const VPoly& x, const VPoly& y) const {
    if (x == y) return TruncatedSeries::kInf;
    int lo = std::min(x.len ? x.lo : INT16_MAX, y.len ? y.lo : INT16_MAX);
    int hi = std::max(x.len ? x.lo + x.len : INT16_MIN, y.len ? y.lo + y.len : INT16_MIN);
    for (int e = lo; e < hi; ++e)
        if (x.coeff(e) != y.coeff(e)) return e;
    return TruncatedSeries::kInf;
}

int Tree::graph_distance(const Vertex& u, const Vertex& w) const {
    // meet of the two rays toward the fixed end of the apartment; equivalently
    // the elementary-divisor computation on canonical representatives
    int m = std::min(std::min(u.b, w.b), diff_valuation(u.c, w.c));
    return (u.b - m) + (w.b - m);
}

int Tree::vertex_distance(const Vertex& u, const Vertex& w) const {
    // divisor exponents of a nested representative pair N = adj(M_u) * M_w:
    // a1 = min entry valuation, a2 = v(det N) - a1; stretched-gallery length
    // is a2 - a1 - 1 when positive.
    Mat2 N = basis_matrix(u).adjugate() * basis_matrix(w);
    int minlb = std::min(std::min(val_lb(N.a), val_lb(N.b)), std::min(val_lb(N.c), val_lb(N.d)));
    bool certified = (N.a.known_nonzero() && N.a.lo() == minlb) ||
                     (N.b.known_nonzero() && N.b.lo() == minlb) ||
                     (N.c.known_nonzero() && N.c.lo() == minlb) ||
                     (N.d.known_nonzero() && N.d.lo() == minlb);
    if (!certified) throw PrecisionExhausted("entry valuations not certified");
    TruncatedSeries det = N.det();
    if (det.exact_zero()) throw SingularBasis("degenerate lattice pair");
    int d = det.valuation() - 2 * minlb;
    return d > 1 ? d - 1 : 0;
}

std::vector<Vertex> Tree::geodesic(const Vertex& u, const Vertex& w) const {
    int m = std::min(std::min(u.b, w.b), diff_valuation(u.c, w.c));
    std::vector<Vertex> down;
    Vertex x = u;
    while (x.b > m) {
        down.push_back(x);
        x = rootward(x);
    }
    down.push_back(x); // the meet
    std::vector<Vertex> upseg;
    Vertex y = w;
    while (y.b > m) {
        upseg.push_back(y);
        y = rootward(y);
    }
    for (auto it = upseg.rbegin(); it != upseg.rend(); ++it) down.push_back(*it);
    return down;
}

Gallery Tree::minimal_gallery(const Alcove& D, const Alcove& E) const {
    if (D == E) return {D};
    const Vertex* ends1[2] = {&D.v0, &D.v1};
    const Vertex* ends2[2] = {&E.v0, &E.v1};
    int best = INT32_MAX;
    const Vertex* x = nullptr;
    const Vertex* y = nullptr;
    for (auto* u : ends1)
        for (auto* v : ends2) {
            int d = graph_distance(*u, *v);
            if (d < best) {
                best = d;
                x = u;
                y = v;
            }
        }
    Gallery g;
    g.push_back(D);
    std::vector<Vertex> path = geodesic(*x, *y);
    for (size_t i = 0; i + 1 < path.size(); ++i) g.push_back(Alcove::of(path[i], path[i + 1]));
    g.push_back(E);
    return g;
}

bool Tree::is_minimal(const Gallery& g) {
    if (g.empty()) throw std::invalid_argument("empty gallery");
    for (size_t i = 0; i + 1 < g.size(); ++i)
        if (!(g[i].has_vertex(g[i + 1].v0) || g[i].has_vertex(g[i + 1].v1)))
            throw std::invalid_argument("not a gallery: consecutive alcoves not adjacent");
    // (a) no alcove twice
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            if (g[i] == g[j]) return false;
    // (b) interior alcoves pass straight through
    for (size_t i = 1; i + 1 < g.size(); ++i) {
        if (g[i - 1].has_vertex(g[i].v0) && !g[i + 1].has_vertex(g[i].v1)) return false;
        if (g[i - 1].has_vertex(g[i].v1) && !g[i + 1].has_vertex(g[i].v0)) return false;
    }
    return true;
}

WeylElt Tree::inv(const Alcove& D, const Alcove& E) const {
    if (D == E) return {0};
    const Vertex* ends1[2] = {&D.v0, &D.v1};
    const Vertex* ends2[2] = {&E.v0, &E.v1};
    int best = INT32_MAX;
    const Vertex* x = nullptr;
    for (auto* u : ends1)
        for (auto* v : ends2) {
            int d = graph_distance(*u, *v);
            if (d < best) {
                best = d;
                x = u;
            }
        }
    int len = best + 1;
    const Vertex& first = D.other(*x);
    return {first.type() == 0 ? len : -len};
}

// ---------------------------------------------------------------------------
// subcomplexes

bool Tree::contains(SubcomplexId c, const Vertex& v) const {
    switch (c) {
        case SubcomplexId::RationalBuilding:
            for (unsigned i = 0; i < v.c.len; ++i)
                if (!F_->rational(v.c.a[i])) return false;
            return true;
        case SubcomplexId::StandardApartment:
            return v.c.zero();
        case SubcomplexId::BaseAlcoveClosure:
            return v.c.zero() && (v.b == 0 || v.b == 1);
    }
    return false;
}

bool Tree::contains(SubcomplexId c, const Alcove& A) const {
    if (c == SubcomplexId::BaseAlcoveClosure) return A == base_alcove();
    return contains(c, A.v0) && contains(c, A.v1);
}

Tree::Gate Tree::gate(SubcomplexId c, const Vertex& v) const {
    switch (c) {
        case SubcomplexId::RationalBuilding: {
            int j = TruncatedSeries::kInf;
            for (unsigned i = 0; i < v.c.len; ++i)
                if (!F_->rational(v.c.a[i])) {
                    j = v.c.lo + static_cast<int>(i);
                    break;
                }
            if (j == TruncatedSeries::kInf) return {v, 0};
            Vertex P;
            P.b = j;
            P.c = truncate_poly(v.c, j);
            return {P, v.b - j};
        }
        case SubcomplexId::StandardApartment: {
            if (v.c.zero()) return {v, 0};
            Vertex P;
            P.b = v.c.lo;
            return {P, v.b - v.c.lo};
        }
        case SubcomplexId::BaseAlcoveClosure: {
            if (contains(c, v)) return {v, 0};
            int d0 = graph_distance(v, base_vertex(0));
            int d1 = graph_distance(v, base_vertex(1));
            // types differ, so the two distances are never equal
            if (d0 < d1) return {base_vertex(0), d0};
            return {base_vertex(1), d1};
        }
    }
    throw std::logic_error("unknown subcomplex");
}

std::pair<Vertex, Gallery> Tree::vertex_of_departure(const Alcove& D, SubcomplexId c) const {
    if (contains(c, D)) throw AlcoveInsideSubcomplex("alcove lies inside the subcomplex");
    Gate g0 = gate(c, D.v0);
    Gate g1 = gate(c, D.v1);
    const Vertex& near = g0.dist <= g1.dist ? D.v0 : D.v1;
    const Gate& gn = g0.dist <= g1.dist ? g0 : g1;
    Gallery gal;
    gal.push_back(D);
    std::vector<Vertex> path = geodesic(near, gn.P);
    for (size_t i = 0; i + 1 < path.size(); ++i) gal.push_back(Alcove::of(path[i], path[i + 1]));
    return {gn.P, gal};
}

int Tree::departure_distance(const Alcove& D, SubcomplexId c) const {
    if (contains(c, D)) throw AlcoveInsideSubcomplex("alcove lies inside the subcomplex");
    Gate g0 = gate(c, D.v0);
    Gate g1 = gate(c, D.v1);
    return 1 + std::min(g0.dist, g1.dist);
}

int Tree::base_alcove_offset(const Vertex& P) const {
    return std::min(graph_distance(P, base_vertex(0)), graph_distance(P, base_vertex(1)));
}

// ---------------------------------------------------------------------------
// ball traversal and export

void Tree::for_ball(int R, const std::function<void(const Alcove&, int)>& visit) const {
    std::vector<uint32_t> zs(F_->size());
    for (uint32_t z = 0; z < F_->size(); ++z) zs[z] = z;
    ball_walk(R, zs, visit);
}

void Tree::for_rational_ball(int R, const std::function<void(const Alcove&, int)>& visit) const {
    std::vector<uint32_t> zs;
    for (uint32_t z = 0; z < F_->size(); ++z)
        if (F_->rational(static_cast<uint16_t>(z))) zs.push_back(z);
    ball_walk(R, zs, visit);
}

void Tree::ball_walk(int R, const std::vector<uint32_t>& zset,
                     const std::function<void(const Alcove&, int)>& visit) const {
    auto child_of = [this](const Vertex& v, uint32_t z) {
        Vertex w;
        w.b = v.b + 1;
        w.c = v.c;
        if (z != 0) {
            if (w.c.len == 0) {
                w.c.lo = static_cast<int16_t>(v.b);
                w.c.len = 1;
                w.c.a[0] = static_cast<uint16_t>(z);
            } else {
                int pos = v.b - w.c.lo;
                if (pos + 1 > static_cast<int>(kVertexPolyCap))
                    throw PrecisionExhausted("vertex coefficient window exceeded");
                for (int i = w.c.len; i < pos; ++i) w.c.a[static_cast<unsigned>(i)] = 0;
                w.c.a[static_cast<unsigned>(pos)] = static_cast<uint16_t>(z);
                w.c.len = static_cast<uint16_t>(pos + 1);
            }
        }
        return w;
    };
    // expand the alcove (child c, parent) through its child endpoint
    std::function<void(const Vertex&, int)> down = [&](const Vertex& c, int depth) {
        if (depth >= R) return;
        for (uint32_t z : zset) {
            Vertex w = child_of(c, z);
            visit(Alcove::of(w, c), depth + 1);
            down(w, depth + 1);
        }
    };
    // expand the alcove (pv, rootward(pv)) through its parent endpoint
    std::function<void(const Vertex&, int)> up = [&](const Vertex& pv, int depth) {
        if (depth >= R) return;
        Vertex par = rootward(pv);
        for (uint32_t z : zset) {
            Vertex w = child_of(par, z);
            if (w == pv) continue;
            visit(Alcove::of(w, par), depth + 1);
            down(w, depth + 1);
        }
        Vertex gp = rootward(par);
        visit(Alcove::of(par, gp), depth + 1);
        up(par, depth + 1);
    };
    Alcove A0 = base_alcove();
    visit(A0, 0);
    if (R == 0) return;
    down(base_vertex(1), 0);
    up(base_vertex(1), 0);
}

std::string Tree::vertex_str(const Vertex& v) const {
    std::ostringstream os;
    os << "(" << v.b << "; ";
    if (v.c.zero()) {
        os << "0";
    } else {
        bool first = true;
        for (unsigned i = 0; i < v.c.len; ++i) {
            if (v.c.a[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            int e = v.c.lo + static_cast<int>(i);
            os << v.c.a[i];
            if (e != 0) os << "*t^" << e;
        }
    }
    os << ")";
    return os.str();
}

std::string Tree::alcove_str(const Alcove& A) const {
    return "{" + vertex_str(A.v0) + ", " + vertex_str(A.v1) + "}";
}

std::string Tree::dot_ball(int R, const std::vector<Alcove>& highlight) const {
    struct VLess {
        bool operator()(const Vertex& x, const Vertex& y) const { return vertex_less(x, y); }
    };
    std::map<Vertex, int, VLess> ids;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<bool> hot;
    for_ball(R, [&](const Alcove& A, int) {
        ids.emplace(A.v0, 0);
        ids.emplace(A.v1, 0);
        edges.emplace_back(A.v0, A.v1);
        bool h = false;
        for (const Alcove& H : highlight)
            if (H == A) {
                h = true;
                break;
            }
        hot.push_back(h);
    });
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    std::ostringstream os;
    os << "graph ball {\n";
    for (auto& kv : ids) {
        os << "  n" << kv.second << " [label=\"" << vertex_str(kv.first) << "\", shape="
           << (kv.first.type() == 0 ? "ellipse" : "box") << "];\n";
    }
    // deterministic edge order: sort by endpoint ids
    std::vector<std::pair<std::pair<int, int>, bool>> es;
    for (size_t i = 0; i < edges.size(); ++i)
        es.push_back({{ids[edges[i].first], ids[edges[i].second]}, hot[i]});
    std::sort(es.begin(), es.end());
    for (auto& e : es) {
        os << "  n" << e.first.first << " -- n" << e.first.second;
        if (e.second) os << " [color=red, penwidth=3]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace adlv
