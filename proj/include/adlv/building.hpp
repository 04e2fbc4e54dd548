#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "adlv/mat2.hpp"

namespace adlv {

constexpr unsigned kVertexPolyCap = 40;

/// Exact Laurent polynomial window used in canonical vertex forms: the
/// coefficient of t^(lo+i) is a[i]; a[0] and a[len-1] are nonzero when len>0.
struct VPoly {
    int16_t lo = 0;
    uint16_t len = 0;
    std::array<uint16_t, kVertexPolyCap> a{};

    bool zero() const { return len == 0; }
    uint16_t coeff(int e) const {
        if (len == 0 || e < lo || e >= lo + len) return 0;
        return a[static_cast<unsigned>(e - lo)];
    }
    friend bool operator==(const VPoly& x, const VPoly& y) {
        if (x.lo != y.lo || x.len != y.len) return false;
        for (unsigned i = 0; i < x.len; ++i)
            if (x.a[i] != y.a[i]) return false;
        return true;
    }
};

/// Lattice class in canonical form: the class of span{e1 + c*e2, t^b*e2}
/// where c is reduced modulo t^b (all exponents of c are < b). The type of
/// the vertex is b mod 2.
struct Vertex {
    int32_t b = 0;
    VPoly c;

    int type() const { return ((b % 2) + 2) % 2; }
    friend bool operator==(const Vertex& x, const Vertex& y) { return x.b == y.b && x.c == y.c; }
};

/// Ordered adjacent pair (type-0 vertex, type-1 vertex).
struct Alcove {
    Vertex v0, v1;

    static Alcove of(const Vertex& x, const Vertex& y);
    /// The endpoint with larger b ("child") determines the edge uniquely.
    const Vertex& child() const { return v0.b > v1.b ? v0 : v1; }
    const Vertex& parent() const { return v0.b > v1.b ? v1 : v0; }
    bool has_vertex(const Vertex& v) const { return v == v0 || v == v1; }
    const Vertex& other(const Vertex& v) const { return v == v0 ? v1 : v0; }
    friend bool operator==(const Alcove& x, const Alcove& y) { return x.v0 == y.v0 && x.v1 == y.v1; }
};

/// Element of the affine Weyl group, encoded by the apartment index i with
/// w * C^0 = C^i; the length is |i|.
struct WeylElt {
    int32_t index = 0;

    int length() const { return index < 0 ? -index : index; }
    friend bool operator==(WeylElt a, WeylElt b) { return a.index == b.index; }
};

enum class SubcomplexId {
    RationalBuilding,  // canonical forms with all coefficients fixed by sigma
    StandardApartment, // canonical forms with c = 0
    BaseAlcoveClosure, // the base alcove and its two vertices
};

using Gallery = std::vector<Alcove>;

inline size_t hash_vertex(const Vertex& v) {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<size_t>(static_cast<uint32_t>(v.b)));
    mix(static_cast<size_t>(static_cast<uint16_t>(v.c.lo)));
    mix(v.c.len);
    for (unsigned i = 0; i < v.c.len; ++i) mix(v.c.a[i]);
    return h;
}

struct VertexHash {
    size_t operator()(const Vertex& v) const { return hash_vertex(v); }
};

/// Deterministic total order on canonical forms (for stable output).
bool vertex_less(const Vertex& x, const Vertex& y);
bool alcove_less(const Alcove& x, const Alcove& y);
struct AlcoveHash {
    size_t operator()(const Alcove& A) const { return hash_vertex(A.v0) * 1000003u ^ hash_vertex(A.v1); }
};

/// The level-n tree: the Bruhat-Tits tree of SL_2 over F_{q^n}((t)), with the
/// level-1 (rational) subtree, the standard apartment, galleries and the
/// relative position map. Immutable; all members are const.
class Tree {
  public:
    Tree(const FieldCtx& F, int precision_budget);

    const FieldCtx& field() const { return *F_; }
    int budget() const { return budget_; }
    uint32_t branching() const { return F_->size(); } // q^n; vertex degree is q^n + 1

    // -- distinguished simplices -------------------------------------------
    static Vertex base_vertex(int m = 0); // P_m = class of o + t^m o
    static Alcove base_alcove();          // C^0
    Alcove apartment_alcove(int i) const; // C^i; PrecisionExhausted beyond budget
    static Vertex apartment_vertex(int a);

    // -- canonical forms and group action ----------------------------------
    Vertex canonical_vertex(const Mat2& basis) const;
    Mat2 basis_matrix(const Vertex& v) const;
    Vertex act(const Mat2& g, const Vertex& v) const;
    Alcove act(const Mat2& g, const Alcove& A) const;
    Vertex sigma(const Vertex& v) const;
    Alcove sigma(const Alcove& A) const;

    // -- local structure ----------------------------------------------------
    Vertex rootward(const Vertex& v) const;           // neighbor with b-1
    std::vector<Vertex> children(const Vertex& v) const; // the q^n neighbors with b+1
    std::vector<Vertex> neighbors(const Vertex& v) const;
    bool adjacent(const Vertex& u, const Vertex& w) const;

    // -- metric structure ----------------------------------------------------
    /// Edge-path distance between vertices (number of edges).
    int graph_distance(const Vertex& u, const Vertex& w) const;
    /// Length of the gallery stretched from u to w: 0 when equal or adjacent,
    /// else graph distance minus one. Computed from the elementary divisors of
    /// a nested representative pair.
    int vertex_distance(const Vertex& u, const Vertex& w) const;
    std::vector<Vertex> geodesic(const Vertex& u, const Vertex& w) const;
    Gallery minimal_gallery(const Alcove& D, const Alcove& E) const;
    static bool is_minimal(const Gallery& g);
    WeylElt inv(const Alcove& D, const Alcove& E) const;

    // -- subcomplexes ---------------------------------------------------------
    bool contains(SubcomplexId c, const Vertex& v) const;
    bool contains(SubcomplexId c, const Alcove& A) const;
    struct Gate {
        Vertex P;
        int dist; // graph distance from the query vertex to P
    };
    Gate gate(SubcomplexId c, const Vertex& v) const;
    /// (P_D, Gamma_{D,c}); AlcoveInsideSubcomplex when D lies in c.
    std::pair<Vertex, Gallery> vertex_of_departure(const Alcove& D, SubcomplexId c) const;
    int departure_distance(const Alcove& D, SubcomplexId c) const; // d_c = 1 + gallery length

    /// Length of the gallery stretched from vertex P to the base alcove.
    int base_alcove_offset(const Vertex& P) const;

    // -- export ---------------------------------------------------------------
    /// DOT graph of the alcove ball of radius R around the base alcove, vertex
    /// types shown by shape, highlighted alcoves drawn bold.
    std::string dot_ball(int R, const std::vector<Alcove>& highlight) const;

    /// Visits every alcove at alcove-distance <= R from the base alcove once.
    void for_ball(int R, const std::function<void(const Alcove&, int depth)>& visit) const;
    /// Same walk restricted to the rational (level-1) subtree.
    void for_rational_ball(int R, const std::function<void(const Alcove&, int depth)>& visit) const;

    std::string vertex_str(const Vertex& v) const;
    std::string alcove_str(const Alcove& A) const;

  private:
    const FieldCtx* F_;
    int budget_;

    int diff_valuation(const VPoly& x, const VPoly& y) const; // kInf when equal
    VPoly truncate_poly(const VPoly& c, int e) const;         // reduce mod t^e
    void ball_walk(int R, const std::vector<uint32_t>& zset,
                   const std::function<void(const Alcove&, int)>& visit) const;
};

} // namespace adlv
