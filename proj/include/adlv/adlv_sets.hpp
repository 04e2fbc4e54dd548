#pragma once

#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "adlv/building.hpp"

namespace adlv {

/// Representative of one of the three sigma-conjugacy cases.
struct BCase {
    enum class Kind { Identity, Diagonal, Supersingular };
    Kind kind = Kind::Identity;
    int alpha = 0; // Diagonal only, > 0

    static BCase identity() { return {Kind::Identity, 0}; }
    static BCase diagonal(int alpha);
    static BCase supersingular() { return {Kind::Supersingular, 0}; }

    int det_valuation() const;
    /// The subcomplex whose departure data describes X_w(b) in this case.
    SubcomplexId reference() const;
    Mat2 realization(const FieldCtx& F) const; // 1, diag(1, t^alpha), or (0 1; t 0)
    std::string name() const;
    friend bool operator==(const BCase& a, const BCase& b) {
        return a.kind == b.kind && a.alpha == b.alpha;
    }
};

/// The set D^i_c(P): alcoves with departure vertex P and departure distance i.
struct DepartureSet {
    Vertex P;
    int i = 1;
    SubcomplexId sub = SubcomplexId::RationalBuilding;
};

/// Decomposition of X_w(b) restricted to a radius-R window. Non-degenerate
/// rows list departure sets whose members all lie inside the window (a member
/// of D^i_c(P) sits at alcove-distance i + h(P) from the base alcove, so the
/// window keeps a departure set entirely or not at all).
struct StructuralPrediction {
    bool degenerate = false;
    std::vector<Alcove> points;     // degenerate rows (already window-restricted)
    std::vector<DepartureSet> sets; // non-degenerate rows
};

bool nonempty(const BCase& b, WeylElt w);

/// Type of the departure vertices for length parameter i and index sign;
/// the same parity rule applies in all three cases.
int departure_type(int i, int index_sign);

Alcove b_sigma_image(const Tree& T, const Alcove& D, const BCase& b);
WeylElt relative_position(const Tree& T, const Alcove& D, const BCase& b);

/// The composed gallery from D to b.sigma(D) assembled from the departure
/// gallery, its b.sigma image, and (when the case calls for it) the connecting
/// stretch inside the reference subcomplex.
Gallery gamma_gallery(const Tree& T, const Alcove& D, const BCase& b);
/// Predicted length: 2d-1 / 2d+alpha-1 / 2d in the three cases.
int gamma_length_formula(const BCase& b, int departure_dist);

/// flip_parity is a harness hook: it deliberately selects the wrong departure
/// type so that the structural-equality verification must fail.
StructuralPrediction structural_sets(const Tree& T, const BCase& b, WeylElt w, int R,
                                     bool flip_parity = false);

std::vector<Alcove> enumerate_members(const Tree& T, const DepartureSet& s);
unsigned long long member_count(const Tree& T, const DepartureSet& s); // closed form

struct SweepResult {
    int R = 0;
    int collect_max = 0;
    unsigned long long total = 0;
    std::unordered_map<int, unsigned long long> bucket_sizes;
    // per-bucket members grouped by departure vertex (|index| <= collect_max)
    std::unordered_map<int, std::unordered_map<Vertex, std::vector<Alcove>, VertexHash>> members;
    // members lying inside the reference subcomplex (the degenerate rows)
    std::unordered_map<int, std::vector<Alcove>> degenerate;

    unsigned long long size_of(int index) const {
        auto it = bucket_sizes.find(index);
        return it == bucket_sizes.end() ? 0 : it->second;
    }
};

/// One pass over the radius-R alcove ball, bucketing every alcove by
/// inv(D, b.sigma D) and collecting members for small indices.
SweepResult sweep(const Tree& T, const BCase& b, int R, int collect_max);

std::vector<Alcove> brute_force_adlv(const Tree& T, const BCase& b, WeylElt w, int R);

/// Chart of the cell F_{P,V,l}: base point P in {P_0, P_1}, V a set of alcoves
/// at P containing the base alcove, coords of length l+1. CoordinateExcluded
/// when the projection to the first alcove lands in V.
Alcove schubert_chart(const Tree& T, const Vertex& P, const std::vector<Alcove>& V, int l,
                      const std::vector<uint16_t>& coords);
/// The same cell point built by multiplying affine root subgroup elements
/// against the diagonal (or antidiagonal) representative, split by parity.
Alcove schubert_chart_roots(const Tree& T, const std::vector<uint16_t>& coords, int l);
/// Defining-property enumeration: alcoves at stretched distance l from P whose
/// minimal gallery from P avoids V.
std::vector<Alcove> chart_members(const Tree& T, const Vertex& P, const std::vector<Alcove>& V,
                                  int l);

struct ComponentDescriptor {
    std::string interface_group; // image of J_b in Z under v_L(det)
    std::string pi0;             // component group of the full variety
};
ComponentDescriptor component_decomposition(const BCase& b);
/// Element of J_b with v_L(det) = v.
Mat2 component_representative(const FieldCtx& F, const BCase& b, int v);
/// b sigma(g) == g b, i.e. g lies in the sigma-stabilizer of b.
bool in_j_b(const Tree& T, const BCase& b, const Mat2& g);

struct StabilizerReport {
    int transitivity_checked = 0;
    int iwahori_checked = 0;
    int representatives_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
/// Transitivity witnesses (Identity/Diagonal), Iwahori membership of sampled
/// determinant-valuation-0 elements (Supersingular), and the component
/// representatives for det valuations in [-3, 3].
StabilizerReport stabilizer_checks(const Tree& T, const BCase& b, int samples, uint64_t seed);

} // namespace adlv
