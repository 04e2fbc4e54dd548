#pragma once

#include <string>
#include <vector>

#include "adlv/adlv_sets.hpp"

namespace adlv {

enum class InducingTag {
    IwahoriLevel0,       // I^(0)
    MaxCompactSteinberg, // K^(m) with the inflated Steinberg
    MaxCompactTrivial,   // K^(m) with the trivial representation
    TorusUnits,          // T(o_F)
    QuaternionUnits,     // H_{b_1} = U_D
};
const char* inducing_tag_name(InducingTag t);

struct CohomEntry {
    int degree;
    unsigned long long dim_per_component; // dimension of the inducing representation
    int twist;                            // Tate-twist label, recorded verbatim
    InducingTag tag;
};

struct CohomProfile {
    BCase b;
    WeylElt w;
    std::vector<CohomEntry> entries;
};

/// Closed-form compactly-supported cohomology profile of X_w(b); EmptyADLV
/// when X_w(b) is empty.
CohomProfile cohom_profile(const BCase& b, WeylElt w, uint32_t q);

/// |S(F_{q^m})| for the connected-component variety S of the case. Twist
/// labels are never used here; the counts come from the variety shapes.
unsigned long long component_point_count(const BCase& b, WeylElt w, uint32_t q, uint32_t m);

/// |sum_r (-1)^r Tr(Frob^m | H^r_c(S))| from the component shape; agrees with
/// component_point_count identically.
unsigned long long lefschetz_abs(const BCase& b, WeylElt w, uint32_t q, uint32_t m);

enum class RepTarget {
    PrincipalSeries, // Ind_B chi (Identity) / character of T(F) (Diagonal)
    OneDimensional,  // phi o det
    TwistedSteinberg,
    Cuspidal,
    DCharacter, // character of the quaternion group
    HighDimD,   // irreducible D^x-representation of dimension >= 2
};

struct HomDim {
    int dim = 0;
    int twist = 0;
    bool has_twist = false;
};

/// Dimension (0 or 1) and twist label of Hom(H^degree_c(X_w(b)), target),
/// clause by clause. InvalidTarget when the target or degree does not apply.
HomDim hom_dim_table(const BCase& b, WeylElt w, int degree, RepTarget target, bool unramified);

struct RegularRepDescriptor {
    int rank;                    // 1 or 2
    std::string component_group; // "Z" or "Z^2"
};
/// The nonzero cohomology as the regular representation of the component
/// group; InvalidTarget for the Identity case.
RegularRepDescriptor regular_rep_descriptor(const BCase& b);

/// Seeded check that coset translation in T(F)/T(o_F) acts on the indicator
/// basis by index translation. Returns false and fills `fail` on mismatch.
bool regular_translation_check(const FieldCtx& F, int samples_count, uint64_t seed,
                               std::string* fail = nullptr);

struct Table1Row {
    std::string b, cond, jb, kb, s;
};
std::vector<Table1Row> table1_rows();
std::string table1_csv();
std::string table1_text();

} // namespace adlv
