#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adlv/counting.hpp"
#include "adlv/finrep.hpp"

namespace adlv {

enum class FaultInjection { None, FlipDepartureParity };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct GridSpec {
    std::vector<uint32_t> qs{2, 3};
    std::vector<uint32_t> ns{1, 2};
    std::vector<int> alphas{1, 2, 3};
    int R = 6;
    int wmax = 7;
    uint64_t seed = 20240915;
    int threads = 1;
    FaultInjection fault = FaultInjection::None;
};

/// Nonemptiness, structural equality, point counts and gallery-length
/// formulas in one window pass per (q, n, b); also partition and
/// sigma-stability of the buckets.
std::vector<CheckResult> run_sweep_checks(const GridSpec& grid);

/// Elementary-divisor distance against breadth-first search, all vertex pairs
/// within radius 5 at q = 2, n in {1, 2}.
std::vector<CheckResult> run_distance_checks();

/// Chart/roots agreement, bijectivity onto the defining-property sets, and
/// restricted-chart cardinalities for l <= 3 over F_{q^m}, q in {2,3}, m <= 2.
std::vector<CheckResult> run_chart_checks(uint64_t seed);

struct ShadowRow {
    uint32_t q;
    std::string source, target;
    bool unramified;
    long long finite_dim;
    int theorem_dim;
};
/// Steinberg facts, Mackey restriction, Frobenius reciprocity, and the
/// Hom-shadow table compared clause by clause against hom_dim_table.
std::vector<CheckResult> run_finrep_checks(const std::vector<uint32_t>& qs, uint64_t seed,
                                           std::vector<ShadowRow>* table = nullptr);

/// Stabilizer membership and surjectivity representatives per case.
std::vector<CheckResult> run_stabilizer_checks(uint32_t q, int samples, uint64_t seed);

/// Series arithmetic invariants (valuation laws, inverse, sigma, parser).
std::vector<CheckResult> run_series_checks(uint64_t seed);

/// Byte comparison of the generated Table-1 CSV against a committed fixture.
CheckResult run_table_check(const std::string& fixture_csv);

bool all_pass(const std::vector<CheckResult>& rs);

} // namespace adlv
