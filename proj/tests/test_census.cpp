#include <doctest.h>

#include "adlv/census.hpp"

using namespace adlv;

TEST_CASE("census records round-trip through the parser") {
    FieldCtx F = FieldCtx::for_q(2, 2);
    Tree T(F, 20);
    for (const BCase& b : {BCase::identity(), BCase::diagonal(1), BCase::supersingular()}) {
        SweepResult sr = sweep(T, b, 3, 3);
        nlohmann::json rec = census_record(T, b, sr, -3, 3, true);
        std::string text = rec.dump(2);
        nlohmann::json back = parse_census(text);
        CHECK(back == rec);
        CHECK(back.dump(2) == text);
        // every bucket in the window matches its prediction
        for (const auto& bk : back["buckets"]) CHECK(bk["match"].get<bool>());
    }
}

TEST_CASE("census parser validates the schema") {
    CHECK_THROWS(parse_census("{\"q\": 2}"));
    CHECK_THROWS(parse_census("not json"));
}
