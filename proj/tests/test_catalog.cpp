#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "degreelab/catalog.hpp"
#include "degreelab/errors.hpp"

using namespace degreelab;

TEST_CASE("the shipped catalog loads and validates") {
    const Catalog& cat = Catalog::builtin();
    CHECK(cat.entries().size() >= 19);
    CHECK_NOTHROW(cat.validate());
    CHECK(cat.find("lens:m=5") != nullptr);
    CHECK(cat.find("noncompact-mystery") == nullptr);
    CHECK_THROWS_AS(cat.require("noncompact-mystery"), config_error);
}

TEST_CASE("degree predicate across the catalog") {
    const Catalog& cat = Catalog::builtin();
    auto answer = [&](const char* name) {
        return degree_well_defined(cat, cat.require(name)).answer;
    };

    for (const char* rhs_cover :
         {"s2", "s3", "s4", "s5", "s6", "lens:m=2", "lens:m=3", "lens:m=4",
          "lens:m=5", "lens:m=6", "lens:m=7", "poincare", "rp3"})
        CHECK(answer(rhs_cover) == Answer::No);

    for (const char* stable : {"cp2", "t2", "t3", "s2xs2", "r3g6"})
        CHECK(answer(stable) == Answer::Yes);

    // nonorientable targets fall outside the predicate
    CHECK(answer("rp2") == Answer::Unknown);
    CHECK(answer("rp4") == Answer::Unknown);
}

TEST_CASE("a rational homology sphere with a noncompact cover is stable") {
    const Catalog& cat = Catalog::builtin();
    const auto& entry = cat.require("r3g6");
    CHECK(cat.entry_is_rhs(entry));
    CHECK(degree_well_defined(cat, entry).answer == Answer::Yes);
}

TEST_CASE("dimension-4 specialization") {
    const Catalog& cat = Catalog::builtin();
    CHECK(degree_well_defined_dim4(cat, cat.require("s4")).answer == Answer::No);
    CHECK(degree_well_defined_dim4(cat, cat.require("cp2")).answer == Answer::Yes);
    CHECK(degree_well_defined_dim4(cat, cat.require("s2xs2")).answer ==
          Answer::Yes);
    CHECK(degree_well_defined_dim4(cat, cat.require("t2")).answer ==
          Answer::Unknown);

    for (const auto& e : cat.entries()) {
        if (e.dim != 4) continue;
        CAPTURE(e.name);
        CHECK(degree_well_defined(cat, e).answer ==
              degree_well_defined_dim4(cat, e).answer);
    }
}

TEST_CASE("homotopy-class predicate") {
    const Catalog& cat = Catalog::builtin();
    CHECK(homotopy_classes_defined(cat, cat.require("t2"), 2).answer ==
          Answer::Yes);
    CHECK(homotopy_classes_defined(cat, cat.require("t3"), 3).answer ==
          Answer::Yes);
    CHECK(homotopy_classes_defined(cat, cat.require("cp2"), 4).answer ==
          Answer::Yes);
    CHECK(homotopy_classes_defined(cat, cat.require("s2"), 2, "s2").answer ==
          Answer::No);
    CHECK(homotopy_classes_defined(cat, cat.require("lens:m=5"), 3).answer ==
          Answer::No);

    const auto caveat =
        homotopy_classes_defined(cat, cat.require("cp1"), 4, "cp2");
    CHECK(caveat.answer == Answer::Unknown);
    bool mentions_null_homotopic = false;
    for (const auto& line : caveat.justification)
        if (line.find("null-homotopic") != std::string::npos)
            mentions_null_homotopic = true;
    CHECK(mentions_null_homotopic);
}

TEST_CASE("every decided verdict carries its justification") {
    const Catalog& cat = Catalog::builtin();
    for (const auto& e : cat.entries()) {
        for (const auto& v :
             {degree_well_defined(cat, e), degree_well_defined_dim4(cat, e),
              homotopy_classes_defined(cat, e, e.dim)}) {
            CAPTURE(e.name);
            CAPTURE(v.predicate);
            if (v.answer != Answer::Unknown) CHECK(!v.justification.empty());
        }
    }
}

TEST_CASE("betti sources") {
    const Catalog& cat = Catalog::builtin();
    CHECK(cat.rational_betti(cat.require("s3")) ==
          std::vector<std::size_t>{1, 0, 0, 1});
    CHECK(cat.rational_betti(cat.require("s2xs2")) ==
          std::vector<std::size_t>{1, 0, 2, 0, 1});
    CHECK(cat.rational_betti(cat.require("t3")) ==
          std::vector<std::size_t>{1, 3, 3, 1});
    // nonorientable: never a rational homology sphere, whatever the betti
    CHECK_FALSE(cat.entry_is_rhs(cat.require("rp2")));
}

TEST_CASE("user catalogs extend the shipped one") {
    const auto extended = Catalog::extended(R"({"entries": [
        {"name": "exotic7", "dim": 7, "orientable": true,
         "betti": [1, 0, 0, 0, 0, 0, 0, 1],
         "cover": {"type": "self"}, "sheets": 1,
         "pi_n": {"status": "unknown"}}
    ]})");
    const auto& entry = extended.require("exotic7");
    CHECK(degree_well_defined(extended, entry).answer == Answer::No);
    CHECK(homotopy_classes_defined(extended, entry, 7).answer == Answer::Unknown);

    CHECK_THROWS_AS(Catalog::extended(R"({"entries": [
        {"name": "s2", "dim": 2, "orientable": true,
         "betti": [1, 1], "cover": {"type": "self"}, "sheets": 1}
    ]})"),
                    config_error);
}

TEST_CASE("covering consistency checks reject bad data") {
    // orientable, even-dimensional, multi-sheeted cover by a rational
    // homology sphere: impossible, and the validator must say so
    CHECK_THROWS_AS(Catalog::extended(R"({"entries": [
        {"name": "impostor", "dim": 2, "orientable": true,
         "betti": [1, 0, 1],
         "cover": {"type": "named", "name": "s2"}, "sheets": 2,
         "pi_n": {"status": "unknown"}}
    ]})"),
                    consistency_error);

    // self-cover with a sheet count other than one
    CHECK_THROWS_AS(Catalog::extended(R"({"entries": [
        {"name": "twisted", "dim": 3, "orientable": true,
         "betti": [1, 0, 0, 1], "cover": {"type": "self"}, "sheets": 3,
         "pi_n": {"status": "unknown"}}
    ]})"),
                    consistency_error);
}

TEST_CASE("catalog json round trip") {
    const Catalog& cat = Catalog::builtin();
    const Catalog reparsed = Catalog::from_json(cat.to_json());
    CHECK(reparsed.entries().size() == cat.entries().size());
    CHECK(degree_well_defined(reparsed, reparsed.require("lens:m=3")).answer ==
          Answer::No);
}
