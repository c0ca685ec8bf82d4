#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfca/json_io.hpp"
#include "hopfca/constructors.hpp"

using namespace hopfca;

TEST_CASE("Hopf algebra JSON round trip preserves all tensors and metadata") {
    for (const HopfPtr& h : {appendix_d1(), group_hopf(FieldSpec::prime(3), FiniteAbelianGroup({2, 2})),
                             function_hopf(FieldSpec::rational(), FiniteAbelianGroup({3}))}) {
        Json j = hopf_to_json(h);
        HopfPtr back = hopf_from_json(j);
        CHECK(back->same_tensors(*h));
        CHECK(back->basis_names() == h->basis_names());
        CHECK(back->metadata().origin == h->metadata().origin);
        CHECK(back->metadata().known_group_likes == h->metadata().known_group_likes);
        CHECK(back->metadata().known_dual_group_likes == h->metadata().known_dual_group_likes);
        // serialization is canonical: a second round trip is byte-identical
        CHECK(hopf_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("serialized tensor entries are sorted by (i, j, k)") {
    Json j = hopf_to_json(appendix_d1());
    const Json& mul = j["mul"];
    for (std::size_t t = 1; t < mul.size(); ++t) {
        auto key = [&](const Json& e) {
            return std::array<std::size_t, 3>{e[0].get<std::size_t>(), e[1].get<std::size_t>(),
                                              e[2].get<std::size_t>()};
        };
        CHECK(key(mul[t - 1]) < key(mul[t]));
    }
}

TEST_CASE("rational scalars serialize as integers or num/den strings") {
    FieldSpec q = FieldSpec::rational();
    CHECK(scalar_to_json(Scalar::of(q, -3)).dump() == "-3");
    CHECK(scalar_to_json(Scalar::fraction(BigInt(1), BigInt(2))).dump() == "\"1/2\"");
    CHECK(scalar_from_json(q, Json::parse("\"-7/4\"")) == Scalar::fraction(BigInt(-7), BigInt(4)));
    CHECK(scalar_from_json(q, Json::parse("5")) == Scalar::of(q, 5));
    CHECK_THROWS_AS(scalar_from_json(q, Json::parse("\"x/y\"")), InputError);
    CHECK_THROWS_AS(scalar_from_json(q, Json::parse("1.5")), InputError);
}

TEST_CASE("morphism JSON round trip") {
    HopfPtr h = group_hopf(FieldSpec::prime(5), FiniteAbelianGroup({4}));
    HopfMorphism f = int_power(h, 3);
    HopfMorphism back = morphism_from_json(morphism_to_json(f));
    CHECK(back.matrix == f.matrix);
    CHECK(back.source->same_tensors(*f.source));
    CHECK(back.target->same_tensors(*f.target));
    CHECK(verify_morphism(back).all_pass());
}

TEST_CASE("CW and subcomplex JSON") {
    CWComplexData rp2 = builtin_space("RP2");
    CWComplexData back = cw_from_json(cw_to_json(rp2));
    CHECK(back.cells == rp2.cells);
    CHECK(back.boundary == rp2.boundary);
    CHECK(back.name == rp2.name);
    SubcomplexSpec sub = subcomplex_from_json(Json::parse(R"({"keep": [[0], [0]]})"));
    CHECK(sub == SubcomplexSpec{{0}, {0}});
    // a complex violating d d = 0 is rejected at load
    CHECK_THROWS_AS(
        cw_from_json(Json::parse(R"({"cells":[1,1,1],"boundary":[[[1]],[[1]]]})")), InputError);
}

TEST_CASE("F_p chain complex JSON") {
    FpChainComplex c = cw_to_fp_chain(builtin_space("RP2"), 5);
    FpChainComplex back = fp_chain_from_json(fp_chain_to_json(c));
    CHECK(back.dims == c.dims);
    CHECK(back.field == c.field);
    for (std::size_t q = 0; q < c.boundary.size(); ++q) CHECK(back.boundary[q] == c.boundary[q]);
}

TEST_CASE("action JSON: canonical flag and explicit verified tables") {
    HopfPtr d1 = appendix_d1();
    ActionSpec canon = action_from_json(Json::parse(R"({"prime": 5, "canonical": true})"), d1);
    CHECK(verify_action(canon).all_pass());
    ActionSpec table = action_from_json(action_to_json(canon), d1);
    CHECK(table.table.size() == 5);
    for (std::size_t n = 0; n < 5; ++n) CHECK(table.table[n].matrix == canon.table[n].matrix);
    // a corrupted table is rejected
    Json bad = action_to_json(canon);
    std::swap(bad["table"][2], bad["table"][3]);
    CHECK_THROWS_AS(action_from_json(bad, d1), MathError);
}

TEST_CASE("malformed inputs raise InputError, not crashes") {
    CHECK_THROWS_AS(hopf_from_json(Json::parse("[]")), InputError);
    CHECK_THROWS_AS(hopf_from_json(Json::parse(R"({"dim": 2})")), InputError);
    CHECK_THROWS_AS(hopf_from_json(Json::parse(
                        R"({"field":{"kind":"prime","p":4},"dim":1,"mul":[],"unit":[1],"comul":[],"counit":[1],"antipode":[[1]]})")),
                    InputError);
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), InputError);
    CHECK_THROWS_AS(field_from_json(Json::parse(R"({"kind":"real"})")), InputError);
}

TEST_CASE("loading a verifiable presentation from scratch") {
    // kZ/2 over F_3 written out by hand
    Json j = Json::parse(R"({
        "field": {"kind": "prime", "p": 3},
        "dim": 2,
        "mul": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]],
        "unit": [1, 0],
        "comul": [[0,0,0,1],[1,1,1,1]],
        "counit": [1, 1],
        "antipode": [[1, 0], [0, 1]]
    })");
    HopfPtr h = hopf_from_json(j);
    CHECK(verify_hopf(*h).all_pass());
    CHECK(h->same_tensors(*group_hopf(FieldSpec::prime(3), FiniteAbelianGroup({2}))));
}
