#include <doctest.h>

#include "helpers.hpp"
#include "lgb/ideal_families.hpp"
#include "lgb/serialize.hpp"

using namespace lgb;
using namespace testing;
using L = LadderInstance;

TEST_CASE("instance JSON")
{
    const json j = json::parse(R"({"family":"pfaffian","n":4,"corners":[[1,4]],"t":[2]})");
    CHECK(instance_from_json(j) == L::pfaffian(4, {{1, 4}}, {2}));
    CHECK(instance_from_json(json::parse(R"({"family":"maxminors","m":2,"n":3})")) == L::maxminors(2, 3));
    CHECK(instance_from_json(json::parse(R"({"family":"onesided","m":2,"n":3,"points":[[2,1]],"t":[2]})")) ==
          L::onesided(2, 3, {{2, 1}}, {2}));
    for (const auto& inst : corpus()) CHECK(instance_from_json(to_json(inst)) == inst);
    CHECK_THROWS_AS(instance_from_json(json::parse(R"({"family":"pfaffian","n":4})")), SchemaError);
    CHECK_THROWS_AS(instance_from_json(json::parse(R"({"family":"twosided","n":4})")), OutOfScope);
    CHECK_THROWS_AS(instance_from_json(json::parse(R"([1,2])")), SchemaError);
    CHECK_THROWS_AS(instance_from_json(json::parse(R"({"family":"symmetric","n":3,"points":[[3]],"t":[2]})")),
                    SchemaError);
}

TEST_CASE("variables and ideals")
{
    CHECK(parse_var("x[2,3]") == X(2, 3));
    CHECK_THROWS(parse_var("x[1,1]*x[1,2]"));
    const MonomialIdeal a(monos({"x[1,1]*x[2,2]", "x[1,2]"}), {X(1, 1), X(1, 2), X(2, 2)});
    const MonomialIdeal back = ideal_from_json(to_json(a));
    CHECK(back == a);
    CHECK(back.ambient() == a.ambient());
}

TEST_CASE("report and certificate round trips")
{
    for (const auto& inst : {L::maxminors(2, 3), L::onesided(3, 3, {{2, 1}, {3, 2}}, {2, 2}),
                             L::pfaffian(5, {{1, 4}, {2, 5}}, {2, 2})}) {
        CAPTURE(inst.key());
        const auto rep = verify_family(inst, family_order(inst));
        const json j = to_json(rep);
        CHECK(j.at("schema") == kReportSchema);
        const FamilyReport back = report_from_json(j);
        CHECK(to_json(back) == j);
        CHECK(back.instance == rep.instance);
        CHECK(back.checks == rep.checks);
        CHECK(back.chain == rep.chain);
        CHECK(back.steps == rep.steps);
        REQUIRE(back.vd);
        CHECK(*back.vd == *rep.vd);

        const auto doc = make_certificate_document(rep);
        const json cj = to_json(doc);
        CHECK(cj.at("schema") == kCertificateSchema);
        const auto cback = certificate_from_json(cj);
        CHECK(cback.chain == doc.chain);
        CHECK(cback.root_ideal == doc.root_ideal);
        CHECK(to_json(cback) == cj);

        const auto r = replay(cj);
        CHECK(r.ok());
        CHECK(r.steps_checked == rep.chain.steps.size());
        CHECK(replay(j).ok());
    }
}

TEST_CASE("replay rejects tampered certificates")
{
    const auto inst = L::onesided(3, 3, {{2, 1}, {3, 2}}, {2, 2});
    const json good = to_json(make_certificate_document(verify_family(inst, family_order(inst))));

    json f_edit = good;
    f_edit["steps"][0]["f"] = "x[3,3]";
    CHECK_FALSE(replay(f_edit).ok());

    json gen_edit = good;
    auto& gens = gen_edit["steps"][0]["C"]["generators"];
    gens.erase(gens.begin());
    CHECK_FALSE(replay(gen_edit).ok());

    json vd_edit = good;
    vd_edit["vd"] = "simplex";
    CHECK_FALSE(replay(vd_edit).ok());

    json dropped = good;
    dropped["steps"].erase(dropped["steps"].size() - 1);
    CHECK_FALSE(replay(dropped).ok());

    CHECK_THROWS_AS(replay(json::parse(R"({"schema":"other"})")), SchemaError);
}
