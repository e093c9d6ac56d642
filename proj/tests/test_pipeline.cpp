#include "doctest.h"

#include "qv/pipeline.hpp"

#include <algorithm>
#include <set>

using namespace qv;
namespace pl = qv::pipeline;

namespace {

const pl::CheckReport& find(const std::vector<pl::CheckReport>& rs, const std::string& name) {
    auto it = std::find_if(rs.begin(), rs.end(), [&](const pl::CheckReport& r) { return r.name == name; });
    REQUIRE(it != rs.end());
    return *it;
}

}  // namespace

TEST_CASE("registry: unique names, dependencies registered first, every criterion covered") {
    std::set<std::string> seen;
    std::set<int> criteria;
    for (const auto& c : pl::registry()) {
        for (const auto& d : c.deps) CHECK(seen.count(d) == 1);
        CHECK(seen.insert(c.name).second);
        CHECK(!c.claim.empty());
        criteria.insert(c.criterion);
    }
    CHECK(criteria == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    for (const char* n : {"table1.characters", "a6.extract_t", "s5.extract_t", "contraction.lambda", "arith.rh_search"}) CHECK(seen.count(n) == 1);
    CHECK_THROWS_AS(pl::find_check("unknown"), pl::UnknownCheck);
}

TEST_CASE("run: unknown names are rejected before anything runs") {
    CHECK_THROWS_AS(pl::run({"arith.degrees", "unknown"}, pl::Config{}), pl::UnknownCheck);
}

TEST_CASE("report: an empty run gives a metadata-only report") {
    pl::Config cfg;
    cfg.seed = 7;
    auto rs = pl::run({}, cfg);
    CHECK(rs.empty());
    auto j = pl::report_json(rs, cfg);
    CHECK(j["metadata"]["field_order"] == 120);
    CHECK(j["metadata"]["rng_seed"] == 7);
    CHECK(j["metadata"]["version"] == pl::version());
    CHECK(j["checks"].empty());
    CHECK(pl::render_report(rs, cfg) == pl::render_report(rs, cfg));
}

TEST_CASE("arithmetic checks pass with exact witnesses") {
    auto rs = pl::run({"arith.rh_search", "arith.determinant", "arith.degrees"}, pl::Config{});
    REQUIRE(rs.size() == 3);
    CHECK(pl::all_passed(rs));
    CHECK(find(rs, "arith.rh_search").witness["genera_2_to_15"] == pl::json::array({10}));
    CHECK(find(rs, "arith.determinant").witness["determinant"] == "300");
    for (const auto& r : rs) CHECK(r.millis == 0);
}

TEST_CASE("dependencies are pulled in and run first") {
    auto rs = pl::run({"p4.nodes"}, pl::Config{});
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].name == "p4.orbits");
    CHECK(rs[1].name == "p4.nodes");
    CHECK(pl::all_passed(rs));
}

TEST_CASE("Table 1: the only disagreement is U4 on the two order-12 rows") {
    auto rs = pl::run({"table1.characters", "table1.order12_real"}, pl::Config{});
    CHECK(find(rs, "table1.classes").status == pl::Status::Pass);
    CHECK(find(rs, "table1.order12_real").status == pl::Status::Pass);
    const auto& ch = find(rs, "table1.characters");
    CHECK(ch.status == pl::Status::Fail);
    CHECK(ch.witness["characters"].size() == 17);
    const auto& mm = ch.witness["mismatches"];
    REQUIRE(mm.size() == 2);
    std::set<int> rows;
    for (const auto& m : mm) {
        CHECK(m["column"] == "U4");
        rows.insert(m["row"].get<int>());
        // a cyclotomic witness: order and a full coefficient vector
        CHECK(m["actual"]["order"] == 120);
        CHECK(m["actual"]["coeffs"].size() == 32);
    }
    CHECK(rows == std::set<int>{16, 17});
}

TEST_CASE("fail injection: a perturbed Table 1 entry is reported with its coordinates") {
    pl::Config cfg;
    auto rows = table1();
    rows[3].w5 += 1;  // the [2,2] row
    cfg.table1_override = rows;
    auto rs = pl::run({"table1.characters"}, cfg);
    const auto& ch = find(rs, "table1.characters");
    CHECK(ch.status == pl::Status::Fail);
    bool found = false;
    for (const auto& m : ch.witness["mismatches"])
        if (m["row"] == 4 && m["column"] == "W5") {
            found = true;
            CHECK(m["expected"]["coeffs"][0] == "2");
            CHECK(m["actual"]["coeffs"][0] == "1");
        }
    CHECK(found);
}

TEST_CASE("fail injection: a failing dependency skips its dependents") {
    pl::Config cfg;
    auto rows = table1();
    rows[0].counts[0] = 2;
    cfg.table1_override = rows;
    auto rs = pl::run({"table1.subgroups"}, cfg);
    CHECK(find(rs, "table1.classes").status == pl::Status::Fail);
    CHECK(!find(rs, "table1.classes").witness["mismatches"].empty());
    const auto& sub = find(rs, "table1.subgroups");
    CHECK(sub.status == pl::Status::Skipped);
    CHECK(sub.witness["blocked_by"] == pl::json::array({"table1.classes"}));
}

TEST_CASE("a field without the needed roots fails with the required order") {
    pl::Config cfg;
    cfg.field_order = 15;
    auto rs = pl::run({"table1.classes"}, cfg);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == pl::Status::Fail);
    REQUIRE(rs[0].witness.contains("required_field_order"));
    long req = rs[0].witness["required_field_order"].get<long>();
    CHECK(req > 15);
    CHECK(req % 15 == 0);
}

TEST_CASE("the six-line image gives t = 7/10 and repeated runs agree byte for byte") {
    pl::Config cfg;
    auto a = pl::run({"a6.extract_t", "corollaries.characters"}, cfg);
    auto b = pl::run({"a6.extract_t", "corollaries.characters"}, cfg);
    CHECK(pl::all_passed(a));
    CHECK(find(a, "a6.extract_t").witness["t"]["rational"] == "7/10");
    CHECK(pl::render_report(a, cfg) == pl::render_report(b, cfg));
}
