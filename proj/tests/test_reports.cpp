#include <doctest.h>

#include "tightsf/arith.hpp"
#include "tightsf/reports.hpp"

#include <json.hpp>

using namespace tightsf;
using nlohmann::ordered_json;

namespace {

ordered_json parsed(const Report& r)
{
    return ordered_json::parse(r.json());
}

ordered_json frac(long num, long den)
{
    return ordered_json{{"num", num}, {"den", den}};
}

}  // namespace

TEST_SUITE("reports") {

TEST_CASE("envelope")
{
    const Report r = cf_report("-7/5");
    const ordered_json j = parsed(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"schema", "version", "command", "args", "exact", "result"});
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["version"] == kVersion);
    CHECK(j["command"] == "cf");
    CHECK(j["args"] == ordered_json::array({"-7/5"}));
    CHECK(j["exact"] == true);
    CHECK(j.dump(2) + "\n" == r.json());
}

TEST_CASE("cf")
{
    const Report r = cf_report("-7/5");
    const ordered_json x = parsed(r)["result"];
    CHECK(x["entries"] == ordered_json::array({-2, -2, -3}));
    CHECK(x["value"] == frac(-7, 5));
    CHECK(x["p"] == 5);
    CHECK(x["q"] == 7);
    CHECK(x["t"] == 2);
    CHECK(x["reverse_shift"]["value"] == frac(-2, 1));
    CHECK(x["reverse_shift"]["honda_count"] == 2);
    CHECK(r.exit_code == 0);
    CHECK_FALSE(r.text.empty());
    CHECK_THROWS_AS(cf_report("3"), DomainError);
    CHECK_THROWS_AS(cf_report("x/2"), ParseError);
}

TEST_CASE("bypass")
{
    const Report r = bypass_report("-5/2", "inf", "back", true);
    const ordered_json x = parsed(r)["result"];
    CHECK(x["result_text"] == "-2");
    CHECK(x["farey_edge"] == true);
    CHECK(x["agree"] == true);
    CHECK(r.exit_code == 0);
    CHECK_FALSE(parsed(bypass_report("-5/2", "inf", "front", false))["result"].contains("oracle"));
    CHECK_THROWS_AS(bypass_report("1/2", "1/2", "front", false), DomainError);
}

TEST_CASE("seifert")
{
    const ordered_json x = parsed(seifert_report("1/2,-1/3,-2/13"))["result"];
    CHECK(x["normalized"] == "M(-2; 1/2, 2/3, 11/13)");
    CHECK(x["h1"] == 1);
    CHECK(x["family"][0] == "Thm2Family(n=2)");
    CHECK(x["matrix"].size() == 10);
}

TEST_CASE("slopes")
{
    const ordered_json x = parsed(slopes_report("-2;7/9,7/9,7/9", "-3"))["result"];
    CHECK(x["s_n1"] == frac(-62, 25));
    CHECK(x["limit"]["limit"] == frac(-27, 11));
    CHECK(x["limit"]["window"] == ordered_json::array({-1, -100}));
    const ordered_json gap = parsed(slopes_report("-2;1/2,2/3,11/13", "-3"))["result"];
    CHECK(gap["limit"].is_null());
    CHECK_THROWS_AS(slopes_report("-2;1/2,2/3,11/13", "2"), DomainError);
}

TEST_CASE("floer")
{
    const ordered_json x = parsed(floer_report(3))["result"];
    CHECK(x["theta"] == 2);
    CHECK(x["degree"] == -1);
    CHECK(x["grid"] == ordered_json::array({-2, 0, 2}));
    CHECK(x["classes"].size() == 6);
    CHECK(x["distinct"] == true);
    CHECK(x["stein_count"] == 3);
    for (const auto& c : x["classes"])
        CHECK(c["laurent_matches"] == true);
    const ordered_json one = parsed(floer_report(3, std::pair{2L, 0L}))["result"];
    REQUIRE(one["classes"].size() == 1);
    CHECK(one["classes"][0]["coefficients"] == ordered_json::array({1, -2, 1}));
    CHECK(one["classes"][0]["stein_obstructed"] == true);
    CHECK_THROWS_AS(floer_report(3, std::pair{1L, 0L}), DomainError);
}

TEST_CASE("theta")
{
    const ordered_json x = parsed(theta_report(R"({"L": [[-2]], "rot": [0]})"))["result"];
    CHECK(x["m"] == 1);
    CHECK(x["sigma"] == -1);
    CHECK(x["chi"] == 2);
    CHECK(x["theta"] == frac(-1, 1));
    CHECK_THROWS_AS(theta_report("nope"), ParseError);
}

TEST_CASE("classify")
{
    const Report r = classify_report("-2;1/2,2/3,11/13");
    const ordered_json x = parsed(r)["result"];
    CHECK(x["status"] == "Exact");
    CHECK(x["count"] == 3);
    CHECK(x["fillability"]["kind"] == "Mixed");
    CHECK(x["fillability"]["stein_lower"] == 2);
    CHECK(x["fillability"]["non_stein_lower"] == 1);
    CHECK(x["certificate"]["case"] == "Thm2");
    CHECK(x["certificate"]["per_k"].size() == 2);
    CHECK(r.exit_code == 0);

    const Report t = classify_report("-2;1/2,2/3,5/6");
    CHECK(parsed(t)["result"]["status"] == "Infinite");
    CHECK_FALSE(parsed(t)["result"].contains("count"));
    CHECK(t.exit_code == 0);

    const Report u = classify_report("-2;1/2,3/4,4/5");
    CHECK(parsed(u)["result"]["status"] == "Unknown");
    CHECK(u.exit_code == 2);

    const ordered_json lt = parsed(classify_report("-2;1/2,2/3,9/11"))["result"];
    CHECK(lt["count"] == 2);
    CHECK(lt["certificate"]["limit"]["threshold_ok"] == false);
    CHECK(lt["certificate"]["imbalance"]["holds"] == true);
}

}
