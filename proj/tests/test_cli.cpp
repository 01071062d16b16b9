#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::ordered_json;

namespace {

struct Run {
    std::string out;
    int code;
};

Run cli(const std::string& args)
{
    const std::string cmd = std::string("'") + TSF_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    const int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string data(const char* name)
{
    return std::string("'") + TSF_DATA_DIR + "/" + name + "'";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify")
{
    const Run r = cli("classify '-2;1/2,2/3,11/13' --json");
    REQUIRE(r.code == 0);
    const ordered_json j = ordered_json::parse(r.out);
    CHECK(j["command"] == "classify");
    CHECK(j["result"]["status"] == "Exact");
    CHECK(j["result"]["count"] == 3);

    const Run text = cli("classify 'M(1/2, -1/3, -2/13)'");
    CHECK(text.code == 0);
    CHECK(text.out.find("Exact") != std::string::npos);

    CHECK(cli("classify '-2;1/2,2/3,5/6'").code == 0);
    CHECK(cli("classify '-2;1/2,3/4,4/5'").code == 2);
    CHECK(cli("classify '-1;1/2,2/3,5/6' --json").code == 2);
}

TEST_CASE("errors exit with 1")
{
    CHECK(cli("classify 'garbage'").code == 1);
    CHECK(cli("cf 3").code == 1);
    CHECK(cli("nosuchcommand").code != 0);
    CHECK(cli("theta --diagram " + data("not_liftable.json")).code == 1);
    CHECK(cli("theta --diagram /nonexistent/file.json").code == 1);
}

TEST_CASE("continued fractions and bypasses")
{
    const Run r = cli("cf -7/5 --json");
    REQUIRE(r.code == 0);
    CHECK(ordered_json::parse(r.out)["result"]["entries"] == ordered_json::array({-2, -2, -3}));
    const Run b = cli("bypass --dividing -5/2 --ruling inf --side back --oracle --json");
    REQUIRE(b.code == 0);
    CHECK(ordered_json::parse(b.out)["result"]["result_text"] == "-2");
}

TEST_CASE("theta from files")
{
    const Run e8 = cli("theta --diagram " + data("e8.json") + " --json");
    REQUIRE(e8.code == 0);
    CHECK(ordered_json::parse(e8.out)["result"]["theta"] == ordered_json{{"num", 6}, {"den", 1}});
    const Run empty = cli("theta --diagram " + data("empty.json"));
    CHECK(empty.code == 0);
    CHECK(empty.out.find("-2") != std::string::npos);
}

TEST_CASE("JSON output is stable under a parse and dump round trip")
{
    for (const std::string args :
         {"cf -7/5", "bypass --dividing 7/12 --ruling -3/5 --side back", "seifert '-2;1/2,2/3,6/7'",
          "slopes '-2;7/9,7/9,7/9' --n1 -4", "floer --n 4", "floer --n 4 --index 1,2",
          "classify '-2;1/2,2/3,9/11'", "classify '-2;1/2,2/3,5/6'"}) {
        const Run r = cli(args + " --json");
        CAPTURE(args);
        REQUIRE(r.code == 0);
        CHECK(ordered_json::parse(r.out).dump(2) + "\n" == r.out);
    }
}

}
