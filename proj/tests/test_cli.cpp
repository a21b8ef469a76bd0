#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "torrigid/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace torrigid;
using namespace torrigid::cli;
using support::data_path;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args, int expected_code)
{
    args.push_back("--format");
    args.push_back("json");
    auto o = invoke(args);
    CHECK(o.code == expected_code);
    INFO(o.err);
    return Json::parse(o.out);
}

std::string fan(const std::string& name) { return data_path("fans/" + name + ".json"); }
std::string poly(const std::string& name) { return data_path("polys/" + name + ".json"); }

std::string temp_file(const std::string& name, const std::string& contents)
{
    auto path = std::filesystem::temp_directory_path() / ("torrigid_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

} // namespace

TEST_CASE("fan parsing")
{
    auto raw = parse_fan(R"({"rays": [[1, 0], [0, 1]], "max_cones": [[0, 1]], "name": "plane"})");
    CHECK(raw.rays.size() == 2);
    CHECK(raw.max_cones.size() == 1);
    CHECK(raw.name == "plane");

    try {
        parse_fan("{\n  \"rays\": [[1, 0],\n  ]\n}", "bad.json");
        FAIL("no error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).rfind("bad.json:3:", 0) == 0);
    }
    try {
        parse_fan(R"({"rays": [[1, 0], [0, "x"]], "max_cones": [[0, 1]]})", "f.json");
        FAIL("no error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("rays[1]") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_fan(R"({"max_cones": [[0]]})"), InputError);
}

TEST_CASE("polygon and polynomial parsing")
{
    auto poly_doc = parse_polygon(R"({"polygon": [[0, 0], [1, 0], [0, 1]]})");
    REQUIRE(poly_doc);
    CHECK(poly_doc->size() == 3);
    CHECK(!parse_polygon(R"({"rays": []})"));

    auto f = parse_polynomial(R"({"terms": [{"coeff": "2/4", "exp": [1, 2]}, {"coeff": "-3", "exp": [0, 0]}]})");
    REQUIRE(f.terms.size() == 2);
    CHECK(f.terms[0].coefficient == support::frac(1, 2));
    CHECK(f.terms[0].coefficient.get_den() == 2);
    CHECK(f.terms[1].coefficient == -3);

    CHECK_THROWS_AS(parse_polynomial(R"({"terms": [{"coeff": "0", "exp": [1]}]})"), InputError);
    CHECK_THROWS_AS(parse_polynomial(R"({"terms": [{"coeff": "1", "exp": [-1]}]})"), InputError);
    CHECK_THROWS_AS(parse_polynomial(R"({"terms": [{"coeff": "1", "exp": [1]}, {"coeff": "1", "exp": [1, 1]}]})"),
                    InputError);
}

TEST_CASE("digest is stable")
{
    CHECK(fnv1a64("").size() == 16);
    CHECK(fnv1a64("") == "cbf29ce484222325");
    CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
}

TEST_CASE("t1 on the square")
{
    auto j = invoke_json({"t1", fan("square")}, Success);
    CHECK(j["results"]["total"] == 1);
    CHECK(j["completeness"] == "guaranteed");
    CHECK(j["exit_code"] == 0);
    CHECK(!j["contributions"].empty());

    auto text = invoke({"t1", fan("square")});
    CHECK(text.code == 0);
    CHECK(text.out.find("total") != std::string::npos);
}

TEST_CASE("t1 on polygons and A-type cones")
{
    CHECK(invoke_json({"t1", fan("hexagon_polygon")}, Success)["results"]["total"] == 3);
    CHECK(invoke_json({"t1", fan("square_polygon")}, Success)["results"]["total"] == 1);
    auto a1 = invoke_json({"t1", fan("a1"), "--bound", "3"}, Success);
    CHECK(a1["results"]["total"] == 1);
    CHECK(a1["completeness"] == "bounded");
    CHECK(!a1["warnings"].empty());
}

TEST_CASE("t1 rejects complete fans")
{
    CHECK(invoke({"t1", fan("p2")}).code == InputFailure);
}

TEST_CASE("rigidity exit codes")
{
    CHECK(invoke({"rigidity", "--wps", "1,1,2,3"}).code == Success);
    CHECK(invoke({"rigidity", "--wps", "1,1,2,2"}).code == NoCertificate);
    CHECK(invoke({"rigidity", fan("quotient_111")}).code == Success);
    CHECK(invoke({"rigidity", fan("square")}).code == NoCertificate);
    CHECK(invoke({"rigidity", fan("p2")}).code == Success);
    CHECK(invoke({"rigidity", fan("f2")}).code == NoCertificate);
    CHECK(invoke({"rigidity"}).code == InputFailure);
    CHECK(invoke({"rigidity", fan("p2"), "--wps", "1,1,1"}).code == InputFailure);

    auto j = invoke_json({"rigidity", fan("quotient_111")}, Success);
    CHECK(j["results"]["rigid"] == true);
    CHECK(j["results"]["criteria"].is_array());
}

TEST_CASE("localcoh")
{
    auto j = invoke_json({"localcoh", fan("p2"), "--i", "3", "--p", "-1,-1,-1", "--oracle"}, Success);
    CHECK(j["results"]["dimension"] == 1);
    CHECK(j["results"]["oracle"]["agrees"] == true);

    auto zero = invoke_json({"localcoh", fan("p2"), "--i", "2", "--p", "0,0,0"}, Success);
    CHECK(zero["results"]["dimension"] == 0);
    CHECK(zero["results"].contains("h2_via_graph"));

    CHECK(invoke({"localcoh", fan("p2"), "--i", "2", "--p", "0,0"}).code == InputFailure);
    CHECK(invoke({"localcoh", fan("p2"), "--i", "2"}).code == InputFailure);

    auto affine = invoke_json({"localcoh", fan("square"), "--i", "2", "--p", "-1,0,-1,0"}, Success);
    CHECK(!affine["warnings"].empty());
}

TEST_CASE("cy")
{
    CHECK(invoke_json({"cy", fan("p4"), poly("quintic")}, Success)["results"]["dimension"] == 101);
    CHECK(invoke({"cy", fan("p3"), poly("quartic_p3")}).code == Unsupported);
    CHECK(invoke({"cy", fan("p4"), poly("quartic_p4")}).code == Unsupported);
    CHECK(invoke({"cy", fan("p4"), poly("quartic_p3")}).code == InputFailure);
}

TEST_CASE("check-fan")
{
    auto j = invoke_json({"check-fan", fan("p2")}, Success);
    CHECK(j["results"]["complete"] == true);
    CHECK(j["results"]["fano"] == true);
    CHECK(j["results"]["class_group"]["free_rank"] == 1);

    auto sq = invoke_json({"check-fan", fan("square")}, Success);
    CHECK(sq["results"]["affine"] == true);
    CHECK(sq["results"].contains("q_gorenstein"));
}

TEST_CASE("malformed input")
{
    auto broken = temp_file("broken.json", "{\n\"rays\": [[1, 0]\n");
    auto o = invoke({"check-fan", broken});
    CHECK(o.code == InputFailure);
    CHECK(o.err.find(":3:") != std::string::npos);

    auto inconsistent = temp_file("inconsistent.json", R"({"rays": [[1, 0], [0, 1, 2]], "max_cones": [[0, 1]]})");
    CHECK(invoke({"check-fan", inconsistent}).code == InputFailure);
    CHECK(invoke({"check-fan", "/nonexistent/fan.json"}).code == InputFailure);
    CHECK(invoke({"frobnicate"}).code == InputFailure);
    CHECK(invoke({"--help"}).code == Success);
    CHECK(invoke({"t1", fan("square"), "--format", "yaml"}).code == InputFailure);
}

TEST_CASE("reports round-trip through JSON")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"t1", fan("square")},
             {"t1", fan("a2"), "--bound", "3"},
             {"rigidity", "--wps", "1,1,2,2"},
             {"localcoh", fan("p2"), "--i", "2", "--p", "1,-1,0", "--oracle"},
             {"check-fan", fan("f2")},
         }) {
        auto a = args;
        a.insert(a.end(), {"--format", "json"});
        auto o = invoke(a);
        auto j = Json::parse(o.out);
        Report r = report_from_json(j);
        CHECK(to_json(r) == j);
        CHECK(r.exit_code == o.code);
        CHECK(r.input_digest.size() == 16);
        CHECK(!to_text(r).empty());
    }
    CHECK_THROWS_AS(report_from_json(Json::parse(R"({"command": 3})")), InputError);
}

TEST_CASE("output is deterministic")
{
    std::vector<std::string> args = {"t1", fan("hexagon"), "--format", "json"};
    auto first = invoke(args);
    auto second = invoke(args);
    CHECK(first.out == second.out);
    CHECK(invoke({"t1", fan("hexagon")}).out == invoke({"t1", fan("hexagon")}).out);

    auto other = Json::parse(invoke({"t1", fan("square"), "--format", "json"}).out);
    CHECK(other["input_digest"] != Json::parse(first.out)["input_digest"]);
}
