#include <doctest.h>

#include <sstream>

#include "fqsym/cli.hpp"
#include "fqsym/json.hpp"

using namespace fqsym;
using fqsym::cli::run_cli;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const char* env = nullptr) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(args, out, err, env);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("parse_parts") {
    CHECK(cli::parse_parts("all").to_string() == "all");
    CHECK(cli::parse_parts("even").to_string() == "even");
    CHECK(cli::parse_parts("odd").to_string() == "odd");
    CHECK(cli::parse_parts("set:2").to_string() == "set:2");
    CHECK(cli::parse_parts("set:3,1").to_string() == "set:1,3");
    CHECK_THROWS_AS(cli::parse_parts("set:0,2"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_parts("set:-1"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_parts("set:"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_parts("set:1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_parts("evens"), std::invalid_argument);
}

TEST_CASE("parse_corruption") {
    const auto c = cli::parse_corruption("3:2");
    CHECK(c.degree == 3);
    CHECK(c.term == 2);
    CHECK(c.delta == 1);
    CHECK(cli::parse_corruption("4:0:-7").delta == -7);
    CHECK_THROWS(cli::parse_corruption("3"));
    CHECK_THROWS(cli::parse_corruption("3:x"));
    CHECK_THROWS(cli::parse_corruption("3:1:0"));
}

TEST_CASE("verify theorem as JSON") {
    const auto r = invoke({"verify", "theorem", "--parts", "even", "--max-degree", "6", "--output", "json"});
    CHECK(r.status == cli::kOk);
    const auto j = Json::parse(r.out);
    CHECK(j["identity"] == "theorem");
    CHECK(j["ok"] == true);
    CHECK(j["parameters"]["parts"] == "even");
    CHECK(j["parameters"]["max_degree"] == 6);
    CHECK(j["per_degree"].size() == 7);
    CHECK_FALSE(j.contains("elapsed_ms"));

    // Byte-identical across runs; --output may precede the verb.
    CHECK(invoke({"--output", "json", "verify", "theorem", "--parts", "even", "--max-degree", "6"}).out == r.out);

    const auto timed = invoke({"verify", "theorem", "--max-degree", "2", "--output", "json", "--timing"});
    CHECK(Json::parse(timed.out).contains("elapsed_ms"));
}

TEST_CASE("text and JSON agree on the verdict") {
    const auto text = invoke({"verify", "theorem", "--parts", "set:5", "--max-degree", "4"});
    CHECK(text.status == cli::kOk);
    CHECK(text.out.rfind("[PASS] theorem", 0) == 0);
    const auto json = invoke({"verify", "theorem", "--parts", "set:5", "--max-degree", "4", "--output", "json"});
    CHECK(Json::parse(json.out)["ok"] == true);

    const auto bad = invoke({"verify", "theorem", "--max-degree", "3", "--inject-fault", "3:0"});
    CHECK(bad.status == cli::kCheckFailed);
    CHECK(bad.out.rfind("[FAIL] theorem", 0) == 0);
    const auto bad_json =
        invoke({"verify", "theorem", "--max-degree", "3", "--inject-fault", "3:0", "--output", "json"});
    CHECK(bad_json.status == cli::kCheckFailed);
    const auto j = Json::parse(bad_json.out);
    CHECK(j["ok"] == false);
    CHECK(j["per_degree"][3]["nonzero_terms"].get<int>() > 0);
}

TEST_CASE("verify ung and extras") {
    CHECK(invoke({"verify", "ung", "--which", "h2", "--max-degree", "4"}).status == cli::kOk);
    const auto ung = invoke({"verify", "ung", "--which", "h3", "--max-degree", "4", "--output", "json"});
    const auto j = Json::parse(ung.out);
    CHECK(j["identity"] == "ung-h3");
    CHECK(j["parameters"].contains("reading"));

    CHECK(invoke({"verify", "extras", "--which", "hooks", "--max-degree", "5"}).status == cli::kOk);
    CHECK(invoke({"verify", "extras", "--which", "ncschur", "--max-degree", "5"}).status == cli::kOk);
    CHECK(invoke({"verify", "extras", "--which", "structure", "--max-degree", "3"}).status == cli::kOk);
    CHECK(invoke({"verify", "extras", "--which", "qlit", "--max-degree", "2"}).status == cli::kOk);
    CHECK(invoke({"verify", "extras", "--which", "qlit", "--max-degree", "3"}).status == cli::kCheckFailed);
}

TEST_CASE("expand") {
    const auto r = invoke(
        {"expand", "--series", "theorem-rhs", "--parts", "even", "--degree", "4", "--basis", "G", "--output", "json"});
    CHECK(r.status == cli::kOk);
    const auto j = Json::parse(r.out);
    CHECK(j["series"] == "theorem-rhs");
    CHECK(j["part_set"] == "even");
    CHECK(j["basis"] == "G");
    CHECK(j["degree"] == 4);
    // S^2413 + S^1234 in G: the down-set of 2413 plus the identity again.
    std::map<std::string, std::string> terms;
    for (const auto& t : j["terms"])
        terms[t["perm"]] = t["coeff"];
    CHECK(terms == std::map<std::string, std::string>{{"1,2,3,4", "2"},
                                                      {"1,3,2,4", "1"},
                                                      {"1,4,2,3", "1"},
                                                      {"2,3,1,4", "1"},
                                                      {"2,4,1,3", "1"}});

    const auto own = invoke({"expand", "--series", "theorem-rhs", "--parts", "set:2", "--degree", "4", "--output", "json"});
    CHECK(Json::parse(own.out)["terms"] == Json::parse(R"([{"perm":"2,4,1,3","coeff":"1"}])"));

    const auto h = invoke({"expand", "--series", "schur-h", "--degree", "2", "--output", "json"});
    CHECK(Json::parse(h.out)["basis"] == "R");
    const auto hf = invoke({"expand", "--series", "schur-h", "--degree", "2", "--basis", "F", "--output", "json"});
    CHECK(Json::parse(hf.out)["terms"].size() == 2);

    const auto h2 = invoke({"expand", "--series", "h2", "--degree", "2", "--basis", "F"});
    CHECK(h2.status == cli::kOk);
    CHECK(h2.out.find("-1  1,2") != std::string::npos);
}

TEST_CASE("invert") {
    const auto r = invoke({"invert", "--series", "theorem-lhs", "--max-degree", "2", "--output", "json"});
    CHECK(r.status == cli::kOk);
    const auto j = Json::parse(r.out);
    CHECK(j["order"] == 2);
    REQUIRE(j["inverse"].size() == 3);
    // 1 + G_1 + 2 G_12
    CHECK(j["inverse"][2]["terms"] == Json::parse(R"([{"perm":"1,2","coeff":"2"}])"));

    const auto s = invoke({"invert", "--series", "theorem-lhs", "--max-degree", "2", "--basis", "S", "--output", "json"});
    CHECK(Json::parse(s.out)["inverse"][2]["terms"] == Json::parse(R"([{"perm":"1,2","coeff":"2"}])"));
}

TEST_CASE("oracle") {
    CHECK(invoke({"oracle", "--alphabet", "2", "--max-degree", "3"}).status == cli::kOk);
    const auto j = Json::parse(invoke({"oracle", "--max-degree", "3", "--output", "json"}).out);
    CHECK(j["identity"] == "oracle");
    CHECK(j["parameters"]["alphabet_size"] == "3");
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).status == cli::kUsageError);
    CHECK(invoke({"frobnicate"}).status == cli::kUsageError);
    CHECK(invoke({"verify"}).status == cli::kUsageError);
    CHECK(invoke({"verify", "ung"}).status == cli::kUsageError);
    CHECK(invoke({"verify", "ung", "--which", "h9"}).status == cli::kUsageError);
    CHECK(invoke({"verify", "theorem", "--parts", "set:0,2"}).status == cli::kUsageError);
    CHECK(invoke({"verify", "theorem", "--output", "xml"}).status == cli::kUsageError);
    CHECK(invoke({"verify", "theorem", "--inject-fault", "2:99"}).status == cli::kUsageError);
    CHECK(invoke({"expand", "--series", "h1"}).status == cli::kUsageError);
    CHECK(invoke({"expand", "--series", "nope", "--degree", "2"}).status == cli::kUsageError);
}

TEST_CASE("conflicting flags") {
    const auto r = invoke({"verify", "ung", "--which", "h1", "--parts", "even"});
    CHECK(r.status == cli::kUsageError);
    CHECK(r.err.find("--parts") != std::string::npos);
    CHECK(invoke({"verify", "extras", "--which", "hooks", "--parts", "all"}).status == cli::kUsageError);
    CHECK(invoke({"expand", "--series", "h1", "--degree", "2", "--parts", "all"}).status == cli::kUsageError);
    CHECK(invoke({"expand", "--series", "theorem-lhs", "--degree", "2", "--basis", "R"}).status ==
          cli::kUsageError);
}

TEST_CASE("enumeration bound") {
    const auto r = invoke({"verify", "theorem", "--max-degree", "10"});
    CHECK(r.status == cli::kUsageError);
    CHECK(r.err.find("bound") != std::string::npos);
    CHECK(invoke({"verify", "theorem", "--max-degree", "6"}, "5").status == cli::kUsageError);
    CHECK(invoke({"verify", "theorem", "--max-degree", "5"}, "5").status == cli::kOk);
    CHECK(invoke({"verify", "theorem", "--max-degree", "2"}, "lots").status == cli::kUsageError);
    CHECK(invoke({"expand", "--series", "h1", "--degree", "7"}, "6").status == cli::kUsageError);
}
