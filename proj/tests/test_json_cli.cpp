#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cli_runner.hpp"
#include "intres/json_io.hpp"
#include "intres/suites.hpp"

using namespace intres;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("poset documents round-trip through the closure") {
    Json doc = Json::parse(R"({"elements": ["a","b","c"], "relations": [["a","b"],["b","c"],["a","c"]]})");
    Poset p = poset_from_json(doc);
    CHECK(p.hasse().size() == 2); // transitive pair dropped
    Json out = poset_to_json(p);
    CHECK(poset_from_json(out) == p);
    CHECK(out["relations"].size() == 2); // hasse edges only
}

TEST_CASE("poset document errors") {
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"relations": []})")), SchemaError);
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"elements": ["a"], "extra": 1})")), SchemaError);
    CHECK_THROWS_AS(
        poset_from_json(Json::parse(R"({"elements": ["a","b"], "relations": [["a","z"]]})")),
        SchemaError);
    CHECK_THROWS_AS(
        poset_from_json(Json::parse(R"({"elements": ["a","b"], "relations": [["a","b"],["b","a"]]})")),
        ValidationError);
}

TEST_CASE("module documents") {
    SUBCASE("fixture round-trips byte-identically") {
        std::string bytes = slurp(cli::fixture_dir() + "/d4_M.json");
        PersModule m = module_from_json(Json::parse(bytes));
        CHECK(dump_json(module_to_json(m)) == bytes);
        CHECK(m.dims() == std::vector<int>{1, 1, 2, 1});
    }
    SUBCASE("omitted maps are zero-filled") {
        Json doc = Json::parse(
            R"({"poset": {"elements": ["a","b"], "relations": [["a","b"]]}, "p": 2, "dims": {"a": 1, "b": 1}})");
        PersModule m = module_from_json(doc);
        CHECK(m.edge_map(0).is_zero());
    }
    SUBCASE("wrong matrix shape is a schema error with the field named") {
        Json doc = Json::parse(
            R"({"poset": {"elements": ["a","b"], "relations": [["a","b"]]}, "p": 2,
                "dims": {"a": 2, "b": 1}, "maps": {"a->b": [[1]]}})");
        try {
            module_from_json(doc);
            FAIL("expected SchemaError");
        } catch (const SchemaError& e) {
            CHECK(std::string(e.what()).find("maps.a->b") != std::string::npos);
        }
    }
    SUBCASE("a map key that is not a Hasse edge is rejected") {
        Json doc = Json::parse(
            R"({"poset": {"elements": ["a","b","c"], "relations": [["a","b"],["b","c"]]}, "p": 2,
                "dims": {"a": 1, "b": 1, "c": 1}, "maps": {"a->c": [[1]]}})");
        CHECK_THROWS_AS(module_from_json(doc), SchemaError);
    }
    SUBCASE("commutativity violations are validation errors naming the square") {
        Json doc = Json::parse(
            R"({"poset": {"elements": ["00","01","10","11"],
                          "relations": [["00","01"],["00","10"],["01","11"],["10","11"]]},
                "p": 2,
                "dims": {"00": 1, "01": 1, "10": 1, "11": 1},
                "maps": {"00->01": [[1]], "00->10": [[1]], "01->11": [[1]], "10->11": [[0]]}})");
        try {
            module_from_json(doc);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("square") != std::string::npos);
        }
    }
}

TEST_CASE("cli generates, pipes, and reports") {
    auto gen = cli::run({"gen", "--family", "C", "--m", "2", "--l", "1"});
    REQUIRE(gen.code == 0);
    CHECK(gen.err.empty());
    auto intervals = cli::run({"intervals", "-"}, gen.out);
    REQUIRE(intervals.code == 0);
    Json doc = Json::parse(intervals.out);
    CHECK(doc["count"] == 17);
}

TEST_CASE("cli exit codes") {
    SUBCASE("malformed input is exit 1") {
        auto r = cli::run({"intervals", "/nonexistent/path.json"});
        CHECK(r.code == 1);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    SUBCASE("bad flags are exit 1") {
        auto r = cli::run({"gen", "--family", "nosuch"});
        CHECK(r.code == 1);
    }
    SUBCASE("relation cycles are exit 2") {
        auto r = cli::run({"intervals", "-"},
                          R"({"elements": ["a","b"], "relations": [["a","b"],["b","a"]]})");
        CHECK(r.code == 2);
    }
    SUBCASE("non-commutative modules are exit 2") {
        std::string doc =
            R"({"poset": {"elements": ["00","01","10","11"],
                          "relations": [["00","01"],["00","10"],["01","11"],["10","11"]]},
                "p": 2,
                "dims": {"00": 1, "01": 1, "10": 1, "11": 1},
                "maps": {"00->01": [[1]], "00->10": [[1]], "01->11": [[1]], "10->11": [[0]]}})";
        auto r = cli::run({"resolve", "-"}, doc);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
    }
}

TEST_CASE("cli resolve on the shipped fixture") {
    auto r = cli::run({"resolve", cli::fixture_dir() + "/d4_M.json"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["length"] == 1);
    CHECK(doc["terms"][0] == Json::parse(R"({"2,3": 1, "3,4": 1, "1,2,3,4": 1})"));
    CHECK(doc["terms"][1] == Json::parse(R"({"2,3,4": 1})"));
}

TEST_CASE("cli restrict to all elements reproduces the module document") {
    std::string bytes = slurp(cli::fixture_dir() + "/d4_M.json");
    auto r = cli::run({"restrict", cli::fixture_dir() + "/d4_M.json", "--elements", "1,2,3,4"});
    REQUIRE(r.code == 0);
    CHECK(r.out == bytes);
}

TEST_CASE("cli output is stable across runs for a fixed seed") {
    std::vector<std::string> args{"check", "--suite", "oracle", "--cases", "10", "--seed", "99"};
    auto a = cli::run(args);
    auto b = cli::run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    auto t1 = cli::run({"gen", "--family", "grid", "--rows", "2", "--cols", "3"});
    auto t2 = cli::run({"gen", "--family", "grid", "--rows", "2", "--cols", "3"});
    CHECK(t1.out == t2.out);
}

TEST_CASE("cli field override") {
    auto r = cli::run({"gldim", cli::fixture_dir() + "/igusa_p.json", "--projective", "--field", "3"});
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["projective_gldim"] == 2);
    CHECK(doc["field"] == 3);

    auto bad = cli::run({"gldim", cli::fixture_dir() + "/igusa_p.json", "--field", "4"});
    CHECK(bad.code == 2);
}

TEST_CASE("environment variable sets the default field") {
    std::string quoted = cli::shell_quote(cli::cli_path());
    std::string cmd = "INTRES_FIELD=3 " + quoted + " gldim " +
                      cli::shell_quote(cli::fixture_dir() + "/igusa_p.json") +
                      " --projective > /tmp/intres_env_out 2>/dev/null";
    REQUIRE(std::system(cmd.c_str()) == 0);
    Json doc = Json::parse(slurp("/tmp/intres_env_out"));
    CHECK(doc["field"] == 3);
    std::remove("/tmp/intres_env_out");
}

TEST_CASE("cli table format is printable") {
    auto r = cli::run({"classify", "-", "--format", "table"},
                      R"({"elements": ["a"], "relations": []})");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("accepted: true") != std::string::npos);
}
