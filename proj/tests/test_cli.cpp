#include "cli.hpp"

#include "toric/json_io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = toric::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

toric::Json json_of(const Result& r) { return toric::Json::parse(r.out); }

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "toric_kstab_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("analyze a catalog entry") {
    auto r = run({"analyze", "F1"});
    REQUIRE(r.code == 0);
    auto j = json_of(r);
    CHECK(j["delta"] == "6/7");
    CHECK(j["verdict"] == "K_UNSTABLE");
    auto t = run({"analyze", "P2", "--format", "text"});
    CHECK(t.code == 0);
    CHECK(t.out.find("verdict: K_SEMISTABLE") != std::string::npos);
}

TEST_CASE("export and re-analyze round trip") {
    auto exported = run({"catalog", "P2", "--export"});
    REQUIRE(exported.code == 0);
    auto piped = run({"analyze", "-"}, exported.out);
    auto direct = run({"analyze", "P2"});
    CHECK(piped.code == 0);
    CHECK(piped.out == direct.out);
}

TEST_CASE("analyze a fan file") {
    auto path = scratch_dir() / "p112.json";
    std::ofstream(path) << R"({"dim": 2, "rays": [[1,0],[0,1],[-1,-2]], "max_cones": [[0,1],[1,2],[2,0]]})";
    auto r = run({"analyze", path.string()});
    REQUIRE(r.code == 0);
    CHECK(json_of(r)["barycenter"] == toric::Json::parse(R"(["1/3","-1/3"])"));
}

TEST_CASE("input errors exit with code 2 and a diagnostic") {
    auto bad_json = run({"analyze", "-"}, "{not json");
    CHECK(bad_json.code == 2);
    CHECK(bad_json.err.find("malformed JSON") != std::string::npos);

    auto not_primitive = run({"analyze", "-"}, R"({"dim":2,"rays":[[2,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[2,0]]})");
    CHECK(not_primitive.code == 2);
    CHECK(not_primitive.err.find("not primitive") != std::string::npos);

    auto incomplete = run({"analyze", "-"}, R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2]]})");
    CHECK(incomplete.code == 2);
    CHECK(incomplete.err.find("not complete") != std::string::npos);

    auto unknown = run({"analyze", "P17"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("dP6") != std::string::npos);

    CHECK(run({"analyze"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"beta", "P2", "--divisor", "1,x,0"}).code == 2);
    CHECK(run({"beta", "P2", "--divisor", "1,0"}).code == 2);
    CHECK(run({"beta", "P2", "--divisor", "0,0,0"}).code == 2);
    CHECK(run({"position", "P2", "--rays", "0,0"}).code == 2);
    CHECK(run({"position", "P2", "--rays", "0,9"}).code == 2);
    CHECK(run({"certify", "P2", "--route", "Z", "--rays", "0"}).code == 2);
    CHECK(run({"certify", "P2", "--route", "B", "--rays", "0"}).code == 2);
    CHECK(run({"sweep", "P2", "--ray", "5"}).code == 2);
    CHECK(run({"analyze", "P2", "--format", "yaml"}).code == 2);
}

TEST_CASE("beta command") {
    auto r = run({"beta", "F1", "--divisor", "1/2,0,0,3/2"});
    REQUIRE(r.code == 0);
    CHECK(json_of(r)["beta"] == "13/27");
}

TEST_CASE("sweep command prints CSV") {
    auto r = run({"sweep", "F1", "--ray", "3", "--max-N", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "N,section_count,estimate,exact_target,abs_error\n"
          "1,9,7/9,5/6,1/18\n"
          "2,25,4/5,5/6,1/30\n"
          "3,49,17/21,5/6,1/42\n");
}

TEST_CASE("position command") {
    auto r = run({"position", "P1xP1", "--rays", "0,1"});
    REQUIRE(r.code == 0);
    auto j = json_of(r);
    CHECK(j["general_position_strict"] == false);
    CHECK(j["general_position_lenient"] == true);
    CHECK(j["witnesses"].back()["dimension"] == "EMPTY");
}

TEST_CASE("certify exit codes") {
    auto valid = run({"certify", "P2", "--route", "C", "--rays", "0,1,2"});
    CHECK(valid.code == 0);
    CHECK(json_of(valid)["valid"] == true);
    auto invalid = run({"certify", "F1", "--route", "C", "--rays", "0,1"});
    CHECK(invalid.code == 1);
    CHECK(json_of(invalid)["first_failed_check"] == "c1");
    auto b = run({"certify", "P2", "--route", "B", "--rays", "0", "--reference", "0"});
    CHECK(b.code == 0);
    auto text = run({"certify", "F1", "--route", "C", "--rays", "0", "--format", "text"});
    CHECK(text.code == 1);
    CHECK(text.out.find("certificate: INVALID") != std::string::npos);
}

TEST_CASE("catalog command") {
    auto list = run({"catalog"});
    REQUIRE(list.code == 0);
    CHECK(json_of(list).size() == 10);
    auto text = run({"catalog", "--format", "text"});
    CHECK(text.out.find("P1xdP6\n") != std::string::npos);
    auto entry = run({"catalog", "dP7"});
    CHECK(json_of(entry)["expected_verdict"] == "K_UNSTABLE");
    CHECK(run({"catalog", "nope"}).code == 2);
}

TEST_CASE("user catalog directory") {
    auto dir = scratch_dir() / "catalog";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "weighted112.json")
        << R"({"dim": 2, "rays": [[1,0],[0,1],[-1,-2]], "max_cones": [[0,1],[1,2],[2,0]]})";
    ::setenv("TORIC_KSTAB_CATALOG_DIR", dir.c_str(), 1);
    auto list = run({"catalog"});
    auto names = json_of(list);
    CHECK(std::find(names.begin(), names.end(), "weighted112") != names.end());
    auto r = run({"analyze", "weighted112"});
    CHECK(r.code == 0);
    CHECK(json_of(r)["verdict"] == "K_UNSTABLE");
    auto entry = run({"catalog", "weighted112"});
    CHECK(json_of(entry)["expected_verdict"].is_null());
    ::unsetenv("TORIC_KSTAB_CATALOG_DIR");
    CHECK(run({"analyze", "weighted112"}).code == 2);
}

TEST_CASE("help") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("certify") != std::string::npos);
}
