#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = degreelab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("young-check reports all four conditions and the radial verdict") {
    const auto r = cli({"young-check", "powlog:n=2,a=1", "--n", "2"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    for (const char* check : {"divergence", "small_o", "doubling", "growth"})
        CHECK(j["checks"][check]["status"] == "holds");
    CHECK(j["radial_projection"]["verdict"] == "infinite");
    CHECK(j["config"]["version"] == "0.1.0");
}

TEST_CASE("homology subcommand prints the lens table") {
    const auto r = cli({"homology", "--space", "lens:m=5,dim=3"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    std::vector<std::string> texts;
    for (const auto& g : j["groups"]) texts.push_back(g["text"].get<std::string>());
    CHECK(texts == std::vector<std::string>{"Z", "Z_5", "0", "Z"});
    CHECK(j["rational_homology_sphere"] == true);
    CHECK(j["euler_characteristic"] == 0);
}

TEST_CASE("homology accepts a complex file") {
    const std::string path = "cli_test_complex.json";
    {
        std::ofstream f(path);
        f << R"({"ranks": [1, 1, 1], "boundaries": [[0], [2]]})";
    }
    const auto r = cli({"homology", "--in", path});
    std::filesystem::remove(path);
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["groups"][1]["text"] == "Z_2");
}

TEST_CASE("degree subcommand, both methods") {
    const auto jac = cli({"degree", "--map", "bubble:k=4", "--mesh", "s2:256x512"});
    REQUIRE(jac.code == 0);
    CHECK(json::parse(jac.out)["rounded"] == 1);

    const auto pre = cli({"degree", "--map", "power:d=3", "--mesh", "s2:128x256",
                          "--method", "preimage", "--value", "0.3,1.0472"});
    REQUIRE(pre.code == 0);
    CHECK(json::parse(pre.out)["rounded"] == 3);
}

TEST_CASE("energy subcommand writes a plot-ready csv") {
    const auto r = cli({"energy", "--family", "bubble", "--gauge", "p:1.5",
                        "--k", "4,8,16,32"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# degree-lab v0.1.0", 0) == 0);
    CHECK(r.out.find("# config:") != std::string::npos);
    CHECK(r.out.find("verdict: DecaysToZero") != std::string::npos);
    CHECK(r.out.find("k,energy,cap_measure,sup_df,bound_certificate") !=
          std::string::npos);
}

TEST_CASE("paradox subcommand pairs degree and energy") {
    const auto r = cli({"paradox", "--family", "bubble", "--gauge", "p:1.5",
                        "--k", "4,8,16,32", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# degree_constant: yes value: 1") != std::string::npos);
    CHECK(r.out.find("verdict: DecaysToZero") != std::string::npos);
    CHECK(r.out.find("k,degree_raw,degree_rounded,degree_residual,energy") !=
          std::string::npos);
}

TEST_CASE("verdict subcommand") {
    const auto r = cli({"verdict", "--target", "lens:m=5", "--predicate",
                        "degree"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["answer"] == "no");
    CHECK(!j["justification"].empty());

    const auto h = cli({"verdict", "--target", "cp1", "--predicate", "homotopy",
                        "--n", "4", "--domain", "cp2"});
    REQUIRE(h.code == 0);
    CHECK(json::parse(h.out)["answer"] == "unknown");
}

TEST_CASE("homology over the rationals drops torsion") {
    const auto r = cli({"homology", "--space", "lens:m=5,dim=3", "--coeff", "Q"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    std::vector<std::string> texts;
    for (const auto& g : j["groups"]) texts.push_back(g["text"].get<std::string>());
    CHECK(texts == std::vector<std::string>{"Z", "0", "0", "Z"});
}

TEST_CASE("catalog-list covers the shipped entries") {
    const auto r = cli({"catalog-list"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    bool found = false;
    for (const auto& e : j["entries"])
        if (e["name"] == "lens:m=5") found = e["rational_homology_sphere"];
    CHECK(found);
}

TEST_CASE("identical configs produce identical bytes") {
    const std::vector<std::string> args{"energy", "--family", "bubble",
                                        "--gauge", "powlog:n=2,a=1", "--k",
                                        "4,8,16,32", "--seed", "7"};
    const auto a = cli(args);
    const auto b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("dry runs echo the config and touch nothing") {
    const std::string path = "cli_dry_run_output.csv";
    std::filesystem::remove(path);
    const auto r = cli({"energy", "--family", "bubble", "--gauge", "p:1.5",
                        "--k", "4,8,16,32", "--out", path, "--dry-run"});
    REQUIRE(r.code == 0);
    CHECK_FALSE(std::filesystem::exists(path));
    const json j = json::parse(r.out);
    CHECK(j["config"]["subcommand"] == "energy");
}

TEST_CASE("output files carry the config header") {
    const std::string path = "cli_out_test.csv";
    const auto r = cli({"energy", "--family", "bubble", "--gauge", "p:1.5",
                        "--k", "4,8,16,32", "--out", path});
    REQUIRE(r.code == 0);
    std::ifstream f(path);
    std::string first;
    std::getline(f, first);
    CHECK(first == "# degree-lab v0.1.0");
    f.close();
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"degree", "--map", "teleport:x=1"}).code == 2);
    CHECK(cli({"young-check", "mystery:p=1"}).code == 2);

    // catalog-only spaces carry no chain complex; say so
    const auto table_only = cli({"homology", "--space", "poincare"});
    CHECK(table_only.code == 2);
    CHECK(table_only.err.find("known homology table") != std::string::npos);

    // rule violation: bubble k=8 on the default 256-cell mesh
    const auto starved =
        cli({"degree", "--map", "bubble:k=8", "--mesh", "s2:256x512"});
    CHECK(starved.code == 3);
    CHECK(starved.err.find("resolution") != std::string::npos);

    // inconsistent complex from a file
    const std::string path = "cli_bad_complex.json";
    {
        std::ofstream f(path);
        f << R"({"ranks": [1, 1, 1], "boundaries": [[2], [3]]})";
    }
    CHECK(cli({"homology", "--in", path}).code == 4);
    std::filesystem::remove(path);
}
