// Drives the installed CLI binary end to end: exit codes, file formats and
// pipeline composition. The binary path comes from the build system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "sosf/io.hpp"

using namespace sosf;
namespace fs = std::filesystem;

namespace {

const std::string cli = SOSF_CLI_PATH;

fs::path work_dir() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / "sosf-cli-tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string wpath(const std::string& name) { return (work_dir() / name).string(); }

int run(const std::string& args) {
    std::string cmd = cli + " " + args + " > " + wpath("stdout.txt") + " 2> " + wpath("stderr.txt");
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

TEST_CASE("ideal emission and dimension validation") {
    CHECK(run("ideal --r 1 --s 2 --n 1 --out " + wpath("i121.json")) == 0);
    auto j = io::read_file(wpath("i121.json"));
    CHECK(j["vars"] == 2);
    CHECK(j["generators"].size() == 3);

    CHECK(run("ideal --r 1 --s 1 --n 1 --out " + wpath("i111.json")) == 0);
    CHECK(io::read_file(wpath("i111.json"))["generators"].size() == 1);

    CHECK(run("ideal --r 0 --s 1 --n 1 --out " + wpath("bad.json")) == 2);
}

TEST_CASE("ideal files round-trip byte-identically") {
    REQUIRE(run("ideal --r 2 --s 2 --n 2 --out " + wpath("i222.json")) == 0);
    std::string original = read_all(wpath("i222.json"));
    auto spec = io::parse_ideal(io::read_file(wpath("i222.json")));
    CHECK(io::dump(io::ideal_to_json(spec)) == original);
}

TEST_CASE("groebner exit codes over Q and F_p") {
    REQUIRE(run("ideal --r 1 --s 2 --n 1 --out " + wpath("i121.json")) == 0);
    CHECK(run("groebner --input " + wpath("i121.json") + " --field q --trace " + wpath("g121.json")) == 3);
    auto j = io::read_file(wpath("g121.json"));
    CHECK(j["proper"] == false);
    CHECK(j["trace"]["max_p"] == "1");

    REQUIRE(run("ideal --r 1 --s 1 --n 1 --out " + wpath("i111.json")) == 0);
    CHECK(run("groebner --input " + wpath("i111.json") + " --field q") == 0);

    REQUIRE(run("ideal --r 2 --s 2 --n 1 --out " + wpath("i221.json")) == 0);
    CHECK(run("groebner --input " + wpath("i221.json") + " --field fp --p 7") == 3);
    CHECK(run("groebner --input " + wpath("i221.json") + " --field fp --p 2") == 2);
    CHECK(run("groebner --input " + wpath("i221.json") + " --field q --cap 1") == 4);
    CHECK(run("groebner --input " + wpath("missing.json") + " --field q") == 2);
}

TEST_CASE("search subcommand") {
    CHECK(run("search --r 2 --s 2 --n 2 --p 3 --out " + wpath("s222.json")) == 0);
    auto j = io::read_file(wpath("s222.json"));
    CHECK(j["status"] == "found");
    CHECK(j["found_count"] == "16");
    CHECK(j["formulas"].size() == 16);

    CHECK(run("search --r 1 --s 2 --n 1 --p 3") == 3);
    CHECK(run("search --r 1 --s 1 --n 1 --p 5 --emit count --out " + wpath("c.json")) == 0);
    CHECK(io::read_file(wpath("c.json"))["found_count"] == "2");
    CHECK(run("search --r 1 --s 1 --n 1 --p 2") == 2);
    CHECK(run("search --r 2 --s 2 --n 2 --p 3 --nodes 5") == 4);
    CHECK(run("search --r 2 --s 2 --n 2 --p 3 --time-budget 0") == 4);
    CHECK(run("search --r 1 --s 2 --n 1 --p 3 --k 2") == 3); // F_9
    CHECK(run("search --r 2 --s 2 --n 2 --p 3 --strategy naive --emit count --out " +
              wpath("sn.json")) == 0);
    CHECK(io::read_file(wpath("sn.json"))["found_count"] == "16");
}

TEST_CASE("search output parses back into verifiable formulas") {
    REQUIRE(run("search --r 2 --s 2 --n 2 --p 3 --emit first --out " + wpath("first.json")) == 0);
    auto j = io::read_file(wpath("first.json"));
    REQUIRE(j["formulas"].size() == 1);
    auto f = io::parse_formula_over(j["formulas"][0], PrimeField(3));
    CHECK(verify_formula(f));
}

TEST_CASE("zeta pipeline from an ideal file") {
    REQUIRE(run("ideal --r 1 --s 1 --n 1 --out " + wpath("i111.json")) == 0);
    CHECK(run("zeta --input " + wpath("i111.json") + " --p 5 --kmax 6 --d1 0 --d2 2 --out " +
              wpath("z.json")) == 0);
    auto j = io::read_file(wpath("z.json"));
    CHECK(j["r1"] == io::ojson::array({"1"}));
    CHECK(j["r2"] == io::ojson::array({"1", "-2", "1"}));
    CHECK(j["predicted"].size() == 6);

    // the same reconstruction from the minimal window
    CHECK(run("zeta --input " + wpath("i111.json") + " --p 5 --kmax 4 --d1 0 --d2 2 --out " +
              wpath("z4.json")) == 0);
    CHECK(io::read_file(wpath("z4.json"))["r2"] == io::ojson::array({"1", "-2", "1"}));

    // truncation precondition
    CHECK(run("zeta --input " + wpath("i111.json") + " --p 5 --kmax 1 --d1 0 --d2 2") == 2);
}

TEST_CASE("zeta of an empty variety through the full pipeline") {
    REQUIRE(run("ideal --r 1 --s 2 --n 1 --out " + wpath("i121z.json")) == 0);
    CHECK(run("zeta --input " + wpath("i121z.json") + " --p 3 --kmax 4 --d1 2 --d2 2 --out " +
              wpath("z121.json")) == 0);
    auto j = io::read_file(wpath("z121.json"));
    CHECK(j["counts"] == io::ojson::array({"0", "0", "0", "0"}));
    CHECK(j["r1"] == io::ojson::array({"1"}));
    CHECK(j["r2"] == io::ojson::array({"1"}));
    for (const auto& n : j["predicted"]) CHECK(n == "0");
}

TEST_CASE("zeta from a counts file, including inconsistent data") {
    io::write_file(wpath("counts.json"),
                   io::ojson{{"format", 1},
                             {"kind", "counts"},
                             {"p", "7"},
                             {"counts", io::ojson::array({"0", "0", "0", "0"})}});
    CHECK(run("zeta --counts " + wpath("counts.json") + " --d1 2 --d2 2 --out " + wpath("z0.json")) == 0);
    auto j = io::read_file(wpath("z0.json"));
    CHECK(j["r1"] == io::ojson::array({"1"}));
    CHECK(j["r2"] == io::ojson::array({"1"}));

    io::write_file(wpath("badcounts.json"),
                   io::ojson{{"format", 1},
                             {"kind", "counts"},
                             {"p", "7"},
                             {"counts", io::ojson::array({"1", "2"})}});
    CHECK(run("zeta --counts " + wpath("badcounts.json") + " --d1 1 --d2 1") == 5);

    io::write_file(wpath("badp.json"),
                   io::ojson{{"format", 1},
                             {"kind", "counts"},
                             {"p", "6"},
                             {"counts", io::ojson::array({"1", "1"})}});
    CHECK(run("zeta --counts " + wpath("badp.json") + " --d1 1 --d2 1") == 2);
}

TEST_CASE("bounds report") {
    CHECK(run("bounds --r 1 --s 1 --n 1 --out " + wpath("b.json")) == 0);
    auto j = io::read_file(wpath("b.json"));
    CHECK(j["mode"] == "as-stated");
    CHECK(j["params"]["q"] == "17");
    CHECK(j["params"]["m"] == "9");
    CHECK(j["bounds"]["field_degree"]["payload"] == "578");
    CHECK(j["bounds"]["bombieri"]["payload"] == "289");
    CHECK(j["bounds"]["charp_threshold"]["tier"] == "log2-exact");
    CHECK(bit_length(big_from_string(j["bounds"]["charp_threshold"]["payload"])) == 193);

    CHECK(run("bounds --r 1 --s 1 --n 3 --out " + wpath("b3.json")) == 0);
    CHECK(io::read_file(wpath("b3.json"))["bounds"]["charp_threshold"]["tier"] == "loglog2-approx");

    CHECK(run("bounds --r 2 --s 2 --n 2 --mode dube-consistent --out " + wpath("b222.json")) == 0);
    auto j222 = io::read_file(wpath("b222.json"));
    CHECK(j222["mode"] == "dube-consistent");
    CHECK(j222["bounds"]["field_degree"]["payload"] == to_string(2 * big_pow(BigInt(17), 24)));
    CHECK(run("bounds --r 1 --s 1 --n 1 --mode sideways") == 2);
}

TEST_CASE("verify subcommand") {
    REQUIRE(run("catalog --n 2 --out " + wpath("f2.json")) == 0);
    CHECK(run("verify --formula " + wpath("f2.json")) == 0);
    CHECK(run("verify --formula " + wpath("f2.json") + " --p 11") == 0);

    REQUIRE(run("catalog --n 4 --out " + wpath("f4.json")) == 0);
    CHECK(run("verify --formula " + wpath("f4.json") + " --p 11") == 0);

    // corrupt a sign
    auto j = io::read_file(wpath("f2.json"));
    j["alpha"][1][1][0] = "-1";
    io::write_file(wpath("f2bad.json"), j);
    CHECK(run("verify --formula " + wpath("f2bad.json")) == 3);

    std::ofstream bad(wpath("garbage.json"));
    bad << "{not json";
    bad.close();
    CHECK(run("verify --formula " + wpath("garbage.json")) == 2);
    CHECK(run("verify --formula " + wpath("nope.json")) == 2);
}

TEST_CASE("extension-field search output verifies") {
    REQUIRE(run("search --r 1 --s 1 --n 1 --p 3 --k 2 --out " + wpath("f9.json")) == 0);
    auto j = io::read_file(wpath("f9.json"));
    CHECK(j["field"]["kind"] == "extension");
    CHECK(j["found_count"] == "2"); // the square roots of 1 in F_9
    auto field = io::make_field(io::parse_field(j["field"]));
    for (const auto& fj : j["formulas"])
        CHECK(verify_formula(io::parse_formula_over(fj, field)));
}

TEST_CASE("catalog over a prime field") {
    REQUIRE(run("catalog --n 8 --p 13 --out " + wpath("f8.json")) == 0);
    auto j = io::read_file(wpath("f8.json"));
    CHECK(j["field"]["kind"] == "prime");
    CHECK(run("verify --formula " + wpath("f8.json")) == 0);
}

TEST_CASE("usage errors") {
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("ideal --r 1") == 2);
    CHECK(run("groebner --input x.json --field zz") == 2);
}
