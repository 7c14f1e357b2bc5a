#include "plateau/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
    [[nodiscard]] json doc() const { return json::parse(out); }
};

Result cli(std::initializer_list<std::string> args)
{
    std::vector<std::string> storage{"plateau_rt"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : storage) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = plateau::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("plateau_rt_test_" + name);
}

// Keys and JSON types, recursively through objects.
json shape(const json& j)
{
    if (j.is_object()) {
        json s = json::object();
        for (const auto& [k, v] : j.items()) {
            s[k] = shape(v);
        }
        return s;
    }
    return j.type_name();
}

} // namespace

TEST_CASE("needle command")
{
    auto r = cli({"needle", "--ell", "2", "--p", "0.5", "--json"});
    REQUIRE(r.code == 0);
    auto d = r.doc();
    CHECK(d["command"] == "needle");
    CHECK(d["result"]["value"].get<double>() == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(d["result"]["log2_value"].get<double>() == doctest::Approx(std::log2(3.0)));
    CHECK(d["result"]["method"] == "exact-fourier");
    CHECK(d.contains("version"));
    CHECK(d.contains("timestamp"));

    r = cli({"needle", "--ell", "2", "--p", "0.5", "--exclude-optimum", "--json"});
    CHECK(r.doc()["result"]["value"].get<double>() == doctest::Approx(4.0).epsilon(1e-15));

    r = cli({"needle", "--ell", "2000", "--p-over-ell", "1.0", "--normalized", "--json"});
    REQUIRE(r.code == 0);
    CHECK(std::abs(r.doc()["result"]["value"].get<double>() - 1.58) <= 0.05);

    r = cli({"needle", "--ell", "2", "--p", "0.5"});
    CHECK(r.out.find("E[T]: 3") != std::string::npos);
    CHECK(r.out.find("log2") != std::string::npos);
}

TEST_CASE("needle overflow is reported through log2")
{
    const auto r = cli({"needle", "--ell", "3000", "--p-over-ell", "1", "--json"});
    REQUIRE(r.code == 0);
    const auto d = r.doc();
    CHECK(d["result"]["overflow"] == true);
    CHECK(d["result"]["value"].is_null());
    CHECK(d["result"]["log2_value"].get<double>() > 3000.0);
}

TEST_CASE("validation errors exit with 1")
{
    CHECK(cli({"needle", "--ell", "2"}).code == 1);
    CHECK(cli({"needle", "--ell", "2", "--p", "0.5", "--p-over-ell", "1"}).code == 1);
    CHECK(cli({"needle", "--ell", "2", "--p", "1.5"}).code == 1);
    CHECK(cli({"needle", "--ell", "2", "--p", "0.5", "--bogus"}).code == 1);
    CHECK(cli({"needle", "--ell", "two", "--p", "0.5"}).code == 1);
    CHECK(cli({"blo", "--n", "10", "--ell", "3", "--rate", "static:0.1"}).code == 1);
    CHECK(cli({"blo", "--n", "12", "--ell", "3", "--rate", "static:abc"}).code == 1);
    CHECK(cli({"blo", "--n", "12", "--ell", "3", "--rate", "fast"}).code == 1);
    CHECK(cli({"blo", "--n", "12", "--ell", "3", "--rate", "static:0.1", "--mode", "guess"}).code == 1);
    CHECK(cli({"optimal", "adaptive", "--ell", "3"}).code == 1);
    CHECK(cli({"verify", "everything"}).code == 1);
    CHECK(cli({}).code == 1);
}

TEST_CASE("help lists every flag")
{
    const auto r = cli({"simulate", "--help"});
    CHECK(r.code == 0);
    for (const char* flag : {"--problem", "--n", "--ell", "--rate", "--trials", "--seed", "--out", "--cap", "--json"}) {
        CHECK(r.out.find(flag) != std::string::npos);
    }
    CHECK(cli({"--help"}).out.find("verify") != std::string::npos);
}

TEST_CASE("blo command")
{
    auto r = cli({"blo", "--n", "2", "--ell", "1", "--rate", "static:0.5", "--json"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["result"]["value"].get<double>() == doctest::Approx(3.0).epsilon(1e-14));

    r = cli({"blo", "--n", "12", "--ell", "3", "--rate", "c-over-n:1", "--mode", "asymptotic", "--json"});
    REQUIRE(r.code == 0);
    auto d = r.doc();
    CHECK(d["result"]["method"] == "asymptotic");
    const double asym = d["result"]["value"].get<double>();
    const double exact = d["result"]["exact"]["value"].get<double>();
    CHECK(d["result"]["ratio_exact_over_asymptotic"].get<double>() == doctest::Approx(exact / asym));
    CHECK(exact == doctest::Approx(186.34482616765487).epsilon(1e-12));

    r = cli({"blo", "--n", "12", "--ell", "3", "--rate", "c-over-n:1", "--mode", "asymptotic"});
    CHECK(r.out.find("ratio exact/asymptotic") != std::string::npos);

    r = cli({"blo", "--n", "100", "--ell", "5", "--rate", "adaptive", "--json"});
    REQUIRE(r.code == 0);
    d = r.doc();
    CHECK(d["result"]["rates"].size() == 20);
    CHECK(d["result"]["rates"][0].get<double>() == 0.5);
    CHECK(d["result"]["rates"][19].get<double>() < d["result"]["rates"][1].get<double>());
    r = cli({"blo", "--n", "100", "--ell", "5", "--rate", "adaptive"});
    CHECK(r.out.find("level  rate") != std::string::npos);
}

TEST_CASE("blo rate files")
{
    const auto good = temp_file("rates_good.json");
    std::ofstream(good) << "[0.2, 0.1, 0.05, 0.03]";
    auto r = cli({"blo", "--n", "12", "--ell", "3", "--rate", "file:" + good.string(), "--json"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["result"]["asymptotic"].is_null());

    const auto bad = temp_file("rates_short.json");
    std::ofstream(bad) << "[0.2, 0.1]";
    r = cli({"blo", "--n", "12", "--ell", "3", "--rate", "file:" + bad.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("expected n/l = 4") != std::string::npos);

    CHECK(cli({"blo", "--n", "12", "--ell", "3", "--rate", "file:/nonexistent/rates.json"}).code == 1);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST_CASE("optimal command")
{
    auto r = cli({"optimal", "static", "--json"});
    REQUIRE(r.code == 0);
    auto d = r.doc();
    CHECK(std::round(d["result"]["lambda"].get<double>() * 100) / 100 == doctest::Approx(1.59));
    CHECK(std::round(d["result"]["alpha"].get<double>() * 100) / 100 == doctest::Approx(1.54));
    CHECK(std::round(d["result"]["adaptive_over_static"].get<double>() * 100) / 100 == doctest::Approx(0.88));

    r = cli({"optimal", "adaptive", "--ell", "8", "--m", "10", "--json"});
    REQUIRE(r.code == 0);
    d = r.doc();
    const double closed = d["result"]["closed"]["rate"].get<double>();
    const double exact = d["result"]["exact"]["rate"].get<double>();
    CHECK(d["result"]["relative_gap"].get<double>() == doctest::Approx((closed - exact) / exact));
    CHECK(std::abs(d["result"]["relative_gap"].get<double>()) < 0.1);

    r = cli({"optimal", "adaptive", "--ell", "1", "--m", "0", "--json"});
    REQUIRE(r.code == 0);
    d = r.doc();
    CHECK(d["result"]["exact"]["boundary"] == true);
    CHECK(d["result"]["exact"]["rate"].get<double>() == 0.5);
}

TEST_CASE("verify command")
{
    auto r = cli({"verify", "inequalities"});
    CHECK(r.code == 0);
    r = cli({"verify", "fourier-oracle", "--json"});
    CHECK(r.code == 0);
    CHECK(r.doc()["result"]["passed"] == true);
    r = cli({"verify", "blo-oracle", "--json"});
    CHECK(r.code == 0);

    // Only the first-level rate trend misses its reference constant; everything else converges.
    r = cli({"verify", "asymptotic-convergence", "--json"});
    CHECK(r.code == 2);
    for (const auto& c : r.doc()["result"]["checks"]) {
        const bool expected_miss = c["name"].get<std::string>().rfind("first_level_rate_times_l", 0) == 0;
        CHECK(c["passed"].get<bool>() == !expected_miss);
    }
    r = cli({"verify", "asymptotic-convergence"});
    CHECK(r.out.find("decreasing") != std::string::npos);
}

TEST_CASE("simulate command")
{
    const auto csv1 = temp_file("sim1.csv");
    const auto csv2 = temp_file("sim2.csv");
    auto r = cli({"simulate", "--problem", "blo", "--n", "12", "--ell", "3", "--rate", "static:0.0833", "--trials",
                  "2000", "--seed", "7", "--out", csv1.string(), "--json"});
    REQUIRE(r.code == 0);
    auto d = r.doc();
    CHECK(d["result"]["capped_trials"] == 0);
    CHECK(d["result"]["trials_completed"] == 2000);
    CHECK(std::abs(d["result"]["z_score"].get<double>()) < 4.0);
    CHECK(d["result"]["method"] == "monte-carlo");

    cli({"simulate", "--problem", "blo", "--n", "12", "--ell", "3", "--rate", "static:0.0833", "--trials", "2000",
         "--seed", "7", "--out", csv2.string()});
    const auto bytes = slurp(csv1);
    CHECK(bytes == slurp(csv2));
    CHECK(bytes.rfind("trial,iterations\n0,", 0) == 0);
    CHECK(bytes.find('\r') == std::string::npos);

    r = cli({"simulate", "--problem", "needle", "--ell", "8", "--rate", "static:0.125", "--trials", "20", "--cap", "2"});
    CHECK(r.code == 3);
    CHECK(r.err.find("iteration cap") != std::string::npos);

    CHECK(cli({"simulate", "--problem", "blo", "--ell", "3", "--rate", "static:0.1"}).code == 1);
    CHECK(cli({"simulate", "--problem", "tree", "--ell", "3", "--rate", "static:0.1"}).code == 1);
    std::filesystem::remove(csv1);
    std::filesystem::remove(csv2);
}

TEST_CASE("json records keep a fixed shape")
{
    const auto a = cli({"needle", "--ell", "3", "--p", "0.1", "--json"}).doc();
    const auto b = cli({"needle", "--ell", "3000", "--p-over-ell", "2", "--normalized", "--json"}).doc();
    CHECK(shape(a["inputs"]) == shape(b["inputs"]));
    for (const char* key : {"log2_value", "method", "overflow", "limit"}) {
        CHECK(a["result"][key].type() == b["result"][key].type());
    }
    CHECK(a["result"].size() == b["result"].size());

    const auto s1 = cli({"blo", "--n", "40", "--ell", "4", "--rate", "static:0.01", "--json"}).doc();
    const auto s2 = cli({"blo", "--n", "400", "--ell", "2", "--rate", "c-over-n:1.5", "--json"}).doc();
    CHECK(shape(s1) == shape(s2));

    const auto o1 = cli({"optimal", "adaptive", "--ell", "4", "--m", "3", "--json"}).doc();
    const auto o2 = cli({"optimal", "adaptive", "--ell", "9", "--m", "30", "--json"}).doc();
    CHECK(shape(o1["result"]) == shape(o2["result"]));
}

TEST_CASE("json numbers round-trip")
{
    const auto r = cli({"needle", "--ell", "7", "--p", "0.1234567890123456", "--json"});
    const auto d = r.doc();
    CHECK(d["inputs"]["p"].get<double>() == 0.1234567890123456);
    const std::string text = d["result"]["value"].dump();
    CHECK(json::parse(text).get<double>() == d["result"]["value"].get<double>());
}
