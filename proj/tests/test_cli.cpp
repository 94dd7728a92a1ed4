#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "latscat/analysis.hpp"
#include "latscat/cli.hpp"

using namespace latscat;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& contents = {})
{
    const fs::path p = fs::temp_directory_path() / ("latscat_test_" + name);
    if (!contents.empty()) {
        std::ofstream f(p, std::ios::binary);
        f << contents;
    }
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            f.push_back(cell);
        rows.push_back(f);
    }
    return rows;
}

}  // namespace

TEST_CASE("solve: free motion")
{
    const auto r = call({"solve", "--model", "pt-pair", "--M", "1", "--x", "0", "--phi", "1.0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("prob_sum     1\n") != std::string::npos);
    const auto j = json::parse(
        call({"solve", "--model", "pt-pair", "--M", "1", "--x", "0", "--phi", "1.0", "--format", "json"}).out);
    CHECK(std::hypot(j["R"]["re"].get<double>(), j["R"]["im"].get<double>()) < 1e-15);
    CHECK(std::abs(j["T"]["re"].get<double>() - 1.0) < 1e-15);
    CHECK(std::abs(j["T"]["im"].get<double>()) < 1e-15);
}

TEST_CASE("solve: singular and invalid input")
{
    const auto s = call({"solve", "--model", "pt-pair", "--M", "2", "--x", "1.0", "--phi", "1.0"});
    CHECK(s.code == 2);
    CHECK(s.err.find("SingularSystem") != std::string::npos);
    CHECK(call({"solve", "--model", "pt-pair", "--M", "2", "--x", "1.0", "--phi", "1.0", "--solver", "transfer"})
              .code == 2);
    CHECK(call({"solve", "--model", "pt-pair", "--M", "1", "--x", "0.5", "--phi", "0"}).code == 1);
    CHECK(call({"solve", "--model", "pt-pair", "--M", "1", "--x", "0.5", "--phi", "3.2"}).code == 1);
    CHECK(call({"solve", "--model", "pt-pair", "--M", "1", "--x", "0.5"}).code == 1);
    CHECK(call({"solve", "--model", "bogus", "--phi", "1"}).code == 1);
    CHECK(call({"solve", "--model", "pt-pair", "--M", "0", "--x", "0.5", "--phi", "1"}).code == 1);
    CHECK(call({"solve", "--model", "ultralocal", "--phi", "1"}).code == 1);
    CHECK(call({}).code == 1);
}

TEST_CASE("solve: ultralocal text and negative couplings")
{
    const auto r = call({"solve", "--model", "ultralocal", "--a", "0.5", "--phi", "1.5707963268"});
    REQUIRE(r.code == 0);
    const auto pos = r.out.find("prob_sum");
    REQUIRE(pos != std::string::npos);
    const double sum = std::stod(r.out.substr(pos + 8));
    CHECK(sum == doctest::Approx(0.346939).epsilon(1e-5));

    const auto n = call({"solve", "--model", "pt-pair", "--M", "2", "--x", "-0.4", "--phi", "1.1", "--format",
                         "json"});
    REQUIRE(n.code == 0);
    CHECK(json::parse(n.out)["coupling"].get<double>() == -0.4);
}

TEST_CASE("solve: JSON document")
{
    const auto r = call({"solve", "--model", "pt-pair", "--M", "1", "--x", "0.5", "--phi", "1.0471975511965976",
                         "--format", "json", "--solver", "transfer"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    auto expected = cli::solve_json_fields();
    std::sort(keys.begin(), keys.end());
    std::sort(expected.begin(), expected.end());
    CHECK(keys == expected);
    CHECK(j["solver"] == "transfer");
    CHECK(j["R"]["re"].get<double>() == doctest::Approx(-0.035714).epsilon(1e-5));
    CHECK(j["T"]["im"].get<double>() == doctest::Approx(-0.185577).epsilon(1e-5));
    CHECK(std::abs(j["prob_sum"].get<double>() - 1.0) < 1e-12);
    CHECK(j["E_h0_shifted"].get<double>() - j["E_h0"].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("sweep: CSV to stdout")
{
    const auto r = call({"sweep", "--model", "pt-pair", "--M-list", "1,2", "--x-range", "0.1:0.3:0.1",
                         "--phi-range", "0.5:1.5:0.5", "--solver", "all"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
    CHECK(csv_rows(r.out).size() == 2 * 3 * 3 * 3);
    CHECK(r.err.find("54 rows, 0 singular") != std::string::npos);
}

TEST_CASE("sweep: ultralocal defects with a negative-leading range")
{
    const auto r = call({"sweep", "--model", "ultralocal", "--a-range=-0.5:0.5:0.5", "--phi-range",
                         "1.5707963267948966"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(std::stod(rows[0][10]) == doctest::Approx(1.959).epsilon(1e-3));
    CHECK(std::abs(std::stod(rows[1][10])) < 1e-15);
    CHECK(std::stod(rows[2][10]) == doctest::Approx(-0.653061).epsilon(1e-5));
    CHECK(rows[0][0] == "ultralocal");
}

TEST_CASE("sweep: errors, files and JSON")
{
    CHECK(call({"sweep", "--model", "pt-pair", "--x-range", "0.1", "--phi-range", "1:0:0.1"}).code == 1);
    CHECK(call({"sweep", "--model", "pt-pair", "--x-range", "0.1", "--phi-range", "1:2:-0.1"}).code == 1);
    CHECK(call({"sweep", "--model", "pt-pair", "--x-range", "0.1"}).code == 1);
    CHECK(call({"sweep", "--model", "pt-pair", "--x-range", "0.1", "--phi-range", "1", "--out",
                "/nonexistent-dir/x.csv"})
              .code == 1);

    const fs::path p = temp_file("sweep.json");
    const auto r = call({"sweep", "--model", "pt-pair", "--M-list", "1", "--x-range", "0.5:1:0.5", "--phi-range",
                         "1", "--format", "json", "--out", p.string(), "--convention", "h0-shifted"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const json j = json::parse(slurp(p));
    CHECK(j["rows"].size() == 1);
    CHECK(j["errors"].size() == 1);
    CHECK(j["errors"][0]["kind"] == "SingularSystem");
    CHECK(j["metadata"]["convention"] == "H0-shifted");
    CHECK(j["metadata"]["tool_version"] == kToolVersion);
    CHECK(j["rows"][0]["E"].get<double>() == doctest::Approx(2.0 - 2.0 * std::cos(1.0)));
    fs::remove(p);
}

TEST_CASE("sweep: custom window file")
{
    const fs::path w = temp_file("window.json", R"({"lo": 0, "hi": 0, "entries": [{"i": 0, "j": 0, "re": 0.5}]})");
    const auto r = call({"sweep", "--model", "custom", "--window", w.string(), "--phi-range", "0.5:1.5:0.5"});
    REQUIRE(r.code == 0);
    CHECK(csv_rows(r.out).size() == 3);
    fs::remove(w);
}

TEST_CASE("verify suites")
{
    for (const char* suite : {"closed-forms", "unitarity", "oracles"}) {
        const auto r = call({"verify", "--suite", suite, "--M-max", "4"});
        CHECK(r.code == 0);
        CHECK(r.out.find("[FAIL]") == std::string::npos);
        CHECK(r.out.find("verify: all checks passed") != std::string::npos);
    }
    const auto strict = call({"verify", "--suite", "oracles", "--M-max", "2", "--tol", "1e-20"});
    CHECK(strict.code == 3);
    CHECK(strict.out.find("[FAIL]") != std::string::npos);
    CHECK(call({"verify", "--tol", "-1"}).code == 1);
    CHECK(call({"verify", "--suite", "nope"}).code == 1);
}

TEST_CASE("check-pt")
{
    const auto pt = call({"check-pt", "--model", "pt-pair", "--M", "3", "--x", "0.7"});
    CHECK(pt.code == 0);
    CHECK(pt.out == "true\n");

    const auto ul = call({"check-pt", "--model", "ultralocal", "--a", "0.4"});
    CHECK(ul.code == 0);
    CHECK(ul.out.rfind("false\nfirst violation at (-1, 0)", 0) == 0);

    const fs::path diag = temp_file("diag.json", R"({"lo": -1, "hi": 1, "entries": [
        {"i": -1, "j": -1, "re": 0.3}, {"i": 1, "j": 1, "re": 0.3}, {"i": 0, "j": 0, "re": -2.0}]})");
    const auto d = call({"check-pt", "--model", "custom", "--window", diag.string()});
    CHECK(d.code == 0);
    CHECK(d.out == "true\n");

    const fs::path bad = temp_file("bad.json", R"({"lo": 0, "hi": 1, "entries": [{"i": 0, "j": 1})");
    CHECK(call({"check-pt", "--model", "custom", "--window", bad.string()}).code == 1);
    CHECK(call({"check-pt", "--model", "custom", "--window", "/nonexistent/w.json"}).code == 1);
    fs::remove(diag);
    fs::remove(bad);
}

TEST_CASE("parse_range")
{
    CHECK(cli::parse_range("0.25") == std::vector<double>{0.25});
    const auto r = cli::parse_range("-0.9:0.9:0.1");
    REQUIRE(r.size() == 19);
    CHECK(r.front() == -0.9);
    CHECK(r.back() == doctest::Approx(0.9));
    CHECK(cli::parse_range("1:1:0.5").size() == 1);
    CHECK(cli::parse_range("2:1:0.5").empty());
    CHECK_THROWS_AS(cli::parse_range("0:1:0"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_range("0:1"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_range("a:b:c"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_range(""), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_range("nan"), InvalidArgument);
}

TEST_CASE("parse_int_list")
{
    CHECK(cli::parse_int_list("1,2,3,4") == std::vector<int>{1, 2, 3, 4});
    CHECK(cli::parse_int_list("7") == std::vector<int>{7});
    CHECK_THROWS_AS(cli::parse_int_list(""), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_int_list("1,,2"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_int_list("0"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_int_list("1.5"), InvalidArgument);
}

TEST_CASE("window JSON")
{
    const auto w = cli::parse_window_json(R"({"lo": -1, "hi": 1, "entries": [
        {"i": -1, "j": 0, "re": 0.5, "im": -0.25}, {"i": 1, "j": 1, "re": 2}]})");
    CHECK(w.lo() == -1);
    CHECK(w.hi() == 1);
    CHECK(w.at(-1, 0) == Complex(0.5, -0.25));
    CHECK(w.at(1, 1) == Complex(2.0));

    // round trip
    const auto again = cli::parse_window_json(cli::window_to_json(w));
    CHECK(again.entries() == w.entries());
    CHECK(cli::parse_window_json(R"({"lo": 2, "hi": 3})").is_zero());

    CHECK_THROWS_AS(cli::parse_window_json("not json"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_window_json("[1, 2]"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_window_json(R"({"lo": 0, "hi": 1, "extra": 1})"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_window_json(R"({"lo": 0})"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_window_json(R"({"lo": 0.5, "hi": 1})"), InvalidArgument);
    CHECK_THROWS_AS(cli::parse_window_json(R"({"lo": 0, "hi": 1, "entries": [{"i": 0, "j": 5, "re": 1}]})"),
                    InvalidArgument);
    CHECK_THROWS_AS(cli::parse_window_json(R"({"lo": 0, "hi": 1, "entries": [{"i": 0, "j": 1}]})"),
                    InvalidArgument);
    CHECK_THROWS_AS(
        cli::parse_window_json(R"({"lo": 0, "hi": 1, "entries": [{"i": 0, "j": 1, "re": 1, "value": 2}]})"),
        InvalidArgument);
    CHECK_THROWS_AS(
        cli::parse_window_json(R"({"lo": 0, "hi": 1, "entries": [{"i": 0, "j": 1, "re": 1}, {"i": 0, "j": 1, "re": 2}]})"),
        InvalidArgument);
}

TEST_CASE("threads_from_env")
{
    CHECK(cli::threads_from_env(nullptr) == std::nullopt);
    CHECK(cli::threads_from_env("4") == 4u);
    CHECK_THROWS_AS(cli::threads_from_env(""), InvalidArgument);
    CHECK_THROWS_AS(cli::threads_from_env("0"), InvalidArgument);
    CHECK_THROWS_AS(cli::threads_from_env("-2"), InvalidArgument);
    CHECK_THROWS_AS(cli::threads_from_env("3x"), InvalidArgument);
}
