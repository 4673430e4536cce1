#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(JUE_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

// first non-comment lines
std::vector<std::string> body(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') v.push_back(line);
    return v;
}

}  // namespace

TEST_CASE("mgf CSV starts at M(0) = 1") {
    auto r = run("mgf --n 2 --lambda-grid 0:1:0.5");
    CHECK(r.code == 0);
    auto b = body(r.out);
    REQUIRE(b.size() == 4);
    CHECK(b[0] == "lambda,M_exact,M_series");
    CHECK(b[1] == "0,1,1");
    // mpmath 0.6116077090592867494991648
    CHECK(b[2].rfind("0.5,0.6116077090592867", 0) == 0);
    CHECK(r.out.find("# n=2") != std::string::npos);
}

TEST_CASE("mgf JSON document") {
    auto r = run("mgf --n 3 --alpha 1 --beta 2 --lambda 1 --compare all --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["config"]["command"] == "mgf");
    CHECK(j["config"]["n"] == 3);
    CHECK(j["columns"].size() == 5);
    CHECK(j["rows"].size() == 1);
    CHECK(j["rows"][0]["lambda"] == 1.0);
}

TEST_CASE("exact density grid value and untabulated case") {
    auto r = run("density --method exact --n 2 --alpha 0 --beta 0 --points 5");
    CHECK(r.code == 0);
    auto b = body(r.out);
    REQUIRE(b.size() == 6);
    CHECK(b[2] == "0.5,0.25,exact");
    CHECK(run("density --method exact --n 7").code == 2);
    auto j = nlohmann::json::parse(run("density --method exact --n 2 --alpha 1 --beta 2 --points 3 --format json").out);
    CHECK(j["schema"] == 1);
    CHECK(j.contains("rows"));
}

TEST_CASE("cumulants agree with the closed form") {
    auto r = run("cumulants --n 2 --mmax 4");
    CHECK(r.code == 0);
    auto b = body(r.out);
    REQUIRE(b.size() == 5);
    CHECK(b[0] == "m,b_closed,b_extracted,kappa_closed,kappa_extracted,rel_diff,agree");
    for (int m = 1; m <= 4; ++m) CHECK(b[m].substr(b[m].size() - 3) == "yes");
    auto j = nlohmann::json::parse(run("cumulants --n 2 --mmax 4 --format json").out);
    CHECK(j.dump().find("1/15") != std::string::npos);
    CHECK(j.dump().find("1/6300") != std::string::npos);
}

TEST_CASE("verify exit codes") {
    auto ok = run("verify --suite toda --n 3 --alpha 1 --beta 1");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("PASS toda/") != std::string::npos);
    CHECK(ok.out.find("SUMMARY pass=") != std::string::npos);
    CHECK(run("verify --suite nonsense").code == 2);
    CHECK(run("verify --suite appendix --quick").code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("mgf --n 0").code == 2);
    CHECK(run("mgf --n 2 --alpha -2").code == 2);
    CHECK(run("mgf --n 2 --format xml").code == 2);
    CHECK(run("density --method edgeworth --order 9 --n 2").code == 2);
    CHECK(run("cumulants --n 2 --mmax 9").code == 2);
}

TEST_CASE("sample is reproducible byte for byte") {
    auto a = run("sample --n 2 --count 200 --seed 9 --burn-in 100");
    auto b = run("sample --n 2 --count 200 --seed 9 --burn-in 100 --threads 2");
    CHECK(a.code == 0);
    CHECK(body(a.out) == body(b.out));
    auto c = run("sample --n 2 --count 200 --seed 10 --burn-in 100");
    CHECK(body(a.out) != body(c.out));
    CHECK(body(a.out).size() == 201);
}

TEST_CASE("edgeworth density JSON") {
    auto r = run("density --method edgeworth --n 4 --order 4 --points 11 --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 11);
}
