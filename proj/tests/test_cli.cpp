// Runs the built CLI as a subprocess.

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(LISINV_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

// "n,k,count" rows -> "k:count" list, header dropped
std::vector<std::string> kc(const std::string& csv) {
    std::vector<std::string> v;
    auto ls = lines(csv);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto a = ls[i].find(','), b = ls[i].rfind(',');
        v.push_back(ls[i].substr(a + 1, b - a - 1) + ":" + ls[i].substr(b + 1));
    }
    return v;
}

}  // namespace

TEST(Cli, DistributionFour) {
    const auto r = run("distribution --n 4 --avoid 3412");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,k,count\n4,1,1\n4,2,4\n4,3,3\n4,4,1\n");
}

TEST(Cli, DistributionEmptyPermutation) {
    const auto r = run("distribution --n 0 --avoid 3412");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,k,count\n0,0,1\n");
}

TEST(Cli, DistributionMatchesSeries) {
    const auto d = run("distribution --n 6 --avoid 3412,4321");
    const auto g = run("gf-coeffs --gf Table1_4321 --n 6");
    ASSERT_EQ(d.code, 0);
    ASSERT_EQ(g.code, 0);
    EXPECT_EQ(kc(d.out), kc(g.out));
}

TEST(Cli, JsonAndCsvAgree) {
    const auto j = nlohmann::json::parse(run("distribution --n 7 --avoid 3412,123 --format json").out);
    const auto rows = kc(run("distribution --n 7 --avoid 3412,123").out);
    std::vector<std::string> from_json;
    for (const auto& [k, c] : j.at("counts").items()) from_json.push_back(k + ":" + std::to_string(c.get<int>()));
    EXPECT_EQ(from_json, rows);
    int total = 0;
    for (const auto& [k, c] : j.at("counts").items()) total += c.get<int>();
    EXPECT_EQ(j.at("class_size"), total);
    EXPECT_EQ(j.at("patterns"), nlohmann::json::array({"123", "3412"}));
}

TEST(Cli, OracleGuardIsInputError) {
    EXPECT_EQ(run("distribution --n 15 --avoid 3412").code, 2);
    EXPECT_EQ(run("distribution --n 4 --avoid 33").code, 2);
    EXPECT_EQ(run("gf-coeffs --gf NoSuchSeries --n 3").code, 2);
    EXPECT_EQ(run("moments --gf H_123 --n 20 --order 10").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, MomentsAreExactRationals) {
    const auto j = nlohmann::json::parse(run("moments --gf H_123 --n 4 --format json").out);
    const auto& m = j.at("moments").at(0);
    // E_4 = (8 + 3/4 + 1/4) / (4 + 7/8 + 1/8) = 9/5
    EXPECT_EQ(m.at("E"), "9/5");
    EXPECT_EQ(m.at("E_decimal"), "1.8");
    const auto oracle = nlohmann::json::parse(run("moments --avoid 3412,123 --n 4 --format json").out);
    EXPECT_EQ(oracle.at("moments").at(0).at("E"), "9/5");
    EXPECT_EQ(oracle.at("moments").at(0).at("Var"), m.at("Var"));
}

TEST(Cli, VerifyOnly) {
    const auto r = run("verify --only H_123");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.at("checks").size(), 1u);
    EXPECT_EQ(j.at("checks").at(0).at("name"), "oracle:H_123");
    EXPECT_EQ(j.at("failed"), 0);
}

TEST(Cli, VerifyDefault) {
    const auto r = run("verify");
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("failed"), 0);
    EXPECT_GT(j.at("passed").get<int>(), 30);
}

TEST(Cli, VerifyCatchesInjectedError) {
    std::ifstream in(LISINV_CATALOG);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const std::string good = "(1 - x)/(1 - x - q*x)";
    const auto at = text.find(good);
    ASSERT_NE(at, std::string::npos);
    text.replace(at, good.size(), "(1 - x)/(1 - x - q*x - x^2)");
    const auto path = std::filesystem::temp_directory_path() / "lisinv_broken_catalog.json";
    std::ofstream(path) << text;
    const auto r = run("verify --only Table1_1432 --max-n 6 --catalog " + path.string());
    std::filesystem::remove(path);
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j.at("checks").at(0).at("pass").get<bool>());
    EXPECT_NE(j.at("checks").at(0).at("counterexample").get<std::string>().find("vs oracle"), std::string::npos);
}

TEST(Cli, SampleIsDeterministic) {
    const auto a = run("sample --n 30 --samples 200 --seed 7 --format json");
    const auto b = run("sample --n 30 --samples 200 --seed 7 --format json");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j.at("seed"), 7);
    EXPECT_EQ(j.at("rng"), "mt19937_64");
    EXPECT_EQ(j.at("sample_count"), 200);
}

TEST(Cli, WritesOutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "lisinv_cli_out.csv";
    const auto r = run("distribution --n 3 --out " + path.string());
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), "n,k,count\n3,1,1\n3,2,2\n3,3,1\n");
    std::filesystem::remove(path);
}

TEST(Cli, Table1SmallRun) {
    // Loose tolerance: only the layout and the constants are checked here.
    const auto r = run("table1 --n-hi 200 --tolerance 0.5");
    EXPECT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    EXPECT_EQ(ls.size(), 19u);  // header + 9 rows x {E, Var}
    EXPECT_EQ(ls[0], "row,patterns,statistic,growth,measured,constant,abs_dev,rel_err,verdict");
    bool found = false;
    for (const auto& l : ls)
        if (l.rfind("Table1_4321,4321,E,", 0) == 0) found = l.find(",0.625,") != std::string::npos;
    EXPECT_TRUE(found);
}

TEST(Cli, Enumerate) {
    const auto r = run("enumerate --n 3 --avoid 3412,123");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 1u + 3u);  // 132, 213, 321
}

TEST(Cli, GfCoeffsExpand) {
    const auto r = run("gf-coeffs --gf Table1_1432 --expand");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("denominator,1,1,-1"), std::string::npos);
}

TEST(Cli, Slopes) {
    const auto r = run("slopes --gf H_321 --n-range 200..400 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(std::stod(j.at("E_difference").get<std::string>()), 0.723607, 0.01);
}
