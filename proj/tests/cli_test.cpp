#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edgetangent/cli.hpp"
#include "edgetangent/report_io.hpp"

using namespace edgetangent;
using io::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("edgetangent_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::set<std::string> keys_of(const json& doc) {
    std::set<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.insert(it.key());
    return keys;
}

std::set<std::string> keys_of(const std::vector<std::string_view>& list) { return {list.begin(), list.end()}; }

}  // namespace

TEST(CliMetrics, TriangleDocument) {
    auto r = run({"metrics", "--radii", "1,2,3"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["R_sq"], "25/4");
    EXPECT_EQ(doc["rho_sq"], "1");
    EXPECT_EQ(doc["V_sq"], "36");
    EXPECT_EQ(doc["og_sq"], "25/36");
    EXPECT_EQ(keys_of(doc), keys_of(io::kMetricsKeys));
    EXPECT_TRUE(io::recheck_metrics_document(doc).empty());
}

TEST(CliMetrics, RegularTetrahedronRatio) {
    auto doc = json::parse(run({"metrics", "--radii", "1,1,1,1"}).out);
    EXPECT_EQ(doc["ratio_R_rho_sq"], "3");
}

TEST(CliMetrics, TamperedDocumentFailsRecheck) {
    auto doc = json::parse(run({"metrics", "--radii", "1,2,4"}).out);
    doc["R_sq"] = "7";
    EXPECT_FALSE(io::recheck_metrics_document(doc).empty());
}

TEST(CliMetrics, CsvHasHeaderAndRoutes) {
    auto r = run({"metrics", "--radii", "1,2,3", "--format", "csv"});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "quantity,route,value");
    EXPECT_NE(r.out.find("R_sq,closed,25/4"), std::string::npos);
}

TEST(CliMetrics, FloatBackend) {
    auto doc = json::parse(run({"metrics", "--radii", "1,2,3", "--backend", "float"}).out);
    EXPECT_DOUBLE_EQ(doc["R_sq"].get<double>(), 6.25);
}

TEST(CliMetrics, NonCircumscriptibleEdgesNameTheEdge) {
    auto path = write_temp("bad_edges.json", "[[0,10,2,2],[10,0,2,2],[2,2,0,2],[2,2,2,0]]");
    auto r = run({"metrics", "--edges", path});
    EXPECT_EQ(r.code, cli::kDomainRejection);
    auto doc = json::parse(r.out);
    EXPECT_EQ(doc["error"], "NotCircumscriptible");
    ASSERT_TRUE(doc.contains("edge"));
    EXPECT_EQ(doc["edge"].size(), 2u);
}

TEST(CliMetrics, EdgesDocumentInput) {
    auto path = write_temp("tri_doc.json", R"({"n": 2, "edges": [[0,3,4],[3,0,5],[4,5,0]]})");
    auto r = run({"metrics", "--input", path});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(json::parse(r.out)["R_sq"], "25/4");
}

TEST(CliMetrics, NonRealizableRadiiAreRejected) {
    auto r = run({"metrics", "--radii", "1/10,1,1,1"});
    EXPECT_EQ(r.code, cli::kDomainRejection);
    EXPECT_EQ(json::parse(r.out)["margin"], "-37");
}

TEST(CliMetrics, MalformedInput) {
    EXPECT_EQ(run({"metrics", "--radii", "1,x,3"}).code, cli::kMalformedInput);
    EXPECT_EQ(run({"metrics", "--radii", "1,2"}).code, cli::kMalformedInput);
    EXPECT_EQ(run({"metrics"}).code, cli::kMalformedInput);
    EXPECT_EQ(run({"metrics", "--radii", "1,2,3", "--random"}).code, cli::kMalformedInput);
    EXPECT_EQ(run({"metrics", "--edges", "/nonexistent/edges.json"}).code, cli::kMalformedInput);
    auto path = write_temp("unknown_key.json", R"({"radii": [1,2,3], "colour": "red"})");
    EXPECT_EQ(run({"metrics", "--input", path}).code, cli::kMalformedInput);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kMalformedInput);
}

TEST(CliMetrics, RandomInputIsSeeded) {
    auto a = run({"metrics", "--random", "--n", "4", "--seed", "9"});
    auto b = run({"metrics", "--random", "--n", "4", "--seed", "9"});
    ASSERT_EQ(a.code, cli::kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, run({"metrics", "--random", "--n", "4", "--seed", "10"}).out);
}

TEST(CliValidate, TriangleEdges) {
    auto path = write_temp("tri.json", "[[0,3,4],[3,0,5],[4,5,0]]");
    auto r = run({"validate", "--edges", path});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_EQ(keys_of(doc), keys_of(io::kValidateKeys));
    EXPECT_TRUE(doc["circumscriptible"].get<bool>());
    EXPECT_EQ(doc["radii"], json::parse(R"(["1","2","3"])"));
}

TEST(CliValidate, PerturbedTetrahedron) {
    auto path = write_temp("perturbed.json", "[[0,10,2,2],[10,0,2,2],[2,2,0,2],[2,2,2,0]]");
    auto r = run({"validate", "--edges", path});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_FALSE(json::parse(r.out)["circumscriptible"].get<bool>());
}

TEST(CliValidate, SmallApexBalloon) {
    auto r = run({"validate", "--radii", "1/10,1,1,1"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    auto doc = json::parse(r.out);
    EXPECT_TRUE(doc["circumscriptible"].get<bool>());
    EXPECT_FALSE(doc["realizable"].get<bool>());
    EXPECT_EQ(doc["margin"], "-37");
}

TEST(CliVerify, SummaryKeysAndDeterminism) {
    std::vector<std::string> args{"verify", "--n", "2..4", "--count", "20", "--seed", "5"};
    auto a = run(args);
    ASSERT_EQ(a.code, cli::kOk) << a.err;
    auto doc = json::parse(a.out);
    EXPECT_EQ(keys_of(doc), keys_of(io::kVerifyKeys));
    ASSERT_EQ(doc["dimensions"].size(), 3u);
    EXPECT_EQ(keys_of(doc["dimensions"][0]), keys_of(io::kDimensionKeys));
    EXPECT_EQ(doc["total_violations"], 0);

    auto more_workers = args;
    more_workers.insert(more_workers.end(), {"--workers", "3"});
    EXPECT_EQ(run(more_workers).out, a.out);
    EXPECT_EQ(run(args).out, a.out);
}

TEST(CliVerify, RejectsBadRanges) {
    EXPECT_EQ(run({"verify", "--n", "1..3"}).code, cli::kMalformedInput);
    EXPECT_EQ(run({"verify", "--n", "5..3"}).code, cli::kMalformedInput);
    EXPECT_EQ(run({"verify", "--count", "0"}).code, cli::kMalformedInput);
}

TEST(CliBench, RoutesAgreeAndValuesAreStable) {
    auto a = run({"bench", "--n", "2..5", "--repetitions", "1"});
    auto b = run({"bench", "--n", "2..5", "--repetitions", "5"});
    ASSERT_EQ(a.code, cli::kOk) << a.err;
    auto values = [](const std::string& csv) {
        std::vector<std::string> out;
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line);
        while (std::getline(in, line)) out.push_back(line.substr(line.rfind(',') + 1));
        return out;
    };
    EXPECT_EQ(values(a.out), values(b.out));
    auto v = values(a.out);
    ASSERT_EQ(v.size(), 8u);
    for (std::size_t i = 0; i < v.size(); i += 2) EXPECT_EQ(v[i], v[i + 1]);
}

TEST(CliHelpers, DimensionRange) {
    auto single = cli::parse_dimension_range("3");
    EXPECT_EQ(single.min, 3);
    EXPECT_EQ(single.max, 3);
    auto range = cli::parse_dimension_range("2..8");
    EXPECT_EQ(range.min, 2);
    EXPECT_EQ(range.max, 8);
}

TEST(CliHelpers, SeedFromEnvironment) {
    ::setenv("EDGETANGENT_SEED", "1234", 1);
    EXPECT_EQ(cli::default_seed(), 1234u);
    ::unsetenv("EDGETANGENT_SEED");
    EXPECT_EQ(cli::default_seed(), 42u);
}
