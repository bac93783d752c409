#include "hauptmod/cli/commands.hpp"
#include "hauptmod/cli/documents.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;
using namespace hauptmod;
using hauptmod::cli::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("hauptmod-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

std::vector<std::string> strings(const json& a) {
    std::vector<std::string> v;
    for (const auto& x : a) v.push_back(x.get<std::string>());
    return v;
}

}  // namespace

TEST(Expand, NamedW) {
    Outcome r = run({"--no-timing", "expand", "--name", "w", "--prec", "8"});
    ASSERT_EQ(r.code, 0) << r.err;
    json d = r.doc();
    EXPECT_EQ(cli::validate_document(d), "");
    EXPECT_EQ(d["schema_version"], "1");
    EXPECT_EQ(d["command"], "expand");
    EXPECT_TRUE(d["timing"].is_null());
    EXPECT_EQ(d["result"]["valuation"], "1");
    EXPECT_EQ(strings(d["result"]["coefficients"]),
              (std::vector<std::string>{"1", "-1", "1", "-2", "3", "-4", "5"}));
}

TEST(Expand, TrivialQuotient) {
    json d = run({"expand", "--quotient", "18; 1:0", "--prec", "5"}).doc();
    EXPECT_EQ(strings(d["result"]["coefficients"]), (std::vector<std::string>{"1", "0", "0", "0", "0"}));
    EXPECT_TRUE(d["timing"].is_number());
}

TEST(Expand, XHasQuarterExponents) {
    json d = run({"expand", "--name", "X", "--prec", "12"}).doc();
    EXPECT_EQ(d["result"]["valuation"], "1/4");
    EXPECT_EQ(d["result"]["exponent_denominator"], 4);
    EXPECT_EQ(d["result"]["precision"], "12");
}

TEST(Expand, JAndFormats) {
    json d = run({"expand", "--name", "j", "--prec", "3"}).doc();
    EXPECT_EQ(strings(d["result"]["coefficients"]),
              (std::vector<std::string>{"1", "744", "196884", "21493760"}));
    EXPECT_EQ(run({"expand", "--name", "w", "--prec", "4", "--format", "plain"}).out,
              "q - q^2 + q^3 + O(q^4)\n");
    EXPECT_EQ(run({"expand", "--name", "X", "--prec", "2", "--format", "latex"}).out,
              "q^{1/4} - q^{5/4} + O(q^2)\n");
}

TEST(Expand, UsageErrors) {
    EXPECT_EQ(run({"expand", "--name", "w", "--quotient", "18; 1:1"}).code, 2);
    EXPECT_EQ(run({"expand"}).code, 2);
    EXPECT_EQ(run({"expand", "--quotient", "18; 5:1"}).code, 2);
    EXPECT_EQ(run({"expand", "--quotient", "18; 1"}).code, 2);
    EXPECT_EQ(run({"expand", "--name", "z"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cusps, Counts) {
    EXPECT_EQ(run({"cusps", "18"}).doc()["result"]["count"], 8);
    EXPECT_EQ(run({"cusps", "54"}).doc()["result"]["count"], 12);
    json one = run({"cusps", "1"}).doc();
    ASSERT_EQ(one["result"]["cusps"].size(), 1u);
    EXPECT_EQ(one["result"]["cusps"][0]["cusp"], "inf");
    EXPECT_EQ(run({"cusps", "0"}).code, 2);
}

TEST(Cusps, DivisorOrders) {
    json d = run({"cusps", "18", "--divisor", "w"}).doc();
    EXPECT_EQ(cli::validate_document(d), "");
    std::vector<std::string> orders;
    for (const auto& c : d["result"]["cusps"]) orders.push_back(c["order"]);
    EXPECT_EQ(orders, (std::vector<std::string>{"1", "0", "-1", "0", "0", "0", "0", "0"}));
    EXPECT_EQ(run({"cusps", "20", "--divisor", "w"}).code, 2);
}

TEST(Modeq, LatexLevelTwo) {
    Outcome r = run({"modeq", "2", "--no-cache", "--format", "latex"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "X^2-Y+2XY-3X^2Y+Y^2\n");
}

TEST(Modeq, LevelSevenFactored) {
    json d = run({"modeq", "7", "--no-cache"}).doc();
    EXPECT_EQ(cli::validate_document(d), "");
    EXPECT_EQ(d["cache"], "bypass");
    const json& f = d["result"]["factored"];
    ASSERT_FALSE(f.is_null());
    EXPECT_EQ(f["p"], 7);
    std::vector<golden::Term> inner;
    for (const auto& t : f["inner"])
        inner.push_back({t[0].get<int>(), t[1].get<int>(), std::stol(t[2].get<std::string>())});
    for (const auto& eq : golden::builtin_equations()) {
        if (eq.level != 7) continue;
        auto want = eq.terms;
        auto key = [](const golden::Term& t) { return std::pair(t.i, t.j); };
        std::sort(want.begin(), want.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
        EXPECT_EQ(inner, want);
    }
    EXPECT_TRUE(run({"modeq", "2", "--no-cache"}).doc()["result"]["factored"].is_null());
}

TEST(Modeq, CacheRoundTrip) {
    TempDir dir;
    const std::string cd = dir.path().string();
    Outcome first = run({"--no-timing", "modeq", "2", "--cache-dir", cd});
    Outcome second = run({"--no-timing", "modeq", "2", "--cache-dir", cd});
    ASSERT_EQ(first.code, 0);
    ASSERT_EQ(second.code, 0);
    EXPECT_EQ(first.doc()["cache"], "miss");
    EXPECT_EQ(second.doc()["cache"], "hit");
    EXPECT_EQ(first.doc()["result"], second.doc()["result"]);
    EXPECT_TRUE(fs::exists(dir.path() / "modeq-v1-n2-multimodular.json"));
    // no temp files left behind
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path())) ++files;
    EXPECT_EQ(files, 1u);
}

TEST(Modeq, CorruptCacheIsRecomputed) {
    TempDir dir;
    const std::string cd = dir.path().string();
    json fresh = run({"--no-timing", "modeq", "3", "--cache-dir", cd}).doc();
    const fs::path file = dir.path() / "modeq-v1-n3-multimodular.json";
    json stored = json::parse(std::ifstream(file));
    stored["result"]["coefficients"][0][2] = "2";
    std::ofstream(file) << stored.dump();
    Outcome again = run({"--no-timing", "modeq", "3", "--cache-dir", cd});
    EXPECT_NE(again.err.find("warning"), std::string::npos);
    EXPECT_EQ(again.doc()["cache"], "miss");
    EXPECT_EQ(again.doc()["result"], fresh["result"]);
    std::ofstream(file) << "{ not json";
    Outcome third = run({"--no-timing", "modeq", "3", "--cache-dir", cd});
    EXPECT_NE(third.err.find("warning"), std::string::npos);
    EXPECT_EQ(third.doc()["result"], fresh["result"]);
    EXPECT_EQ(run({"--no-timing", "modeq", "3", "--cache-dir", cd}).doc()["cache"], "hit");
}

TEST(Modeq, NoCacheWritesNothing) {
    TempDir dir;
    Outcome r = run({"modeq", "2", "--no-cache", "--cache-dir", dir.path().string()});
    EXPECT_EQ(r.doc()["cache"], "bypass");
    EXPECT_TRUE(fs::is_empty(dir.path()));
}

TEST(Modeq, EnvironmentOverride) {
    TempDir dir;
    ::setenv("HAUPTMOD_CACHE_DIR", dir.path().c_str(), 1);
    Outcome r = run({"modeq", "2"});
    ::unsetenv("HAUPTMOD_CACHE_DIR");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(fs::exists(dir.path() / "modeq-v1-n2-multimodular.json"));
}

TEST(Modeq, ExactMethodAndErrors) {
    json d = run({"modeq", "3", "--no-cache", "--method", "exact"}).doc();
    EXPECT_EQ(d["result"]["solver"]["method"], "exact");
    EXPECT_EQ(d["result"]["latex"], run({"modeq", "3", "--no-cache"}).doc()["result"]["latex"]);
    EXPECT_EQ(run({"modeq", "1"}).code, 2);
    EXPECT_EQ(run({"modeq", "2", "--method", "magic"}).code, 2);
}

TEST(Modeq, DeterministicOutput) {
    Outcome a = run({"--no-timing", "modeq", "5", "--no-cache"});
    Outcome b = run({"--no-timing", "modeq", "5", "--no-cache"});
    EXPECT_EQ(a.out, b.out);
}

TEST(Verify, IdentitiesPass) {
    Outcome r = run({"--no-timing", "verify", "identities"});
    ASSERT_EQ(r.code, 0) << r.out;
    json d = r.doc();
    EXPECT_EQ(cli::validate_document(d), "");
    EXPECT_EQ(d["result"]["checks"].size(), 4u);
    EXPECT_EQ(d["result"]["failed"], 0);
    EXPECT_EQ(d["result"]["not_reproduced"].size(), 3u);
    EXPECT_EQ(d["result"]["golden_checksum"], golden::checksum(golden::builtin_equations()));
}

TEST(Verify, CorruptedGoldenFileFails) {
    TempDir dir;
    json g = cli::golden_to_json(golden::builtin_equations());
    EXPECT_EQ(cli::golden_from_json(g), golden::builtin_equations());
    g["equations"][2]["terms"][0][2] = "17";
    const fs::path file = dir.path() / "golden.json";
    std::ofstream(file) << g.dump();
    Outcome r = run({"--no-timing", "verify", "tables", "--fail-fast", "--golden", file.string()});
    EXPECT_EQ(r.code, 1);
    json d = r.doc();
    EXPECT_EQ(cli::validate_document(d), "");
    const json& last = d["result"]["checks"].back();
    EXPECT_EQ(last["name"], "modeq-5-table");
    EXPECT_EQ(last["status"], "fail");
    EXPECT_TRUE(last["witness"].is_string());
    EXPECT_NE(d["result"]["golden_checksum"], golden::checksum(golden::builtin_equations()));
}

TEST(Verify, UsageErrors) {
    EXPECT_EQ(run({"verify", "everything"}).code, 2);
    EXPECT_EQ(run({"verify", "cusps", "--golden", "/nonexistent/golden.json"}).code, 2);
    EXPECT_EQ(run({"verify", "cusps", "--format", "latex"}).code, 2);
}

TEST(Verify, PlainFormat) {
    Outcome r = run({"verify", "cusps", "--format", "plain"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("pass\tcusps-gamma0-18"), std::string::npos);
    EXPECT_NE(r.out.find("not reproduced:"), std::string::npos);
}

TEST(Golden, PrintsBuiltinTables) {
    Outcome r = run({"golden"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(cli::golden_from_json(json::parse(r.out)), golden::builtin_equations());
}

TEST(Documents, ValidatorRejectsMalformed) {
    json d = run({"--no-timing", "cusps", "18"}).doc();
    EXPECT_EQ(cli::validate_document(d), "");
    json bad = d;
    bad["schema_version"] = "2";
    EXPECT_NE(cli::validate_document(bad), "");
    bad = d;
    bad["result"]["count"] = 9;
    EXPECT_NE(cli::validate_document(bad), "");
    bad = d;
    bad["extra"] = 1;
    EXPECT_NE(cli::validate_document(bad), "");
    json m = run({"--no-timing", "modeq", "2", "--no-cache"}).doc();
    m["result"]["coefficients"][0][2] = 1;  // a number, not a decimal string
    EXPECT_NE(cli::validate_document(m), "");
}
