/*
   Copyright 2026 The apnforge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <sstream>

#include "apnforge/cli.hpp"

namespace apnforge::cli {
namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, Example2) {
    const auto r = call({"example2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = parse(r);
    EXPECT_EQ(j["h_degree"], 33);
    EXPECT_EQ(j["multiplicity_1_0"], 3);
    EXPECT_EQ(j["specialized_degree"], 63);
    EXPECT_EQ(j["obstruction_factor_degree"], 53);
    EXPECT_EQ(j["k_witness"]["irreducible"], true);
    EXPECT_EQ(j["verdict"], "NotAPNInfinitelyOften");
    EXPECT_EQ(j["replay"], true);
    EXPECT_EQ(j["du_on_K"], 2);
}

TEST(Cli, ClassifyIsDeterministic) {
    const std::vector<std::string> args = {"classify", "--field", "6", "--i", "1", "--s", "2", "--t", "1", "--delta", "a^5"};
    const auto a = call(args), b = call(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
    auto with_threads = args;
    with_threads.insert(with_threads.end(), {"--threads", "3"});
    EXPECT_EQ(call(with_threads).out, a.out);
}

TEST(Cli, ClassifyReportRoundTrips) {
    const auto r = call({"classify", "--field", "10", "--i", "1", "--s", "2", "--t", "3", "--delta", "a^374",
                         "--hint", "a^17", "--hint", "a^5"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = parse(r);
    EXPECT_EQ(j["verdict"], "NotAPNInfinitelyOften");
    EXPECT_EQ(ClassificationReport::from_json(j).to_json(), j);
}

TEST(Cli, SZeroExitsZero) {
    const auto r = call({"classify", "--field", "10", "--i", "1", "--s", "0", "--t", "2", "--delta", "1"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(parse(r)["verdict"], "NotAPNAnywhere");
}

TEST(Cli, BudgetExhaustionExitsThree) {
    const auto r = call({"classify", "--field", "2", "--i", "1", "--s", "2", "--t", "1", "--delta", "a", "--trials", "8"});
    EXPECT_EQ(r.code, kExitBudget);
    const auto j = parse(r);
    EXPECT_EQ(j["verdict"], "Undetermined");
    EXPECT_EQ(j["budget_exhausted"], true);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(call({}).code, kExitUsage);
    EXPECT_EQ(call({"classify", "--nope"}).code, kExitUsage);
    EXPECT_EQ(call({"classify", "--field", "10", "--i", "1", "--s", "1", "--t", "1", "--delta", "zz"}).code, kExitUsage);
    const auto k = call({"catalog", "--family", "kasami", "--param", "r=2", "--param", "m=4"});
    EXPECT_EQ(k.code, kExitUsage);
    EXPECT_NE(k.err.find("(r,m)=1"), std::string::npos);
}

TEST(Cli, Du) {
    const auto r = call({"du", "--field", "5", "--poly", "x^3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = parse(r);
    EXPECT_EQ(j["du"], 2);
    EXPECT_EQ(j["apn"], true);
}

TEST(Cli, FactorAndIrreducible) {
    const auto f = call({"factor", "--field", "1", "--poly", "x^2 + 1"});
    ASSERT_EQ(f.code, kExitOk) << f.err;
    EXPECT_NE(f.out.find("x + 0x1"), std::string::npos);
    const auto i = call({"irreducible", "--field", "1", "--poly", "x^2 + x + 1"});
    ASSERT_EQ(i.code, kExitOk) << i.err;
    EXPECT_NE(i.out.find("true"), std::string::npos);
}

TEST(Cli, SweepLines) {
    const auto r = call({"sweep", "--fields", "4", "--i", "1..2", "--s", "0..1", "--t", "1..2", "--trials", "8"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream in(r.out);
    std::string line;
    int tuples = 0;
    bool summary = false;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        if (j.contains("summary")) {
            summary = true;
            EXPECT_EQ(j["tuples"], tuples);
        } else {
            ++tuples;
            EXPECT_TRUE(j.contains("verdict") || j.contains("error"));
        }
    }
    EXPECT_TRUE(summary);
    EXPECT_EQ(tuples, 8);
}

TEST(Cli, SweepReportsBadTuplesPerLine) {
    const auto r = call({"sweep", "--fields", "4", "--i", "1", "--s", "0", "--t", "1", "--trials", "8"});
    EXPECT_EQ(r.code, kExitOk);
    const auto first = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
    EXPECT_TRUE(first.contains("error"));
}

TEST(Cli, EmptySweepPrintsNothing) {
    const auto r = call({"sweep", "--fields", "4", "--i", "3..2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty()) << r.out;
}

}  // namespace
}  // namespace apnforge::cli
