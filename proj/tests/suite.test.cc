// Copyright 2026 The declab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "declab/suite.h"

#include "gtest/gtest.h"

#include "json.hpp"

using namespace declab;

TEST(suite, parse_names) {
    EXPECT_EQ(parse_suite("ch5"), Suite::ch5);
    EXPECT_EQ(parse_suite("entropy"), Suite::entropy);
    EXPECT_FALSE(parse_suite("ch4").has_value());
    EXPECT_EQ(parse_output("csv"), OutputFormat::csv);
    EXPECT_FALSE(parse_output("xml").has_value());
    EXPECT_STREQ(suite_name(Suite::groups), "groups");
}

TEST(suite, config_validation) {
    SuiteConfig c;
    EXPECT_NO_THROW(c.validate());
    c.samples = 0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.tolerance = 0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.dims = {7};
    EXPECT_THROW(c.validate(), ConfigError);
    c.suite = Suite::ch2;
    EXPECT_NO_THROW(c.validate());
    c = {};
    c.suite = Suite::ch7;
    c.dims = {2, 3};
    EXPECT_THROW(c.validate(), ConfigError);
    EXPECT_THROW(run_suite(c), ConfigError);
}

TEST(suite, format_number_twelve_digits) {
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(16), "16");
    EXPECT_EQ(format_number(1.5e-20), "1.5e-20");
}

TEST(suite, groups_records_and_json) {
    SuiteConfig c;
    c.suite = Suite::groups;
    c.timing = false;
    auto recs = run_suite(c);
    ASSERT_EQ(recs.size(), 9u);
    EXPECT_TRUE(all_pass(recs));
    auto j = nlohmann::json::parse(format_records(recs, OutputFormat::json));
    ASSERT_TRUE(j.is_array());
    for (const auto &r : j) {
        for (const char *key : {"name", "kind", "lhs", "rhs", "gap", "pass", "dims", "seed", "runtime_ms"}) {
            EXPECT_TRUE(r.contains(key)) << key;
        }
        EXPECT_EQ(r["runtime_ms"], 0.0);
    }
    EXPECT_EQ(j[0]["name"], "characters.closed_forms");
    EXPECT_EQ(j[0]["dims"], "d=4");
}

TEST(suite, deterministic_across_workers) {
    SuiteConfig c;
    c.suite = Suite::ch5;
    c.dims = {3};
    c.instances = 4;
    c.seed = 7;
    c.timing = false;
    c.workers = 1;
    std::string a = format_records(run_suite(c), OutputFormat::json);
    c.workers = 3;
    std::string b = format_records(run_suite(c), OutputFormat::json);
    EXPECT_EQ(a, b);
    c.seed = 8;
    EXPECT_NE(a, format_records(run_suite(c), OutputFormat::json));
}

TEST(suite, csv_and_text) {
    SuiteConfig c;
    c.suite = Suite::groups;
    auto recs = run_suite(c);
    std::string csv = format_records(recs, OutputFormat::csv);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "suite,name,kind,lhs,rhs,gap,pass,dims,seed,runtime_ms");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), (long)recs.size() + 1);
    std::string text = format_records(recs, OutputFormat::text);
    EXPECT_NE(text.find("9 checks, 0 failed"), std::string::npos);
}

TEST(suite, failing_record_marks_run) {
    std::vector<Record> recs(2);
    recs[0].report = equality_report("a", 1, 1, 1e-9);
    recs[1].report = equality_report("b", 1, 2, 1e-9);
    EXPECT_FALSE(all_pass(recs));
}

TEST(suite, circuit_study) {
    auto a = run_circuit_study(2, {0, 2, 30}, 60, 5);
    ASSERT_EQ(a.size(), 3u);
    EXPECT_NEAR(a[0].eps_bound, a[0].per_seed[0], 0);
    EXPECT_GT(a[0].eps_bound, a[1].eps_bound);
    EXPECT_GT(a[1].eps_bound, a[2].eps_bound);
    auto b = run_circuit_study(2, {0, 2, 30}, 60, 5);
    EXPECT_EQ(format_circuit_study(a, OutputFormat::json), format_circuit_study(b, OutputFormat::json));
    EXPECT_THROW(run_circuit_study(4, {2}, 10, 1), ConfigError);
    EXPECT_THROW(run_circuit_study(2, {-1}, 10, 1), ConfigError);
    EXPECT_THROW(run_circuit_study(2, {2}, 0, 1), ConfigError);
}
