// Copyright 2026 The lttw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exercises the C interface only; nothing from the C++ core is included.

#include <string>

#include <gtest/gtest.h>

#include "lttw/lttw.h"

namespace {

std::string src(const std::string& rel) { return std::string(LTTW_SOURCE_DIR) + "/" + rel; }

std::string take(char* s) {
  std::string out = s ? s : "";
  lttw_string_free(s);
  return out;
}

class CApi : public ::testing::Test {
 protected:
  void SetUp() override {
    lttw_config_init(&cfg_);
    stdlib_ = src("stdlib");
    cfg_.stdlib_dir = stdlib_.c_str();
    ASSERT_EQ(lttw_session_new(&cfg_, &s_), LTTW_OK) << lttw_last_error(nullptr);
  }
  void TearDown() override { lttw_session_free(s_); }

  lttw_config cfg_;
  std::string stdlib_;
  lttw_session* s_ = nullptr;
};

TEST(CApiBasics, ConfigDefaults) {
  lttw_config cfg;
  lttw_config_init(&cfg);
  EXPECT_EQ(cfg.mode, LTTW_MODE_PREDICATIVE);
  EXPECT_EQ(cfg.prop_at_type, 0);
  EXPECT_EQ(cfg.fuel, 100000u);
  EXPECT_EQ(cfg.stdlib_dir, nullptr);
}

TEST(CApiBasics, StatusNames) {
  EXPECT_STREQ(lttw_status_name(LTTW_OK), "Ok");
  EXPECT_STREQ(lttw_status_name(LTTW_KIND_MISMATCH), "KindMismatch");
  EXPECT_STREQ(lttw_status_name(LTTW_UNKNOWN_CONSTANT), "UnknownConstant");
  EXPECT_STREQ(lttw_status_name(LTTW_SCOPE_ESCAPE), "ScopeEscape");
}

TEST(CApiBasics, NullArguments) {
  EXPECT_EQ(lttw_check_file(nullptr, "x", nullptr), LTTW_INVALID_ARGUMENT);
  EXPECT_EQ(lttw_replay(nullptr), LTTW_INVALID_ARGUMENT);
  EXPECT_EQ(lttw_constant_count(nullptr), 0u);
  lttw_session_free(nullptr);
  lttw_string_free(nullptr);
}

TEST(CApiBasics, EmptySession) {
  lttw_config cfg;
  lttw_config_init(&cfg);
  lttw_session* s = nullptr;
  ASSERT_EQ(lttw_session_new(&cfg, &s), LTTW_OK);
  EXPECT_EQ(lttw_constant_count(s), 0u);
  lttw_session_free(s);
}

TEST(CApiBasics, MissingStandardLibrary) {
  lttw_config cfg;
  lttw_config_init(&cfg);
  cfg.stdlib_dir = "/nonexistent/stdlib";
  lttw_session* s = reinterpret_cast<lttw_session*>(1);
  EXPECT_NE(lttw_session_new(&cfg, &s), LTTW_OK);
  EXPECT_EQ(s, nullptr);
  EXPECT_STRNE(lttw_last_error(nullptr), "");
}

TEST_F(CApi, Counts) {
  EXPECT_EQ(lttw_constant_count(s_), 38u);
  EXPECT_EQ(lttw_rule_count(s_), 11u);
  EXPECT_GT(lttw_definition_count(s_), 0u);
}

TEST_F(CApi, CheckFile) {
  char* out = nullptr;
  EXPECT_EQ(lttw_check_file(s_, src("corpus/peano4.lf").c_str(), &out), LTTW_OK)
      << lttw_last_error(s_);
  take(out);
  EXPECT_STREQ(lttw_last_error(s_), "");
}

TEST_F(CApi, DirectiveOutput) {
  char* out = nullptr;
  ASSERT_EQ(lttw_check_file(s_, src("corpus/arith.lf").c_str(), nullptr), LTTW_OK);
  ASSERT_EQ(lttw_check_source(s_, "> Reduce plus 2 3;\n> TypeOf plus;\n", "d.lf", &out), LTTW_OK);
  EXPECT_EQ(take(out), "succ (succ (succ (succ (succ zero))))\nNat -> Nat -> Nat\n");
}

TEST_F(CApi, RejectionReportsTheClass) {
  int st = lttw_check_file(s_, src("corpus/negative/wrong_proof.lf").c_str(), nullptr);
  EXPECT_EQ(st, LTTW_KIND_MISMATCH);
  std::string err = lttw_last_error(s_);
  EXPECT_NE(err.find("KindMismatch"), std::string::npos) << err;
  EXPECT_NE(err.find("wrong_proof.lf"), std::string::npos) << err;
}

TEST_F(CApi, RejectionLeavesTheSignatureUnchanged) {
  size_t before = lttw_definition_count(s_);
  EXPECT_NE(lttw_check_source(s_, "> [one = succ zero];\n> [bad = nope];\n", "t.lf", nullptr),
            LTTW_OK);
  EXPECT_EQ(lttw_definition_count(s_), before);
}

TEST_F(CApi, MissingFile) {
  EXPECT_EQ(lttw_check_file(s_, "/nonexistent.lf", nullptr), LTTW_IO_ERROR);
}

TEST_F(CApi, TypeOfAndReduce) {
  char* out = nullptr;
  ASSERT_EQ(lttw_typeof(s_, "Ind_Nat", &out), LTTW_OK);
  EXPECT_NE(take(out).find("Prf"), std::string::npos);
  ASSERT_EQ(lttw_reduce(s_, "T hatNat", &out), LTTW_OK);
  EXPECT_EQ(take(out), "Nat");
  EXPECT_EQ(lttw_reduce(s_, "T (", &out), LTTW_SYNTAX_ERROR);
  EXPECT_EQ(out, nullptr);
}

TEST_F(CApi, Replay) {
  ASSERT_EQ(lttw_check_file(s_, src("corpus/exactly3.lf").c_str(), nullptr), LTTW_OK);
  EXPECT_EQ(lttw_replay(s_), LTTW_OK) << lttw_last_error(s_);
}

TEST(CApiCorpus, RunCorpus) {
  lttw_config cfg;
  lttw_config_init(&cfg);
  std::string stdlib = src("stdlib");
  cfg.stdlib_dir = stdlib.c_str();
  char* report = nullptr;
  int st = lttw_run_corpus(&cfg, src("corpus/manifest.txt").c_str(), &report);
  std::string text = take(report);
  EXPECT_EQ(st, LTTW_OK) << text;
  EXPECT_NE(text.find("peano4.lf"), std::string::npos);
  EXPECT_NE(text.find("negative/escape.lf"), std::string::npos);
}

TEST(CApiCorpus, ImpredicativeCorpus) {
  lttw_config cfg;
  lttw_config_init(&cfg);
  std::string stdlib = src("stdlib");
  cfg.stdlib_dir = stdlib.c_str();
  cfg.mode = LTTW_MODE_IMPREDICATIVE;
  char* report = nullptr;
  EXPECT_EQ(lttw_run_corpus(&cfg, src("corpus/manifest.txt").c_str(), &report), LTTW_OK);
  take(report);
}

TEST(CApiCorpus, MissingManifest) {
  lttw_config cfg;
  lttw_config_init(&cfg);
  char* report = nullptr;
  EXPECT_NE(lttw_run_corpus(&cfg, "/nonexistent/manifest.txt", &report), LTTW_OK);
  EXPECT_STRNE(lttw_last_error(nullptr), "");
}

}  // namespace
