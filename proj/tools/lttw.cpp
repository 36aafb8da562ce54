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

// lttw: batch front end over the C interface.
//
//   lttw check FILE...        exit 0 iff every file is accepted
//   lttw typeof TERM          print the kind of TERM
//   lttw reduce TERM          print the normal form of TERM
//   lttw corpus               check the corpus manifest
//
// --load FILE (repeatable) checks FILE into the session first, so that
// typeof and reduce can see its definitions.
//
// Exit status: 0 success, 1 check failure, 2 I/O or usage error.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lttw/lttw.h"

#ifndef LTTW_DEFAULT_STDLIB
#define LTTW_DEFAULT_STDLIB "stdlib"
#endif
#ifndef LTTW_DEFAULT_MANIFEST
#define LTTW_DEFAULT_MANIFEST "corpus/manifest.txt"
#endif

namespace {

struct Options {
  std::string mode = "predicative";
  std::string prop_at = "prop";
  std::uint64_t fuel = 100000;
  std::string stdlib = LTTW_DEFAULT_STDLIB;
  std::string stdlib_manifest;
  std::string manifest;
  std::vector<std::string> loads;
  bool quiet = false;
  unsigned jobs = 1;
};

int exit_code(int status) {
  if (status == LTTW_OK) return 0;
  if (status == LTTW_IO_ERROR || status == LTTW_INVALID_ARGUMENT) return 2;
  return 1;
}

lttw_config make_config(const Options& o) {
  lttw_config cfg;
  lttw_config_init(&cfg);
  cfg.mode = o.mode == "impredicative" ? LTTW_MODE_IMPREDICATIVE : LTTW_MODE_PREDICATIVE;
  cfg.prop_at_type = o.prop_at == "type" ? 1 : 0;
  cfg.fuel = o.fuel;
  cfg.stdlib_dir = o.stdlib.empty() ? nullptr : o.stdlib.c_str();
  cfg.stdlib_manifest = o.stdlib_manifest.empty() ? nullptr : o.stdlib_manifest.c_str();
  return cfg;
}

void print_owned(char* s, std::FILE* to) {
  if (s) {
    std::fputs(s, to);
    lttw_string_free(s);
  }
}

int open_session(const Options& o, lttw_session** s) {
  lttw_config cfg = make_config(o);
  int st = lttw_session_new(&cfg, s);
  if (st != LTTW_OK) {
    std::fprintf(stderr, "%s\n", lttw_last_error(nullptr));
    return st;
  }
  for (const auto& f : o.loads) {
    st = lttw_check_file(*s, f.c_str(), nullptr);
    if (st != LTTW_OK) {
      std::fprintf(stderr, "%s\n", lttw_last_error(*s));
      lttw_session_free(*s);
      *s = nullptr;
      return st;
    }
  }
  return st;
}

int run_corpus(const Options& o) {
  lttw_config cfg = make_config(o);
  std::string manifest = o.manifest.empty() ? LTTW_DEFAULT_MANIFEST : o.manifest;
  char* report = nullptr;
  int st = lttw_run_corpus(&cfg, manifest.c_str(), &report);
  if (report) {
    std::string text = report;
    lttw_string_free(report);
    if (o.quiet) {
      // Keep only mismatches and the summary line.
      std::string kept;
      std::size_t pos = 0;
      while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl - pos);
        if (line.rfind("ok ", 0) != 0) kept += line + "\n";
        pos = nl == std::string::npos ? text.size() : nl + 1;
      }
      text = kept;
    }
    std::fputs(text.c_str(), stdout);
  }
  if (st != LTTW_OK && st != LTTW_MISMATCHED_OUTCOME) {
    std::fprintf(stderr, "%s\n", lttw_last_error(nullptr));
  }
  return exit_code(st);
}

int run_check(const Options& o, const std::vector<std::string>& files) {
  if (!o.manifest.empty()) return run_corpus(o);
  lttw_session* s = nullptr;
  int st = open_session(o, &s);
  if (st != LTTW_OK) return exit_code(st);
  int worst = 0;
  for (const auto& f : files) {
    char* out = nullptr;
    int r = lttw_check_file(s, f.c_str(), &out);
    if (r == LTTW_OK) {
      if (o.quiet) {
        lttw_string_free(out);
      } else {
        print_owned(out, stdout);
        std::printf("%s: ok\n", f.c_str());
      }
    } else {
      std::fprintf(stderr, "%s\n", lttw_last_error(s));
      worst = std::max(worst, exit_code(r));
    }
  }
  lttw_session_free(s);
  return worst;
}

int run_term(const Options& o, const std::string& term, bool reduce) {
  lttw_session* s = nullptr;
  int st = open_session(o, &s);
  if (st != LTTW_OK) return exit_code(st);
  char* out = nullptr;
  int r = reduce ? lttw_reduce(s, term.c_str(), &out) : lttw_typeof(s, term.c_str(), &out);
  if (r == LTTW_OK) {
    std::printf("%s\n", out);
    lttw_string_free(out);
  } else {
    std::fprintf(stderr, "%s\n", lttw_last_error(s));
  }
  lttw_session_free(s);
  return exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof checker for logic-enriched type theories in LF"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--mode", o.mode, "predicative or impredicative")
      ->check(CLI::IsMember({"predicative", "impredicative"}))
      ->envname("LTTW_MODE");
  app.add_option("--prop-at", o.prop_at, "kind of the proposition universe: prop or type")
      ->check(CLI::IsMember({"prop", "type"}))
      ->envname("LTTW_PROP_AT");
  app.add_option("--fuel", o.fuel, "reduction steps per kernel question")
      ->check(CLI::PositiveNumber)
      ->envname("LTTW_FUEL");
  app.add_option("--stdlib", o.stdlib, "standard library directory")
      ->envname("LTTW_STDLIB");
  app.add_option("--stdlib-manifest", o.stdlib_manifest,
                 "standard library manifest (default: <stdlib>/manifest.txt)")
      ->envname("LTTW_STDLIB_MANIFEST");
  app.add_option("--manifest", o.manifest, "corpus manifest")->envname("LTTW_MANIFEST");
  app.add_option("--load,-l", o.loads, "check a script into the session before the command");
  app.add_flag("--quiet,-q", o.quiet, "print only failures")->envname("LTTW_QUIET");
  app.add_option("--jobs,-j", o.jobs, "accepted for compatibility; files are checked in order")
      ->check(CLI::PositiveNumber)
      ->envname("LTTW_JOBS");

  std::vector<std::string> files;
  auto* check = app.add_subcommand("check", "check script files");
  check->add_option("files", files, "script files");

  std::string term;
  auto* typeof_cmd = app.add_subcommand("typeof", "print the kind of a term");
  typeof_cmd->add_option("term", term, "term")->required();
  auto* reduce_cmd = app.add_subcommand("reduce", "print the normal form of a term");
  reduce_cmd->add_option("term", term, "term")->required();
  auto* corpus = app.add_subcommand("corpus", "check the corpus manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (check->parsed()) {
    if (files.empty() && o.manifest.empty()) {
      std::fprintf(stderr, "check: no files given\n");
      return 2;
    }
    return run_check(o, files);
  }
  if (typeof_cmd->parsed()) return run_term(o, term, false);
  if (reduce_cmd->parsed()) return run_term(o, term, true);
  if (corpus->parsed()) return run_corpus(o);
  return 2;
}
