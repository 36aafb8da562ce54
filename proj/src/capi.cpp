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

#include "lttw/lttw.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <string>

#include "lttw/printer.hpp"
#include "lttw/session.hpp"

struct lttw_session {
  std::unique_ptr<lttw::Session> impl;
  std::string last_error;
};

namespace {

static_assert(static_cast<int>(lttw::ErrorClass::kMismatchedOutcome) + 1 ==
                  LTTW_MISMATCHED_OUTCOME,
              "status codes follow ErrorClass order");

thread_local std::string g_last_error;

int status_of(lttw::ErrorClass c) { return static_cast<int>(c) + 1; }

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

lttw::RunConfig to_config(const lttw_config* c) {
  lttw::RunConfig cfg;
  if (!c) return cfg;
  cfg.mode = c->mode == LTTW_MODE_IMPREDICATIVE ? lttw::Mode::kImpredicative
                                                 : lttw::Mode::kPredicative;
  cfg.prop_at = c->prop_at_type ? lttw::PropPlacement::kType
                                : lttw::PropPlacement::kProp;
  if (c->fuel) cfg.fuel = c->fuel;
  if (c->stdlib_dir) cfg.stdlib_dir = c->stdlib_dir;
  if (c->stdlib_manifest) cfg.stdlib_manifest = c->stdlib_manifest;
  return cfg;
}

// Runs `f`, translating exceptions into a status and a stored diagnostic.
template <typename F>
int guarded(std::string& err, F&& f) {
  err.clear();
  try {
    return f();
  } catch (const lttw::Error& e) {
    err = e.diagnostic().render();
    return status_of(e.error_class());
  } catch (const std::bad_alloc&) {
    err = "out of memory";
    return LTTW_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    err = std::string("internal error: ") + e.what();
    return LTTW_INTERNAL_ERROR;
  }
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

int report_status(lttw_session* s, const lttw::FileReport& r, char** output) {
  if (!r.accepted) {
    s->last_error = r.error->render();
    return status_of(r.error->error_class);
  }
  if (output) *output = dup(join_lines(r.output));
  return LTTW_OK;
}

}  // namespace

extern "C" {

void lttw_config_init(lttw_config* cfg) {
  if (!cfg) return;
  cfg->mode = LTTW_MODE_PREDICATIVE;
  cfg->prop_at_type = 0;
  cfg->fuel = 100000;
  cfg->stdlib_dir = nullptr;
  cfg->stdlib_manifest = nullptr;
}

int lttw_session_new(const lttw_config* cfg, lttw_session** out) {
  if (!out) return LTTW_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(g_last_error, [&] {
    auto s = std::make_unique<lttw_session>();
    s->impl = std::make_unique<lttw::Session>(to_config(cfg));
    s->impl->load_stdlib();
    *out = s.release();
    return LTTW_OK;
  });
}

void lttw_session_free(lttw_session* s) { delete s; }

int lttw_check_file(lttw_session* s, const char* path, char** output) {
  if (!s || !path) return LTTW_INVALID_ARGUMENT;
  if (output) *output = nullptr;
  return guarded(s->last_error, [&] {
    return report_status(s, s->impl->check_file(path), output);
  });
}

int lttw_check_source(lttw_session* s, const char* text, const char* name,
                      char** output) {
  if (!s || !text) return LTTW_INVALID_ARGUMENT;
  if (output) *output = nullptr;
  return guarded(s->last_error, [&] {
    return report_status(
        s, s->impl->check_source(text, name ? name : "<source>"), output);
  });
}

int lttw_typeof(lttw_session* s, const char* term, char** out) {
  if (!s || !term || !out) return LTTW_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(s->last_error, [&] {
    *out = dup(lttw::print(s->impl->type_of(term)));
    return LTTW_OK;
  });
}

int lttw_reduce(lttw_session* s, const char* term, char** out) {
  if (!s || !term || !out) return LTTW_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded(s->last_error, [&] {
    *out = dup(lttw::print(s->impl->reduce(term)));
    return LTTW_OK;
  });
}

size_t lttw_constant_count(const lttw_session* s) {
  return s ? s->impl->signature().constant_count() : 0;
}

size_t lttw_definition_count(const lttw_session* s) {
  return s ? s->impl->signature().abbrev_count() : 0;
}

size_t lttw_rule_count(const lttw_session* s) {
  return s ? s->impl->signature().rule_count() : 0;
}

int lttw_replay(lttw_session* s) {
  if (!s) return LTTW_INVALID_ARGUMENT;
  return guarded(s->last_error, [&] {
    lttw::replay(s->impl->history(), s->impl->signature().options());
    return LTTW_OK;
  });
}

int lttw_run_corpus(const lttw_config* cfg, const char* manifest, char** report) {
  if (!manifest) return LTTW_INVALID_ARGUMENT;
  if (report) *report = nullptr;
  return guarded(g_last_error, [&] {
    lttw::RunConfig rc = to_config(cfg);
    lttw::CorpusReport rep = lttw::run_corpus(rc, manifest);
    std::string text;
    std::size_t matched = 0;
    char buf[64];
    namespace fs = std::filesystem;
    fs::path base = fs::absolute(manifest).parent_path();
    for (const auto& l : rep.lines) {
      std::string shown = fs::absolute(l.entry.path).lexically_relative(base).string();
      matched += l.matched ? 1 : 0;
      std::snprintf(buf, sizeof buf, "%.3f", l.report.seconds);
      text += std::string(l.matched ? "ok       " : "MISMATCH ") + shown +
              "  expected=" + l.entry.expected_for(rc.mode).to_string() +
              "  actual=" + l.actual.to_string() +
              "  commands=" + std::to_string(l.report.commands) + "  time=" + buf +
              "s" + (l.entry.extended ? "  [extended]" : "") + "\n";
      if (!l.matched && l.report.error) {
        text += "  " + l.report.error->render() + "\n";
      }
    }
    std::snprintf(buf, sizeof buf, "%.3f", rep.seconds);
    text += "corpus: " + std::to_string(rep.lines.size()) + " files, " +
            std::to_string(matched) + " matched, " + buf + "s\n";
    if (report) *report = dup(text);
    if (!rep.ok()) {
      g_last_error = "corpus outcome mismatch";
      return static_cast<int>(LTTW_MISMATCHED_OUTCOME);
    }
    return static_cast<int>(LTTW_OK);
  });
}

const char* lttw_last_error(const lttw_session* s) {
  return s ? s->last_error.c_str() : g_last_error.c_str();
}

const char* lttw_status_name(int status) {
  switch (status) {
    case LTTW_OK:
      return "Ok";
    case LTTW_INVALID_ARGUMENT:
      return "InvalidArgument";
    case LTTW_INTERNAL_ERROR:
      return "InternalError";
    default:
      break;
  }
  if (status > 0 && status <= LTTW_MISMATCHED_OUTCOME) {
    return lttw::error_class_name(static_cast<lttw::ErrorClass>(status - 1)).data();
  }
  return "Unknown";
}

void lttw_string_free(char* str) { std::free(str); }

}  // extern "C"
