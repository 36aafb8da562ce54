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

// Batch checking: a Session owns one signature, runs script commands
// against it and records every accepted extension in kernel form so that
// the whole development can be replayed without the elaborator.

#ifndef LTTW_SESSION_HPP_
#define LTTW_SESSION_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lttw/elaborator.hpp"
#include "lttw/error.hpp"
#include "lttw/expr.hpp"
#include "lttw/signature.hpp"
#include "lttw/syntax.hpp"

namespace lttw {

enum class Mode { kPredicative, kImpredicative };
enum class PropPlacement { kProp, kType };

struct RunConfig {
  Mode mode = Mode::kPredicative;
  PropPlacement prop_at = PropPlacement::kProp;
  std::uint64_t fuel = 100000;
  std::string stdlib_dir;       // empty: do not load a standard library
  std::string stdlib_manifest;  // empty: <stdlib_dir>/manifest.txt
  bool quiet = false;
  unsigned jobs = 1;
};

// An accepted signature extension, as the kernel saw it.
struct CoreCommand {
  enum class Kind { kDeclare, kDefine, kRule };
  Kind kind;
  std::string name;
  Expr kind_expr;                 // declared kind, or definition ascription
  Expr body;                      // definition body
  std::optional<RewriteRule> rule;
};

struct FileReport {
  std::string path;
  bool accepted = false;
  std::optional<Diagnostic> error;
  std::size_t commands = 0;
  double seconds = 0;
  std::vector<std::string> output;  // results of TypeOf/Reduce/Check
};

class Session {
 public:
  explicit Session(RunConfig cfg);

  // Loads the standard library named by the configuration, plus the
  // impredicative overlay in impredicative mode. Throws on failure.
  void load_stdlib();

  // Checks a script. On failure the signature is left as it was before the
  // call and the report carries the diagnostic.
  FileReport check_file(const std::string& path);
  FileReport check_source(std::string_view text, const std::string& name,
                          const std::string& base_dir = ".");

  // Elaborates a term and returns its kind / normal form.
  Expr type_of(std::string_view term);
  Expr reduce(std::string_view term);

  const Signature& signature() const { return sig_; }
  const RunConfig& config() const { return cfg_; }
  const std::vector<CoreCommand>& history() const { return history_; }
  ElabOptions elab_options() const;

 private:
  void run_file(const std::string& path, FileReport& report);
  void run_commands(const std::vector<Command>& cmds, const std::string& dir,
                    FileReport& report);
  void run(const Command& c, const std::string& dir, FileReport& report);

  RunConfig cfg_;
  Signature sig_;
  std::vector<CoreCommand> history_;
  std::set<std::string> loaded_;
};

// Rebuilds a signature from recorded extensions with the kernel alone.
Signature replay(const std::vector<CoreCommand>& history, KernelOptions opts);

// Reads a file; throws IoError.
std::string read_file(const std::string& path);

// Corpus manifest: one file per line, `path outcome [extended]
// [impredicative=outcome]`, where outcome is `accept` or
// `reject:<ErrorClass>`. `#` starts a comment.
struct Outcome {
  bool accept = true;
  ErrorClass error = ErrorClass::kIllTyped;

  std::string to_string() const;
  bool operator==(const Outcome& o) const {
    return accept == o.accept && (accept || error == o.error);
  }
};
std::optional<Outcome> parse_outcome(std::string_view s);

struct ManifestEntry {
  std::string path;  // resolved against the manifest's directory
  Outcome expected;
  std::optional<Outcome> impredicative;
  bool extended = false;
  int line = 0;

  Outcome expected_for(Mode m) const {
    return m == Mode::kImpredicative && impredicative ? *impredicative : expected;
  }
};

std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::string& path);

struct CorpusLine {
  ManifestEntry entry;
  FileReport report;
  Outcome actual;
  bool matched = false;
};

struct CorpusReport {
  std::vector<CorpusLine> lines;
  double seconds = 0;
  bool ok() const;
};

// Loads the standard library and checks every manifest entry in order into
// one session.
CorpusReport run_corpus(const RunConfig& cfg, const std::string& manifest_path);

}  // namespace lttw

#endif  // LTTW_SESSION_HPP_
