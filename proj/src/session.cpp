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

#include "lttw/session.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lttw/kernel.hpp"
#include "lttw/parser.hpp"
#include "lttw/printer.hpp"

namespace lttw {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Contracts beta redexes only, so that inferred kinds print without the
// motive applications left by instantiation but keep their abbreviations.
Expr beta_normal(const Expr& e) {
  switch (e.tag()) {
    case Tag::kApp: {
      Expr f = beta_normal(e.fun());
      Expr a = beta_normal(e.arg());
      if (f.is(Tag::kLam)) return beta_normal(subst(f.body(), f.name(), a));
      return Expr::app(f, a);
    }
    case Tag::kLam:
      return Expr::lam(e.name(), beta_normal(e.domain()), beta_normal(e.body()));
    case Tag::kPi:
      return Expr::pi(e.name(), beta_normal(e.domain()), beta_normal(e.codomain()));
    case Tag::kEl:
      return Expr::el(beta_normal(e.inner()));
    case Tag::kPrf:
      return Expr::prf(beta_normal(e.inner()));
    default:
      return e;
  }
}

[[noreturn]] void throw_at(ErrorClass c, const std::string& msg,
                           const SourceSpan& span) {
  Diagnostic d;
  d.error_class = c;
  d.message = msg;
  d.span = span;
  throw Error(std::move(d));
}

std::string canonical(const std::string& path) {
  std::error_code ec;
  fs::path p = fs::weakly_canonical(fs::path(path), ec);
  return ec ? path : p.string();
}

Expr close_pi(const Telescope& tele, Expr k) {
  for (auto it = tele.rbegin(); it != tele.rend(); ++it) {
    k = Expr::pi(it->first, it->second, k);
  }
  return k;
}

Expr close_lam(const Telescope& tele, Expr t) {
  for (auto it = tele.rbegin(); it != tele.rend(); ++it) {
    t = Expr::lam(it->first, it->second, t);
  }
  return t;
}

// Elaborates a binder telescope into `scope`; every binder needs a kind.
Telescope telescope(Elaborator& el, Scope& scope, const Signature& sig,
                    const std::vector<Binder>& binders) {
  Telescope tele;
  for (const auto& b : binders) {
    if (!b.kind) {
      throw_at(ErrorClass::kUnsolvedMeta,
               "binder '" + b.name + "' needs a kind annotation", b.span);
    }
    Expr k = el.kind(scope, b.kind);
    std::string core = scope.bind(b.name, k, sig);
    tele.emplace_back(core, k);
  }
  return tele;
}

Telescope zonk_all(const Elaborator& el, const Telescope& tele) {
  Telescope out;
  for (const auto& [n, k] : tele) out.emplace_back(n, el.zonk(k));
  return out;
}

// Converts a rule's surface left-hand side into patterns.
Pattern to_pattern(const STermPtr& s, const Scope& scope, const Signature& sig,
                   bool nested) {
  using F = STerm::Form;
  switch (s->form) {
    case F::kIdent:
      if (auto v = scope.resolve(s->name)) return Pattern::var(*v);
      if (sig.contains(s->name)) return Pattern::constructor(s->name, {});
      throw_at(ErrorClass::kUnknownConstant, "unknown identifier '" + s->name + "'",
               s->span);
    case F::kDotted:
      if (auto v = scope.resolve(s->name)) return Pattern::inaccessible(*v);
      throw_at(ErrorClass::kBadPattern, "'." + s->name + "' is not a rule variable",
               s->span);
    case F::kNumeral:
      if (s->name == "0") return Pattern::constructor("zero", {});
      break;
    case F::kApp: {
      if (nested) break;
      std::vector<STermPtr> args;
      STermPtr h = s;
      while (h->form == F::kApp) {
        args.insert(args.begin(), h->b);
        h = h->a;
      }
      if (h->form != F::kIdent || scope.resolve(h->name)) break;
      std::vector<Pattern> sub;
      for (const auto& a : args) {
        Pattern p = to_pattern(a, scope, sig, true);
        if (p.form == Pattern::Form::kConstructor) {
          throw_at(ErrorClass::kBadPattern,
                   "constructor patterns may only be applied to variables", a->span);
        }
        sub.push_back(std::move(p));
      }
      return Pattern::constructor(h->name, std::move(sub));
    }
    default:
      break;
  }
  throw_at(ErrorClass::kBadPattern,
           "'" + print_surface(s) + "' is not a valid pattern", s->span);
}

RewriteRule rule_shape(const STermPtr& lhs, const Scope& scope,
                       const Signature& sig) {
  std::vector<STermPtr> args;
  STermPtr h = lhs;
  while (h->form == STerm::Form::kApp) {
    args.insert(args.begin(), h->b);
    h = h->a;
  }
  if (h->form != STerm::Form::kIdent || scope.resolve(h->name)) {
    throw_at(ErrorClass::kHeadNotConstant,
             "the left-hand side of a rule must be headed by a constant", h->span);
  }
  RewriteRule r;
  r.head = h->name;
  for (const auto& a : args) r.lhs_args.push_back(to_pattern(a, scope, sig, false));
  return r;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorClass::kIoError, "cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Session::Session(RunConfig cfg) : cfg_(std::move(cfg)) {
  KernelOptions ko;
  ko.fuel = cfg_.fuel;
  sig_.set_options(ko);
}

ElabOptions Session::elab_options() const {
  ElabOptions o;
  o.reflect_props = cfg_.mode == Mode::kImpredicative;
  return o;
}

void Session::load_stdlib() {
  if (cfg_.stdlib_dir.empty()) return;
  std::string manifest = cfg_.stdlib_manifest.empty()
                             ? (fs::path(cfg_.stdlib_dir) / "manifest.txt").string()
                             : cfg_.stdlib_manifest;
  std::vector<std::string> files;
  std::istringstream in(read_file(manifest));
  for (std::string line; std::getline(in, line);) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    files.push_back((fs::path(cfg_.stdlib_dir) / line.substr(b, e - b + 1)).string());
  }
  if (cfg_.mode == Mode::kImpredicative) {
    files.push_back((fs::path(cfg_.stdlib_dir) / "10_impredicative.lf").string());
  }
  for (const auto& f : files) {
    FileReport r = check_file(f);
    if (!r.accepted) throw Error(*r.error);
  }
}

FileReport Session::check_file(const std::string& path) {
  FileReport report;
  report.path = path;
  auto t0 = Clock::now();
  Signature saved_sig = sig_;
  std::size_t saved_history = history_.size();
  std::set<std::string> saved_loaded = loaded_;
  try {
    run_file(path, report);
    report.accepted = true;
  } catch (const Error& e) {
    report.error = e.diagnostic();
    sig_ = std::move(saved_sig);
    history_.resize(saved_history);
    loaded_ = std::move(saved_loaded);
  }
  report.seconds = since(t0);
  return report;
}

FileReport Session::check_source(std::string_view text, const std::string& name,
                                 const std::string& base_dir) {
  FileReport report;
  report.path = name;
  auto t0 = Clock::now();
  Signature saved_sig = sig_;
  std::size_t saved_history = history_.size();
  std::set<std::string> saved_loaded = loaded_;
  try {
    run_commands(parse_script(text, name), base_dir, report);
    report.accepted = true;
  } catch (const Error& e) {
    report.error = e.diagnostic();
    sig_ = std::move(saved_sig);
    history_.resize(saved_history);
    loaded_ = std::move(saved_loaded);
  }
  report.seconds = since(t0);
  return report;
}

void Session::run_file(const std::string& path, FileReport& report) {
  std::string key = canonical(path);
  if (loaded_.count(key)) return;
  std::string text = read_file(path);
  loaded_.insert(key);
  std::string dir = fs::path(path).parent_path().string();
  run_commands(parse_script(text, path), dir.empty() ? "." : dir, report);
}

void Session::run_commands(const std::vector<Command>& cmds, const std::string& dir,
                           FileReport& report) {
  for (const auto& c : cmds) {
    try {
      run(c, dir, report);
    } catch (Error& e) {
      if (!e.diagnostic().span.valid()) e.diagnostic().span = c.span;
      throw;
    }
    ++report.commands;
  }
}

void Session::run(const Command& c, const std::string& dir, FileReport& report) {
  using K = Command::Kind;
  switch (c.kind) {
    case K::kLoad: {
      fs::path p = fs::path(c.name).is_absolute() ? fs::path(c.name)
                                                  : fs::path(dir) / c.name;
      // Directive output of loaded files is not repeated.
      std::size_t shown = report.output.size();
      run_file(p.string(), report);
      report.output.resize(shown);
      return;
    }
    case K::kSetOption: {
      if (c.name == "fuel") {
        KernelOptions ko = sig_.options();
        try {
          ko.fuel = std::stoull(c.value);
        } catch (const std::exception&) {
          throw_at(ErrorClass::kSyntaxError, "fuel must be a number", c.span);
        }
        sig_.set_options(ko);
        return;
      }
      throw_at(ErrorClass::kNotFound, "unknown option '" + c.name + "'", c.span);
    }
    case K::kDeclare: {
      Elaborator el(sig_, elab_options());
      Scope scope;
      Telescope tele = telescope(el, scope, sig_, c.binders);
      Expr k = el.kind(scope, c.term);
      el.finish();
      k = close_pi(zonk_all(el, tele), el.zonk(k));
      if (c.name == "prop" && cfg_.prop_at == PropPlacement::kType &&
          k.is(Tag::kProp)) {
        k = Expr::type();
      }
      sig_ = declare_constant(std::move(sig_), c.name, k);
      history_.push_back({CoreCommand::Kind::kDeclare, c.name, k, {}, std::nullopt});
      return;
    }
    case K::kDefine: {
      Elaborator el(sig_, elab_options());
      Scope scope;
      Telescope tele = telescope(el, scope, sig_, c.binders);
      Expr body;
      std::optional<Expr> asc;
      if (c.ascription) {
        Expr k = el.kind(scope, c.ascription);
        body = el.check(scope, c.term, k);
        asc = k;
      } else {
        body = el.infer(scope, c.term).first;
      }
      el.finish();
      tele = zonk_all(el, tele);
      body = close_lam(tele, el.zonk(body));
      if (asc) asc = close_pi(tele, el.zonk(*asc));
      sig_ = define(std::move(sig_), c.name, body, asc);
      history_.push_back({CoreCommand::Kind::kDefine, c.name,
                          asc ? *asc : Expr{}, body, std::nullopt});
      return;
    }
    case K::kRule: {
      Elaborator el(sig_, elab_options());
      Scope scope;
      Telescope tele = telescope(el, scope, sig_, c.binders);
      RewriteRule rule = rule_shape(c.term, scope, sig_);
      el.allow_dotted(true);
      auto [lhs, lk] = el.infer(scope, c.term);
      el.allow_dotted(false);
      Expr rk = c.ascription ? el.kind(scope, c.ascription) : lk;
      Expr rhs = el.check(scope, c.rhs, rk);
      el.finish();
      rule.rhs = el.zonk(rhs);
      rule.result_kind = el.zonk(rk);
      rule.pattern_vars = zonk_all(el, tele);
      sig_ = declare_rewrite(std::move(sig_), rule);
      history_.push_back({CoreCommand::Kind::kRule, rule.head, {}, {}, rule});
      return;
    }
    case K::kTypeOf:
    case K::kReduce:
    case K::kCheck: {
      Elaborator el(sig_, elab_options());
      Scope scope;
      Kernel kernel(sig_);
      if (c.kind == K::kCheck) {
        Expr k = el.kind(scope, c.ascription);
        Expr t = el.check(scope, c.term, k);
        el.finish();
        kernel.check(Context{}, el.zonk(t), el.zonk(k));
        report.output.push_back(print(el.zonk(t)) + " : " + print(el.zonk(k)));
        return;
      }
      Expr t = el.infer(scope, c.term).first;
      el.finish();
      t = el.zonk(t);
      Expr k = kernel.infer_kind(Context{}, t);
      report.output.push_back(c.kind == K::kTypeOf ? print(beta_normal(k))
                                                   : print(kernel.normalize(t)));
      return;
    }
  }
}

Expr Session::type_of(std::string_view term) {
  STermPtr s = parse_term(term, "<term>");
  Elaborator el(sig_, elab_options());
  Scope scope;
  Expr t = el.infer(scope, s).first;
  el.finish();
  return beta_normal(Kernel(sig_).infer_kind(Context{}, el.zonk(t)));
}

Expr Session::reduce(std::string_view term) {
  STermPtr s = parse_term(term, "<term>");
  Elaborator el(sig_, elab_options());
  Scope scope;
  Expr t = el.infer(scope, s).first;
  el.finish();
  t = el.zonk(t);
  Kernel k(sig_);
  k.infer_kind(Context{}, t);
  return k.normalize(t);
}

Signature replay(const std::vector<CoreCommand>& history, KernelOptions opts) {
  Signature sig;
  sig.set_options(opts);
  for (const auto& c : history) {
    switch (c.kind) {
      case CoreCommand::Kind::kDeclare:
        sig = declare_constant(std::move(sig), c.name, c.kind_expr);
        break;
      case CoreCommand::Kind::kDefine:
        sig = define(std::move(sig), c.name, c.body,
                     c.kind_expr ? std::optional<Expr>(c.kind_expr) : std::nullopt);
        break;
      case CoreCommand::Kind::kRule:
        sig = declare_rewrite(std::move(sig), *c.rule);
        break;
    }
  }
  return sig;
}

std::string Outcome::to_string() const {
  return accept ? "accept" : "reject:" + std::string(error_class_name(error));
}

std::optional<Outcome> parse_outcome(std::string_view s) {
  if (s == "accept") return Outcome{};
  constexpr std::string_view kReject = "reject:";
  if (s.substr(0, kReject.size()) != kReject) return std::nullopt;
  auto c = error_class_from_name(s.substr(kReject.size()));
  if (!c) return std::nullopt;
  return Outcome{false, *c};
}

std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::string& path) {
  std::vector<ManifestEntry> out;
  fs::path dir = fs::path(path).parent_path();
  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ws(line);
    std::vector<std::string> words;
    for (std::string w; ws >> w;) words.push_back(w);
    if (words.empty()) continue;
    SourceSpan span{path, lineno, 1, lineno, static_cast<int>(line.size()) + 1};
    if (words.size() < 2) {
      throw_at(ErrorClass::kSyntaxError, "expected 'path outcome'", span);
    }
    ManifestEntry e;
    e.path = (dir / words[0]).string();
    e.line = lineno;
    auto o = parse_outcome(words[1]);
    if (!o) throw_at(ErrorClass::kSyntaxError, "bad outcome '" + words[1] + "'", span);
    e.expected = *o;
    for (std::size_t i = 2; i < words.size(); ++i) {
      constexpr std::string_view kImp = "impredicative=";
      if (words[i] == "extended") {
        e.extended = true;
      } else if (words[i].rfind(kImp, 0) == 0) {
        auto io = parse_outcome(std::string_view(words[i]).substr(kImp.size()));
        if (!io) throw_at(ErrorClass::kSyntaxError, "bad outcome in '" + words[i] + "'", span);
        e.impredicative = *io;
      } else {
        throw_at(ErrorClass::kSyntaxError, "unknown manifest flag '" + words[i] + "'", span);
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool CorpusReport::ok() const {
  for (const auto& l : lines) {
    if (!l.matched) return false;
  }
  return true;
}

CorpusReport run_corpus(const RunConfig& cfg, const std::string& manifest_path) {
  auto t0 = Clock::now();
  CorpusReport rep;
  auto entries = parse_manifest(read_file(manifest_path), manifest_path);
  Session s(cfg);
  s.load_stdlib();
  for (const auto& e : entries) {
    CorpusLine line;
    line.entry = e;
    line.report = s.check_file(e.path);
    if (line.report.accepted) {
      line.actual = Outcome{};
    } else {
      line.actual = Outcome{false, line.report.error->error_class};
    }
    line.matched = line.actual == e.expected_for(cfg.mode);
    rep.lines.push_back(std::move(line));
  }
  rep.seconds = since(t0);
  return rep;
}

}  // namespace lttw
