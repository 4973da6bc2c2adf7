// Copyright 2026 The strucres Authors
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

#include "strucres/session.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "strucres/render.h"
#include "strucres/rewriting_tree.h"

namespace strucres {

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "sld") return Mode::kSld;
  if (s == "srew") return Mode::kSrew;
  if (s == "colp") return Mode::kColp;
  if (s == "observe") return Mode::kObserve;
  if (s == "implied") return Mode::kImplied;
  return std::nullopt;
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::kSld: return "sld";
    case Mode::kSrew: return "srew";
    case Mode::kColp: return "colp";
    case Mode::kObserve: return "observe";
    case Mode::kImplied: return "implied";
  }
  return "";
}

bool needs_depth(Mode m) { return m == Mode::kObserve || m == Mode::kImplied; }

namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

std::string goals_text(const GoalList& goals, const std::vector<Term>& context) {
  std::vector<Term> all = context;
  all.insert(all.end(), goals.begin(), goals.end());
  VarNaming naming = VarNaming::for_terms(all);
  PrintOptions o;
  o.naming = &naming;
  return "[" + to_string(goals, o) + "]";
}

std::string term_text(const Term& t, const std::vector<Term>& context) {
  std::vector<Term> all = context;
  all.push_back(t);
  VarNaming naming = VarNaming::for_terms(all);
  PrintOptions o;
  o.naming = &naming;
  return to_string(t, o);
}

// Accumulates either plain lines or the JSON record for one query.
class Report {
 public:
  Report(std::string query, bool json) : query_(std::move(query)), json_(json) {}

  void line(const std::string& s) { text_ += s + "\n"; }
  void answers(const std::vector<AnswerLine>& a) {
    answer_ = a;
    for (const AnswerLine& l : a) line(format_line(l));
  }

  QueryOutcome finish(int code, const std::string& status, std::size_t resolvents,
                      std::optional<std::uint32_t> depth = std::nullopt) {
    QueryOutcome o;
    o.exit_code = code;
    if (json_) {
      o.text = answer_json(query_, status, answer_, resolvents, depth).dump() + "\n";
    } else {
      o.text = text_;
    }
    return o;
  }

 private:
  std::string query_;
  bool json_;
  std::string text_;
  std::vector<AnswerLine> answer_;
};

std::string fuel_message(std::size_t spent) {
  return "fuel exhausted after " + std::to_string(spent) + " steps";
}

void reject(Report& r, const LoopWitness& w) {
  r.line("rejected: non-productive");
  r.line("witness: " + w.to_string());
}

}  // namespace

QueryOutcome run_query(const ParsedProgram& program, const std::string& text,
                       const SessionConfig& config) {
  GoalClause query;
  try {
    query = parse_query(text);
  } catch (const ParseError& e) {
    return {kExitParse, std::string("parse error: ") + e.what() + "\n", std::nullopt};
  }
  const Program& p = program.program;
  const TypingFunction& ty = program.typing;
  SearchOptions opts;
  opts.fuel = config.fuel;
  Report report(text, config.json);
  std::optional<std::string> dot;
  auto initial_dot = [&] {
    BuildOptions b;
    b.budget = opts.tree_budget;
    return to_dot(build_rew(p, query, {}, b));
  };
  if (needs_depth(config.mode) && query.body.size() != 1) {
    return {kExitUsage, to_string(config.mode) + " mode takes a single atom\n",
            std::nullopt};
  }
  if (needs_depth(config.mode) && !config.depth) {
    return {kExitUsage, to_string(config.mode) + " mode needs a depth\n", std::nullopt};
  }
  QueryOutcome out;
  switch (config.mode) {
    case Mode::kSld: {
      SldResult r = sld_solve(p, query, opts);
      dot = initial_dot();
      out = std::visit(
          Overload{
              [&](const SldAnswer& a) {
                report.answers(answer_lines(query, a.answer));
                report.line("true.");
                return report.finish(kExitSuccess, "success", a.steps);
              },
              [&](const Exhausted&) {
                report.line("false.");
                return report.finish(kExitFail, "fail", 0);
              },
              [&](const FuelOut& f) {
                report.line(fuel_message(f.spent));
                return report.finish(kExitFuelOut, "fuel_out", 0);
              }},
          r);
      break;
    }
    case Mode::kSrew: {
      RefuteResult r = s_refute(p, query, opts);
      out = std::visit(
          Overload{
              [&](const Refutation& a) {
                for (std::size_t i = 0; i < a.steps.size(); ++i) {
                  report.line("resolvent " + std::to_string(i + 1) + ": " +
                              format_resolvent(a.steps[i].shown));
                }
                report.answers(answer_lines(query, a.answer));
                report.line("true.");
                dot = to_dot(a.final_tree);
                return report.finish(kExitSuccess, "success", a.steps.size());
              },
              [&](const Exhausted&) {
                report.line("false.");
                dot = initial_dot();
                return report.finish(kExitFail, "fail", 0);
              },
              [&](const FuelOut& f) {
                report.line(fuel_message(f.spent));
                dot = f.deepest ? to_dot(*f.deepest) : initial_dot();
                return report.finish(kExitFuelOut, "fuel_out", 0);
              }},
          r);
      break;
    }
    case Mode::kColp: {
      ColpResult r = colp_s_solve(p, query, ty, opts);
      out = std::visit(
          Overload{
              [&](const CoinductiveAnswer& a) {
                report.answers(answer_lines(query, a));
                report.line("true.");
                dot = to_dot(a.final_tree);
                return report.finish(kExitSuccess, "success", a.steps.size());
              },
              [&](const Refutation& a) {
                report.answers(answer_lines(query, a.answer));
                report.line("true.");
                dot = to_dot(a.final_tree);
                return report.finish(kExitSuccess, "success", a.steps.size());
              },
              [&](const Fail&) {
                report.line("false.");
                dot = initial_dot();
                return report.finish(kExitFail, "fail", 0);
              },
              [&](const NonProductiveRejected& n) {
                reject(report, n.witness);
                return report.finish(kExitRejected, "rejected", 0);
              },
              [&](const FuelOut& f) {
                report.line(fuel_message(f.spent));
                dot = f.deepest ? to_dot(*f.deepest) : initial_dot();
                return report.finish(kExitFuelOut, "fuel_out", 0);
              }},
          r);
      break;
    }
    case Mode::kObserve: {
      ObserveResult r = observe(p, query.body.front(), ty, *config.depth, opts);
      dot = initial_dot();
      out = std::visit(
          Overload{
              [&](const Observation& o) {
                report.answers(answer_lines(query, o));
                report.line("depth: " + std::to_string(o.depth));
                return report.finish(kExitSuccess, "observed", o.resolvents_used,
                                     o.depth);
              },
              [&](const NonProductiveRejected& n) {
                reject(report, n.witness);
                return report.finish(kExitRejected, "rejected", 0, *config.depth);
              },
              [&](const FuelOut& f) {
                report.line(fuel_message(f.spent));
                if (f.deepest) dot = to_dot(*f.deepest);
                return report.finish(kExitFuelOut, "fuel_out", 0, *config.depth);
              },
              [&](const InductiveFailure& f) {
                report.line("false.");
                report.line("failed goal: " + term_text(f.goal, {}) + " (" + f.reason + ")");
                return report.finish(kExitFail, "inductive_failure", 0, *config.depth);
              }},
          r);
      break;
    }
    case Mode::kImplied: {
      const Term& goal = query.body.front();
      ImpliedResult r = implied_at_infinity(p, goal, ty, *config.depth, opts);
      dot = initial_dot();
      if (auto* w = std::get_if<ImpliedWitness>(&r)) {
        report.line("implied at infinity");
        report.line("rewriting: " + term_text(goal, w->normal_form) + " → " +
                    goals_text(w->normal_form, {goal}));
        std::size_t used = 0;
        for (std::size_t i = 0; i < w->evidence.size(); ++i) {
          std::string subject = w->normal_form.empty()
                                    ? term_text(goal, {})
                                    : term_text(w->normal_form[i], {goal});
          std::visit(Overload{
                         [&](const Refutation& a) {
                           used += a.steps.size();
                           report.line(subject + ": refuted");
                         },
                         [&](const CoinductiveAnswer& a) {
                           used += a.steps.size();
                           report.line(subject + ": coinductive loop");
                         },
                         [&](const Observation& o) {
                           used += o.resolvents_used;
                           report.line(subject + ": observed " +
                                       o.approximation.to_string());
                         }},
                     w->evidence[i]);
        }
        out = report.finish(kExitSuccess, "implied", used, *config.depth);
      } else {
        const ImpliedFailure& f = std::get<ImpliedFailure>(r);
        if (f.non_productive) {
          reject(report, *f.non_productive);
          out = report.finish(kExitRejected, "rejected", 0, *config.depth);
        } else {
          report.line("not implied: " + f.reason);
          out = report.finish(kExitFail, "fail", 0, *config.depth);
        }
      }
      break;
    }
  }
  out.dot = std::move(dot);
  return out;
}

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int run_file(const std::string& program_path, const std::string& query,
             const SessionConfig& config, std::ostream& out, std::ostream& err) {
  if (needs_depth(config.mode) != config.depth.has_value()) {
    err << "--depth is required with modes observe and implied and only there\n";
    return kExitUsage;
  }
  std::optional<std::string> source = read_file(program_path);
  if (!source) {
    err << "cannot read " << program_path << "\n";
    return kExitNoInput;
  }
  ParsedProgram program;
  try {
    program = parse_program(*source);
  } catch (const ParseError& e) {
    err << program_path << ":" << e.line() << ":" << e.column() << ": " << e.what()
        << "\n";
    return kExitParse;
  }
  QueryOutcome o = run_query(program, query, config);
  if (o.exit_code == kExitParse || o.exit_code == kExitUsage) {
    err << o.text;
    return o.exit_code;
  }
  out << o.text;
  if (config.dot_path && o.dot && !write_file(*config.dot_path, *o.dot)) {
    err << "cannot write " << *config.dot_path << "\n";
    return kExitCantCreate;
  }
  return o.exit_code;
}

Repl::Repl(SessionConfig config, std::ostream& out)
    : config_(std::move(config)), out_(out) {}

bool Repl::load(const std::string& path) {
  std::optional<std::string> source = read_file(path);
  if (!source) {
    out_ << "error: cannot read " << path << "\n";
    return false;
  }
  try {
    program_ = parse_program(*source);
  } catch (const ParseError& e) {
    out_ << "error: " << path << ":" << e.line() << ":" << e.column() << ": "
         << e.what() << "\n";
    return false;
  }
  out_ << "loaded " << path << " (" << program_->program.size() << " clauses)\n";
  return true;
}

namespace {

constexpr const char* kUsage =
    "commands: :load FILE, :mode sld|srew|colp|observe|implied, :depth N, "
    ":fuel N, :productive, :dot FILE, :quit; queries: ?- goal.";

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<std::size_t> parse_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos ||
      s.size() > 9) {
    return std::nullopt;
  }
  return std::stoul(s);
}

}  // namespace

void Repl::command(const std::string& name, const std::string& arg) {
  if (name == ":load") {
    if (arg.empty()) {
      out_ << "usage: :load FILE\n";
    } else {
      load(arg);
    }
  } else if (name == ":mode") {
    if (auto m = parse_mode(arg)) {
      config_.mode = *m;
      out_ << "mode " << to_string(*m) << "\n";
    } else {
      out_ << "error: unknown mode '" << arg << "'; modes: sld srew colp observe implied\n";
    }
  } else if (name == ":depth" || name == ":fuel") {
    auto n = parse_count(arg);
    if (!n || *n == 0) {
      out_ << "usage: " << name << " N (positive integer)\n";
    } else if (name == ":depth") {
      config_.depth = static_cast<std::uint32_t>(*n);
      out_ << "depth " << *n << "\n";
    } else {
      config_.fuel = *n;
      out_ << "fuel " << *n << "\n";
    }
  } else if (name == ":productive") {
    if (!program_) {
      out_ << "error: no program loaded; use :load FILE\n";
    } else {
      out_ << to_string(productivity_check(program_->program)) << "\n";
    }
  } else if (name == ":dot") {
    if (arg.empty()) {
      out_ << "usage: :dot FILE\n";
    } else if (!last_dot_) {
      out_ << "error: no tree yet; run a query first\n";
    } else if (!write_file(arg, *last_dot_)) {
      out_ << "error: cannot write " << arg << "\n";
    } else {
      out_ << "wrote " << arg << "\n";
    }
  } else {
    out_ << "unknown command " << name << "\n" << kUsage << "\n";
  }
}

bool Repl::handle(const std::string& raw) {
  std::string line = trim(raw);
  if (line.empty() || line[0] == '%') return true;
  if (line[0] == ':') {
    auto sp = line.find_first_of(" \t");
    std::string name = line.substr(0, sp);
    std::string arg = sp == std::string::npos ? "" : trim(line.substr(sp));
    if (name == ":quit" || name == ":q") return false;
    if (name == ":help") {
      out_ << kUsage << "\n";
      return true;
    }
    command(name, arg);
    return true;
  }
  if (!program_) {
    out_ << "error: no program loaded; use :load FILE\n";
    return true;
  }
  if (needs_depth(config_.mode) && !config_.depth) {
    out_ << "error: mode " << to_string(config_.mode) << " needs :depth N\n";
    return true;
  }
  SessionConfig c = config_;
  if (!needs_depth(c.mode)) c.depth.reset();
  QueryOutcome o = run_query(*program_, line, c);
  out_ << o.text;
  if (o.dot) last_dot_ = o.dot;
  return true;
}

void Repl::run(std::istream& in, bool prompt) {
  std::string line;
  while (true) {
    if (prompt) out_ << "| " << std::flush;
    if (!std::getline(in, line)) break;
    if (!handle(line)) break;
  }
}

}  // namespace strucres
