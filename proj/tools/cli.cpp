#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "pi/error.hpp"
#include "pi/library.hpp"
#include "pi/pi2.hpp"
#include "pi/rewrite.hpp"
#include "pi/roundtrip.hpp"
#include "pi/semantics.hpp"
#include "pi/syntax.hpp"
#include "pi/typing.hpp"

namespace pi {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Sources {
  std::vector<std::string> files;
  std::vector<std::string> inline_texts;
};

Comb main_of(const std::string& text, bool is_inline, const std::string& origin) {
  Program prog = parse_program(text, ProgramOptions{is_inline});
  if (!prog.main) throw UsageError(origin + " has no main");
  return *prog.main;
}

std::vector<Comb> load_programs(const Sources& src) {
  std::vector<Comb> out;
  for (const auto& f : src.files) out.push_back(main_of(read_file(f), false, f));
  for (const auto& e : src.inline_texts) out.push_back(main_of(e, true, "-e program"));
  return out;
}

Comb load_one(const Sources& src) {
  auto progs = load_programs(src);
  if (progs.size() != 1) {
    throw UsageError("expected exactly one program (a file or -e), got " +
                     std::to_string(progs.size()));
  }
  return progs.front();
}

TypeHint hint_from(const std::optional<std::string>& type) {
  if (!type) return {};
  return TypeHint::domain(parse_type(*type));
}

std::string show(const Comb& c) { return pretty(c, &display_names()); }

void print_table(std::ostream& out, const Comb& c, const Signature& sig) {
  for (const Value& v : enumerate(sig.dom)) {
    out << to_string(v) << " -> " << to_string(eval(c, v, TypeHint::exact(sig))) << '\n';
  }
}

void print_canon(std::ostream& out, const Comb& c) {
  Comb1 p = require_pi2(c);
  Canonical result = canonical(p);
  out << to_string(result.which) << '\n' << to_sexpr(result.witness) << '\n';
  check2(result.witness);
  out << "checked: ok\n";
}

bool print_report(std::ostream& out, const Derivation& d) {
  DerivationReport report = check_derivation(d);
  out << "derivation " << d.name;
  if (report.signature) out << " : " << to_string(*report.signature);
  out << '\n';
  const int width = static_cast<int>(std::to_string(d.steps.size()).size());
  for (std::size_t i = 0; i < report.trace.size(); ++i) {
    out << "  " << std::setw(width) << i << "  ";
    if (i == 0) {
      out << "start";
    } else {
      out << to_string(d.steps[i - 1]);
    }
    out << "\n  " << std::string(static_cast<std::size_t>(width), ' ') << "    "
        << show(report.trace[i]) << '\n';
  }
  if (report.failure) {
    const auto& f = *report.failure;
    out << "FAILED at step " << f.step;
    if (f.step > d.steps.size()) out << " (final check)";
    out << ": " << to_string(f.kind) << ": " << f.message << '\n';
    return false;
  }
  out << "ok: " << d.steps.size() << " steps replayed\n";
  return true;
}

int cmd_run(const Sources& src, const std::vector<std::string>& positional, bool backward,
            const std::optional<std::string>& type, std::ostream& out) {
  Sources s = src;
  std::string value_text;
  if (s.inline_texts.empty()) {
    if (positional.size() != 2) throw UsageError("run expects FILE VALUE or -e PROGRAM VALUE");
    s.files = {positional[0]};
    value_text = positional[1];
  } else {
    if (positional.size() != 1) throw UsageError("run expects exactly one VALUE");
    value_text = positional[0];
  }
  Comb c = load_one(s);
  Value v = parse_value(value_text);
  TypeHint hint = hint_from(type);
  out << to_string(backward ? eval_backward(c, v, hint) : eval(c, v, hint)) << '\n';
  return 0;
}

int cmd_perm(const Sources& src, const std::optional<std::string>& type, std::ostream& out) {
  Comb c = load_one(src);
  Signature sig = infer(c, hint_from(type));
  out << to_string(sig) << '\n' << format_perm(to_perm(c, sig));
  return 0;
}

int cmd_equiv(const Sources& src, const std::optional<std::string>& type, std::ostream& out) {
  auto progs = load_programs(src);
  if (progs.size() != 2) {
    throw UsageError("equiv expects two programs, got " + std::to_string(progs.size()));
  }
  const Comb& a = progs[0];
  const Comb& b = progs[1];
  const bool equal = semantically_equal(a, b, hint_from(type));
  out << (equal ? "equal" : "not equal") << '\n';
  auto p = project(a);
  auto q = project(b);
  if (p && q) {
    if (equal) {
      Comb2 w = complete1(*p, *q);
      check2(w);
      out << "witness: " << to_sexpr(w) << '\n';
    } else {
      out << "no witness exists (classes differ)\n";
    }
  }
  return equal ? 0 : 1;
}

int cmd_check(const Sources& src, const std::optional<std::string>& type, std::ostream& out) {
  std::vector<Derivation> all;
  for (const auto& f : src.files) {
    auto ds = parse_derivations(read_file(f));
    all.insert(all.end(), ds.begin(), ds.end());
  }
  for (const auto& e : src.inline_texts) {
    auto ds = parse_derivations(e);
    all.insert(all.end(), ds.begin(), ds.end());
  }
  if (all.empty()) throw UsageError("check expects at least one derivation");
  bool ok = true;
  for (auto& d : all) {
    if (type) d.domain = parse_type(*type);
    ok = print_report(out, d) && ok;
  }
  return ok ? 0 : 1;
}

int cmd_roundtrip(std::size_t max_size, std::ostream& out) {
  RoundtripOptions opts;
  opts.max_size = max_size;
  auto results = run_roundtrip_suite(opts);
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  bool ok = true;
  for (const auto& r : results) {
    out << std::left << std::setw(static_cast<int>(width)) << r.name << std::right << "  "
        << r.checked << " checked, " << r.failed << " failed\n";
    if (r.failed != 0) {
      ok = false;
      out << "  first failure: " << r.first_failure << '\n';
    }
  }
  out << (ok ? "all properties hold" : "FAILED") << '\n';
  return ok ? 0 : 1;
}

int cmd_demo(std::ostream& out) {
  const auto& lib = builtin_library();
  const auto& toffoli = lib.find("toffoli")->second;
  out << "== toffoli : " << to_string(toffoli.type) << " ==\n";
  print_table(out, toffoli.definition, toffoli.type);
  out << "\n== canon not ; not ==\n";
  print_canon(out, parse_comb("not ; not"));
  out << "\n== notOpt ==\n";
  return print_report(out, notopt_derivation()) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pi: reversible combinator toolkit", "pi"};
  app.require_subcommand(1, 1);

  Sources src;
  std::vector<std::string> positional;
  bool backward = false;
  std::optional<std::string> type;
  std::size_t max_size = 7;

  auto add_inputs = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("-e", src.inline_texts, "inline program text (repeatable)")
        ->allow_extra_args(false);
    sub->add_option("inputs", positional, what);
  };
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", type, "domain type, e.g. '2 * 2'");
  };

  auto* run = app.add_subcommand("run", "evaluate a program on a value");
  add_inputs(run, "FILE VALUE, or VALUE with -e");
  run->add_flag("--backward", backward, "evaluate the adjoint");
  add_type(run);
  auto* perm = app.add_subcommand("perm", "print the denoted permutation");
  add_inputs(perm, "program file");
  add_type(perm);
  auto* canon = app.add_subcommand("canon", "canonical form of a one-type program");
  add_inputs(canon, "program file");
  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two programs");
  add_inputs(equiv, "program files");
  add_type(equiv);
  auto* check = app.add_subcommand("check", "replay derivation files");
  add_inputs(check, ".pid files");
  add_type(check);
  auto* roundtrip = app.add_subcommand("roundtrip", "run the correspondence suite");
  roundtrip->add_option("--max-size", max_size, "exhaustive bound on term size")
      ->check(CLI::Range(1, 12));
  auto* demo = app.add_subcommand("demo", "toffoli table, canon not;not, notOpt replay");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(src, positional, backward, type, out);
    src.files = positional;
    if (perm->parsed()) return cmd_perm(src, type, out);
    if (canon->parsed()) {
      print_canon(out, load_one(src));
      return 0;
    }
    if (equiv->parsed()) return cmd_equiv(src, type, out);
    if (check->parsed()) return cmd_check(src, type, out);
    if (roundtrip->parsed()) return cmd_roundtrip(max_size, out);
    if (demo->parsed()) return cmd_demo(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::Syntax || e.kind() == ErrorKind::UnknownName ? 2 : 1;
  }
  return 2;
}

}  // namespace pi
