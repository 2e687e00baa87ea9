#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pi/error.hpp"
#include "pi/normalize.hpp"
#include "pi/parser.hpp"
#include "pi/permutation.hpp"
#include "pi/rewrite.hpp"
#include "pi/semantics.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pi::IoError("cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t brute_force_cap() {
  const char* env = std::getenv("PI_BRUTE_FORCE_CAP");
  if (!env || !*env) return pi::kDefaultBruteForceCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw pi::ValueError("PI_BRUTE_FORCE_CAP must be a decimal number, got '" +
                         std::string(env) + "'");
  }
  return static_cast<std::uint64_t>(v);
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct RunArgs {
  std::string file, in_text, value_text, format = "text";
  bool reverse = false, trace = false;
};

int do_run(const RunArgs& a) {
  pi::Program prog = pi::parse_program(read_file(a.file));
  pi::CombPtr c = a.reverse ? pi::adjoint(prog.comb) : prog.comb;
  pi::TyPtr dom;
  if (!a.in_text.empty()) {
    dom = pi::parse_ty(a.in_text);
  } else {
    dom = a.reverse ? prog.cod : prog.dom;
  }
  if (dom) pi::infer(c, dom);  // surface type errors before running
  pi::ValPtr v = pi::parse_val(a.value_text);

  if (a.trace) {
    pi::Trace tr = pi::trace_eval(c, v);
    if (a.format == "json") {
      json steps = json::array();
      for (const auto& s : tr.steps) {
        steps.push_back({{"comb", pi::show(s.component)},
                         {"value", pi::show(s.value)}});
      }
      emit({{"input", pi::show(tr.input)},
            {"trace", steps},
            {"result", pi::show(tr.result)}});
    } else {
      std::cout << pi::show(tr.input) << "\n";
      for (const auto& s : tr.steps) {
        std::cout << pi::show(s.component) << " |-> " << pi::show(s.value)
                  << "\n";
      }
    }
    return 0;
  }
  pi::ValPtr out = pi::eval(c, v);
  if (a.format == "json") {
    emit({{"input", pi::show(v)}, {"result", pi::show(out)}});
  } else {
    std::cout << pi::show(out) << "\n";
  }
  return 0;
}

int do_invert(const std::string& file, const std::string& format) {
  pi::Program prog = pi::parse_program(read_file(file));
  pi::CombPtr inv = pi::adjoint(prog.comb);
  if (format == "json") {
    json j = {{"comb", pi::show(inv)}};
    j["dom"] = prog.cod ? json(pi::show(prog.cod)) : json(nullptr);
    j["cod"] = prog.dom ? json(pi::show(prog.dom)) : json(nullptr);
    emit(j);
  } else {
    if (prog.dom) {
      std::cout << "type: " << pi::show(prog.cod) << " <-> "
                << pi::show(prog.dom) << "\n";
    }
    std::cout << pi::show(inv) << "\n";
  }
  return 0;
}

int do_perm(const std::string& file, const std::string& in_text,
            const std::string& format) {
  pi::PermDense dense;
  if (has_suffix(file, ".perm")) {
    dense = pi::to_dense(pi::parse_perm(read_file(file)));
  } else {
    pi::Program prog = pi::parse_program(read_file(file));
    pi::TyPtr dom = in_text.empty() ? prog.dom : pi::parse_ty(in_text);
    if (!dom) {
      throw pi::TypeError(
          "no input type for " + file +
          ": pass --in or add a 'type:' header to the program");
    }
    dense = pi::compile(prog.comb, dom);
  }
  if (format == "json") {
    emit({{"arity", dense.size()}, {"perm", dense}});
  } else {
    std::cout << pi::show_dense(dense) << "\n";
  }
  return 0;
}

int do_equiv(const std::string& file1, const std::string& file2,
             const std::string& in_text, const std::string& format) {
  pi::Program p1 = pi::parse_program(read_file(file1));
  pi::Program p2 = pi::parse_program(read_file(file2));
  pi::TyPtr dom = in_text.empty() ? (p1.dom ? p1.dom : p2.dom)
                                  : pi::parse_ty(in_text);
  if (!dom) {
    throw pi::TypeError(
        "no domain type: pass --in or add a 'type:' header to a program");
  }
  // A type header also pins the codomain, which the checking-mode overload
  // can use to resolve factorzl/factorzr tails that inference alone cannot.
  // Ignore a header whose domain is not the domain actually in use.
  pi::TyPtr cod;
  if (p1.cod && p1.dom && pi::ty_equal(p1.dom, dom)) {
    cod = p1.cod;
  } else if (p2.cod && p2.dom && pi::ty_equal(p2.dom, dom)) {
    cod = p2.cod;
  }
  pi::EquivReport rep =
      cod ? pi::obs_equiv(p1.comb, p2.comb, dom, cod, brute_force_cap())
          : pi::obs_equiv(p1.comb, p2.comb, dom, brute_force_cap());
  if (format == "json") {
    json j = {{"equivalent", rep.equivalent}, {"checked", rep.checked}};
    if (!rep.equivalent) {
      j["witness"] = pi::show(rep.witness);
      j["lhs"] = pi::show(rep.lhs_out);
      j["rhs"] = pi::show(rep.rhs_out);
    }
    emit(j);
  } else if (rep.equivalent) {
    std::cout << "equivalent (" << rep.checked << "/" << rep.checked
              << " values agree)\n";
  } else {
    std::cout << "not equivalent (witness " << pi::show(rep.witness) << ": "
              << pi::show(rep.lhs_out) << " vs " << pi::show(rep.rhs_out)
              << ")\n";
  }
  return rep.equivalent ? 0 : 1;
}

int do_normalize(const std::string& type_text, const std::string& format) {
  pi::TyPtr b = pi::parse_ty(type_text);
  pi::CombPtr c = pi::normalizer(b);
  pi::TyPtr cod = pi::canonical_type(pi::size(b));
  if (format == "json") {
    emit({{"comb", pi::show(c)},
          {"dom", pi::show(b)},
          {"cod", pi::show(cod)},
          {"size", pi::size(b)}});
  } else {
    std::cout << "type: " << pi::show(b) << " <-> " << pi::show(cod) << "\n";
    std::cout << pi::show(c) << "\n";
  }
  return 0;
}

int do_prove(const std::string& file, const std::string& format) {
  pi::rw::ProofScript script = pi::rw::parse_proof(read_file(file));
  pi::rw::ProofReport rep = pi::rw::check_proof(script);
  if (format == "json") {
    json j = {{"accepted", rep.accepted},
              {"steps", rep.steps},
              {"message", rep.message}};
    if (!rep.accepted) j["failing_step"] = rep.failing_step;
    emit(j);
  } else if (rep.accepted) {
    std::cout << "accepted (" << rep.steps << " steps)\n";
  } else if (rep.failing_step == 0) {
    std::cout << "rejected (claim): " << rep.message << "\n";
  } else {
    std::cout << "rejected (step " << rep.failing_step << "): " << rep.message
              << "\n";
  }
  return rep.accepted ? 0 : 1;
}

int do_rules(bool dump, const std::string& format) {
  if (dump) {
    std::cout << pi::rw::registry_dump_json() << "\n";
    return 0;
  }
  if (format == "json") {
    json names = json::array();
    for (const pi::rw::Rule* r : pi::rw::rule_registry()) names.push_back(r->name);
    emit(names);
  } else {
    for (const pi::rw::Rule* r : pi::rw::rule_registry()) {
      std::cout << r->name << "\n";
    }
  }
  return 0;
}

void add_format(CLI::App* cmd, std::string& fmt) {
  cmd->add_option("--format", fmt, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for the Pi reversible language"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a program on a value");
  run->add_option("file", run_args.file, "Program file (.pi)")->required();
  run->add_option("--in", run_args.in_text,
                  "Domain type (overrides the file's type header)");
  run->add_option("--value", run_args.value_text, "Input value")->required();
  run->add_flag("--reverse", run_args.reverse, "Run the program backwards");
  run->add_flag("--trace", run_args.trace,
                "Print one line per top-level ';' component");
  add_format(run, run_args.format);

  std::string invert_file, invert_fmt = "text";
  auto* invert = app.add_subcommand("invert", "Print the inverse program");
  invert->add_option("file", invert_file, "Program file (.pi)")->required();
  add_format(invert, invert_fmt);

  std::string perm_file, perm_in, perm_fmt = "text";
  auto* perm = app.add_subcommand(
      "perm", "Compile a program (or a .perm file) to one-line notation");
  perm->add_option("file", perm_file, "Program file (.pi or .perm)")
      ->required();
  perm->add_option("--in", perm_in, "Domain type for a .pi file");
  add_format(perm, perm_fmt);

  std::string eq_file1, eq_file2, eq_in, eq_fmt = "text";
  auto* equiv = app.add_subcommand(
      "equiv", "Check observational equivalence of two programs");
  equiv->add_option("file1", eq_file1, "First program")->required();
  equiv->add_option("file2", eq_file2, "Second program")->required();
  equiv->add_option("--in", eq_in, "Common domain type");
  add_format(equiv, eq_fmt);

  std::string norm_type, norm_fmt = "text";
  auto* normalize = app.add_subcommand(
      "normalize", "Emit the canonicalizing combinator for a type");
  normalize->add_option("--type", norm_type, "Type expression")->required();
  add_format(normalize, norm_fmt);

  std::string prove_file, prove_fmt = "text";
  auto* prove = app.add_subcommand("prove", "Check an equational proof");
  prove->add_option("file", prove_file, "Proof file (.piproof)")->required();
  add_format(prove, prove_fmt);

  bool rules_dump = false;
  std::string rules_fmt = "text";
  auto* rules = app.add_subcommand("rules", "List the level-2 rule registry");
  rules->add_flag("--dump", rules_dump,
                  "Dump the full registry (schemas and types) as JSON");
  add_format(rules, rules_fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 is --help / --version
  }

  try {
    if (run->parsed()) return do_run(run_args);
    if (invert->parsed()) return do_invert(invert_file, invert_fmt);
    if (perm->parsed()) return do_perm(perm_file, perm_in, perm_fmt);
    if (equiv->parsed()) return do_equiv(eq_file1, eq_file2, eq_in, eq_fmt);
    if (normalize->parsed()) return do_normalize(norm_type, norm_fmt);
    if (prove->parsed()) return do_prove(prove_file, prove_fmt);
    if (rules->parsed()) return do_rules(rules_dump, rules_fmt);
  } catch (const pi::Error& e) {
    std::cout << e.display() << "\n";
    return 1;
  }
  return 2;  // unreachable: a subcommand is required
}
