// Acceptance suite: one self-contained check per numbered criterion, one
// PASS/FAIL line each, nonzero exit when anything fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pi/gates.hpp"
#include "pi/normalize.hpp"
#include "pi/parser.hpp"
#include "pi/permutation.hpp"
#include "pi/rewrite.hpp"
#include "pi/semantics.hpp"
#include "pi/syntax.hpp"
#include "support/gen.hpp"
#include "support/paths.hpp"

using namespace pi;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << detail << "\n";
  if (!ok) ++g_failures;
}

std::string run_cli(const std::string& args, int& exit_code) {
  const char* bin = std::getenv("PI_BIN");
  if (!bin) throw IoError("PI_BIN is not set");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw IoError("cannot run " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  exit_code = pclose(pipe);
  return out;
}

/// Criterion 1: the bundled three-slot reverse program, traced through the
/// CLI on three distinct values, matches the golden transcript exactly.
void criterion1() {
  std::string golden = testpaths::slurp(testpaths::golden_path("reverse_trace.txt"));
  int code = -1;
  std::string out = run_cli(
      "run \"" + testpaths::program_path("reverse.pi") +
      "\" --in \"(1 + (1 + 1)) * ((1 + (1 + 1)) * (1 + (1 + 1)))\""
      " --value \"(inl (), (inr (inl ()), inr (inr ())))\" --trace",
      code);
  bool ok = (code == 0) && (out == golden);
  report(1, ok, "reverse trace golden-file match via the CLI");
}

/// Criterion 2: compiled structured gates equal the bit-level permutations
/// under the rank relabeling k |-> (2^n - 1) - k.
void criterion2() {
  auto relabel = [](const PermDense& bits) {
    std::uint64_t n = bits.size();
    PermDense out(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      out[k] = n - 1 - bits[n - 1 - k];
    }
    return out;
  };
  bool ok = compile(not_comb(), bool_ty()) == PermDense{1, 0};
  ok = ok && compile(if_not_comb(), Ty::prod(bool_ty(), bool_ty())) ==
                 relabel(to_dense(cnot_gate()));
  ok = ok && compile(if_cnot_comb(), word3_ty()) ==
                 relabel(to_dense(toffoli_gate()));
  report(2, ok, "not/cnot/toffoli agree with the compiled combinators");
}

/// Criterion 3: the 12-transposition full adder passes the truth table
/// under the documented wire order (A, B, Cin, heap) = MSB first.
void criterion3() {
  bool ok = true;
  PermProgPtr fa = fulladder_gate();
  ok = ok && fa->arity() == 16;
  // The bundled program file states the same permutation.
  PermProgPtr bundled =
      parse_perm(testpaths::slurp(testpaths::program_path("fulladder.perm")));
  ok = ok && to_dense(bundled) == to_dense(fa);
  for (int a = 0; a <= 1 && ok; ++a) {
    for (int b = 0; b <= 1 && ok; ++b) {
      for (int cin = 0; cin <= 1 && ok; ++cin) {
        std::uint64_t in = (std::uint64_t)(a << 3 | b << 2 | cin << 1);
        std::uint64_t out = papply(fa, in);
        int sum = a ^ b ^ cin;
        int carry = (a + b + cin) >= 2 ? 1 : 0;
        ok = out == (std::uint64_t)(a << 3 | b << 2 | sum << 1 | carry);
      }
    }
  }
  report(3, ok, "full adder truth table (8 cases, heap = 0)");
}

struct CorpusEntry {
  TyPtr dom;
  TyPtr cod;
  CombPtr comb;
};

std::vector<CorpusEntry> random_corpus(std::size_t count) {
  gen::Rng rng(0xACCE97);
  std::vector<CorpusEntry> corpus;
  while (corpus.size() < count) {
    TyPtr dom = gen::random_ty(rng, 5, 12);
    CombPtr c = gen::random_comb_from(rng, dom, 6);
    if (comb_depth(c) > 7) continue;
    corpus.push_back({dom, infer_fill_zero(c, dom), c});
  }
  return corpus;
}

/// Criterion 4: adjoint inverts evaluation and every combinator denotes a
/// bijection, over >= 1000 random well-typed combinators.
void criterion4(const std::vector<CorpusEntry>& corpus) {
  std::size_t checked = 0;
  bool ok = corpus.size() >= 1000;
  for (const CorpusEntry& e : corpus) {
    CombPtr back = adjoint(e.comb);
    std::set<std::uint64_t> image;
    bool entry_ok = true;
    for (const ValPtr& v : enumerate_vals(e.dom)) {
      ValPtr w = eval(e.comb, v);
      entry_ok = entry_ok && val_equal(eval(back, w), v);
      entry_ok = entry_ok && image.insert(rank(e.cod, w)).second;
    }
    entry_ok = entry_ok && image.size() == size(e.dom);
    ok = ok && entry_ok;
    ++checked;
  }
  report(4, ok, "reversibility on " + std::to_string(checked) +
                    " random combinators");
}

/// Criterion 5: rank(eval c v) agrees pointwise with the compositional
/// compiler on the same corpus.
void criterion5(const std::vector<CorpusEntry>& corpus) {
  bool ok = corpus.size() >= 1000;
  for (const CorpusEntry& e : corpus) {
    PermDense d = compile(e.comb, e.dom);
    auto vals = enumerate_vals(e.dom);
    ok = ok && d.size() == vals.size();
    for (std::uint64_t k = 0; ok && k < vals.size(); ++k) {
      ok = d[k] == rank(e.cod, eval(e.comb, vals[k]));
    }
    if (!ok) break;
  }
  report(5, ok, "compile agrees with evaluation on the same corpus");
}

/// Criterion 6: the normalizer, exhaustively on small types and on a random
/// sample of larger ones, types on the nose and compiles to a bijection.
void criterion6() {
  // All distinct types of depth <= 4: close the depth-1 leaves under one
  // application of + and * three times. Each composite type decomposes
  // uniquely, so no type is generated twice.
  std::vector<TyPtr> cum = {Ty::zero(), Ty::one()};
  for (int step = 0; step < 3; ++step) {
    std::vector<TyPtr> next = {Ty::zero(), Ty::one()};
    for (const TyPtr& l : cum) {
      for (const TyPtr& r : cum) {
        next.push_back(Ty::sum(l, r));
        next.push_back(Ty::prod(l, r));
      }
    }
    cum = std::move(next);
  }

  auto check_one = [](const TyPtr& b) {
    CombPtr nb = normalizer(b);
    TyPtr canon = canonical_type(size(b));
    if (!type_checks(nb, b, canon)) return false;
    if (!ty_equal(infer(nb, b), canon)) return false;
    return is_permutation(compile(nb, b));
  };

  bool ok = true;
  std::size_t total = 0;
  for (const TyPtr& b : cum) {
    ok = ok && check_one(b);
    ++total;
  }
  gen::Rng rng(606);
  for (int trial = 0; trial < 300; ++trial) {
    TyPtr b = gen::random_ty(rng, 6, 16);
    ok = ok && check_one(b);
    ++total;
  }
  report(6, ok, "normalizer on " + std::to_string(total) +
                    " types (exhaustive to depth 4 plus random sample)");
}

/// Criterion 7: every registered rule, in both directions, is
/// observationally sound on >= 50 random instantiations.
void criterion7() {
  gen::Rng rng(0x7777);
  bool ok = true;
  std::size_t applications = 0;
  for (const rw::Rule* rule : rw::rule_registry()) {
    for (int trial = 0; trial < 50; ++trial) {
      gen::RuleInstance inst = gen::random_rule_instance(rng, rule, 8);
      CombPtr rhs =
          rw::eval1(rw::Rw::prim(rule, inst.bindings), inst.lhs, inst.dom);
      auto rep = obs_equiv(inst.lhs, rhs, inst.dom, inst.cod, 1u << 20);
      if (!rep.equivalent) {
        std::cout << "  counterexample: rule " << rule->name << " lhs "
                  << show(inst.lhs) << " rhs " << show(rhs) << " at "
                  << show(inst.dom) << " on " << show(rep.witness) << "\n";
        ok = false;
      }
      ++applications;
    }
  }
  report(7, ok, "catalog soundness over " + std::to_string(applications) +
                    " rule instantiations (108 directed rules x 50)");
}

/// Criterion 8: exact() recognizes eval1's output and rw_flip inverts it,
/// on >= 1000 random applicable pairs including congruence-wrapped ones.
void criterion8() {
  gen::Rng rng(0x8888);
  const auto& reg = rw::rule_registry();
  bool ok = true;
  std::size_t pairs = 0;
  while (pairs < 1000) {
    const rw::Rule* rule = reg[gen::pick(rng, reg.size())];
    gen::RuleInstance inst = gen::random_rule_instance(rng, rule, 6);
    rw::RwPtr r = rw::Rw::prim(rule, inst.bindings);
    CombPtr c = inst.lhs;
    TyPtr dom = inst.dom;
    switch (gen::pick(rng, 5)) {
      case 0:
        break;  // bare rule application
      case 1:
        r = rw::Rw::resp_seq(r, rw::Rw::id2());
        c = Comb::seq(c, Comb::prim(Prim::Id));
        break;
      case 2:
        r = rw::Rw::resp_plus(r, rw::Rw::id2());
        c = Comb::plus(c, Comb::prim(Prim::Id));
        dom = Ty::sum(dom, Ty::one());
        break;
      case 3:
        r = rw::Rw::resp_times(rw::Rw::id2(), r);
        c = Comb::times(Comb::prim(Prim::Id), c);
        dom = Ty::prod(Ty::one(), dom);
        break;
      case 4:
        r = rw::Rw::trans2(rw::Rw::id2(), r);
        break;
    }
    CombPtr there = rw::eval1(r, c, dom);
    ok = ok && rw::exact(r, c, there, dom);
    CombPtr back = rw::eval1(rw::rw_flip(r), there, dom);
    ok = ok && comb_equal(back, c);
    ++pairs;
  }
  report(8, ok, "exact/flip on " + std::to_string(pairs) +
                    " random applicable rewrite pairs");
}

/// Criterion 9: the bundled proof replays step by step, and corrupting any
/// single expected combinator is rejected at exactly that step.
void criterion9() {
  rw::ProofScript script = rw::parse_proof(
      testpaths::slurp(testpaths::program_path("swapfl.piproof")));
  rw::ProofReport report9 = rw::check_proof(script);
  bool ok = report9.accepted && report9.steps == 9;

  // Each justification verifies via exact against the scripted line.
  CombPtr cur = script.start;
  for (const rw::ProofStep& step : script.steps) {
    ok = ok && rw::exact(step.just, cur, step.expected, script.dom);
    cur = step.expected;
  }
  ok = ok && comb_equal(cur, script.goal);

  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    rw::ProofScript bad = script;
    bad.steps[i].expected =
        Comb::seq(Comb::prim(Prim::Id), bad.steps[i].expected);
    rw::ProofReport r = rw::check_proof(bad);
    ok = ok && !r.accepted && r.failing_step == i + 1;
  }
  report(9, ok, "bundled 9-step proof accepted; every single-step "
                "corruption rejected at that step");
}

/// Criterion 10: observational-equivalence spot checks.
void criterion10() {
  bool ok = true;
  auto neq = obs_equiv(parse_comb("id"), parse_comb("swap+"), bool_ty());
  ok = ok && !neq.equivalent;

  Program p1 = parse_program(testpaths::slurp(testpaths::program_path("swapfl1.pi")));
  Program p2 = parse_program(testpaths::slurp(testpaths::program_path("swapfl2.pi")));
  TyPtr dom = parse_ty("1 + (1 + 1)");
  auto eq = obs_equiv(p1.comb, p2.comb, dom);
  ok = ok && eq.equivalent && eq.checked == 3;
  report(10, ok, "id vs swap+ inequivalent; the two swap-fl programs agree");
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  try {
    criterion1();
    criterion2();
    criterion3();
    std::vector<CorpusEntry> corpus = random_corpus(1000);
    criterion4(corpus);
    criterion5(corpus);
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
  } catch (const Error& e) {
    std::cout << "FAIL (unexpected error): " << e.display() << "\n";
    return 2;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                clock::now() - t0)
                .count();
  std::cout << (g_failures == 0 ? "all 10 criteria passed"
                                : std::to_string(g_failures) +
                                      " criteria failed")
            << " (" << ms << " ms)\n";
  return g_failures == 0 ? 0 : 1;
}
