#include <doctest.h>

#include <cstdint>
#include <vector>

#include "pi/gates.hpp"
#include "pi/parser.hpp"
#include "pi/semantics.hpp"
#include "pi/syntax.hpp"
#include "support/gen.hpp"

using namespace pi;

namespace {

ValPtr run(const std::string& comb, const std::string& val) {
  return eval(parse_comb(comb), parse_val(val));
}

/// Convenience: evaluate and render.
std::string runs(const std::string& comb, const std::string& val) {
  return show(run(comb, val));
}

}  // namespace

TEST_CASE("size of structured types") {
  CHECK(size(parse_ty("0")) == 0);
  CHECK(size(parse_ty("1")) == 1);
  CHECK(size(parse_ty("1 + 1")) == 2);
  CHECK(size(parse_ty("1 + (1 + 1)")) == 3);
  CHECK(size(parse_ty("(1 + 1) * (1 + 1)")) == 4);
  CHECK(size(parse_ty("0 * (1 + 1)")) == 0);
  CHECK(size(parse_ty("(1 + 1) + 0")) == 2);

  SUBCASE("overflow of 64-bit arithmetic is refused") {
    // A balanced product of 64 two-element types has 2^64 inhabitants.
    TyPtr t = bool_ty();
    for (int i = 0; i < 6; ++i) t = Ty::prod(t, t);
    CHECK_THROWS_AS(size(t), RefusedTooLargeError);
  }
}

TEST_CASE("eval clause table for the constants") {
  // One check per evaluation clause, on closed values.
  CHECK(runs("unite+l", "inr ()") == "()");
  CHECK(runs("uniti+l", "()") == "inr ()");
  CHECK(runs("unite+r", "inl ()") == "()");
  CHECK(runs("uniti+r", "()") == "inl ()");

  CHECK(runs("swap+", "inl ()") == "inr ()");
  CHECK(runs("swap+", "inr ()") == "inl ()");

  CHECK(runs("assocl+", "inl ()") == "inl (inl ())");
  CHECK(runs("assocl+", "inr (inl ())") == "inl (inr ())");
  CHECK(runs("assocl+", "inr (inr ())") == "inr ()");
  CHECK(runs("assocr+", "inl (inl ())") == "inl ()");
  CHECK(runs("assocr+", "inl (inr ())") == "inr (inl ())");
  CHECK(runs("assocr+", "inr ()") == "inr (inr ())");

  CHECK(runs("unite*l", "((), inl ())") == "inl ()");
  CHECK(runs("uniti*l", "inl ()") == "((), inl ())");
  CHECK(runs("unite*r", "(inr (), ())") == "inr ()");
  CHECK(runs("uniti*r", "inr ()") == "(inr (), ())");

  CHECK(runs("swap*", "(inl (), inr ())") == "(inr (), inl ())");
  CHECK(runs("assocl*", "(inl (), (inr (), ()))") == "((inl (), inr ()), ())");
  CHECK(runs("assocr*", "((inl (), inr ()), ())") == "(inl (), (inr (), ()))");

  CHECK(runs("dist", "(inl (), inr ())") == "inl ((), inr ())");
  CHECK(runs("dist", "(inr (), inl ())") == "inr ((), inl ())");
  CHECK(runs("factor", "inl ((), inr ())") == "(inl (), inr ())");
  CHECK(runs("factor", "inr ((), inl ())") == "(inr (), inl ())");

  CHECK(runs("distl", "(inr (), inl ())") == "inl (inr (), ())");
  CHECK(runs("distl", "(inr (), inr ())") == "inr (inr (), ())");
  CHECK(runs("factorl", "inl (inr (), ())") == "(inr (), inl ())");
  CHECK(runs("factorl", "inr (inr (), ())") == "(inr (), inr ())");

  CHECK(runs("id", "(inl (), ())") == "(inl (), ())");
}

TEST_CASE("eval of composite combinators") {
  // Sequencing pipes left to right; (+) and (*) act componentwise.
  CHECK(runs("swap+ ; swap+", "inl ()") == "inl ()");
  CHECK(runs("swap+ + id", "inl (inl ())") == "inl (inr ())");
  CHECK(runs("swap+ + id", "inr ()") == "inr ()");
  CHECK(runs("swap+ * uniti*l", "(inl (), inr ())") ==
        "(inr (), ((), inr ()))");
  CHECK(runs("! uniti*l", "((), inr ())") == "inr ()");
}

TEST_CASE("eval rejects values outside a clause") {
  CHECK_THROWS_WITH_AS(run("swap+", "()"), "swap+ has no clause for value ()",
                       ValueError);
  CHECK_THROWS_AS(run("unite+l", "inl ()"), ValueError);
  CHECK_THROWS_AS(run("unite*l", "(inl (), ())"), ValueError);
  CHECK_THROWS_AS(run("dist", "inl ()"), ValueError);
  CHECK_THROWS_AS(run("swap+ + id", "()"), ValueError);
  CHECK_THROWS_AS(run("swap* * id", "()"), ValueError);
}

TEST_CASE("factorzl and factorzr cannot run on any value") {
  CHECK_THROWS_AS(run("factorzl", "()"), ImpossibleValueError);
  CHECK_THROWS_AS(run("factorzr", "inl ()"), ImpossibleValueError);
  // In reverse, absorbr / absorbl are the ones with the empty domain.
  CHECK_THROWS_AS(eval_rev(parse_comb("absorbr"), parse_val("()")),
                  ImpossibleValueError);
  CHECK_THROWS_AS(eval_rev(parse_comb("absorbl"), parse_val("()")),
                  ImpossibleValueError);
}

TEST_CASE("enumeration order: sums left first, products row-major") {
  SUBCASE("two-element type") {
    auto vs = enumerate_vals(parse_ty("1 + 1"));
    REQUIRE(vs.size() == 2);
    CHECK(show(vs[0]) == "inl ()");
    CHECK(show(vs[1]) == "inr ()");
  }
  SUBCASE("nested sum") {
    auto vs = enumerate_vals(parse_ty("1 + (1 + 1)"));
    REQUIRE(vs.size() == 3);
    CHECK(show(vs[0]) == "inl ()");
    CHECK(show(vs[1]) == "inr (inl ())");
    CHECK(show(vs[2]) == "inr (inr ())");
  }
  SUBCASE("product varies the right component fastest") {
    auto vs = enumerate_vals(parse_ty("(1 + 1) * (1 + (1 + 1))"));
    REQUIRE(vs.size() == 6);
    CHECK(show(vs[0]) == "(inl (), inl ())");
    CHECK(show(vs[1]) == "(inl (), inr (inl ()))");
    CHECK(show(vs[2]) == "(inl (), inr (inr ()))");
    CHECK(show(vs[3]) == "(inr (), inl ())");
    CHECK(show(vs[4]) == "(inr (), inr (inl ()))");
    CHECK(show(vs[5]) == "(inr (), inr (inr ()))");
  }
  SUBCASE("empty and unit types") {
    CHECK(enumerate_vals(parse_ty("0")).empty());
    CHECK(enumerate_vals(parse_ty("0 * (1 + 1)")).empty());
    auto vs = enumerate_vals(parse_ty("1"));
    REQUIRE(vs.size() == 1);
    CHECK(show(vs[0]) == "()");
  }
}

TEST_CASE("for_each_val visits in order and stops early") {
  TyPtr t = parse_ty("(1 + 1) * (1 + 1)");
  auto all = enumerate_vals(t);
  std::vector<ValPtr> seen;
  for_each_val(t, [&](const ValPtr& v) {
    seen.push_back(v);
    return seen.size() < 3;  // stop after three values
  });
  REQUIRE(seen.size() == 3);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    CHECK(val_equal(seen[i], all[i]));
  }
}

TEST_CASE("rank and unrank are mutually inverse") {
  gen::Rng rng(20260817);
  for (int trial = 0; trial < 50; ++trial) {
    TyPtr t = gen::random_ty(rng, 4, 24);
    std::uint64_t n = size(t);
    auto vs = enumerate_vals(t);
    REQUIRE(vs.size() == n);
    for (std::uint64_t i = 0; i < n; ++i) {
      CHECK(rank(t, vs[i]) == i);
      CHECK(val_equal(unrank(t, i), vs[i]));
    }
  }
  SUBCASE("rank rejects values of the wrong type") {
    CHECK_THROWS_AS(rank(parse_ty("1 + 1"), parse_val("()")), ValueError);
    CHECK_THROWS_AS(rank(parse_ty("1"), parse_val("inl ()")), ValueError);
    CHECK_THROWS_AS(rank(parse_ty("0"), parse_val("()")), ValueError);
  }
  SUBCASE("unrank rejects out-of-range indices") {
    CHECK_THROWS_AS(unrank(parse_ty("1 + 1"), 2), ValueError);
    CHECK_THROWS_AS(unrank(parse_ty("0"), 0), ValueError);
  }
}

TEST_CASE("eval_rev inverts eval on random well-typed runs") {
  gen::Rng rng(444555);
  int runs_done = 0;
  for (int trial = 0; trial < 400 && runs_done < 200; ++trial) {
    TyPtr dom = gen::random_ty(rng, 3, 12);
    if (size(dom) == 0) continue;
    CombPtr c = gen::random_comb_from(rng, dom, 4);
    ValPtr v = gen::random_val(rng, dom);
    ValPtr w = eval(c, v);
    CHECK(val_equal(eval_rev(c, w), v));
    // And the other direction: eval after eval_rev is also the identity.
    CHECK(val_equal(eval(c, eval_rev(c, w)), w));
    ++runs_done;
  }
  CHECK(runs_done >= 200);
}

TEST_CASE("eval agrees with eval of the adjoint run backwards") {
  gen::Rng rng(99991);
  for (int trial = 0; trial < 100; ++trial) {
    TyPtr dom = gen::random_ty(rng, 3, 10);
    if (size(dom) == 0) continue;
    CombPtr c = gen::random_comb_from(rng, dom, 3);
    ValPtr v = gen::random_val(rng, dom);
    CHECK(val_equal(eval_rev(c, eval(c, v)),
                    eval(adjoint(c), eval(c, v))));
  }
}

TEST_CASE("obs_equiv compares combinators pointwise") {
  TyPtr b = bool_ty();
  SUBCASE("equivalent pair") {
    auto rep = obs_equiv(parse_comb("swap+ ; swap+"), parse_comb("id"), b);
    CHECK(rep.equivalent);
    CHECK(rep.checked == 2);
    CHECK(rep.witness == nullptr);
  }
  SUBCASE("inequivalent pair reports the first witness") {
    auto rep = obs_equiv(parse_comb("swap+"), parse_comb("id"), b);
    CHECK_FALSE(rep.equivalent);
    CHECK(show(rep.witness) == "inl ()");
    CHECK(show(rep.lhs_out) == "inr ()");
    CHECK(show(rep.rhs_out) == "inl ()");
  }
  SUBCASE("swap* composed with itself is the identity") {
    TyPtr t = Ty::prod(b, Ty::sum(Ty::one(), b));
    auto rep = obs_equiv(parse_comb("swap* ; swap*"), parse_comb("id"), t);
    CHECK(rep.equivalent);
    CHECK(rep.checked == 6);
  }
  SUBCASE("codomain mismatch is a type error") {
    CHECK_THROWS_AS(obs_equiv(parse_comb("uniti+r"), parse_comb("id"), b),
                    TypeError);
  }
  SUBCASE("ill-typed side is a type error") {
    CHECK_THROWS_AS(obs_equiv(parse_comb("swap*"), parse_comb("id"), b),
                    TypeError);
  }
  SUBCASE("cap refuses oversized domains") {
    TyPtr t = bool_ty();
    for (int i = 0; i < 4; ++i) t = Ty::prod(t, t);  // 2^16 inhabitants
    CHECK_THROWS_AS(obs_equiv(parse_comb("id"), parse_comb("id"), t, 4096),
                    RefusedTooLargeError);
    auto rep = obs_equiv(parse_comb("id"), parse_comb("id"), bool_ty(), 2);
    CHECK(rep.equivalent);
  }
  SUBCASE("empty domain is vacuously equivalent") {
    auto rep = obs_equiv(parse_comb("absorbr"), parse_comb("absorbr"),
                         Ty::prod(Ty::zero(), b));
    CHECK(rep.equivalent);
    CHECK(rep.checked == 0);
  }
  SUBCASE("a stated codomain resolves factorzl/factorzr tails") {
    // Inference alone rejects these: the codomain has a hole.
    CHECK_THROWS_AS(obs_equiv(parse_comb("id ; factorzl"),
                              parse_comb("factorzl"), Ty::zero()),
                    TypeError);
    auto rep = obs_equiv(parse_comb("id ; factorzl"), parse_comb("factorzl"),
                         Ty::zero(), Ty::prod(Ty::zero(), b));
    CHECK(rep.equivalent);
    CHECK(rep.checked == 0);
  }
  SUBCASE("checking mode rejects a side that fails at the stated type") {
    CHECK_THROWS_WITH_AS(
        obs_equiv(parse_comb("uniti*l"), parse_comb("uniti*l"), b,
                  Ty::prod(b, Ty::one())),
        doctest::Contains("left combinator does not type-check"), TypeError);
  }
}

TEST_CASE("seq_components flattens the composition spine in order") {
  CombPtr c = parse_comb("swap* ; (swap* * id) ; assocr*");
  auto parts = seq_components(c);
  REQUIRE(parts.size() == 3);
  CHECK(show(parts[0]) == "swap*");
  CHECK(show(parts[1]) == "swap* * id");
  CHECK(show(parts[2]) == "assocr*");

  auto single = seq_components(parse_comb("swap+"));
  REQUIRE(single.size() == 1);
  CHECK(show(single[0]) == "swap+");

  // Association of ; does not change the flattened spine.
  auto left = seq_components(parse_comb("(id ; swap+) ; uniti*l"));
  auto right = seq_components(parse_comb("id ; (swap+ ; uniti*l)"));
  REQUIRE(left.size() == 3);
  REQUIRE(right.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(comb_equal(left[i], right[i]));
  }
}

TEST_CASE("trace_eval records one step per top-level component") {
  CombPtr c = reverse_word3_comb();
  ValPtr v = parse_val("(inl (), (inr (inl ()), inr (inr ())))");
  Trace tr = trace_eval(c, v);
  CHECK(val_equal(tr.input, v));
  REQUIRE(tr.steps.size() == 3);
  CHECK(show(tr.steps[0].component) == "swap*");
  CHECK(show(tr.steps[0].value) ==
        "((inr (inl ()), inr (inr ())), inl ())");
  CHECK(show(tr.steps[1].component) == "swap* * id");
  CHECK(show(tr.steps[1].value) ==
        "((inr (inr ()), inr (inl ())), inl ())");
  CHECK(show(tr.steps[2].component) == "assocr*");
  CHECK(show(tr.steps[2].value) ==
        "(inr (inr ()), (inr (inl ()), inl ()))");
  CHECK(val_equal(tr.result, tr.steps.back().value));
  CHECK(val_equal(tr.result, eval(c, v)));

  SUBCASE("a combinator with no top-level Seq yields a single step") {
    Trace one = trace_eval(parse_comb("swap+"), parse_val("inl ()"));
    REQUIRE(one.steps.size() == 1);
    CHECK(show(one.steps[0].component) == "swap+");
    CHECK(show(one.result) == "inr ()");
  }
}

TEST_CASE("gate combinators compute the expected truth tables") {
  // bool_val(true) = inl (); gate semantics on structured booleans.
  auto bit = [](const ValPtr& v) { return v->kind() == ValKind::InL; };
  SUBCASE("not") {
    CHECK(bit(eval(not_comb(), bool_val(false))));
    CHECK_FALSE(bit(eval(not_comb(), bool_val(true))));
  }
  SUBCASE("if_not is controlled-not on bool * bool") {
    for (bool a : {false, true}) {
      for (bool b : {false, true}) {
        ValPtr in = Val::pair(bool_val(a), bool_val(b));
        ValPtr out = eval(if_not_comb(), in);
        CHECK(bit(out->first()) == a);
        CHECK(bit(out->second()) == (a ? !b : b));
      }
    }
  }
  SUBCASE("if_cnot is controlled-controlled-not on bool * (bool * bool)") {
    for (bool a : {false, true}) {
      for (bool b : {false, true}) {
        for (bool c : {false, true}) {
          ValPtr in = Val::pair(bool_val(a),
                                Val::pair(bool_val(b), bool_val(c)));
          ValPtr out = eval(if_cnot_comb(), in);
          CHECK(bit(out->first()) == a);
          CHECK(bit(out->second()->first()) == b);
          CHECK(bit(out->second()->second()) == ((a && b) ? !c : c));
        }
      }
    }
  }
  SUBCASE("not_word3 negates all three wires") {
    ValPtr in = Val::pair(bool_val(true),
                          Val::pair(bool_val(false), bool_val(true)));
    ValPtr out = eval(not_word3_comb(), in);
    CHECK_FALSE(bit(out->first()));
    CHECK(bit(out->second()->first()));
    CHECK_FALSE(bit(out->second()->second()));
  }
}
