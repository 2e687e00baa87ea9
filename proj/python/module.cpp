#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "pi/error.hpp"
#include "pi/gates.hpp"
#include "pi/normalize.hpp"
#include "pi/parser.hpp"
#include "pi/permutation.hpp"
#include "pi/rewrite.hpp"
#include "pi/semantics.hpp"
#include "pi/syntax.hpp"

namespace py = pybind11;

namespace {

/// The bindings speak strings: types, values, and combinators cross the
/// boundary in surface syntax and are parsed/rendered on each call.
pi::TyPtr ty(const std::string& s) { return pi::parse_ty(s); }
pi::ValPtr val(const std::string& s) { return pi::parse_val(s); }
pi::CombPtr comb(const std::string& s) { return pi::parse_comb(s); }

py::dict report_to_dict(const pi::EquivReport& rep) {
  py::dict out;
  out["equivalent"] = rep.equivalent;
  out["checked"] = rep.checked;
  if (rep.witness) {
    out["witness"] = pi::show(rep.witness);
    out["lhs"] = pi::show(rep.lhs_out);
    out["rhs"] = pi::show(rep.rhs_out);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(pi_toolkit, m) {
  m.doc() = "Toolkit for a reversible combinator language over finite "
            "structured types: run programs forwards and backwards, compile "
            "them to permutations, normalize types, and replay equational "
            "proofs. All types, values, and combinators are strings in the "
            "surface syntax.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pi::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.display().c_str());
    }
  });

  // -- syntax ---------------------------------------------------------------
  m.def("parse_type", [](const std::string& s) { return pi::show(ty(s)); },
        py::arg("type"), "Parse a type and render it back canonically.");
  m.def("parse_value", [](const std::string& s) { return pi::show(val(s)); },
        py::arg("value"), "Parse a value and render it back canonically.");
  m.def("parse_comb", [](const std::string& s) { return pi::show(comb(s)); },
        py::arg("comb"),
        "Parse a combinator (expanding !) and render it back.");
  m.def("adjoint",
        [](const std::string& c) { return pi::show(pi::adjoint(comb(c))); },
        py::arg("comb"), "Syntactic inverse of a combinator.");
  m.def("constants", [] {
          std::vector<std::string> out;
          for (pi::Prim p : pi::all_prims()) out.push_back(pi::prim_name(p));
          return out;
        },
        "Names of the primitive combinators.");

  // -- typing ---------------------------------------------------------------
  m.def("infer",
        [](const std::string& c, const std::string& dom) {
          return pi::show(pi::infer(comb(c), ty(dom)));
        },
        py::arg("comb"), py::arg("dom"),
        "Codomain of comb at the given domain; raises on mismatch or when "
        "the codomain is underdetermined.");
  m.def("type_checks",
        [](const std::string& c, const std::string& dom,
           const std::string& cod) {
          return pi::type_checks(comb(c), ty(dom), ty(cod));
        },
        py::arg("comb"), py::arg("dom"), py::arg("cod"),
        "Whether comb : dom <-> cod is derivable.");

  // -- running --------------------------------------------------------------
  m.def("run",
        [](const std::string& c, const std::string& v, bool reverse) {
          pi::CombPtr cc = comb(c);
          return pi::show(reverse ? pi::eval_rev(cc, val(v))
                                  : pi::eval(cc, val(v)));
        },
        py::arg("comb"), py::arg("value"), py::arg("reverse") = false,
        "Run a combinator on a value, forwards or backwards.");
  m.def("trace",
        [](const std::string& c, const std::string& v) {
          pi::Trace tr = pi::trace_eval(comb(c), val(v));
          py::dict out;
          out["input"] = pi::show(tr.input);
          py::list steps;
          for (const pi::TraceStep& s : tr.steps) {
            py::dict step;
            step["comb"] = pi::show(s.component);
            step["value"] = pi::show(s.value);
            steps.append(step);
          }
          out["steps"] = steps;
          out["result"] = pi::show(tr.result);
          return out;
        },
        py::arg("comb"), py::arg("value"),
        "Run and record one step per top-level composition component.");

  // -- finite types as enumerations -----------------------------------------
  m.def("size", [](const std::string& t) { return pi::size(ty(t)); },
        py::arg("type"), "Number of inhabitants.");
  m.def("enumerate_values",
        [](const std::string& t) {
          std::vector<std::string> out;
          for (const pi::ValPtr& v : pi::enumerate_vals(ty(t))) {
            out.push_back(pi::show(v));
          }
          return out;
        },
        py::arg("type"), "All values in canonical order.");
  m.def("rank",
        [](const std::string& t, const std::string& v) {
          return pi::rank(ty(t), val(v));
        },
        py::arg("type"), py::arg("value"),
        "Position of a value in the canonical enumeration.");
  m.def("unrank",
        [](const std::string& t, std::uint64_t i) {
          return pi::show(pi::unrank(ty(t), i));
        },
        py::arg("type"), py::arg("index"), "Inverse of rank.");

  // -- permutations ----------------------------------------------------------
  m.def("compile",
        [](const std::string& c, const std::string& dom, std::uint64_t cap) {
          return pi::compile(comb(c), ty(dom), cap);
        },
        py::arg("comb"), py::arg("dom"),
        py::arg("cap") = pi::kDefaultCompileCap,
        "Compile a combinator to the permutation it denotes on canonical "
        "ranks, in one-line notation.");
  m.def("gate_names", [] {
          std::vector<std::string> out;
          for (const auto& e : pi::gate_library()) out.push_back(e.first);
          return out;
        },
        "Names in the built-in gate library.");
  m.def("gate",
        [](const std::string& name) -> py::dict {
          const auto& lib = pi::gate_library();
          auto it = lib.find(name);
          if (it == lib.end()) {
            throw pi::ValueError("no gate named " + name);
          }
          py::dict out;
          if (it->second.perm) {
            out["kind"] = "perm";
            out["arity"] = it->second.perm->arity();
            out["perm"] = pi::to_dense(it->second.perm);
            out["text"] = pi::show_perm(it->second.perm);
          } else {
            out["kind"] = "comb";
            out["comb"] = pi::show(it->second.comb);
          }
          return out;
        },
        py::arg("name"), "Look up one gate from the built-in library.");

  // -- normalization ----------------------------------------------------------
  m.def("canonical_type",
        [](std::uint64_t n) { return pi::show(pi::canonical_type(n)); },
        py::arg("n"), "The canonical type with n inhabitants.");
  m.def("normalizer",
        [](const std::string& t) { return pi::show(pi::normalizer(ty(t))); },
        py::arg("type"),
        "A combinator from the type to its canonical form.");
  m.def("iso_exists",
        [](const std::string& a, const std::string& b) {
          return pi::iso_exists(ty(a), ty(b));
        },
        py::arg("type1"), py::arg("type2"),
        "Whether the two finite types are isomorphic (same size).");
  m.def("iso_witness",
        [](const std::string& a, const std::string& b) {
          return pi::show(pi::iso_witness(ty(a), ty(b)));
        },
        py::arg("type1"), py::arg("type2"),
        "An executable isomorphism between two same-size types.");

  // -- equivalences ------------------------------------------------------------
  m.def("obs_equiv",
        [](const std::string& c1, const std::string& c2,
           const std::string& dom, const std::string& cod,
           std::uint64_t cap) {
          if (cod.empty()) {
            return report_to_dict(
                pi::obs_equiv(comb(c1), comb(c2), ty(dom), cap));
          }
          return report_to_dict(
              pi::obs_equiv(comb(c1), comb(c2), ty(dom), ty(cod), cap));
        },
        py::arg("comb1"), py::arg("comb2"), py::arg("dom"),
        py::arg("cod") = "", py::arg("cap") = pi::kDefaultBruteForceCap,
        "Brute-force observational equivalence at a finite domain; pass cod "
        "to check at a stated codomain instead of inferring one.");
  m.def("rules", [] {
          std::vector<std::string> out;
          for (const pi::rw::Rule* r : pi::rw::rule_registry()) {
            out.push_back(r->name);
          }
          return out;
        },
        "Names of the registered rewrite rules (both directions).");
  m.def("registry_json", [] { return pi::rw::registry_dump_json(); },
        "The rule catalog as a JSON string.");
  m.def("rewrite",
        [](const std::string& r, const std::string& c, const std::string& dom) {
          pi::TyPtr d = dom.empty() ? nullptr : ty(dom);
          return pi::show(pi::rw::eval1(pi::rw::parse_rw(r), comb(c), d));
        },
        py::arg("rw"), py::arg("comb"), py::arg("dom") = std::string(),
        "Apply a rewrite expression to a combinator; pass dom to make the "
        "application type-directed.");
  m.def("check_proof",
        [](const std::string& text) {
          pi::rw::ProofReport rep =
              pi::rw::check_proof(pi::rw::parse_proof(text));
          py::dict out;
          out["accepted"] = rep.accepted;
          out["steps"] = rep.steps;
          out["failing_step"] = rep.failing_step;
          out["message"] = rep.message;
          return out;
        },
        py::arg("text"),
        "Parse and replay a proof script given as file contents.");
}
