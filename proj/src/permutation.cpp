#include "pi/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "pi/semantics.hpp"

namespace pi {

PermProgPtr PermProg::id(std::uint64_t n) {
  return PermProgPtr(new PermProg(PermKind::Id, n, 0, 0, nullptr, nullptr));
}

PermProgPtr PermProg::swap(std::uint64_t n, std::uint64_t i, std::uint64_t j) {
  if (i == j) {
    throw ArityError("swap indices must differ, got swap " +
                     std::to_string(i) + " " + std::to_string(j));
  }
  if (i >= n || j >= n) {
    throw ArityError("swap " + std::to_string(i) + " " + std::to_string(j) +
                     " is out of range for arity " + std::to_string(n));
  }
  return PermProgPtr(new PermProg(PermKind::Swap, n, i, j, nullptr, nullptr));
}

PermProgPtr PermProg::seq(PermProgPtr p, PermProgPtr q) {
  if (p->arity() != q->arity()) {
    throw ArityError("cannot compose permutations of arity " +
                     std::to_string(p->arity()) + " and " +
                     std::to_string(q->arity()));
  }
  std::uint64_t n = p->arity();
  return PermProgPtr(
      new PermProg(PermKind::Seq, n, 0, 0, std::move(p), std::move(q)));
}

std::uint64_t papply(const PermProgPtr& p, std::uint64_t k) {
  if (k >= p->arity()) {
    throw ArityError("index " + std::to_string(k) +
                     " out of range for arity " + std::to_string(p->arity()));
  }
  switch (p->kind()) {
    case PermKind::Id:
      return k;
    case PermKind::Swap:
      if (k == p->i()) return p->j();
      if (k == p->j()) return p->i();
      return k;
    case PermKind::Seq:
      return papply(p->right(), papply(p->left(), k));
  }
  throw std::logic_error("unknown permutation kind");
}

PermDense to_dense(const PermProgPtr& p) {
  PermDense out(static_cast<std::size_t>(p->arity()));
  std::iota(out.begin(), out.end(), 0);
  // Apply the program left-to-right over the whole table; one pass per
  // primitive node keeps this linear in program size times arity.
  struct Rec {
    static void go(const PermProgPtr& p, PermDense& table) {
      switch (p->kind()) {
        case PermKind::Id:
          return;
        case PermKind::Swap:
          for (auto& x : table) {
            if (x == p->i()) {
              x = p->j();
            } else if (x == p->j()) {
              x = p->i();
            }
          }
          return;
        case PermKind::Seq:
          go(p->left(), table);
          go(p->right(), table);
          return;
      }
    }
  };
  Rec::go(p, out);
  return out;
}

PermProgPtr pinvert(const PermProgPtr& p) {
  switch (p->kind()) {
    case PermKind::Id:
    case PermKind::Swap:
      return p;
    case PermKind::Seq:
      return PermProg::seq(pinvert(p->right()), pinvert(p->left()));
  }
  throw std::logic_error("unknown permutation kind");
}

PermDense pinvert(const PermDense& p) {
  PermDense out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[static_cast<std::size_t>(p[k])] = k;
  }
  return out;
}

PermProgPtr pcompose(PermProgPtr p, PermProgPtr q) {
  return PermProg::seq(std::move(p), std::move(q));
}

PermDense pcompose(const PermDense& p, const PermDense& q) {
  if (p.size() != q.size()) {
    throw ArityError("cannot compose dense permutations of sizes " +
                     std::to_string(p.size()) + " and " +
                     std::to_string(q.size()));
  }
  PermDense out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] = q[static_cast<std::size_t>(p[k])];
  }
  return out;
}

bool is_permutation(const PermDense& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::uint64_t x : p) {
    if (x >= p.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

std::string show_dense(const PermDense& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(p[k]);
  }
  out += "]";
  return out;
}

std::string show_perm(const PermProgPtr& p) {
  switch (p->kind()) {
    case PermKind::Id:
      return "id";
    case PermKind::Swap:
      return "swap " + std::to_string(p->i()) + " " + std::to_string(p->j());
    case PermKind::Seq:
      return show_perm(p->left()) + " ; " + show_perm(p->right());
  }
  throw std::logic_error("unknown permutation kind");
}

PermProgPtr parse_perm(const std::string& text) {
  // Strip comments, split into tokens.
  std::string clean;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      in_comment = false;
      clean += '\n';
    } else if (in_comment) {
      // drop
    } else if (c == '#') {
      in_comment = true;
    } else {
      clean += c;
    }
  }

  std::istringstream in(clean);
  std::string tok;
  if (!(in >> tok) || tok != "arity:") {
    // Allow "arity: 4" as two tokens or "arity:4" as one.
    if (tok.rfind("arity:", 0) != 0) {
      throw ParseError("permutation file must start with 'arity: <n>'");
    }
  }
  std::uint64_t n = 0;
  if (tok == "arity:") {
    if (!(in >> n)) throw ParseError("expected an arity after 'arity:'");
  } else {
    try {
      n = std::stoull(tok.substr(6));
    } catch (const std::exception&) {
      throw ParseError("expected an arity after 'arity:'");
    }
  }

  PermProgPtr prog;
  auto append = [&](PermProgPtr step) {
    prog = prog ? PermProg::seq(std::move(prog), std::move(step))
                : std::move(step);
  };

  while (in >> tok) {
    if (tok == ";") continue;
    if (tok == "id") {
      append(PermProg::id(n));
      continue;
    }
    if (tok == "swap") {
      std::uint64_t i = 0, j = 0;
      if (!(in >> i >> j)) {
        throw ParseError("swap needs two indices, e.g. 'swap 0 1'");
      }
      append(PermProg::swap(n, i, j));
      continue;
    }
    // Accept "swap;" style glued separators.
    if (!tok.empty() && tok.back() == ';') {
      throw ParseError("separate ';' from tokens with whitespace (got '" +
                       tok + "')");
    }
    throw ParseError("unknown permutation token '" + tok + "'");
  }
  if (!prog) prog = PermProg::id(n);
  return prog;
}

// ---------------------------------------------------------------------------
// Compilation of combinators to dense permutations over canonical ranks.
// Every constant has a closed-form index map; composite combinators compose
// blockwise. No combinator is ever evaluated here.
// ---------------------------------------------------------------------------

namespace {

PermDense iota_perm(std::uint64_t n) {
  PermDense out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

PermDense compile_prim(Prim p, const TyPtr& b, std::uint64_t n) {
  switch (p) {
    case Prim::SwapPlus: {
      // Block rotation: the left summand's m ranks move past the right's.
      std::uint64_t m = size(b->left());
      std::uint64_t r = size(b->right());
      PermDense out(static_cast<std::size_t>(n));
      for (std::uint64_t k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = k < m ? k + r : k - m;
      }
      return out;
    }
    case Prim::SwapTimes: {
      // Transpose the m x r grid.
      std::uint64_t m = size(b->left());
      std::uint64_t r = size(b->right());
      PermDense out(static_cast<std::size_t>(n));
      for (std::uint64_t i = 0; i < m; ++i) {
        for (std::uint64_t j = 0; j < r; ++j) {
          out[static_cast<std::size_t>(i * r + j)] = j * m + i;
        }
      }
      return out;
    }
    case Prim::Distl: {
      // b = t1 * (t2 + t3): row i, column s. Columns below |t2| land in the
      // left block, the rest in the right block.
      std::uint64_t m = size(b->left());
      std::uint64_t n2 = size(b->right()->left());
      std::uint64_t p3 = size(b->right()->right());
      PermDense out(static_cast<std::size_t>(n));
      for (std::uint64_t i = 0; i < m; ++i) {
        for (std::uint64_t s = 0; s < n2 + p3; ++s) {
          std::uint64_t k = i * (n2 + p3) + s;
          out[static_cast<std::size_t>(k)] =
              s < n2 ? i * n2 + s : m * n2 + i * p3 + (s - n2);
        }
      }
      return out;
    }
    case Prim::Factorl: {
      // Inverse of distl at b = (t1 * t2) + (t1 * t3).
      std::uint64_t m = size(b->left()->left());
      std::uint64_t n2 = size(b->left()->right());
      std::uint64_t p3 = size(b->right()->right());
      PermDense out(static_cast<std::size_t>(n));
      for (std::uint64_t k = 0; k < n; ++k) {
        std::uint64_t dst;
        if (k < m * n2) {
          dst = (k / n2) * (n2 + p3) + (k % n2);
        } else {
          std::uint64_t k2 = k - m * n2;
          dst = (k2 / p3) * (n2 + p3) + n2 + (k2 % p3);
        }
        out[static_cast<std::size_t>(k)] = dst;
      }
      return out;
    }
    default:
      // All remaining constants preserve canonical ranks: the unit laws
      // drop or add empty/unit structure, the associators reassociate
      // without reordering, dist/factor split contiguous blocks, and the
      // zero maps have empty domains.
      return iota_perm(n);
  }
}

PermDense compile_rec(const CombPtr& c, const TyPtr& b) {
  std::uint64_t n = size(b);
  // Empty domains compile to the empty permutation; this also covers
  // factorzl/factorzr, whose codomain the type alone does not determine.
  if (n == 0) return {};
  switch (c->kind()) {
    case CombKind::Prim:
      return compile_prim(c->prim(), b, n);
    case CombKind::Seq: {
      TyPtr mid = infer_fill_zero(c->left(), b);
      PermDense va = compile_rec(c->left(), b);
      PermDense vb = compile_rec(c->right(), mid);
      return pcompose(va, vb);
    }
    case CombKind::Plus: {
      PermDense vl = compile_rec(c->left(), b->left());
      PermDense vr = compile_rec(c->right(), b->right());
      std::uint64_t m = vl.size();
      PermDense out(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < vl.size(); ++k) out[k] = vl[k];
      for (std::size_t k = 0; k < vr.size(); ++k) {
        out[static_cast<std::size_t>(m + k)] = m + vr[k];
      }
      return out;
    }
    case CombKind::Times: {
      PermDense vl = compile_rec(c->left(), b->left());
      PermDense vr = compile_rec(c->right(), b->right());
      std::uint64_t r = vr.size();
      PermDense out(static_cast<std::size_t>(n));
      for (std::uint64_t i = 0; i < vl.size(); ++i) {
        for (std::uint64_t j = 0; j < r; ++j) {
          out[static_cast<std::size_t>(i * r + j)] = vl[i] * r + vr[j];
        }
      }
      return out;
    }
  }
  throw std::logic_error("unknown combinator kind");
}

}  // namespace

PermDense compile(const CombPtr& c, const TyPtr& b, std::uint64_t cap) {
  infer_partial(c, b);  // reject ill-typed terms before tabulating
  std::uint64_t n = size(b);
  if (n > cap) {
    throw RefusedTooLargeError("domain " + show(b) + " has " +
                               std::to_string(n) +
                               " values, above the compile cap of " +
                               std::to_string(cap));
  }
  return compile_rec(c, b);
}

}  // namespace pi
