#include "pi/parser.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace pi {

namespace {

/// Character cursor with line:col error reporting.
class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!try_eat(c)) {
      fail(std::string("expected '") + c + "' " + what);
    }
  }

  /// Longest-match over a fixed word list; words may contain + and *.
  /// A match is rejected when followed by an identifier character, so
  /// "dist" never matches a prefix of "distx".
  std::optional<std::string> try_word(const std::vector<std::string>& words) {
    skip_ws();
    const std::string* best = nullptr;
    for (const auto& w : words) {
      if (text_.compare(pos_, w.size(), w) == 0) {
        std::size_t end = pos_ + w.size();
        if (end < text_.size() &&
            std::isalnum(static_cast<unsigned char>(text_[end])) &&
            std::isalnum(static_cast<unsigned char>(w.back()))) {
          continue;  // identifier continues past the word
        }
        if (!best || w.size() > best->size()) best = &w;
      }
    }
    if (!best) return std::nullopt;
    pos_ += best->size();
    return *best;
  }

  /// Reads an identifier-ish run for error messages.
  std::string snippet() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() &&
           !std::isspace(static_cast<unsigned char>(text_[end])) &&
           std::string("();,").find(text_[end]) == std::string::npos) {
      ++end;
    }
    if (end == pos_ && pos_ < text_.size()) end = pos_ + 1;
    return text_.substr(pos_, std::min<std::size_t>(end - pos_, 24));
  }

  [[noreturn]] void fail(const std::string& message) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(message + " at line " + std::to_string(line) + ", column " +
                     std::to_string(col));
  }

  void end(const char* what) {
    if (!done()) fail(std::string("trailing input after ") + what);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- types ---

TyPtr ty_expr(Cursor& cur);

TyPtr ty_atom(Cursor& cur) {
  if (cur.try_eat('0')) return Ty::zero();
  if (cur.try_eat('1')) return Ty::one();
  if (cur.try_eat('(')) {
    TyPtr t = ty_expr(cur);
    cur.expect(')', "to close a type group");
    return t;
  }
  cur.fail("expected a type (0, 1, or a parenthesized type), found '" +
           cur.snippet() + "'");
}

TyPtr ty_factor(Cursor& cur) {
  TyPtr l = ty_atom(cur);
  if (cur.try_eat('*')) return Ty::prod(std::move(l), ty_factor(cur));
  return l;
}

TyPtr ty_expr(Cursor& cur) {
  TyPtr l = ty_factor(cur);
  if (cur.try_eat('+')) return Ty::sum(std::move(l), ty_expr(cur));
  return l;
}

// --------------------------------------------------------------- values ---

ValPtr val_expr(Cursor& cur) {
  static const std::vector<std::string> kInj = {"inl", "inr"};
  if (auto w = cur.try_word(kInj)) {
    ValPtr inner = val_expr(cur);
    return (*w == "inl") ? Val::inl(std::move(inner))
                         : Val::inr(std::move(inner));
  }
  if (cur.try_eat('(')) {
    if (cur.try_eat(')')) return Val::unit();
    ValPtr first = val_expr(cur);
    if (cur.try_eat(',')) {
      ValPtr second = val_expr(cur);
      cur.expect(')', "to close a pair");
      return Val::pair(std::move(first), std::move(second));
    }
    cur.expect(')', "to close a value group");
    return first;
  }
  cur.fail("expected a value ((), inl v, inr v, or a pair), found '" +
           cur.snippet() + "'");
}

// ---------------------------------------------------------- combinators ---

const std::vector<std::string>& prim_words() {
  static const std::vector<std::string> words = [] {
    std::vector<std::string> w;
    for (Prim p : all_prims()) w.push_back(prim_name(p));
    return w;
  }();
  return words;
}

CombPtr comb_seq(Cursor& cur);

CombPtr comb_atom(Cursor& cur) {
  if (cur.try_eat('!')) return adjoint(comb_atom(cur));
  if (cur.try_eat('(')) {
    CombPtr c = comb_seq(cur);
    cur.expect(')', "to close a combinator group");
    return c;
  }
  if (auto w = cur.try_word(prim_words())) {
    return Comb::prim(*prim_by_name(*w));
  }
  cur.fail("expected a combinator constant, '!', or '(', found '" +
           cur.snippet() + "'");
}

CombPtr comb_times(Cursor& cur) {
  CombPtr l = comb_atom(cur);
  if (cur.try_eat('*')) return Comb::times(std::move(l), comb_times(cur));
  return l;
}

CombPtr comb_plus(Cursor& cur) {
  CombPtr l = comb_times(cur);
  if (cur.try_eat('+')) return Comb::plus(std::move(l), comb_plus(cur));
  return l;
}

CombPtr comb_seq(Cursor& cur) {
  CombPtr l = comb_plus(cur);
  if (cur.try_eat(';')) return Comb::seq(std::move(l), comb_seq(cur));
  return l;
}

std::string strip_comments(const std::string& text) {
  std::string out;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      in_comment = false;
      out += c;
    } else if (in_comment) {
      // drop
    } else if (c == '#') {
      in_comment = true;
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

TyPtr parse_ty(const std::string& text) {
  Cursor cur(text);
  TyPtr t = ty_expr(cur);
  cur.end("type");
  return t;
}

ValPtr parse_val(const std::string& text) {
  Cursor cur(text);
  ValPtr v = val_expr(cur);
  cur.end("value");
  return v;
}

CombPtr parse_comb(const std::string& text) {
  Cursor cur(text);
  CombPtr c = comb_seq(cur);
  cur.end("combinator");
  return c;
}

Program parse_program(const std::string& text) {
  std::string body = strip_comments(text);
  Program prog;

  // Optional "type: <ty> <-> <ty>" header on its own line.
  std::size_t start = 0;
  while (start < body.size()) {
    std::size_t line_end = body.find('\n', start);
    if (line_end == std::string::npos) line_end = body.size();
    std::string line = body.substr(start, line_end - start);
    std::size_t ws = line.find_first_not_of(" \t\r");
    if (ws == std::string::npos) {
      start = line_end + 1;
      continue;  // blank line before the header or body
    }
    if (line.compare(ws, 5, "type:") == 0) {
      std::string header = line.substr(ws + 5);
      std::size_t arrow = header.find("<->");
      if (arrow == std::string::npos) {
        throw ParseError("type header must have the form 'type: t1 <-> t2'");
      }
      prog.dom = parse_ty(header.substr(0, arrow));
      prog.cod = parse_ty(header.substr(arrow + 3));
      start = line_end + 1;
    }
    break;
  }

  std::string rest = start <= body.size() ? body.substr(start) : std::string();
  if (rest.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw ParseError("program file has no combinator expression");
  }
  prog.comb = parse_comb(rest);
  return prog;
}

}  // namespace pi
