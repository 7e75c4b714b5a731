#include "pprod/parser.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "pprod/errors.hpp"

namespace pprod {
namespace {

struct Syntax {
  enum class Kind { Number, Ident, Neg, Group, Mul, Add };
  Syntax(Kind k, std::size_t p) : kind(k), pos(p) {}
  Kind kind;
  std::size_t pos = 0;
  Rational value;
  std::string name;
  unsigned power = 1;
  std::vector<Syntax> kids;
  std::vector<bool> subtract;  // Add: per-kid sign, kid 0 always false
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Syntax parse() {
    Syntax e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  Syntax expr() {
    skip_ws();
    Syntax add{Syntax::Kind::Add, pos_};
    add.kids.push_back(term());
    add.subtract.push_back(false);
    while (true) {
      if (accept('+')) {
        add.kids.push_back(term());
        add.subtract.push_back(false);
      } else if (accept('-')) {
        add.kids.push_back(term());
        add.subtract.push_back(true);
      } else {
        break;
      }
    }
    if (add.kids.size() == 1) return std::move(add.kids.front());
    return add;
  }

  Syntax term() {
    skip_ws();
    Syntax mul{Syntax::Kind::Mul, pos_};
    mul.kids.push_back(factor());
    while (accept('*')) mul.kids.push_back(factor());
    skip_ws();
    if (pos_ < text_.size() && (ident_start(text_[pos_]) || text_[pos_] == '(' ||
                                std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
      fail("missing '*' (juxtaposition is not multiplication)");
    }
    if (mul.kids.size() == 1) return std::move(mul.kids.front());
    return mul;
  }

  Syntax factor() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      Syntax neg{Syntax::Kind::Neg, start};
      neg.kids.push_back(factor());
      return neg;
    }
    if (c == '(') {
      ++pos_;
      Syntax group{Syntax::Kind::Group, start};
      group.kids.push_back(expr());
      if (!accept(')')) fail("expected ')'");
      return group;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (accept('/')) {
        den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
      }
      Syntax n{Syntax::Kind::Number, start};
      n.value = Rational::parse(num + "/" + den);
      return n;
    }
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      Syntax id{Syntax::Kind::Ident, start};
      id.name = std::string(text_.substr(start, pos_ - start));
      if (accept('^')) {
        const std::size_t at = pos_;
        const std::string k = digits();
        if (k.size() > 6 || std::stoul(k) == 0) {
          pos_ = at;
          fail("exponent must be a positive integer");
        }
        id.power = static_cast<unsigned>(std::stoul(k));
      }
      return id;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Poly to_poly_syntax(const Syntax& s) {
  switch (s.kind) {
    case Syntax::Kind::Number:
      return Poly(s.value);
    case Syntax::Kind::Ident:
      return Poly::monomial(Monomial::variable(s.name, s.power));
    case Syntax::Kind::Neg:
      return -to_poly_syntax(s.kids.front());
    case Syntax::Kind::Group:
      return to_poly_syntax(s.kids.front());
    case Syntax::Kind::Mul: {
      Poly p(1);
      for (const auto& k : s.kids) p = p * to_poly_syntax(k);
      return p;
    }
    case Syntax::Kind::Add: {
      Poly p;
      for (std::size_t i = 0; i < s.kids.size(); ++i) {
        if (s.subtract[i]) {
          p -= to_poly_syntax(s.kids[i]);
        } else {
          p += to_poly_syntax(s.kids[i]);
        }
      }
      return p;
    }
  }
  return {};
}

// A factor denotes either a rational literal or a term.
std::optional<Rational> numeric(const Syntax& s) {
  if (s.kind == Syntax::Kind::Number) return s.value;
  if (s.kind == Syntax::Kind::Neg) {
    if (auto v = numeric(s.kids.front())) return -*v;
  }
  return std::nullopt;
}

Term to_term_syntax(const Syntax& s);

Term factor_term(const Syntax& s) {
  switch (s.kind) {
    case Syntax::Kind::Ident: {
      Term t = Term::variable(s.name);
      const Term base = t;
      for (unsigned i = 1; i < s.power; ++i) t = Term::product(t, base);
      return t;
    }
    case Syntax::Kind::Neg:
      return Term::scale(Rational(-1), factor_term(s.kids.front()));
    case Syntax::Kind::Group:
      return to_term_syntax(s.kids.front());
    default:
      return to_term_syntax(s);
  }
}

Term to_term_syntax(const Syntax& s) {
  switch (s.kind) {
    case Syntax::Kind::Add: {
      Term t = to_term_syntax(s.kids.front());
      for (std::size_t i = 1; i < s.kids.size(); ++i) {
        Term k = to_term_syntax(s.kids[i]);
        t = Term::sum(t, s.subtract[i] ? Term::scale(Rational(-1), k) : k);
      }
      return t;
    }
    case Syntax::Kind::Mul:
    case Syntax::Kind::Number:
    case Syntax::Kind::Neg:
    case Syntax::Kind::Ident:
    case Syntax::Kind::Group: {
      const std::vector<Syntax> single{s};
      const std::vector<Syntax>& factors = s.kind == Syntax::Kind::Mul ? s.kids : single;
      std::optional<Rational> scalar;
      std::optional<Term> body;
      for (const auto& f : factors) {
        if (auto v = numeric(f)) {
          scalar = scalar ? *scalar * *v : *v;
        } else {
          Term t = factor_term(f);
          body = body ? Term::product(*body, t) : t;
        }
      }
      if (!body) {
        if (scalar->is_zero()) return Term::zero();
        throw ParseError("nonzero constant '" + scalar->to_string() + "' is not a term", s.pos);
      }
      return scalar ? Term::scale(*scalar, *body) : *body;
    }
  }
  return {};
}

}  // namespace

Poly parse_poly(std::string_view text) { return to_poly_syntax(Parser(text).parse()); }

Term parse_term(std::string_view text) { return to_term_syntax(Parser(text).parse()); }

bool is_identifier(std::string_view text) {
  if (text.empty() || !ident_start(text.front())) return false;
  for (char c : text) {
    if (!ident_char(c)) return false;
  }
  return true;
}

}  // namespace pprod
