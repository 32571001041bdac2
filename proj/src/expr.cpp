#include "behrend/expr.hpp"

#include <cctype>
#include <optional>

#include "behrend/normal_factor.hpp"

namespace behrend {

namespace {

const char* kDimensionThree =
    "only the two variables x and y are supported: in dimension 3 the exceptional divisor "
    "of a monomial blowup is not read off a Newton polygon, so none of these formulas apply";

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  IdealExpr parse_all() {
    IdealExpr e = expr();
    ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }
  std::string word() {
    ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  void expect_word(std::string_view w) {
    std::size_t start = pos_;
    if (word() != w) {
      pos_ = start;
      ws();
      fail("expected '" + std::string(w) + "'");
    }
  }
  Int integer() {
    ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  IdealExpr expr() {
    IdealExpr left = term();
    while (accept('*')) {
      IdealExpr node;
      node.kind = IdealExpr::Kind::Product;
      node.position = left.position;
      node.operands.push_back(std::move(left));
      node.operands.push_back(term());
      left = std::move(node);
    }
    return left;
  }

  IdealExpr term() {
    IdealExpr base = atom();
    while (accept('^')) {
      IdealExpr node;
      node.kind = IdealExpr::Kind::Power;
      node.position = base.position;
      node.exponent = integer();
      node.operands.push_back(std::move(base));
      base = std::move(node);
    }
    return base;
  }

  IdealExpr atom() {
    IdealExpr e;
    char c = peek();
    e.position = pos_;
    if (c == '(') {
      if (auto gens = monomial_list()) {
        e.kind = IdealExpr::Kind::List;
        e.generators = std::move(*gens);
        return e;
      }
      expect('(');
      IdealExpr inner = expr();
      expect(')');
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      if (c == '\0') fail("unexpected end of input");
      fail("unexpected '" + std::string(1, c) + "'");
    }
    const std::size_t start = pos_;
    std::string w = word();
    if (w == "m") {
      e.kind = IdealExpr::Kind::Maximal;
    } else if (w == "n") {
      e.kind = IdealExpr::Kind::Nab;
      expect('(');
      e.a = integer();
      expect(',');
      e.b = integer();
      expect(')');
    } else if (w == "tower") {
      e.kind = IdealExpr::Kind::TowerLiteral;
      e.tower = tower();
    } else if (w.find('z') != std::string::npos) {
      throw UnsupportedError(kDimensionThree);
    } else {
      pos_ = start;
      if (w == "x" || w == "y" || w == "xy")
        fail("monomials must be written inside a generator list, e.g. (x^2, y)");
      fail("unknown name '" + w + "'");
    }
    return e;
  }

  Tower tower() {
    expect('(');
    ws();
    const std::size_t branch_pos = pos_;
    std::string v = word();
    Branch branch;
    if (v == "x") {
      branch = Branch::X;
    } else if (v == "y") {
      branch = Branch::Y;
    } else {
      pos_ = branch_pos;
      if (v == "z") throw UnsupportedError(kDimensionThree);
      fail("tower branch must be x or y");
    }
    expect(';');
    expect_word("g");
    expect('=');
    Polynomial g = polynomial(branch == Branch::X ? 'y' : 'x');
    expect(';');
    expect_word("exps");
    expect('=');
    expect('[');
    std::vector<Int> exps{integer()};
    while (accept(',')) exps.push_back(integer());
    expect(']');
    expect(')');
    return make_tower(branch, std::move(g), std::move(exps));
  }

  Polynomial polynomial(char var) {
    Polynomial g;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept('-')) {
        sign = -1;
      } else if (!first && !accept('+')) {
        break;
      } else if (first) {
        accept('+');
      }
      first = false;
      Rational coeff = 1;
      bool has_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Int num = integer();
        Int den = 1;
        if (accept('/')) den = integer();
        if (den == 0) fail("zero denominator");
        coeff = Rational(num, den);
        has_coeff = true;
        accept('*');
      }
      std::size_t degree = 0;
      char c = peek();
      if (c == var) {
        ++pos_;
        degree = 1;
        if (accept('^')) degree = to_index(integer(), "tangent degree");
      } else if (c == 'x' || c == 'y' || c == 'z') {
        if (c == 'z') throw UnsupportedError(kDimensionThree);
        fail(std::string("the tangent g must be a polynomial in ") + var);
      } else if (!has_coeff) {
        fail("expected a term of g");
      }
      if (g.size() <= degree) g.resize(degree + 1, Rational(0));
      g[degree] += sign * coeff;
    }
    trim(g);
    return g;
  }

  std::optional<Exponent> monomial() {
    Exponent e{0, 0};
    bool any = false;
    while (true) {
      char c = peek();
      if (any && c == '*') {
        std::size_t save = pos_;
        ++pos_;
        char d = peek();
        if (d != 'x' && d != 'y' && d != 'z' && d != '1') {
          pos_ = save;
          break;
        }
        c = d;
      }
      if (c == 'x' || c == 'y') {
        ++pos_;
        Int k = 1;
        if (accept('^')) k = integer();
        (c == 'x' ? e.a : e.b) += k;
        any = true;
      } else if (c == 'z') {
        throw UnsupportedError(kDimensionThree);
      } else if (c == '1' && !any) {
        ++pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return std::nullopt;
        any = true;
      } else {
        break;
      }
    }
    if (!any) return std::nullopt;
    return e;
  }

  // A parenthesis opening with a monomial is a generator list; anything
  // else is a parenthesized expression.
  std::optional<std::vector<Exponent>> monomial_list() {
    const std::size_t save = pos_;
    expect('(');
    auto first = monomial();
    if (!first) {
      pos_ = save;
      return std::nullopt;
    }
    std::vector<Exponent> gens{*first};
    while (accept(',')) {
      auto next = monomial();
      if (!next) fail("expected a monomial in x and y");
      gens.push_back(*next);
    }
    if (peek() != ')') fail("expected ',' or ')' in the generator list");
    ++pos_;
    return gens;
  }
};

Value from_ideal(const MonomialIdeal& I) {
  const auto g = minimal_generators(I).generators();
  // sorted by a ascending: (0, k), (1, 0) or (0, 1), (k, 0)
  if (g.size() == 2 && g[0].a == 0 && g[1].b == 0) {
    if (g[1].a == 1 && g[0].b >= 1)
      return FactorProduct{{TowerPart{make_tower(Branch::X, {}, {g[0].b}), 1}}};
    if (g[0].b == 1 && g[1].a >= 1)
      return FactorProduct{{TowerPart{make_tower(Branch::Y, {}, {g[1].a}), 1}}};
  }
  return minimal_generators(I);
}

FactorProduct multiply(FactorProduct p, const FactorProduct& q) {
  for (const auto& part : q.parts) {
    auto same = std::find_if(p.parts.begin(), p.parts.end(),
                             [&](const TowerPart& t) { return t.tower == part.tower; });
    if (same != p.parts.end()) {
      same->power += part.power;
    } else {
      p.parts.push_back(part);
    }
  }
  return p;
}

}  // namespace

bool FactorProduct::is_monomial() const {
  return std::all_of(parts.begin(), parts.end(),
                     [](const TowerPart& p) { return p.tower.is_monomial(); });
}

std::vector<TowerFactor> FactorProduct::factors() const {
  std::vector<TowerFactor> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Tower& t = parts[i].tower;
    for (const auto& k : t.exponents) out.push_back({t.branch, t.tangent, k, parts[i].power, i});
  }
  return out;
}

IdealExpr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string caret_diagnostic(std::string_view text, const ParseError& e) {
  std::string out = "error: ";
  out += e.what();
  out += "\n  ";
  out += text;
  out += "\n  ";
  out += std::string(std::min(e.position(), text.size()), ' ');
  out += "^";
  return out;
}

Value elaborate(const IdealExpr& e) {
  switch (e.kind) {
    case IdealExpr::Kind::List:
      return from_ideal(MonomialIdeal(e.generators));
    case IdealExpr::Kind::Maximal:
      return from_ideal(MonomialIdeal::maximal());
    case IdealExpr::Kind::Nab:
      return from_ideal(n_ab(e.a, e.b));
    case IdealExpr::Kind::TowerLiteral:
      return FactorProduct{{TowerPart{e.tower, 1}}};
    case IdealExpr::Kind::Power: {
      Value base = elaborate(e.operands[0]);
      if (e.exponent == 0) return MonomialIdeal::unit();
      if (auto* I = std::get_if<MonomialIdeal>(&base)) return from_ideal(power(*I, e.exponent));
      FactorProduct p = std::get<FactorProduct>(base);
      for (auto& part : p.parts) part.power *= e.exponent;
      return p;
    }
    case IdealExpr::Kind::Product: {
      Value l = elaborate(e.operands[0]);
      Value r = elaborate(e.operands[1]);
      auto* pl = std::get_if<FactorProduct>(&l);
      auto* pr = std::get_if<FactorProduct>(&r);
      if (pl && pr) return multiply(*pl, *pr);
      if ((pl && !pl->is_monomial()) || (pr && !pr->is_monomial()))
        throw UnsupportedError(
            "a non-monomial tower can only be multiplied by towers, m or lists of the form "
            "(x, y^k); no engine covers its product with " +
            to_string(pl ? r : l));
      return from_ideal(product(monomial_ideal(l), monomial_ideal(r)));
    }
  }
  throw std::logic_error("unknown expression kind");
}

Value evaluate(std::string_view text) { return elaborate(parse(text)); }

MonomialIdeal monomial_ideal(const Value& v) {
  if (auto* I = std::get_if<MonomialIdeal>(&v)) return *I;
  const auto& p = std::get<FactorProduct>(v);
  if (!p.is_monomial())
    throw UnsupportedError(to_string(p) +
                           " is not monomial; this command needs a monomial ideal");
  return expand(p.factors());
}

std::string to_string(const FactorProduct& p) {
  std::string s;
  for (const auto& part : p.parts) {
    if (!s.empty()) s += " * ";
    s += to_string(part.tower);
    if (part.power != 1) s += "^" + to_string(part.power);
  }
  return s;
}

std::string to_string(const Value& v) {
  if (auto* I = std::get_if<MonomialIdeal>(&v)) return to_string(*I);
  return to_string(std::get<FactorProduct>(v));
}

}  // namespace behrend
