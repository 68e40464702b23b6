#include "gct/formula.hpp"

#include <algorithm>
#include <cctype>

namespace gct {

bool Formula::operator==(const Formula& o) const {
  return kind == o.kind && label == o.label && time == o.time && number == o.number &&
         thresholded == o.thresholded && kids == o.kids;
}

Formula f_top() { return Formula{}; }

Formula f_not(Formula a) {
  Formula f;
  f.kind = FormulaKind::Not;
  f.kids.push_back(std::move(a));
  return f;
}

Formula f_and(Formula a, Formula b) {
  Formula f;
  f.kind = FormulaKind::And;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}

Formula f_plus(const Rational& p, Formula a, Formula b) {
  Formula f;
  f.kind = FormulaKind::Plus;
  f.number = p;
  f.kids.push_back(std::move(a));
  f.kids.push_back(std::move(b));
  return f;
}

Formula f_obs(const std::string& label, Formula a) {
  Formula f;
  f.kind = FormulaKind::Obs;
  f.label = label;
  f.kids.push_back(std::move(a));
  return f;
}

Formula f_obs_ge(const std::string& label, const Rational& p, Formula a) {
  Formula f = f_obs(label, std::move(a));
  f.thresholded = true;
  f.number = p;
  return f;
}

Formula f_time(const Rational& r, Formula a) {
  Formula f;
  f.kind = FormulaKind::Time;
  f.time = r;
  f.kids.push_back(std::move(a));
  return f;
}

Formula f_time_ge(const Rational& r, const Rational& p, Formula a) {
  Formula f = f_time(r, std::move(a));
  f.thresholded = true;
  f.number = p;
  return f;
}

namespace {

void walk_instance(const Formula& f, InstanceResult& r) {
  auto mark = [&](LogicInstance want) {
    if (r.error) return;
    if (r.instance == LogicInstance::Either)
      r.instance = want;
    else if (r.instance != want)
      r.error = "formula mixes Boolean and quantitative connectives";
  };
  switch (f.kind) {
    case FormulaKind::Top: break;
    case FormulaKind::Not:
    case FormulaKind::And: mark(LogicInstance::Boolean); break;
    case FormulaKind::Plus: mark(LogicInstance::Quantitative); break;
    case FormulaKind::Obs:
    case FormulaKind::Time:
      mark(f.thresholded ? LogicInstance::Boolean : LogicInstance::Quantitative);
      break;
  }
  for (const Formula& k : f.kids) walk_instance(k, r);
}

}  // namespace

InstanceResult formula_instance(const Formula& f) {
  InstanceResult r;
  walk_instance(f, r);
  return r;
}

std::string print_formula(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Top: return "T";
    case FormulaKind::Not: return "!" + print_formula(f.kids[0]);
    case FormulaKind::And:
      return "(" + print_formula(f.kids[0]) + "&" + print_formula(f.kids[1]) + ")";
    case FormulaKind::Plus:
      return "(" + print_formula(f.kids[0]) + "+_{" + format_rational(f.number) + "}" +
             print_formula(f.kids[1]) + ")";
    case FormulaKind::Obs:
      return "(" + f.label + ")" + (f.thresholded ? "_{" + format_rational(f.number) + "}" : "") +
             print_formula(f.kids[0]);
    case FormulaKind::Time:
      return "<" + format_rational(f.time) + ">" +
             (f.thresholded ? "_{" + format_rational(f.number) + "}" : "") +
             print_formula(f.kids[0]);
  }
  return "?";
}

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

bool number_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.';
}

struct Parser {
  const std::string& s;
  const std::vector<std::string>& labels;
  std::size_t p = 0;
  bool failed = false;
  ParseError err;
  std::optional<std::size_t> bool_at, quant_at;

  explicit Parser(const std::string& text, const std::vector<std::string>& alphabet)
      : s(text), labels(alphabet) {}

  void fail(std::size_t at, const std::string& msg) {
    if (failed) return;
    failed = true;
    err = {at, msg};
  }

  void skip_ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }

  char peek() {
    skip_ws();
    return p < s.size() ? s[p] : '\0';
  }

  void expect(char c, const std::string& what) {
    if (peek() == c) {
      ++p;
      return;
    }
    fail(p, "expected '" + std::string(1, c) + "' " + what);
  }

  void mark_boolean(std::size_t at) {
    if (!bool_at) bool_at = at;
    if (quant_at) fail(std::max(at, *quant_at), "mixes Boolean and quantitative connectives");
  }

  void mark_quantitative(std::size_t at) {
    if (!quant_at) quant_at = at;
    if (bool_at) fail(std::max(at, *bool_at), "mixes Boolean and quantitative connectives");
  }

  Rational number(bool unit_interval, const std::string& what) {
    skip_ws();
    std::size_t start = p;
    while (p < s.size() && number_char(s[p])) ++p;
    if (p == start) {
      fail(start, "expected " + what);
      return Rational(0);
    }
    auto r = parse_rational(s.substr(start, p - start));
    if (!r) {
      fail(start, "malformed " + what);
      return Rational(0);
    }
    if (unit_interval && (*r < 0 || *r > 1)) {
      fail(start, what + " must lie in [0,1]");
      return Rational(0);
    }
    return *r;
  }

  // After a modality: '_' p or '_' '{' p '}'.
  std::optional<Rational> threshold() {
    if (peek() != '_') return std::nullopt;
    ++p;
    bool braced = peek() == '{';
    if (braced) ++p;
    Rational r = number(true, "threshold");
    if (braced) expect('}', "after threshold");
    return r;
  }

  Formula unary() {
    if (failed) return f_top();
    char c = peek();
    std::size_t at = p;
    if (c == '\0') {
      fail(p, "expected formula");
      return f_top();
    }
    if (c == 'T') {
      ++p;
      if (p < s.size() && ident_char(s[p])) fail(p, "unexpected characters after T");
      return f_top();
    }
    if (c == '!') {
      mark_boolean(at);
      ++p;
      return f_not(unary());
    }
    if (c == '<') {
      ++p;
      Rational r = number(false, "time");
      if (r < 0) fail(at + 1, "time must be >= 0");
      expect('>', "closing the time modality");
      if (auto q = threshold()) {
        mark_boolean(at);
        return f_time_ge(r, *q, unary());
      }
      mark_quantitative(at);
      return f_time(r, unary());
    }
    if (c == '(') {
      // '(' label ')' is a modality when the label is known; otherwise the
      // parenthesis groups a subformula.
      std::size_t q = p + 1;
      while (q < s.size() && std::isspace(static_cast<unsigned char>(s[q]))) ++q;
      std::size_t ident_start = q;
      while (q < s.size() && ident_char(s[q])) ++q;
      std::string ident = s.substr(ident_start, q - ident_start);
      std::size_t after = q;
      while (after < s.size() && std::isspace(static_cast<unsigned char>(s[after]))) ++after;
      bool closes = after < s.size() && s[after] == ')';
      bool known = !ident.empty() &&
                   std::find(labels.begin(), labels.end(), ident) != labels.end();
      if (closes && known) {
        p = after + 1;
        if (auto thr = threshold()) {
          mark_boolean(at);
          return f_obs_ge(ident, *thr, unary());
        }
        mark_quantitative(at);
        return f_obs(ident, unary());
      }
      if (closes && !ident.empty() && ident != "T") {
        fail(ident_start, "unknown label '" + ident + "'");
        return f_top();
      }
      ++p;
      Formula inner = binary();
      expect(')', "closing the group");
      return inner;
    }
    fail(at, "expected formula");
    return f_top();
  }

  Formula binary() {
    Formula lhs = unary();
    while (!failed) {
      char c = peek();
      if (c == '&') {
        mark_boolean(p);
        ++p;
        Formula rhs = unary();
        lhs = f_and(std::move(lhs), std::move(rhs));
      } else if (c == '+') {
        mark_quantitative(p);
        ++p;
        if (peek() != '_') {
          fail(p, "expected '_' with a mixing weight after '+'");
          break;
        }
        auto q = threshold();
        Formula rhs = unary();
        lhs = f_plus(q ? *q : Rational(0), std::move(lhs), std::move(rhs));
      } else {
        break;
      }
    }
    return lhs;
  }
};

}  // namespace

ParseResult parse_formula(const std::string& text, const std::vector<std::string>& labels) {
  Parser parser(text, labels);
  Formula f = parser.binary();
  parser.skip_ws();
  if (!parser.failed && parser.p != text.size())
    parser.fail(parser.p, "unexpected trailing input");
  ParseResult res;
  if (parser.failed)
    res.error = parser.err;
  else
    res.formula = std::move(f);
  return res;
}

DepthResult uniform_depth(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Top: return {SamplingWord{}, ""};
    case FormulaKind::Not: return uniform_depth(f.kids[0]);
    case FormulaKind::And:
    case FormulaKind::Plus: {
      DepthResult a = uniform_depth(f.kids[0]);
      if (!a.depth) return a;
      DepthResult b = uniform_depth(f.kids[1]);
      if (!b.depth) return b;
      if (*a.depth != *b.depth) return {std::nullopt, print_formula(f)};
      return a;
    }
    case FormulaKind::Obs: {
      DepthResult d = uniform_depth(f.kids[0]);
      if (!d.depth) return d;
      return {SamplingWord::single(Rational(0), 1) * *d.depth, ""};
    }
    case FormulaKind::Time: {
      DepthResult d = uniform_depth(f.kids[0]);
      if (!d.depth) return d;
      return {SamplingWord::single(f.time, 0) * *d.depth, ""};
    }
  }
  return {std::nullopt, "?"};
}

}  // namespace gct
