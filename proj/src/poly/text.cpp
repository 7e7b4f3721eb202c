#include "detrees/poly/text.hpp"

#include <cctype>

#include "detrees/errors.hpp"

namespace detrees::poly {
namespace {

// Prime-field coefficients print in the symmetric range so that -1 reads as "-".
Rational printable(const Field& field, const Rational& c) {
  if (!field.is_prime()) return c;
  const long p = field.characteristic();
  long v = c.get_num().get_si();
  if (v > p / 2) v -= p;
  return Rational(v);
}

}  // namespace

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (VarIndex v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var(v).name();
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = printable(p.field(), t.coeff);
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else if (c == 1) {
      out += to_string(t.mono, *p.ring());
    } else {
      out += c.get_str() + "*" + to_string(t.mono, *p.ring());
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : s_(text), ring_(ring) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(term(op == '-'));
    }
    return terms;
  }

 private:
  Term term(bool negative) {
    skip_ws();
    Term t{Rational(1), Monomial(ring_.size())};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = coefficient();
      skip_ws();
      if (peek() == '*') {
        get();
      } else {
        need_factor = false;
      }
    }
    while (need_factor) {
      factor(t.mono);
      skip_ws();
      if (peek() != '*') break;
      get();
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  Rational coefficient() {
    std::string num = digits();
    std::string den = "1";
    if (peek() == '/') {
      get();
      den = digits();
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
    }
    Rational c{mpz_class(num), mpz_class(den)};
    c.canonicalize();
    return c;
  }

  void factor(Monomial& mono) {
    skip_ws();
    Variable v = variable();
    auto idx = ring_.find(v);
    if (!idx) fail("variable " + v.name() + " is not in the ring");
    skip_ws();
    long e = 1;
    if (peek() == '^') {
      get();
      skip_ws();
      std::string d = digits();
      if (d.size() > 5) fail("exponent out of range");
      e = std::stol(d);
      if (e < 1 || e > 60000) fail("exponent out of range");
    }
    long total = mono[*idx] + e;
    if (total > 60000) fail("exponent out of range");
    mono.set(*idx, static_cast<Monomial::Exponent>(total));
  }

  Variable variable() {
    char f = get();
    expect('[');
    try {
      if (f == 'x') {
        int i = integer();
        expect(',');
        int j = integer();
        expect(']');
        return Variable::x(i, j);
      }
      if (f == 'T') {
        std::vector<int> cols;
        skip_ws();
        while (peek() != ';') {
          cols.push_back(integer());
          skip_ws();
          if (at_end()) fail("unterminated T variable");
        }
        expect(';');
        int k = integer();
        expect(']');
        return Variable::T(std::move(cols), k);
      }
      if (f == 't') {
        int i = integer();
        expect(']');
        return Variable::t(i);
      }
    } catch (const DomainError& e) {
      fail(e.what());
    }
    fail(std::string("unknown variable family '") + f + "'");
  }

  int integer() {
    skip_ws();
    std::string d = digits();
    if (d.size() > 9) fail("index too large");
    return std::stoi(d);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  void expect(char c) {
    skip_ws();
    if (get() != c) fail(std::string("expected '") + c + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial", what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const Ring& ring_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, RingPtr ring, OrderPtr order) {
  Parser parser(text, *ring);
  std::vector<Term> terms = parser.parse();
  try {
    return Polynomial::from_terms(std::move(ring), std::move(order), std::move(terms));
  } catch (const DomainError& e) {
    throw ParseError("polynomial", e.what());
  }
}

}  // namespace detrees::poly
