#include "leflab/text.hpp"

#include <cctype>

namespace leflab {

namespace {

// Character-level cursor with line/column tracking for parse errors.
class Cursor {
public:
  explicit Cursor(const std::string& s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  void advance() {
    if (done()) return;
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_spaces() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
      advance();
  }

  bool eat(char c) {
    skip_spaces();
    if (peek() != c) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  long long integer() {
    skip_spaces();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (1ll << 62)) fail("number too large");
      advance();
    }
    return v;
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// term := [sign] atom ('*' atom)* ; atom := integer | x<i>[^<e>]
// Returns false at end of input or before a separator.
bool parse_term(Cursor& cur, int nvars, std::uint32_t prime, bool first,
                Monomial* mono, std::uint32_t* coeff) {
  cur.skip_spaces();
  bool negative = false;
  bool saw_sign = false;
  if (cur.peek() == '+' || cur.peek() == '-') {
    negative = cur.peek() == '-';
    saw_sign = true;
    cur.advance();
    cur.skip_spaces();
  } else if (!first) {
    return false;
  }
  if (cur.done() || cur.peek() == ',' || cur.peek() == '\n') {
    if (saw_sign) cur.fail("dangling sign");
    return false;
  }

  std::vector<int> exps(nvars, 0);
  long long c = 1;
  bool saw_atom = false;
  while (true) {
    cur.skip_spaces();
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      c = (c * (cur.integer() % prime)) % prime;
      saw_atom = true;
    } else if (cur.peek() == 'x') {
      cur.advance();
      long long idx = cur.integer();
      if (idx < 1 || idx > nvars)
        cur.fail("variable index x" + std::to_string(idx) + " outside 1.." +
                 std::to_string(nvars));
      long long e = 1;
      if (cur.eat('^')) e = cur.integer();
      if (e > max_degree) cur.fail("exponent exceeds " + std::to_string(max_degree));
      exps[idx - 1] += static_cast<int>(e);
      saw_atom = true;
    } else {
      cur.fail("expected a coefficient or a variable");
    }
    if (!cur.eat('*')) break;
  }
  if (!saw_atom) cur.fail("empty term");
  *mono = Monomial(std::move(exps));
  std::uint32_t cc = static_cast<std::uint32_t>(c % prime);
  *coeff = negative ? neg_mod(cc, prime) : cc;
  return true;
}

Polynomial parse_polynomial(Cursor& cur, int nvars, std::uint32_t prime) {
  Polynomial f(nvars, prime);
  Monomial m(nvars);
  std::uint32_t c = 0;
  bool first = true;
  while (parse_term(cur, nvars, prime, first, &m, &c)) {
    f.add_term(m, c);
    first = false;
  }
  if (first) cur.fail("empty polynomial");
  return f;
}

std::vector<Polynomial> parse_poly_list(const std::string& text, int nvars,
                                        std::uint32_t prime) {
  Cursor cur(text);
  std::vector<Polynomial> out;
  while (true) {
    cur.skip_spaces();
    while (cur.peek() == ',' || cur.peek() == '\n') {
      cur.advance();
      cur.skip_spaces();
    }
    if (cur.done()) break;
    out.push_back(parse_polynomial(cur, nvars, prime));
    cur.skip_spaces();
    if (!cur.done() && cur.peek() != ',' && cur.peek() != '\n')
      cur.fail("expected ',' or end of input");
  }
  if (out.empty()) {
    Cursor c0(text);
    c0.fail("empty input");
  }
  return out;
}

} // namespace

Monomial parse_monomial(const std::string& text, int nvars) {
  auto polys = parse_poly_list(text, nvars, default_prime);
  if (polys.size() != 1 || polys[0].term_count() != 1 ||
      polys[0].leading_coefficient() != 1) {
    Cursor c0(text);
    c0.fail("expected a single monomial");
  }
  return polys[0].leading_monomial();
}

MonomialIdeal parse_monomial_ideal(const std::string& text, int nvars) {
  auto polys = parse_poly_list(text, nvars, default_prime);
  std::vector<Monomial> gens;
  for (const auto& f : polys) {
    if (f.term_count() != 1 || f.leading_coefficient() != 1) {
      Cursor c0(text);
      c0.fail("expected monomial generators");
    }
    gens.push_back(f.leading_monomial());
  }
  return MonomialIdeal(nvars, std::move(gens));
}

std::vector<Polynomial> parse_polynomials(const std::string& text, int nvars,
                                          std::uint32_t prime) {
  return parse_poly_list(text, nvars, prime);
}

ParsedIdeal parse_ideal(const std::string& text, int nvars, std::uint32_t prime) {
  ParsedIdeal out;
  out.polynomials = parse_poly_list(text, nvars, prime);
  bool monomial = true;
  for (const auto& f : out.polynomials)
    if (f.term_count() != 1 || f.leading_coefficient() != 1) {
      monomial = false;
      break;
    }
  if (monomial) {
    std::vector<Monomial> gens;
    for (const auto& f : out.polynomials) gens.push_back(f.leading_monomial());
    out.monomial = MonomialIdeal(nvars, std::move(gens));
  }
  return out;
}

OSequence parse_hilbert(const std::string& text) {
  Cursor cur(text);
  std::vector<int> values;
  while (true) {
    long long v = cur.integer();
    if (v > (1ll << 30)) cur.fail("Hilbert value too large");
    values.push_back(static_cast<int>(v));
    cur.skip_spaces();
    if (cur.done()) break;
    if (!cur.eat(',')) cur.fail("expected ','");
  }
  return OSequence(std::move(values));
}

} // namespace leflab
