#include "modlink/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "modlink/error.hpp"

namespace modlink {

PolynomialRing::PolynomialRing(PrimeField field, std::vector<std::string> vars,
                               OrderKind order, std::vector<std::uint32_t> weights)
    : field_(field), vars_(std::move(vars)), order_(order), weights_(std::move(weights)) {}

RingPtr PolynomialRing::make(PrimeField field, std::vector<std::string> variables,
                             OrderKind order, std::vector<std::uint32_t> weights) {
  if (weights.empty()) weights.assign(variables.size(), 1);
  require(weights.size() == variables.size(), "one weight per variable");
  for (auto w : weights) require(w > 0, "grading weights must be positive");
  for (std::size_t i = 0; i < variables.size(); ++i)
    for (std::size_t j = i + 1; j < variables.size(); ++j)
      require(variables[i] != variables[j], "variable names must be unique");
  return RingPtr(new PolynomialRing(field, std::move(variables), order, std::move(weights)));
}

std::optional<std::size_t> PolynomialRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

int PolynomialRing::mono_cmp(const Monomial& a, const Monomial& b) const {
  if (order_ == OrderKind::Lex) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  // grevlex on weighted degree: higher degree wins; on ties the last
  // variable with a differing exponent decides, smaller exponent wins
  std::int64_t da = degree(a), db = degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

bool PolynomialRing::same_as(const PolynomialRing& o) const {
  if (this == &o) return true;
  return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_ &&
         weights_ == o.weights_;
}

Polynomial PolynomialRing::zero() const {
  return Polynomial(shared_from_this(), {});
}

Polynomial PolynomialRing::one() const { return constant(1); }

Polynomial PolynomialRing::constant(long long c) const {
  Fp v = field_.from_int(c);
  if (v == 0) return zero();
  return Polynomial(shared_from_this(), {Term{v, Monomial::one(nvars())}});
}

Polynomial PolynomialRing::var(std::size_t i) const {
  require(i < nvars(), "variable index out of range");
  Monomial m = Monomial::one(nvars());
  m[i] = 1;
  return Polynomial(shared_from_this(), {Term{1, m}});
}

Polynomial PolynomialRing::monomial(Fp c, Monomial m) const {
  require(m.nvars() == nvars(), "monomial arity mismatch");
  if (c == 0) return zero();
  return Polynomial(shared_from_this(), {Term{c, std::move(m)}});
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {}

const Term& Polynomial::lead() const {
  require(!terms_.empty(), "zero polynomial has no lead term");
  return terms_.front();
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_[0].mono.is_one();
}

std::optional<Fp> Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::int64_t d = ring_->degree(terms_[0].mono);
  for (const auto& t : terms_)
    if (ring_->degree(t.mono) != d) return false;
  return true;
}

std::int64_t Polynomial::degree() const {
  if (terms_.empty()) return -1;
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, ring_->degree(t.mono));
  return d;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  require(a.ring() && b.ring(), "polynomial without a ring");
  require(a.ring()->same_as(*b.ring()), "polynomials from different rings");
}

namespace {

// merge two strictly-descending term lists
std::vector<Term> merge_terms(const PolynomialRing& R, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& F = R.field();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = R.mono_cmp(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      if (negate_b) t.coeff = F.neg(t.coeff);
      out.push_back(t);
    } else {
      Fp v = negate_b ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (v != 0) out.push_back(Term{v, a[i].mono});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) {
    Term t = b[j++];
    if (negate_b) t.coeff = F.neg(t.coeff);
    out.push_back(t);
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  return Polynomial(ring_, merge_terms(*ring_, terms_, o.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same_ring(*this, o);
  return Polynomial(ring_, merge_terms(*ring_, terms_, o.terms_, true));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> ts = terms_;
  for (auto& t : ts) t.coeff = ring_->field().neg(t.coeff);
  return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::scaled(Fp c) const {
  if (c == 0) return Polynomial(ring_, {});
  std::vector<Term> ts = terms_;
  for (auto& t : ts) t.coeff = ring_->field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::times_term(Fp c, const Monomial& m) const {
  if (c == 0) return Polynomial(ring_, {});
  std::vector<Term> ts = terms_;
  for (auto& t : ts) {
    t.coeff = ring_->field().mul(t.coeff, c);
    t.mono = t.mono * m;
  }
  return Polynomial(ring_, std::move(ts));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  Polynomial acc(ring_, {});
  for (const auto& t : o.terms_) acc = acc + times_term(t.coeff, t.mono);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_[0].coeff));
}

bool Polynomial::operator==(const Polynomial& o) const {
  check_same_ring(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
      return false;
  return true;
}

int poly_cmp(const Polynomial& a, const Polynomial& b) {
  const auto& R = *a.ring();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    int c = R.mono_cmp(ta[i].mono, tb[i].mono);
    if (c != 0) return c;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// text grammar

namespace {

struct Lexer {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char get() {
    skip_ws();
    return s[pos++];
  }
};

long long parse_int(Lexer& lx) {
  lx.skip_ws();
  std::size_t start = lx.pos;
  while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
    ++lx.pos;
  require(lx.pos > start, "expected integer in polynomial text");
  long long v = 0;
  for (std::size_t i = start; i < lx.pos; ++i) {
    v = v * 10 + (lx.s[i] - '0');
    require(v >= 0, "integer literal too large");
  }
  return v;
}

std::string parse_name(Lexer& lx) {
  lx.skip_ws();
  std::size_t start = lx.pos;
  while (lx.pos < lx.s.size() &&
         (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
    ++lx.pos;
  require(lx.pos > start, "expected name in polynomial text");
  return std::string(lx.s.substr(start, lx.pos - start));
}

Polynomial parse_expr(const PolynomialRing& R, Lexer& lx);

Polynomial parse_factor(const PolynomialRing& R, Lexer& lx) {
  char c = lx.peek();
  if (c == '(') {
    lx.get();
    Polynomial inner = parse_expr(R, lx);
    require(lx.peek() == ')', "expected ')'");
    lx.get();
    return inner;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    long long v = parse_int(lx);
    return R.constant(v);
  }
  std::string name = parse_name(lx);
  auto idx = R.var_index(name);
  require(idx.has_value(), "unknown variable '" + name + "'");
  Polynomial f = R.var(*idx);
  if (lx.peek() == '^') {
    lx.get();
    long long e = parse_int(lx);
    Monomial m = Monomial::one(R.nvars());
    m[*idx] = static_cast<std::uint32_t>(e);
    return R.monomial(1, m);
  }
  return f;
}

Polynomial parse_product(const PolynomialRing& R, Lexer& lx) {
  Polynomial f = parse_factor(R, lx);
  while (lx.peek() == '*') {
    lx.get();
    f = f * parse_factor(R, lx);
  }
  return f;
}

Polynomial parse_expr(const PolynomialRing& R, Lexer& lx) {
  Polynomial acc = R.zero();
  bool neg = false;
  if (lx.peek() == '-') {
    lx.get();
    neg = true;
  } else if (lx.peek() == '+') {
    lx.get();
  }
  while (true) {
    Polynomial t = parse_product(R, lx);
    acc = neg ? acc - t : acc + t;
    char c = lx.peek();
    if (c == '+') {
      lx.get();
      neg = false;
    } else if (c == '-') {
      lx.get();
      neg = true;
    } else {
      break;
    }
  }
  return acc;
}

}  // namespace

Polynomial PolynomialRing::parse(std::string_view text) const {
  Lexer lx{text};
  if (lx.eof()) return zero();
  Polynomial f = parse_expr(*this, lx);
  require(lx.eof(), "trailing characters in polynomial text");
  return f;
}

std::string PolynomialRing::mono_to_string(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << vars_[i];
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string PolynomialRing::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    // render coefficients in (-p/2, p/2] for readability
    long long half = static_cast<long long>(t.coeff);
    if (half > static_cast<long long>(field_.modulus()) / 2)
      half -= static_cast<long long>(field_.modulus());
    if (first) {
      if (half < 0) os << "-";
    } else {
      os << (half < 0 ? " - " : " + ");
    }
    long long a = half < 0 ? -half : half;
    if (t.mono.is_one()) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << mono_to_string(t.mono);
    }
    first = false;
  }
  return os.str();
}

std::string Polynomial::str() const {
  require(ring_ != nullptr, "polynomial without a ring");
  return ring_->to_string(*this);
}

}  // namespace modlink
