#include "superalg/fields.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace superalg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotAQuadraticExtension: return "NotAQuadraticExtension";
    case ErrorCode::FactorizationTooHard: return "FactorizationTooHard";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::UnsupportedCenterFactorization: return "UnsupportedCenterFactorization";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::NotCSS: return "NotCSS";
    case ErrorCode::NotOddType: return "NotOddType";
    case ErrorCode::NotSplitEven: return "NotSplitEven";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::EmptyShape: return "EmptyShape";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotInner: return "NotInner";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NotEvenCSS: return "NotEvenCSS";
    case ErrorCode::NotAntiautomorphism: return "NotAntiautomorphism";
    case ErrorCode::NoSuperantiautomorphism: return "NoSuperantiautomorphism";
    case ErrorCode::NonSquareInvariant: return "NonSquareInvariant";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::NotOverQuadraticExtension: return "NotOverQuadraticExtension";
    case ErrorCode::NotSemilinearAntiauto: return "NotSemilinearAntiauto";
    case ErrorCode::UnsupportedA0: return "UnsupportedA0";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---- Field -----------------------------------------------------------------

Field Field::rationals() { return Field{}; }

Field Field::quadratic(std::int64_t d) {
  if (d == 0 || d == 1) throw Error(ErrorCode::InvalidField, "d must differ from 0 and 1");
  if (!is_squarefree(Integer(static_cast<long>(d))))
    throw Error(ErrorCode::InvalidField, "d = " + std::to_string(d) + " is not squarefree");
  Field f;
  f.kind_ = FieldKind::QuadraticRational;
  f.param_ = d;
  return f;
}

Field Field::prime(std::int64_t p) {
  if (p < 3 || !superalg::is_prime(Integer(static_cast<long>(p))))
    throw Error(ErrorCode::InvalidField, "p = " + std::to_string(p) + " is not an odd prime");
  Field f;
  f.kind_ = FieldKind::PrimeField;
  f.param_ = p;
  return f;
}

std::string Field::to_string() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::QuadraticRational: return "Q(sqrt(" + std::to_string(param_) + "))";
    case FieldKind::PrimeField: return "GF(" + std::to_string(param_) + ")";
  }
  return "?";
}

// ---- Scalar ----------------------------------------------------------------

namespace {

Integer modp(const Integer& a, std::int64_t p) {
  Integer r;
  Integer pp(static_cast<long>(p));
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, std::int64_t p) {
  Integer r;
  Integer pp(static_cast<long>(p));
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t()) == 0)
    throw Error(ErrorCode::DivisionByZero, "residue not invertible");
  return r;
}

std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

Scalar::Scalar(const Field& f, const Rational& x) : field_(f), re_(x) { reduce(); }

Scalar::Scalar(const Field& f, const Rational& x, const Rational& y) : field_(f), re_(x), im_(y) {
  if (!f.is_quadratic() && sgn(y) != 0)
    throw Error(ErrorCode::NotAQuadraticExtension, "sqrt part given for " + f.to_string());
  reduce();
}

Scalar Scalar::generator(const Field& f) {
  if (!f.is_quadratic()) throw Error(ErrorCode::NotAQuadraticExtension, f.to_string());
  return Scalar(f, 0, 1);
}

void Scalar::reduce() {
  re_.canonicalize();
  im_.canonicalize();
  if (field_.is_prime()) {
    Integer num = modp(re_.get_num(), field_.p());
    if (re_.get_den() != 1) num = modp(num * inverse_mod(re_.get_den(), field_.p()), field_.p());
    re_ = Rational(num);
    im_ = 0;
  }
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  re_ += o.re_;
  im_ += o.im_;
  if (field_.is_prime()) reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  re_ -= o.re_;
  im_ -= o.im_;
  if (field_.is_prime()) reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_quadratic()) {
    Rational x = re_ * o.re_ + Rational(static_cast<long>(field_.d())) * im_ * o.im_;
    Rational y = re_ * o.im_ + im_ * o.re_;
    re_ = x;
    im_ = y;
  } else {
    re_ *= o.re_;
    if (field_.is_prime()) reduce();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  switch (field_.kind()) {
    case FieldKind::Rationals: return Scalar(field_, 1 / re_);
    case FieldKind::PrimeField: return Scalar(field_, Rational(inverse_mod(re_.get_num(), field_.p())));
    case FieldKind::QuadraticRational: {
      Rational n = re_ * re_ - Rational(static_cast<long>(field_.d())) * im_ * im_;
      return Scalar(field_, re_ / n, -im_ / n);
    }
  }
  return *this;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldKind::Rationals: return rational_string(re_);
    case FieldKind::PrimeField:
      return "gf(" + std::to_string(field_.p()) + "):" + re_.get_num().get_str();
    case FieldKind::QuadraticRational:
      return rational_string(re_) + "+" + rational_string(im_) + "*sqrt(" + std::to_string(field_.d()) +
             ")";
  }
  return "?";
}

namespace {

class ScalarParser {
 public:
  ScalarParser(const Field& f, std::string text) : field_(f), text_(std::move(text)) {
    text_.erase(std::remove_if(text_.begin(), text_.end(), [](unsigned char c) { return std::isspace(c); }),
                text_.end());
  }

  Scalar parse() {
    if (text_.empty()) fail("empty scalar");
    if (text_.rfind("gf(", 0) == 0) return parse_gf();
    Rational x = 0, y = 0;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (!first) {
        if (text_[pos_] != '+' && text_[pos_] != '-') fail("expected + or -");
      }
      while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        if (text_[pos_] == '-') sign = -sign;
        ++pos_;
      }
      first = false;
      Rational coeff = 1;
      bool has_number = false;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        coeff = number();
        has_number = true;
      }
      bool radical = false;
      if (text_.compare(pos_, 1, "*") == 0 && has_number) {
        ++pos_;
        radical = sqrt_term();
        if (!radical) fail("expected sqrt(d) after '*'");
      } else if (text_.compare(pos_, 5, "sqrt(") == 0) {
        radical = sqrt_term();
      } else if (!has_number) {
        fail("expected a number or sqrt(d)");
      }
      (radical ? y : x) += sign * coeff;
    }
    if (sgn(y) != 0 && !field_.is_quadratic())
      throw Error(ErrorCode::ParseError, "sqrt term in " + field_.to_string());
    return Scalar(field_, x, y);
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::ParseError, why + " in scalar '" + text_ + "' at " + std::to_string(pos_));
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(text_.substr(start, pos_ - start));
  }

  Rational number() {
    Integer num = integer();
    Integer den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  bool sqrt_term() {
    if (text_.compare(pos_, 5, "sqrt(") != 0) return false;
    pos_ += 5;
    int sign = 1;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      sign = -1;
      ++pos_;
    }
    Integer d = sign * integer();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
    if (!field_.is_quadratic() || d != static_cast<long>(field_.d()))
      throw Error(ErrorCode::FieldMismatch, "sqrt(" + d.get_str() + ") in " + field_.to_string());
    return true;
  }

  Scalar parse_gf() {
    pos_ = 3;
    Integer p = integer();
    if (text_.compare(pos_, 2, "):") != 0) fail("expected '):'");
    pos_ += 2;
    if (!field_.is_prime() || p != static_cast<long>(field_.p()))
      throw Error(ErrorCode::FieldMismatch, "gf(" + p.get_str() + ") in " + field_.to_string());
    int sign = 1;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      sign = -1;
      ++pos_;
    }
    Integer r = sign * integer();
    if (pos_ != text_.size()) fail("trailing characters");
    return Scalar(field_, Rational(r));
  }

  Field field_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const Field& f, const std::string& text) { return ScalarParser(f, text).parse(); }

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return a;
}

Scalar conj(const Scalar& c) {
  if (!c.field().is_quadratic()) throw Error(ErrorCode::NotAQuadraticExtension, c.field().to_string());
  return Scalar(c.field(), c.re(), -c.im());
}

Scalar norm(const Scalar& c) { return c * conj(c); }

Scalar trace(const Scalar& c) { return c + conj(c); }

Scalar conj_if_quadratic(const Scalar& c) { return c.field().is_quadratic() ? conj(c) : c; }

// ---- square classes ----------------------------------------------------------

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace

SquareClassResult is_square(const Scalar& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroInput, "square test of zero");
  const Field& f = c.field();
  switch (f.kind()) {
    case FieldKind::Rationals: {
      auto r = rational_sqrt(c.re());
      if (!r) return {};
      return {true, Scalar(f, *r)};
    }
    case FieldKind::PrimeField: {
      auto r = sqrt_mod_prime(c.re().get_num(), Integer(static_cast<long>(f.p())));
      if (!r) return {};
      return {true, Scalar(f, Rational(*r))};
    }
    case FieldKind::QuadraticRational: {
      const Rational d(static_cast<long>(f.d()));
      if (sgn(c.im()) == 0) {
        if (auto r = rational_sqrt(c.re())) return {true, Scalar(f, *r)};
        if (auto r = rational_sqrt(c.re() / d)) return {true, Scalar(f, 0, *r)};
        return {};
      }
      // (s + t sqrt d)^2 = x + y sqrt d forces N(s + t sqrt d)^2 = x^2 - d y^2.
      auto n = rational_sqrt(c.re() * c.re() - d * c.im() * c.im());
      if (!n) return {};
      for (int sign : {1, -1}) {
        auto s = rational_sqrt((c.re() + sign * *n) / 2);
        if (!s || sgn(*s) == 0) continue;
        Rational t = c.im() / (2 * *s);
        Scalar w(f, *s, t);
        if (w * w == c) return {true, w};
      }
      return {};
    }
  }
  return {};
}

bool square_class_equal(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroInput, "square class of zero");
  return is_square(a / b).is_square;
}

std::optional<Scalar> square_class_representative(const Scalar& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroInput, "square class of zero");
  const Field& f = c.field();
  if (f.is_rationals()) {
    Integer n = c.re().get_num() * c.re().get_den();
    Integer rep = sgn(n) < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(n))
      if (e % 2 == 1) rep *= p;
    return Scalar(f, Rational(rep));
  }
  if (f.is_prime()) {
    if (is_square(c).is_square) return Scalar::one(f);
    for (long r = 2;; ++r) {
      Scalar s(f, r);
      if (!is_square(s).is_square) return s;
    }
  }
  return std::nullopt;
}

// ---- integers ----------------------------------------------------------------

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

constexpr long kTrialLimit = 1000000;

std::optional<Integer> pollard_brent(const Integer& n, long seed) {
  if (n % 2 == 0) return Integer(2);
  Integer y = seed, c = seed * 7 + 1, m = 128, g = 1, r = 1, q = 1, x, ys;
  auto f = [&](const Integer& v) {
    Integer out = v * v + c;
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
    return out;
  };
  long iterations = 0;
  const long budget = 2000000;
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      Integer lim = std::min<Integer>(m, r - k);
      for (Integer i = 0; i < lim; ++i) {
        y = f(y);
        Integer diff = abs(x - y);
        q = q * diff % n;
        ++iterations;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
    if (iterations > budget) return std::nullopt;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

void split_cofactor(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    split_cofactor(r, primes);
    split_cofactor(r, primes);
    return;
  }
  for (long seed = 2; seed < 40; ++seed) {
    if (auto d = pollard_brent(n, seed)) {
      split_cofactor(*d, primes);
      split_cofactor(n / *d, primes);
      return;
    }
  }
  throw Error(ErrorCode::FactorizationTooHard, "could not split " + n.get_str());
}

}  // namespace

std::vector<std::pair<Integer, int>> factorize(const Integer& value) {
  if (value == 0) throw Error(ErrorCode::ZeroInput, "factorization of zero");
  Integer n = abs(value);
  std::vector<std::pair<Integer, int>> out;
  auto take = [&](long p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
      ++e;
    }
    if (e > 0) out.emplace_back(Integer(p), e);
  };
  take(2);
  for (long p = 3; p <= kTrialLimit && Integer(p) * p <= n; p += 2) take(p);
  if (n > 1) {
    std::vector<Integer> primes;
    split_cofactor(n, primes);
    std::sort(primes.begin(), primes.end());
    for (const auto& p : primes) {
      if (!out.empty() && out.back().first == p)
        ++out.back().second;
      else
        out.emplace_back(p, 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

std::optional<Integer> sqrt_mod_prime(const Integer& a_in, const Integer& p) {
  Integer a;
  mpz_mod(a.get_mpz_t(), a_in.get_mpz_t(), p.get_mpz_t());
  if (a == 0) return Integer(0);
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  auto powm = [&](const Integer& b, const Integer& e) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  };
  Integer q = p - 1;
  long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Integer c = powm(z, q), x = powm(a, (q + 1) / 2), t = powm(a, q);
  long m = s;
  while (t != 1) {
    long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Integer b = c;
    for (long j = 0; j < m - i - 1; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return std::min<Integer>(x, p - x);
}

// ---- Hilbert symbols ---------------------------------------------------------

std::string Place::to_string() const { return infinite ? "inf" : prime.get_str(); }

namespace {

int valuation(Integer& n, const Integer& p) {
  int v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

long mod8(const Integer& u) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
  return r.get_si();
}

Integer square_class_integer(const Rational& q) { return q.get_num() * q.get_den(); }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (sgn(a) == 0 || sgn(b) == 0) throw Error(ErrorCode::ZeroInput, "Hilbert symbol with zero entry");
  if (v.infinite) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  Integer u = square_class_integer(a);
  Integer w = square_class_integer(b);
  const Integer& p = v.prime;
  int alpha = valuation(u, p);
  int beta = valuation(w, p);
  if (p == 2) {
    auto eps = [](const Integer& x) { return (mod8(x) % 4 == 1) ? 0 : 1; };
    auto omega = [](const Integer& x) {
      long r = mod8(x);
      return (r == 1 || r == 7) ? 0 : 1;
    };
    int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int result = 1;
  Integer half = (p - 1) / 2;
  if ((alpha * beta) % 2 == 1 && half % 2 == 1) result = -result;
  if (beta % 2 == 1) result *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
  if (alpha % 2 == 1) result *= mpz_legendre(w.get_mpz_t(), p.get_mpz_t());
  return result;
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
  if (sgn(a) == 0 || sgn(b) == 0) throw Error(ErrorCode::ZeroInput, "places of zero");
  std::vector<Place> places{Place::infinity(), Place::at(2)};
  std::vector<Integer> primes;
  for (const Integer& n : {a.get_num(), a.get_den(), b.get_num(), b.get_den()})
    for (const auto& [p, e] : factorize(n))
      if (p != 2) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& p : primes) places.push_back(Place::at(p));
  return places;
}

bool quaternion_is_split(const Rational& a, const Rational& b) {
  for (const Place& v : relevant_places(a, b))
    if (hilbert_symbol(a, b, v) == -1) return false;
  return true;
}

// ---- norm equations ------------------------------------------------------------

long default_search_bound() {
  if (const char* env = std::getenv("SUPERALG_SEARCH_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 10000;
}

namespace {

// x^2 + y^2 = n for a positive integer n that is a sum of two squares.
std::pair<Integer, Integer> two_squares(const Integer& n) {
  // Gaussian integer accumulated as (re, im).
  Integer re = 1, im = 0;
  auto mul = [&](const Integer& a, const Integer& b) {
    Integer r = re * a - im * b;
    Integer i = re * b + im * a;
    re = r;
    im = i;
  };
  for (const auto& [p, e] : factorize(n)) {
    if (p == 2) {
      for (int k = 0; k < e; ++k) mul(1, 1);
    } else if (p % 4 == 3) {
      Integer q;
      mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e / 2));
      mul(q, 0);
    } else {
      // Cornacchia: reduce (p, sqrt(-1) mod p) until the remainder drops below sqrt(p).
      Integer r0 = p, r1 = *sqrt_mod_prime(p - 1, p);
      Integer bound;
      mpz_sqrt(bound.get_mpz_t(), p.get_mpz_t());
      while (r1 > bound) {
        Integer t = r0 % r1;
        r0 = r1;
        r1 = t;
      }
      Integer b2 = p - r1 * r1, b;
      mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
      for (int k = 0; k < e; ++k) mul(r1, b);
    }
  }
  return {abs(re), abs(im)};
}

}  // namespace

NormEquationResult norm_equation(std::int64_t d, const Rational& c, long search_bound) {
  if (sgn(c) == 0) throw Error(ErrorCode::ZeroInput, "norm equation with c = 0");
  Field k = Field::quadratic(d);
  NormEquationResult out;
  out.solvable = quaternion_is_split(Rational(static_cast<long>(d)), c);
  if (!out.solvable) return out;
  if (auto r = rational_sqrt(c)) {
    out.witness = Scalar(k, *r);
    return out;
  }
  const Integer& n = c.get_num();
  const Integer& m = c.get_den();
  if (d == -1) {
    auto [x, y] = two_squares(n * m);
    out.witness = Scalar(k, Rational(x, m), Rational(y, m));
    return out;
  }
  // x^2 - d y^2 = c z^2; scaled by m^2 this asks for X^2 = n m z^2 + d m^2 y^2.
  const Integer nm = n * m;
  const Integer dm2 = Integer(static_cast<long>(d)) * m * m;
  auto attempt = [&](long y, long z) -> bool {
    Integer rhs = nm * z * z + dm2 * y * y;
    if (sgn(rhs) < 0 || !mpz_perfect_square_p(rhs.get_mpz_t())) return false;
    Integer X;
    mpz_sqrt(X.get_mpz_t(), rhs.get_mpz_t());
    Scalar lambda = Scalar(k, Rational(X, m) / z, Rational(y) / z);
    if (norm(lambda) == Scalar(k, c)) {
      out.witness = lambda;
      return true;
    }
    return false;
  };
  for (long h = 1; h <= search_bound; ++h) {
    for (long y = 0; y <= h; ++y)
      if (attempt(y, h)) return out;
    for (long z = 1; z < h; ++z)
      if (attempt(h, z)) return out;
  }
  out.witness_search_exhausted = true;
  return out;
}

}  // namespace superalg
