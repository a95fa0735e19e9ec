#include "tpa/scalar.hpp"

#include <ostream>

#include "tpa/errors.hpp"

namespace tpa {

namespace {

std::uint64_t mod_of(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::residue(long v, std::uint64_t p) {
  if (p == 0) return Scalar(v);
  Scalar s;
  s.p_ = p;
  long m = v % static_cast<long>(p);
  if (m < 0) m += static_cast<long>(p);
  s.r_ = static_cast<std::uint64_t>(m);
  return s;
}

Scalar Scalar::parse(std::string_view text, std::uint64_t p) {
  std::string s(text);
  if (s.empty()) throw InputError("empty coefficient");
  mpq_class q;
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s, 10));
    } else {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) throw InputError("zero denominator in '" + s + "'");
      q = mpq_class(num, den);
      q.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw InputError("bad coefficient '" + s + "'");
  }
  Scalar r(q);
  return p ? r.in_field(p) : r;
}

bool Scalar::is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }

bool Scalar::is_one() const { return p_ ? r_ == 1 % p_ : q_ == 1; }

bool Scalar::is_integer() const { return p_ || q_.get_den() == 1; }

mpq_class Scalar::to_rational() const {
  if (p_) return mpq_class(mpz_class(static_cast<unsigned long>(r_)));
  return q_;
}

void Scalar::reduce_into(std::uint64_t p) {
  if (p_ == p) return;
  if (p_ != 0) throw DomainError("mixing prime fields " + std::to_string(p_) + " and " + std::to_string(p));
  std::uint64_t num = mod_of(q_.get_num(), p);
  std::uint64_t den = mod_of(q_.get_den(), p);
  if (den == 0) throw DomainError("denominator divisible by field characteristic");
  r_ = mulmod(num, powmod(den, p - 2, p), p);
  p_ = p;
  q_ = 0;
}

Scalar Scalar::in_field(std::uint64_t p) const {
  Scalar c = *this;
  if (p) c.reduce_into(p);
  return c;
}

void Scalar::unify(Scalar& o) {
  if (p_ == o.p_) return;
  if (p_ == 0) reduce_into(o.p_);
  else o.reduce_into(p_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    q_ += o.q_;
    return *this;
  }
  Scalar b = o;
  unify(b);
  r_ = (r_ + b.r_) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    q_ -= o.q_;
    return *this;
  }
  Scalar b = o;
  unify(b);
  r_ = (r_ + p_ - b.r_) % p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ == 0 && o.p_ == 0) {
    q_ *= o.q_;
    return *this;
  }
  Scalar b = o;
  unify(b);
  r_ = mulmod(r_, b.r_, p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (p_ == 0 && o.p_ == 0) {
    q_ /= o.q_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar c = *this;
  if (p_) c.r_ = (p_ - r_) % p_;
  else c.q_ = -c.q_;
  return c;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Scalar c = *this;
  if (p_) c.r_ = powmod(r_, p_ - 2, p_);
  else c.q_ = 1 / q_;
  return c;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
  Scalar x = a, y = b;
  x.unify(y);
  return x.r_ == y.r_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  return a.p_ ? a.r_ < b.r_ : a.q_ < b.q_;
}

std::string Scalar::str() const {
  if (p_) return std::to_string(r_);
  return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tpa
