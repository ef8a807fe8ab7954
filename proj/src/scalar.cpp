#include "hopfdual/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace hopfdual {

namespace {

constexpr __int128 kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kInt64Min = std::numeric_limits<std::int64_t>::min();

bool fits64(__int128 v) { return v >= kInt64Min && v <= kInt64Max; }

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  // Values usually fit in 64 bits; fall through to the cheaper routine.
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned __int128 abs128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
}

mpz_class mpz_from128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool all_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("modulus must be below 2^31");
  return FieldSpec{Kind::prime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("gf:", 0) == 0) {
    long long p = 0;
    if (!parse_int(text.substr(3), p) || p <= 0) {
      throw std::invalid_argument("bad field spec '" + std::string(text) + "'");
    }
    return prime(static_cast<std::uint64_t>(p));
  }
  throw std::invalid_argument("bad field spec '" + std::string(text) + "' (expected q or gf:p)");
}

std::string FieldSpec::to_string() const {
  return kind == Kind::rationals ? "q" : "gf:" + std::to_string(modulus);
}

// ----------------------------------------------------------------- Rational

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_parts(n, d);
}

Rational::Rational(const mpq_class& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(q);
  }
}

Rational Rational::from_parts(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  unsigned __int128 g = gcd128(abs128(n), static_cast<unsigned __int128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  Rational r;
  if (fits64(n) && fits64(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(mpz_from128(n), mpz_from128(d));
  q.canonicalize();
  return Rational(q);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view ns = slash == std::string_view::npos ? text : text.substr(0, slash);
  const std::string_view ds = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(ns) || !all_digits(ds) || (!ds.empty() && ds.front() == '-')) {
    throw ScalarParseError("malformed rational '" + std::string(text) + "'");
  }
  long long n = 0;
  long long d = 0;
  if (parse_int(ns, n) && parse_int(ds, d)) {
    if (d == 0) throw ScalarParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
  }
  mpz_class bn(std::string(ns.front() == '+' ? ns.substr(1) : ns));
  mpz_class bd(std::string(ds.front() == '+' ? ds.substr(1) : ds));
  if (bd == 0) throw ScalarParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(bn, bd);
  q.canonicalize();
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) {
    return big_->get_den() == 1 ? big_->get_num().get_str() : big_->get_str();
  }
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(mpq_class(-to_mpq()));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (!big_) return from_parts(den_, num_);
  return Rational(mpq_class(1 / to_mpq()));
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      Rational r;
      if (!__builtin_add_overflow(a.num_, b.num_, &r.num_)) return r;
    }
    if (b.num_ == 0) return a;
    if (a.num_ == 0) return b;
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_parts(n, d);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      Rational r;
      if (!__builtin_sub_overflow(a.num_, b.num_, &r.num_)) return r;
    }
    if (b.num_ == 0) return a;
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_parts(n, d);
  }
  return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      Rational r;
      if (!__builtin_mul_overflow(a.num_, b.num_, &r.num_)) return r;
    }
    const __int128 n = static_cast<__int128>(a.num_) * b.num_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_parts(n, d);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return Rational();
    const __int128 n = static_cast<__int128>(a.num_) * b.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return Rational::from_parts(n, d);
  }
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a big value never fits inline
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

// --------------------------------------------------------------------- ModP

namespace {

std::int64_t reduce(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  return r < 0 ? r + sp : r;
}

std::uint64_t common_modulus(const ModP& a, const ModP& b) {
  if (a.modulus() != 0 && b.modulus() != 0 && a.modulus() != b.modulus()) {
    throw std::logic_error("mixing residues of different prime fields");
  }
  return a.modulus() != 0 ? a.modulus() : b.modulus();
}

}  // namespace

ModP::ModP(long long v, std::uint64_t p) : value_(p == 0 ? v : reduce(v, p)), modulus_(p) {}

ModP ModP::parse(std::string_view text, std::uint64_t p) {
  long long v = 0;
  if (!all_digits(text) || !parse_int(text, v)) {
    throw ScalarParseError("malformed residue '" + std::string(text) + "'");
  }
  if (v < 0 || static_cast<std::uint64_t>(v) >= p) {
    throw ScalarParseError("residue '" + std::string(text) + "' outside [0, " + std::to_string(p) + ")");
  }
  return ModP(v, p);
}

ModP ModP::bound_to(std::uint64_t p) const {
  if (p == 0 || modulus_ == p) return *this;
  return ModP(value_, p);
}

bool ModP::is_one() const { return modulus_ == 0 ? value_ == 1 : value_ == 1 % static_cast<std::int64_t>(modulus_); }

std::string ModP::to_string() const { return std::to_string(value_); }

ModP ModP::operator-() const {
  if (modulus_ == 0) return ModP(-value_);
  return ModP(value_ == 0 ? 0 : static_cast<long long>(modulus_) - value_, modulus_);
}

ModP ModP::inverse() const {
  if (modulus_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw std::logic_error("inverting an unbound residue");
  }
  if (value_ == 0) throw std::domain_error("division by zero");
  // Extended Euclid on (value, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(modulus_), new_r = value_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return ModP(t, modulus_);
}

ModP operator+(const ModP& a, const ModP& b) {
  const std::uint64_t p = common_modulus(a, b);
  if (p == 0) return ModP(a.value_ + b.value_);
  const ModP x = a.bound_to(p), y = b.bound_to(p);
  std::uint64_t s = static_cast<std::uint64_t>(x.value_) + static_cast<std::uint64_t>(y.value_);
  if (s >= p) s -= p;
  ModP r;
  r.value_ = static_cast<std::int64_t>(s);
  r.modulus_ = p;
  return r;
}

ModP operator-(const ModP& a, const ModP& b) { return a + (-b); }

ModP operator*(const ModP& a, const ModP& b) {
  const std::uint64_t p = common_modulus(a, b);
  if (p == 0) return ModP(a.value_ * b.value_);
  const ModP x = a.bound_to(p), y = b.bound_to(p);
  ModP r;
  r.value_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(x.value_) * static_cast<std::uint64_t>(y.value_)) % p);
  r.modulus_ = p;
  return r;
}

bool operator==(const ModP& a, const ModP& b) {
  const std::uint64_t p = common_modulus(a, b);
  if (p == 0) return a.value_ == b.value_;
  return a.bound_to(p).value_ == b.bound_to(p).value_;
}

std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.to_string(); }

}  // namespace hopfdual
