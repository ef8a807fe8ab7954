// Exact scalar types: arbitrary-precision rationals and prime-field residues.
//
// Both types are value types with canonical representations, so `==` is
// structural equality. They plug into Eigen through NumTraits specializations
// at the bottom of this header.

#ifndef HOPFDUAL_SCALAR_HPP
#define HOPFDUAL_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace hopfdual {

/// Raised when a scalar string cannot be parsed (e.g. "1/0", "x").
class ScalarParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which field every scalar of a computation lives in.
struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  std::uint64_t modulus = 0;  // prime fields only

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);

  /// Parses "q" or "gf:p".
  static FieldSpec parse(std::string_view text);

  std::uint64_t characteristic() const { return kind == Kind::prime ? modulus : 0; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Rational number kept in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in int64 are stored inline;
/// larger values spill into a shared immutable GMP rational. Every result is
/// demoted back to the inline form when it fits, so the representation is
/// canonical.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

 private:
  static Rational from_parts(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Residue modulo a runtime prime.
///
/// A value built from a bare integer (which is what Eigen does for Zero() and
/// Identity()) carries modulus 0 and adopts the modulus of the first bound
/// operand it meets. Values built through `make_scalar` are always bound.
class ModP {
 public:
  ModP() = default;
  ModP(long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  ModP(long long v, std::uint64_t p);

  static ModP parse(std::string_view text, std::uint64_t p);

  bool is_zero() const { return value_ == 0; }
  bool is_one() const;
  std::uint64_t modulus() const { return modulus_; }
  /// Residue in [0, p); only meaningful for bound values.
  std::uint64_t residue() const { return static_cast<std::uint64_t>(value_); }
  std::string to_string() const;

  ModP operator-() const;
  ModP inverse() const;

  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b);
  friend ModP operator*(const ModP& a, const ModP& b);
  friend ModP operator/(const ModP& a, const ModP& b) { return a * b.inverse(); }
  friend bool operator==(const ModP& a, const ModP& b);

  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }

 private:
  ModP bound_to(std::uint64_t p) const;

  // Bound: residue in [0, modulus_). Unbound: plain signed integer.
  std::int64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

inline bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }
std::ostream& operator<<(std::ostream& os, const ModP& x);

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_zero(const ModP& x) { return x.is_zero(); }

template <class K>
K make_scalar(const FieldSpec& field, long long v);

template <>
inline Rational make_scalar<Rational>(const FieldSpec&, long long v) {
  return Rational(v);
}

template <>
inline ModP make_scalar<ModP>(const FieldSpec& field, long long v) {
  return ModP(v, field.modulus);
}

template <class K>
K parse_scalar(const FieldSpec& field, std::string_view text);

template <>
inline Rational parse_scalar<Rational>(const FieldSpec&, std::string_view text) {
  return Rational::parse(text);
}

template <>
inline ModP parse_scalar<ModP>(const FieldSpec& field, std::string_view text) {
  return ModP::parse(text, field.modulus);
}

inline std::string to_string(const Rational& q) { return q.to_string(); }
inline std::string to_string(const ModP& x) { return x.to_string(); }

/// Scalar type matching a field kind; checked at the dispatch boundary.
template <class K>
bool field_matches(const FieldSpec& field);

template <>
inline bool field_matches<Rational>(const FieldSpec& f) {
  return f.kind == FieldSpec::Kind::rationals;
}

template <>
inline bool field_matches<ModP>(const FieldSpec& f) {
  return f.kind == FieldSpec::Kind::prime;
}

}  // namespace hopfdual

namespace Eigen {

template <>
struct NumTraits<hopfdual::Rational> : GenericNumTraits<hopfdual::Rational> {
  using Real = hopfdual::Rational;
  using NonInteger = hopfdual::Rational;
  using Literal = hopfdual::Rational;
  using Nested = hopfdual::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<hopfdual::ModP> : GenericNumTraits<hopfdual::ModP> {
  using Real = hopfdual::ModP;
  using NonInteger = hopfdual::ModP;
  using Literal = hopfdual::ModP;
  using Nested = hopfdual::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // HOPFDUAL_SCALAR_HPP
