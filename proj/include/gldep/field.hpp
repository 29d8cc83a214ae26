#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "gldep/error.hpp"

namespace gldep {

/// Coefficients over GF(p), lowest degree first.
using Coeffs = std::vector<std::uint64_t>;

/// A field element. The active alternative follows the field kind:
/// residue for GF(p), length-k coefficient vector for GF(p^k), and a
/// reduced fraction for the rationals. Only a Field creates canonical
/// values; equality is structural.
class Element {
 public:
  using Repr = std::variant<std::uint64_t, Coeffs, mpq_class>;

  Element() = default;
  explicit Element(Repr repr) : repr_(std::move(repr)) {}

  const Repr& repr() const noexcept { return repr_; }

  std::uint64_t residue() const { return std::get<std::uint64_t>(repr_); }
  const Coeffs& coeffs() const { return std::get<Coeffs>(repr_); }
  const mpq_class& fraction() const { return std::get<mpq_class>(repr_); }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.repr_.index() != b.repr_.index()) return false;
    switch (a.repr_.index()) {
      case 0: return a.residue() == b.residue();
      case 1: return a.coeffs() == b.coeffs();
      default: return a.fraction() == b.fraction();
    }
  }

 private:
  Repr repr_{std::uint64_t{0}};
};

enum class FieldKind { Prime, Extension, Rational };

/// FieldSpec: GF(p), GF(p^k) with a stored irreducible modulus, or Q.
///
/// Every arithmetic entry point validates that its operands are canonical
/// members of this field and throws NonCanonical otherwise; results are
/// validated the same way before they are returned.
class Field {
 public:
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

  /// GF(p); p must be prime and below 2^31.
  static Field prime(std::uint64_t p);
  /// GF(p^k), k >= 2. Without a modulus the smallest monic irreducible
  /// polynomial of degree k is searched for (ordered by sum c_i p^i).
  static Field extension(std::uint64_t p, unsigned k, std::optional<Coeffs> modulus = std::nullopt);
  static Field rational();

  /// Parses "prime:p", "ext:p:k" or "rational".
  static Field parse(const std::string& descriptor);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  /// Monic modulus of an extension field, length k+1, lowest degree first.
  const Coeffs& modulus() const noexcept { return modulus_; }

  bool is_finite() const noexcept { return kind_ != FieldKind::Rational; }
  /// nullopt for the rationals. Throws TooLarge if p^k does not fit 63 bits.
  std::optional<std::uint64_t> cardinality() const;

  std::string descriptor() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

  Element zero() const;
  Element one() const;
  /// Image of an integer under the canonical ring map Z -> K.
  Element from_int(std::int64_t v) const;
  Element from_mpz(const mpz_class& v) const;
  /// Only valid for the rationals.
  Element fraction(const mpq_class& q) const;
  /// Extension element from coefficients (reduced mod p, padded to length k).
  Element from_coeffs(const Coeffs& c) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element div(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element inv(const Element& a) const;
  bool eq(const Element& a, const Element& b) const;
  bool is_zero(const Element& a) const;
  bool is_one(const Element& a) const;

  /// True iff e is a canonical member of this field.
  bool is_canonical(const Element& e) const;
  /// Throws NonCanonical unless is_canonical(e).
  void check(const Element& e) const;

  /// Finite fields only: elements in canonical order, zero first.
  std::vector<Element> elements() const;
  /// Finite fields only: the idx-th element of elements().
  Element element_at(std::uint64_t idx) const;
  /// Finite fields only: position of e in elements().
  std::uint64_t index_of(const Element& e) const;

  std::string to_string(const Element& e) const;

 private:
  Field() = default;

  std::uint64_t from_int_prime(std::int64_t v) const;
  Coeffs ext_mul(const Coeffs& a, const Coeffs& b) const;
  Coeffs ext_inv(const Coeffs& a) const;

  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t p_ = 0;
  unsigned k_ = 1;
  Coeffs modulus_;
};

bool is_prime(std::uint64_t p);

/// Process-wide number of NonCanonical rejections so far.
std::uint64_t noncanonical_count() noexcept;

/// Irreducibility of a monic polynomial (coefficients lowest degree first)
/// over a finite field, by trial division against every monic polynomial
/// of degree 1..deg/2.
bool is_irreducible(const std::vector<Element>& monic, const Field& field);

/// Convenience overload over GF(p).
bool is_irreducible(const Coeffs& monic, std::uint64_t p);

/// Smallest monic irreducible polynomial of the given degree over a finite
/// field, ordered by the base-|K| integer sum index(c_i) |K|^i.
std::vector<Element> smallest_irreducible(const Field& field, unsigned degree);

}  // namespace gldep
