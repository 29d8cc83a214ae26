#include "gldep/field.hpp"

#include <atomic>
#include <limits>
#include <sstream>

namespace gldep {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NoIrreducibleFound: return "NoIrreducibleFound";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InfiniteField: return "InfiniteField";
    case Errc::NonCanonical: return "NonCanonical";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotSquare: return "NotSquare";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::DependentInput: return "DependentInput";
    case Errc::Singular: return "Singular";
    case Errc::TooFewMatrices: return "TooFewMatrices";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::InternalRankError: return "InternalRankError";
    case Errc::InternalSpanError: return "InternalSpanError";
    case Errc::SpanExpansionFailed: return "SpanExpansionFailed";
    case Errc::ExhaustedBound: return "ExhaustedBound";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<Element>;

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / base) {
      throw Error(Errc::TooLarge, std::to_string(base) + "^" + std::to_string(exp) + " exceeds 63 bits");
    }
    r *= base;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

void trim(Poly& a, const Field& f) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_rem(Poly a, const Poly& b, const Field& f) {
  trim(a, f);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Element lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = f.sub(a[shift + i], f.mul(lead, b[i]));
    }
    trim(a, f);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-q digits of idx.
Poly monic_from_index(const Field& f, std::uint64_t q, unsigned degree, std::uint64_t idx) {
  Poly poly(degree + 1, f.zero());
  for (unsigned i = 0; i < degree; ++i) {
    poly[i] = f.element_at(idx % q);
    idx /= q;
  }
  poly[degree] = f.one();
  return poly;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) throw Error(Errc::TooLarge, "prime fields are limited to p < 2^31");
  Field f;
  f.kind_ = FieldKind::Prime;
  f.p_ = p;
  f.k_ = 1;
  return f;
}

Field Field::extension(std::uint64_t p, unsigned k, std::optional<Coeffs> modulus) {
  const Field base = prime(p);
  if (k < 2) throw Error(Errc::InvalidArgument, "extension degree must be at least 2");
  checked_pow(p, k);

  Coeffs mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != k + 1 || mod.back() != 1) {
      throw Error(Errc::InvalidArgument, "modulus must be monic of degree " + std::to_string(k));
    }
    for (auto c : mod) {
      if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible(mod, p)) throw Error(Errc::InvalidArgument, "modulus is reducible");
  } else {
    for (const auto& c : smallest_irreducible(base, k)) mod.push_back(c.residue());
  }

  Field f;
  f.kind_ = FieldKind::Extension;
  f.p_ = p;
  f.k_ = k;
  f.modulus_ = std::move(mod);
  return f;
}

Field Field::rational() { return Field{}; }

Field Field::parse(const std::string& descriptor) {
  auto parts = std::vector<std::string>{};
  std::stringstream ss(descriptor);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  auto number = [&](const std::string& s) -> std::uint64_t {
    try {
      std::size_t pos = 0;
      auto v = std::stoull(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, "bad number '" + s + "' in field descriptor");
    }
  };
  if (parts.size() == 1 && parts[0] == "rational") return rational();
  if (parts.size() == 2 && parts[0] == "prime") return prime(number(parts[1]));
  if (parts.size() == 3 && parts[0] == "ext") {
    return extension(number(parts[1]), static_cast<unsigned>(number(parts[2])));
  }
  throw Error(Errc::InvalidArgument, "field descriptor '" + descriptor +
                                         "' is not prime:p, ext:p:k or rational");
}

std::optional<std::uint64_t> Field::cardinality() const {
  if (kind_ == FieldKind::Rational) return std::nullopt;
  return checked_pow(p_, k_);
}

std::string Field::descriptor() const {
  switch (kind_) {
    case FieldKind::Prime: return "prime:" + std::to_string(p_);
    case FieldKind::Extension: return "ext:" + std::to_string(p_) + ":" + std::to_string(k_);
    case FieldKind::Rational: break;
  }
  return "rational";
}

Element Field::zero() const { return from_int(0); }
Element Field::one() const { return from_int(1); }

Element Field::from_int(std::int64_t v) const {
  switch (kind_) {
    case FieldKind::Prime: {
      auto r = v % static_cast<std::int64_t>(p_);
      if (r < 0) r += static_cast<std::int64_t>(p_);
      return Element(static_cast<std::uint64_t>(r));
    }
    case FieldKind::Extension: {
      Coeffs c(k_, 0);
      c[0] = from_int_prime(v);
      return Element(std::move(c));
    }
    case FieldKind::Rational: break;
  }
  return Element(mpq_class(static_cast<long>(v)));
}

std::uint64_t Field::from_int_prime(std::int64_t v) const {
  auto r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(r);
}

Element Field::from_mpz(const mpz_class& v) const {
  if (kind_ == FieldKind::Rational) return Element(mpq_class(v));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return from_int(static_cast<std::int64_t>(r.get_ui()));
}

Element Field::fraction(const mpq_class& q) const {
  if (kind_ != FieldKind::Rational) {
    throw Error(Errc::FieldMismatch, "fractions only exist in the rational field");
  }
  mpq_class c(q);
  c.canonicalize();
  return Element(std::move(c));
}

Element Field::from_coeffs(const Coeffs& c) const {
  if (kind_ != FieldKind::Extension) {
    throw Error(Errc::FieldMismatch, "coefficient vectors only exist in extension fields");
  }
  if (c.size() > k_) throw Error(Errc::InvalidArgument, "too many coefficients for degree");
  Coeffs out(k_, 0);
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] % p_;
  return Element(std::move(out));
}

bool Field::is_canonical(const Element& e) const {
  switch (kind_) {
    case FieldKind::Prime:
      return e.repr().index() == 0 && e.residue() < p_;
    case FieldKind::Extension: {
      if (e.repr().index() != 1) return false;
      const auto& c = e.coeffs();
      if (c.size() != k_) return false;
      for (auto x : c) {
        if (x >= p_) return false;
      }
      return true;
    }
    case FieldKind::Rational: break;
  }
  if (e.repr().index() != 2) return false;
  const auto& q = e.fraction();
  if (sgn(q.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

namespace {
std::atomic<std::uint64_t> g_noncanonical{0};
}  // namespace

std::uint64_t noncanonical_count() noexcept { return g_noncanonical.load(); }

void Field::check(const Element& e) const {
  if (!is_canonical(e)) {
    g_noncanonical.fetch_add(1);
    throw Error(Errc::NonCanonical, "element is not a canonical member of " + descriptor());
  }
}

Coeffs Field::ext_mul(const Coeffs& a, const Coeffs& b) const {
  Coeffs prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
  }
  // Reduce with x^k = -(m_0 + ... + m_{k-1} x^{k-1}).
  for (std::size_t d = prod.size() - 1; d >= k_; --d) {
    const auto lead = prod[d];
    if (lead != 0) {
      for (unsigned i = 0; i < k_; ++i) {
        prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) % p_ * lead) % p_;
      }
      prod[d] = 0;
    }
  }
  prod.resize(k_);
  return prod;
}

Coeffs Field::ext_inv(const Coeffs& a) const {
  // a^(q-2) in the multiplicative group of order q-1.
  auto exp = *cardinality() - 2;
  Coeffs result(k_, 0);
  result[0] = 1;
  Coeffs base = a;
  while (exp > 0) {
    if (exp & 1) result = ext_mul(result, base);
    base = ext_mul(base, base);
    exp >>= 1;
  }
  return result;
}

Element Field::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case FieldKind::Prime: return Element((a.residue() + b.residue()) % p_);
    case FieldKind::Extension: {
      Coeffs c(k_);
      for (unsigned i = 0; i < k_; ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % p_;
      return Element(std::move(c));
    }
    case FieldKind::Rational: break;
  }
  Element r(mpq_class(a.fraction() + b.fraction()));
  check(r);
  return r;
}

Element Field::neg(const Element& a) const {
  check(a);
  switch (kind_) {
    case FieldKind::Prime: return Element((p_ - a.residue()) % p_);
    case FieldKind::Extension: {
      Coeffs c(k_);
      for (unsigned i = 0; i < k_; ++i) c[i] = (p_ - a.coeffs()[i]) % p_;
      return Element(std::move(c));
    }
    case FieldKind::Rational: break;
  }
  Element r(mpq_class(-a.fraction()));
  check(r);
  return r;
}

Element Field::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Field::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case FieldKind::Prime: return Element(a.residue() * b.residue() % p_);
    case FieldKind::Extension: return Element(ext_mul(a.coeffs(), b.coeffs()));
    case FieldKind::Rational: break;
  }
  Element r(mpq_class(a.fraction() * b.fraction()));
  check(r);
  return r;
}

Element Field::inv(const Element& a) const {
  check(a);
  if (is_zero(a)) throw Error(Errc::DivisionByZero, "inverse of zero");
  switch (kind_) {
    case FieldKind::Prime: return Element(inv_mod(a.residue(), p_));
    case FieldKind::Extension: return Element(ext_inv(a.coeffs()));
    case FieldKind::Rational: break;
  }
  Element r(mpq_class(1 / a.fraction()));
  check(r);
  return r;
}

Element Field::div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

bool Field::eq(const Element& a, const Element& b) const {
  check(a);
  check(b);
  return a == b;
}

bool Field::is_zero(const Element& a) const {
  check(a);
  switch (kind_) {
    case FieldKind::Prime: return a.residue() == 0;
    case FieldKind::Extension:
      for (auto c : a.coeffs()) {
        if (c != 0) return false;
      }
      return true;
    case FieldKind::Rational: break;
  }
  return sgn(a.fraction()) == 0;
}

bool Field::is_one(const Element& a) const { return eq(a, one()); }

std::vector<Element> Field::elements() const {
  if (!is_finite()) throw Error(Errc::InfiniteField, "cannot enumerate the rationals");
  const auto q = *cardinality();
  std::vector<Element> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(element_at(i));
  return out;
}

Element Field::element_at(std::uint64_t idx) const {
  if (!is_finite()) throw Error(Errc::InfiniteField, "cannot enumerate the rationals");
  if (idx >= *cardinality()) throw Error(Errc::InvalidArgument, "element index out of range");
  if (kind_ == FieldKind::Prime) return Element(idx);
  Coeffs c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = idx % p_;
    idx /= p_;
  }
  return Element(std::move(c));
}

std::uint64_t Field::index_of(const Element& e) const {
  if (!is_finite()) throw Error(Errc::InfiniteField, "rationals have no element index");
  check(e);
  if (kind_ == FieldKind::Prime) return e.residue();
  std::uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + e.coeffs()[i];
  return idx;
}

std::string Field::to_string(const Element& e) const {
  check(e);
  switch (kind_) {
    case FieldKind::Prime: return std::to_string(e.residue());
    case FieldKind::Extension: {
      std::string s = "(";
      for (unsigned i = 0; i < k_; ++i) {
        if (i) s += ",";
        s += std::to_string(e.coeffs()[i]);
      }
      return s + ")";
    }
    case FieldKind::Rational: break;
  }
  return e.fraction().get_str();
}

bool is_irreducible(const std::vector<Element>& monic, const Field& field) {
  if (!field.is_finite()) throw Error(Errc::InfiniteField, "irreducibility test needs a finite field");
  if (monic.size() < 2 || !field.is_one(monic.back())) {
    throw Error(Errc::InvalidArgument, "expected a monic polynomial of degree >= 1");
  }
  const auto degree = static_cast<unsigned>(monic.size() - 1);
  const auto q = *field.cardinality();
  for (unsigned d = 1; d <= degree / 2; ++d) {
    const auto count = checked_pow(q, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_rem(monic, monic_from_index(field, q, d, idx), field).empty()) return false;
    }
  }
  return true;
}

bool is_irreducible(const Coeffs& monic, std::uint64_t p) {
  const Field f = Field::prime(p);
  std::vector<Element> poly;
  for (auto c : monic) poly.push_back(f.from_int(static_cast<std::int64_t>(c % p)));
  return is_irreducible(poly, f);
}

std::vector<Element> smallest_irreducible(const Field& field, unsigned degree) {
  if (!field.is_finite()) throw Error(Errc::InfiniteField, "irreducible search needs a finite field");
  if (degree == 0) throw Error(Errc::InvalidArgument, "degree must be positive");
  const auto q = *field.cardinality();
  const auto count = checked_pow(q, degree);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto poly = monic_from_index(field, q, degree, idx);
    if (is_irreducible(poly, field)) return poly;
  }
  throw Error(Errc::NoIrreducibleFound,
              "no monic irreducible of degree " + std::to_string(degree) + " over " + field.descriptor());
}

}  // namespace gldep
