#include "sublat/gfield.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sublat/errors.hpp"

namespace sublat::gf {

namespace {

// Full add/mul tables are kept for q up to this size (2 * q^2 * 2 bytes).
constexpr std::uint32_t kTableLimit = 1024;

std::uint32_t eval_poly(std::uint32_t p, std::span<const std::uint32_t> poly, std::uint32_t x) {
  std::uint64_t acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % p;
  return static_cast<std::uint32_t>(acc);
}

// Remainder of a by monic b over Z_p.
Polynomial poly_mod(std::uint32_t p, Polynomial a, std::span<const std::uint32_t> b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i < db; ++i) {
        const std::uint64_t sub = lead * b[i] % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return a;
}


void trim(Polynomial& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}

// Remainder of a by b (nonzero leading coefficient), trimmed.
Polynomial poly_rem(std::uint32_t p, Polynomial a, const Polynomial& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t inv = inverse_mod(b.back(), p);
  while (a.size() > db) {
    const std::uint64_t factor = a.back() * inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
    trim(a);
  }
  return a;
}

Polynomial poly_mulmod(std::uint32_t p, const Polynomial& a, const Polynomial& b, const Polynomial& f) {
  if (a.empty() || b.empty()) return {};
  Polynomial c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_rem(p, std::move(c), f);
}

Polynomial poly_gcd(std::uint32_t p, Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_rem(p, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Advances a constant-first coefficient vector to the next one in
// constant-first lexicographic order (c_0 most significant). Returns false
// after the last one.
bool next_lex(std::uint32_t p, std::vector<std::uint32_t>& c) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  if (poly.size() < 2) return false;
  const std::size_t degree = poly.size() - 1;
  if (degree == 1) return true;
  if (degree <= 3) {
    for (std::uint32_t x = 0; x < p; ++x)
      if (eval_poly(p, poly, x) == 0) return false;
    return true;
  }
  // Ben-Or: f has no factor of degree i iff gcd(f, x^(p^i) - x) = 1.
  const Polynomial f(poly.begin(), poly.end());
  Polynomial h = poly_rem(p, {0, 1}, f);
  for (std::size_t i = 1; i <= degree / 2; ++i) {
    Polynomial base = h, acc = {1};
    for (std::uint32_t e = p; e; e >>= 1) {
      if (e & 1) acc = poly_mulmod(p, acc, base, f);
      base = poly_mulmod(p, base, base, f);
    }
    h = std::move(acc);
    Polynomial diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (poly_gcd(p, f, diff).size() > 1) return false;
  }
  return true;
}

std::vector<Polynomial> monic_irreducibles(std::uint32_t p, std::uint32_t degree) {
  std::vector<Polynomial> out;
  std::vector<std::uint32_t> low(degree, 0);
  do {
    Polynomial f = low;
    f.push_back(1);
    if (is_irreducible(p, f)) out.push_back(std::move(f));
  } while (next_lex(p, low));
  return out;
}

Polynomial smallest_irreducible(std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> low(n, 0);
  do {
    Polynomial f = low;
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  } while (next_lex(p, low));
  // Irreducibles exist in every degree.
  throw ReduciblePolynomial("no monic irreducible of degree " + std::to_string(n));
}

std::string format_polynomial(std::span<const std::uint32_t> poly) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = poly.size(); i-- > 0;) {
    const std::uint32_t c = poly[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  Polynomial modulus;
  std::vector<std::uint32_t> pow_p;  // p^i, i < n
  bool tabled = false;
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint16_t> neg_table;
  std::vector<std::uint16_t> inv_table;

  std::vector<std::uint32_t> decode(Index a) const {
    std::vector<std::uint32_t> c(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  }

  Index encode(std::span<const std::uint32_t> c) const {
    Index v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
  }

  Index raw_add(Index a, Index b) const {
    if (n == 1) return (a + b) % p;
    Index v = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      v += ((a % p + b % p) % p) * pow_p[i];
      a /= p;
      b /= p;
    }
    return v;
  }

  Index raw_neg(Index a) const {
    if (n == 1) return (p - a) % p;
    Index v = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      v += ((p - a % p) % p) * pow_p[i];
      a /= p;
    }
    return v;
  }

  Index raw_mul(Index a, Index b) const {
    if (n == 1) return static_cast<Index>(std::uint64_t{a} * b % p);
    const auto ca = decode(a);
    const auto cb = decode(b);
    Polynomial prod(2 * n - 1, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (ca[i] == 0) continue;
      for (std::uint32_t j = 0; j < n; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p);
    }
    auto r = poly_mod(p, std::move(prod), modulus);
    r.resize(n, 0);
    return encode(r);
  }

  Index raw_pow(Index a, std::uint64_t e) const {
    Index result = 1;
    while (e > 0) {
      if (e & 1) result = raw_mul(result, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return result;
  }
};

}  // namespace detail

Field Field::make(std::uint32_t p, std::uint32_t n, std::optional<Polynomial> modulus) {
  if (!is_prime(p)) throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw CapExceeded("field order", q, kMaxFieldOrder);
  }

  Polynomial mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != n + 1 || mod.back() != 1)
      throw InvalidModulus("modulus must be monic of degree " + std::to_string(n));
    for (auto c : mod)
      if (c >= p) throw InvalidModulus("modulus coefficient out of range [0, p)");
    if (!is_irreducible(p, mod))
      throw ReduciblePolynomial(format_polynomial(mod) + " is reducible over Z_" + std::to_string(p));
  } else {
    mod = smallest_irreducible(p, n);
  }

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->n = n;
  d->q = static_cast<std::uint32_t>(q);
  d->modulus = std::move(mod);
  d->pow_p.resize(n);
  std::uint32_t pw = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    d->pow_p[i] = pw;
    pw *= p;
  }

  if (d->q <= kTableLimit) {
    const std::uint32_t qq = d->q;
    d->add_table.resize(std::size_t{qq} * qq);
    d->mul_table.resize(std::size_t{qq} * qq);
    d->neg_table.resize(qq);
    d->inv_table.resize(qq, 0);
    // Multiplication through discrete logs to a primitive element.
    std::vector<Index> exp(qq - 1);
    std::vector<std::uint32_t> log(qq, 0);
    for (Index g = 1; g < qq; ++g) {
      Index x = 1;
      std::uint32_t k = 0;
      do {
        exp[k] = x;
        log[x] = k;
        x = d->raw_mul(x, g);
      } while (++k < qq - 1 && x != 1);
      if (k == qq - 1 && x == 1) break;
    }
    for (Index a = 0; a < qq; ++a) {
      d->neg_table[a] = static_cast<std::uint16_t>(d->raw_neg(a));
      if (a != 0) d->inv_table[a] = static_cast<std::uint16_t>(exp[(qq - 1 - log[a]) % (qq - 1)]);
      for (Index b = 0; b < qq; ++b) {
        d->add_table[std::size_t{a} * qq + b] = static_cast<std::uint16_t>(d->raw_add(a, b));
        const Index m = (a == 0 || b == 0) ? 0 : exp[(log[a] + log[b]) % (qq - 1)];
        d->mul_table[std::size_t{a} * qq + b] = static_cast<std::uint16_t>(m);
      }
    }
    d->tabled = true;
  }
  return Field(std::move(d));
}

Field Field::of_order(std::uint64_t q) {
  if (q < 2) throw DomainError("field order must be a prime power >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t n = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++n;
  }
  if (r != 1) throw NonPrimeCharacteristic(std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldOrder) throw CapExceeded("field order", q, kMaxFieldOrder);
  return make(static_cast<std::uint32_t>(p), n);
}

std::uint32_t Field::p() const noexcept { return data_->p; }
std::uint32_t Field::n() const noexcept { return data_->n; }
std::uint32_t Field::q() const noexcept { return data_->q; }
const Polynomial& Field::modulus() const noexcept { return data_->modulus; }

Index Field::add(Index a, Index b) const noexcept {
  const auto& d = *data_;
  if (d.tabled) return d.add_table[std::size_t{a} * d.q + b];
  return d.raw_add(a, b);
}

Index Field::neg(Index a) const noexcept {
  const auto& d = *data_;
  if (d.tabled) return d.neg_table[a];
  return d.raw_neg(a);
}

Index Field::sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

Index Field::mul(Index a, Index b) const noexcept {
  const auto& d = *data_;
  if (d.tabled) return d.mul_table[std::size_t{a} * d.q + b];
  return d.raw_mul(a, b);
}

Index Field::inv(Index a) const {
  if (a == 0) throw ZeroInverse("zero has no multiplicative inverse");
  const auto& d = *data_;
  if (d.tabled) return d.inv_table[a];
  return d.raw_pow(a, d.q - 2);
}

Index Field::pow(Index a, std::uint64_t e) const noexcept { return data_->raw_pow(a, e); }

std::vector<std::uint32_t> Field::coeffs(Index a) const { return data_->decode(a); }

Index Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > data_->n) throw DomainError("too many coefficients for GF(" + std::to_string(q()) + ")");
  for (auto c : coeffs)
    if (c >= data_->p) throw DomainError("coefficient out of range [0, p)");
  return data_->encode(coeffs);
}

std::string Field::format(Index a) const {
  const auto c = coeffs(a);
  return format_polynomial(c);
}

Element Field::element(Index a) const {
  if (a >= q()) throw DomainError("element index " + std::to_string(a) + " out of range");
  return Element(*this, a);
}

Element Field::zero() const { return Element(*this, 0); }
Element Field::one() const { return Element(*this, 1); }

std::vector<Element> Field::all_elements() const {
  std::vector<Element> out;
  out.reserve(q());
  for (Index a = 0; a < q(); ++a) out.emplace_back(*this, a);
  return out;
}

bool Field::operator==(const Field& other) const noexcept {
  return data_ == other.data_ || (data_->p == other.data_->p && data_->modulus == other.data_->modulus);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << q() << ")";
  if (n() == 1)
    os << " = Z_" << p();
  else
    os << " = Z_" << p() << "[x]/(" << format_polynomial(modulus()) << ")";
  return os.str();
}

Element::Element(Field field, Index index) : field_(std::move(field)), index_(index) {
  assert(index_ < field_.q());
}

void Element::require_same(const Element& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("operands belong to different fields");
}

Element Element::operator+(const Element& o) const {
  require_same(o);
  return Element(field_, field_.add(index_, o.index_));
}

Element Element::operator-(const Element& o) const {
  require_same(o);
  return Element(field_, field_.sub(index_, o.index_));
}

Element Element::operator*(const Element& o) const {
  require_same(o);
  return Element(field_, field_.mul(index_, o.index_));
}

Element Element::operator/(const Element& o) const {
  require_same(o);
  return Element(field_, field_.mul(index_, field_.inv(o.index_)));
}

Element Element::operator-() const { return Element(field_, field_.neg(index_)); }

Element Element::inverse() const { return Element(field_, field_.inv(index_)); }

bool Element::operator==(const Element& o) const noexcept {
  return field_ == o.field_ && index_ == o.index_;
}

Element add(const Element& a, const Element& b) { return a + b; }
Element mul(const Element& a, const Element& b) { return a * b; }
Element inv(const Element& a) { return a.inverse(); }

}  // namespace sublat::gf
