#include "sublat/linvec.hpp"

#include <algorithm>
#include <sstream>

#include "sublat/errors.hpp"

namespace sublat::lin {

namespace {

using gf::Index;

// In-place RREF of a row-major matrix; returns pivot columns. Zero rows are
// dropped, so on return matrix.size() == pivots.size() * cols.
std::vector<std::size_t> reduce(const gf::Field& f, std::size_t cols, std::vector<Index>& a) {
  const std::size_t rows = cols == 0 ? 0 : a.size() / cols;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      std::swap_ranges(a.begin() + sel * cols, a.begin() + (sel + 1) * cols, a.begin() + r * cols);
    const Index scale = f.inv(a[r * cols + c]);
    if (scale != 1)
      for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Index factor = a[i * cols + c];
      if (factor == 0) continue;
      const Index nf = f.neg(factor);
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = f.add(a[i * cols + j], f.mul(nf, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r * cols);
  return pivots;
}

void require_ambient(const Subspace& u, const Subspace& w) {
  if (!(u.field() == w.field())) throw FieldMismatch("subspaces over different fields");
  if (u.ambient_dim() != w.ambient_dim()) throw AmbientMismatch("subspaces of different ambient spaces");
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap, const char* what) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) throw CapExceeded(what, v, cap);
  }
  return v;
}

}  // namespace

Vector::Vector(gf::Field field, std::vector<gf::Index> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionMismatch("vector must have at least one coordinate");
  for (auto e : entries_)
    if (e >= field_.q()) throw DomainError("vector entry outside GF(" + std::to_string(field_.q()) + ")");
}

Vector Vector::zero(gf::Field field, std::size_t m) {
  return Vector(std::move(field), std::vector<gf::Index>(m, 0));
}

Vector Vector::unit(gf::Field field, std::size_t m, std::size_t i) {
  std::vector<gf::Index> e(m, 0);
  e.at(i) = 1;
  return Vector(std::move(field), std::move(e));
}

bool Vector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](gf::Index e) { return e == 0; });
}

Vector Vector::operator+(const Vector& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch("vectors over different fields");
  if (dim() != o.dim()) throw DimensionMismatch("vectors of different length");
  std::vector<gf::Index> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = field_.add(entries_[i], o.entries_[i]);
  return Vector(field_, std::move(out));
}

Vector Vector::scaled(gf::Index c) const {
  std::vector<gf::Index> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = field_.mul(c, entries_[i]);
  return Vector(field_, std::move(out));
}

bool Vector::operator==(const Vector& o) const noexcept {
  return field_ == o.field_ && entries_ == o.entries_;
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << ',';
    os << field_.format(entries_[i]);
  }
  os << ')';
  return os.str();
}

gf::Element dot(const Vector& a, const Vector& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("vectors over different fields");
  if (a.dim() != b.dim()) throw DimensionMismatch("vectors of different length");
  const auto& f = a.field();
  gf::Index acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return f.element(acc);
}

bool is_isotropic(const Vector& a) { return !a.is_zero() && dot(a, a).is_zero(); }

Subspace Subspace::zero(gf::Field field, std::size_t m) { return Subspace(std::move(field), m, {}); }

Subspace Subspace::full(gf::Field field, std::size_t m) {
  std::vector<gf::Index> id(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) id[i * m + i] = 1;
  return Subspace(std::move(field), m, std::move(id));
}

Subspace Subspace::from_rref(gf::Field field, std::size_t m, std::vector<gf::Index> basis) {
  if (m == 0 || basis.size() % m != 0) throw DimensionMismatch("basis size is not a multiple of m");
  const std::size_t r = basis.size() / m;
  std::size_t last_pivot = 0;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t c = 0;
    while (c < m && basis[i * m + c] == 0) ++c;
    if (c == m) throw DomainError("zero row in RREF basis");
    if (i > 0 && c <= last_pivot) throw DomainError("pivots not strictly increasing");
    if (basis[i * m + c] != 1) throw DomainError("pivot entry is not 1");
    for (std::size_t k = 0; k < r; ++k)
      if (k != i && basis[k * m + c] != 0) throw DomainError("pivot column not cleared");
    for (auto e : basis)
      if (e >= field.q()) throw DomainError("basis entry outside field");
    last_pivot = c;
  }
  return Subspace(std::move(field), m, std::move(basis));
}

Vector Subspace::row(std::size_t i) const {
  auto s = row_span(i);
  return Vector(field_, std::vector<gf::Index>(s.begin(), s.end()));
}

std::vector<Vector> Subspace::rows() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(row(i));
  return out;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t c = 0;
    while (basis_[i * m_ + c] == 0) ++c;
    out.push_back(c);
  }
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (!(v.field() == field_)) throw FieldMismatch("vector over a different field");
  if (v.dim() != m_) throw DimensionMismatch("vector length differs from ambient dimension");
  // Subtract the pivot combination; v is in the span iff nothing remains.
  std::vector<gf::Index> rest(v.entries().begin(), v.entries().end());
  const auto piv = pivots();
  for (std::size_t i = 0; i < piv.size(); ++i) {
    const gf::Index c = rest[piv[i]];
    if (c == 0) continue;
    const gf::Index nc = field_.neg(c);
    for (std::size_t j = 0; j < m_; ++j) rest[j] = field_.add(rest[j], field_.mul(nc, basis_[i * m_ + j]));
  }
  return std::all_of(rest.begin(), rest.end(), [](gf::Index e) { return e == 0; });
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  require_ambient(*this, other);
  if (dim() > other.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!other.contains(row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const noexcept {
  return m_ == o.m_ && field_ == o.field_ && basis_ == o.basis_;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const noexcept {
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  return std::lexicographical_compare_three_way(basis_.begin(), basis_.end(), o.basis_.begin(),
                                                o.basis_.end());
}

std::string Subspace::to_string() const {
  if (is_zero()) return "{0}";
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << ',';
    os << row(i).to_string();
  }
  os << '>';
  return os.str();
}

Subspace rref_rows(const gf::Field& field, std::size_t m, std::vector<gf::Index> matrix) {
  if (m == 0) throw DimensionMismatch("ambient dimension must be at least 1");
  if (matrix.size() % m != 0) throw DimensionMismatch("matrix size is not a multiple of m");
  reduce(field, m, matrix);
  return Subspace(field, m, std::move(matrix));
}

Subspace rref(const gf::Field& field, std::size_t m, std::span<const Vector> rows) {
  std::vector<gf::Index> a;
  a.reserve(rows.size() * m);
  for (const auto& v : rows) {
    if (!(v.field() == field)) throw FieldMismatch("row over a different field");
    if (v.dim() != m) throw DimensionMismatch("row length differs from ambient dimension");
    a.insert(a.end(), v.entries().begin(), v.entries().end());
  }
  return rref_rows(field, m, std::move(a));
}

Subspace span_of(std::span<const Vector> rows) {
  if (rows.empty()) throw DimensionMismatch("span_of needs at least one vector to fix the ambient space");
  return rref(rows.front().field(), rows.front().dim(), rows);
}

std::vector<Vector> members(const Subspace& u, std::uint64_t cap) {
  const auto& f = u.field();
  const std::size_t r = u.dim();
  const std::size_t m = u.ambient_dim();
  const std::uint64_t count = checked_power(f.q(), r, cap, "subspace member count");
  std::vector<Vector> out;
  out.reserve(count);
  std::vector<gf::Index> coeff(r, 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<gf::Index> v(m, 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (coeff[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) v[j] = f.add(v[j], f.mul(coeff[i], u.basis()[i * m + j]));
    }
    out.emplace_back(f, std::move(v));
    for (std::size_t i = r; i-- > 0;) {
      if (++coeff[i] < f.q()) break;
      coeff[i] = 0;
    }
  }
  return out;
}

std::vector<gf::Index> nullspace(const gf::Field& field, std::size_t rows, std::size_t cols,
                                 std::vector<gf::Index> matrix) {
  if (matrix.size() != rows * cols) throw DimensionMismatch("matrix size does not match shape");
  const auto piv = reduce(field, cols, matrix);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  // One vector per free column; reduce() afterwards puts the basis in RREF.
  std::vector<gf::Index> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<gf::Index> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = field.neg(matrix[i * cols + free]);
    basis.insert(basis.end(), v.begin(), v.end());
  }
  reduce(field, cols, basis);
  return basis;
}

Subspace orthocomplement(const Subspace& u) {
  const std::size_t m = u.ambient_dim();
  std::vector<gf::Index> a(u.basis().begin(), u.basis().end());
  auto basis = nullspace(u.field(), u.dim(), m, std::move(a));
  return Subspace(u.field(), m, std::move(basis));
}

Subspace sum(const Subspace& u, const Subspace& w) {
  require_ambient(u, w);
  if (u.is_zero()) return w;
  if (w.is_zero()) return u;
  std::vector<gf::Index> a(u.basis().begin(), u.basis().end());
  a.insert(a.end(), w.basis().begin(), w.basis().end());
  return rref_rows(u.field(), u.ambient_dim(), std::move(a));
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  require_ambient(u, w);
  const auto& f = u.field();
  const std::size_t m = u.ambient_dim();
  const std::size_t r = u.dim();
  const std::size_t s = w.dim();
  if (r == 0 || s == 0) return Subspace::zero(f, m);
  // Coefficient vectors (a, b) with a U + b W = 0 form the kernel of the
  // m x (r + s) matrix whose columns are the rows of U and W. Each such a
  // gives a U in the intersection.
  std::vector<gf::Index> t(m * (r + s));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < r; ++i) t[j * (r + s) + i] = u.basis()[i * m + j];
    for (std::size_t i = 0; i < s; ++i) t[j * (r + s) + r + i] = w.basis()[i * m + j];
  }
  const auto kernel = nullspace(f, m, r + s, std::move(t));
  const std::size_t k = kernel.size() / (r + s);
  std::vector<gf::Index> gens(k * m, 0);
  for (std::size_t v = 0; v < k; ++v) {
    for (std::size_t i = 0; i < r; ++i) {
      const gf::Index a = kernel[v * (r + s) + i];
      if (a == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        gens[v * m + j] = f.add(gens[v * m + j], f.mul(a, u.basis()[i * m + j]));
    }
  }
  return rref_rows(f, m, std::move(gens));
}

void for_each_vector(const gf::Field& field, std::size_t m,
                     const std::function<bool(std::span<const gf::Index>)>& visit, std::uint64_t cap) {
  const std::uint64_t count = checked_power(field.q(), m, cap, "vector enumeration");
  std::vector<gf::Index> v(m, 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    if (!visit(v)) return;
    for (std::size_t i = m; i-- > 0;) {
      if (++v[i] < field.q()) break;
      v[i] = 0;
    }
  }
}

std::optional<Vector> find_isotropic(const gf::Field& field, std::size_t m, std::uint64_t cap) {
  if (m == 0) throw DimensionMismatch("ambient dimension must be at least 1");
  std::optional<Vector> found;
  for_each_vector(
      field, m,
      [&](std::span<const gf::Index> v) {
        bool nonzero = false;
        gf::Index acc = 0;
        for (auto e : v) {
          nonzero = nonzero || e != 0;
          acc = field.add(acc, field.mul(e, e));
        }
        if (nonzero && acc == 0) {
          found.emplace(field, std::vector<gf::Index>(v.begin(), v.end()));
          return false;
        }
        return true;
      },
      cap);
  return found;
}

}  // namespace sublat::lin
