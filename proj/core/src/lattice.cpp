#include "sublat/lattice.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <sstream>

#include "sublat/errors.hpp"

namespace sublat::lattice {

namespace {

using boost::multiprecision::cpp_int;

cpp_int a_n(std::uint64_t q, unsigned n) {
  cpp_int acc = 1;
  cpp_int power = 1;
  for (unsigned i = 1; i <= n; ++i) {
    power *= q;
    acc *= power - 1;
  }
  return acc;
}

Count to_count(const cpp_int& v) {
  if (v > std::numeric_limits<Count>::max()) throw DomainError("count does not fit in 64 bits");
  return v.convert_to<Count>();
}

Count geometric(std::uint64_t q, unsigned k) {
  // 1 + q + ... + q^{k-1}
  cpp_int acc = 0;
  cpp_int power = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc += power;
    power *= q;
  }
  return to_count(acc);
}

void require_q(std::uint64_t q) {
  if (q < 2) throw DomainError("q must be at least 2");
}

// Calls emit(matrix) for every d x m RREF matrix over GF(q).
template <typename Emit>
void enumerate_rref(const gf::Field& f, std::size_t m, std::size_t d, Emit&& emit) {
  if (d == 0) {
    emit(std::vector<gf::Index>{});
    return;
  }
  std::vector<std::size_t> piv(d);
  for (std::size_t i = 0; i < d; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = piv[i] + 1; j < m; ++j)
        if (!std::binary_search(piv.begin(), piv.end(), j)) free.emplace_back(i, j);
    std::vector<gf::Index> mat(d * m, 0);
    for (std::size_t i = 0; i < d; ++i) mat[i * m + piv[i]] = 1;
    std::vector<gf::Index> digits(free.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < free.size(); ++k) mat[free[k].first * m + free[k].second] = digits[k];
      emit(mat);
      bool wrapped = true;
      for (std::size_t k = free.size(); k-- > 0;) {
        if (++digits[k] < f.q()) {
          wrapped = false;
          break;
        }
        digits[k] = 0;
      }
      if (wrapped) break;
    }
    // next pivot combination
    std::size_t i = d;
    while (i > 0 && piv[i - 1] == m - d + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace

Count gaussian_count(std::uint64_t q, unsigned m, unsigned d) {
  require_q(q);
  if (d > m) throw DomainError("dimension d=" + std::to_string(d) + " exceeds m=" + std::to_string(m));
  const cpp_int num = a_n(q, m);
  const cpp_int den = a_n(q, d) * a_n(q, m - d);
  if (num % den != 0) throw std::logic_error("gaussian binomial division is not exact");
  return to_count(num / den);
}

Count atom_count(std::uint64_t q, unsigned m) {
  require_q(q);
  if (m < 1) throw DomainError("atom_count needs m >= 1");
  return geometric(q, m);
}

Count upper_covers_count(std::uint64_t q, unsigned m, unsigned d) {
  require_q(q);
  if (d >= m) throw DomainError("upper covers need d < m");
  return geometric(q, m - d);
}

Count lower_covers_count(std::uint64_t q, unsigned m, unsigned d) {
  require_q(q);
  if (d == 0 || d > m) throw DomainError("lower covers need 0 < d <= m");
  return geometric(q, d);
}

Count total_subspaces(std::uint64_t q, unsigned m) {
  cpp_int acc = 0;
  for (unsigned d = 0; d <= m; ++d) acc += gaussian_count(q, m, d);
  return to_count(acc);
}

std::size_t SubspaceLattice::KeyHash::operator()(const std::vector<gf::Index>& k) const noexcept {
  std::size_t h = k.size();
  for (auto v : k) h = h * 1000003u ^ (v + 0x9e3779b9u + (h << 6) + (h >> 2));
  return h;
}

SubspaceLattice build_lattice(const gf::Field& field, std::size_t m, std::uint64_t cap) {
  if (m < 1) throw DimensionMismatch("ambient dimension must be at least 1");
  const Count total = total_subspaces(field.q(), static_cast<unsigned>(m));
  if (total > cap) throw CapExceeded("subspace lattice size", total, cap);

  SubspaceLattice L(field, m);
  L.elements_.reserve(total);
  for (std::size_t d = 0; d <= m; ++d) {
    const std::size_t first = L.elements_.size();
    enumerate_rref(field, m, d, [&](const std::vector<gf::Index>& mat) {
      L.elements_.push_back(lin::Subspace::from_rref(field, m, mat));
    });
    std::sort(L.elements_.begin() + static_cast<std::ptrdiff_t>(first), L.elements_.end());
  }
  const std::size_t n = L.elements_.size();
  if (n != total) throw std::logic_error("RREF enumeration disagrees with the subspace count");

  L.index_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto b = L.elements_[i].basis();
    L.index_.emplace(std::vector<gf::Index>(b.begin(), b.end()), i);
  }

  L.perp_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) L.perp_[i] = L.require_index(lin::orthocomplement(L.elements_[i]));

  // Upper covers of U are U + <v> for v ranging over the nonzero vectors
  // supported off U's pivot columns, normalised to a leading 1; each such
  // line of V/U gives a distinct cover.
  L.upper_.assign(n, {});
  L.lower_.assign(n, {});
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& u = L.elements_[i];
    if (u.is_full()) continue;
    const auto piv = u.pivots();
    std::vector<std::size_t> freecols;
    for (std::size_t c = 0; c < m; ++c)
      if (!std::binary_search(piv.begin(), piv.end(), c)) freecols.push_back(c);
    const std::size_t k = freecols.size();
    for (std::size_t lead = 0; lead < k; ++lead) {
      const std::size_t tail = k - lead - 1;
      std::vector<gf::Index> digits(tail, 0);
      while (true) {
        std::vector<gf::Index> mat(u.basis().begin(), u.basis().end());
        std::vector<gf::Index> v(m, 0);
        v[freecols[lead]] = 1;
        for (std::size_t t = 0; t < tail; ++t) v[freecols[lead + 1 + t]] = digits[t];
        mat.insert(mat.end(), v.begin(), v.end());
        L.upper_[i].push_back(L.require_index(lin::rref_rows(field, m, std::move(mat))));
        bool wrapped = true;
        for (std::size_t t = tail; t-- > 0;) {
          if (++digits[t] < field.q()) {
            wrapped = false;
            break;
          }
          digits[t] = 0;
        }
        if (wrapped) break;
      }
    }
    std::sort(L.upper_[i].begin(), L.upper_[i].end());
    for (auto c : L.upper_[i]) L.lower_[c].push_back(i);
  }
  for (auto& l : L.lower_) std::sort(l.begin(), l.end());

  // Up-sets by descending index: every upper cover has a larger index.
  L.up_.assign(n, {});
  for (std::uint32_t i = static_cast<std::uint32_t>(n); i-- > 0;) {
    std::vector<std::uint32_t> acc{i};
    for (auto c : L.upper_[i]) {
      std::vector<std::uint32_t> merged;
      merged.reserve(acc.size() + L.up_[c].size());
      std::set_union(acc.begin(), acc.end(), L.up_[c].begin(), L.up_[c].end(), std::back_inserter(merged));
      acc = std::move(merged);
    }
    L.up_[i] = std::move(acc);
  }
  return L;
}

std::optional<std::uint32_t> SubspaceLattice::index_of(const lin::Subspace& u) const {
  if (!(u.field() == field_) || u.ambient_dim() != m_) return std::nullopt;
  const auto b = u.basis();
  auto it = index_.find(std::vector<gf::Index>(b.begin(), b.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t SubspaceLattice::require_index(const lin::Subspace& u) const {
  auto i = index_of(u);
  if (!i) throw DomainError("subspace " + u.to_string() + " is not an element of this lattice");
  return *i;
}

bool SubspaceLattice::leq(std::uint32_t a, std::uint32_t b) const {
  const auto& up = up_.at(a);
  return std::binary_search(up.begin(), up.end(), b);
}

std::uint32_t SubspaceLattice::join(std::uint32_t a, std::uint32_t b) const {
  if (leq(a, b)) return b;
  if (leq(b, a)) return a;
  return require_index(lin::sum(elements_.at(a), elements_.at(b)));
}

std::uint32_t SubspaceLattice::meet(std::uint32_t a, std::uint32_t b) const {
  if (leq(a, b)) return a;
  if (leq(b, a)) return b;
  return require_index(lin::intersect(elements_.at(a), elements_.at(b)));
}

std::vector<std::uint32_t> SubspaceLattice::atoms() const { return upper_.at(bottom()); }

std::vector<std::uint32_t> SubspaceLattice::coatoms() const { return lower_.at(top()); }

std::string SubspaceLattice::describe() const { return field_.describe() + ", m=" + std::to_string(m_); }

std::vector<std::vector<std::uint32_t>> transitive_reduction(const SubspaceLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<std::vector<std::uint32_t>> down(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (auto b : lattice.up_set(a)) down[b].push_back(a);
  // a < b is a cover iff {a, b} is the whole interval [a, b].
  std::vector<std::vector<std::uint32_t>> lower(n);
  std::vector<std::uint32_t> scratch;
  for (std::uint32_t b = 0; b < n; ++b) {
    for (auto a : down[b]) {
      if (a == b) continue;
      scratch.clear();
      const auto up = lattice.up_set(a);
      std::set_intersection(up.begin(), up.end(), down[b].begin(), down[b].end(), std::back_inserter(scratch));
      if (scratch.size() == 2) lower[b].push_back(a);
    }
  }
  return lower;
}

order::ChainCheck chain_condition_check(const SubspaceLattice& lattice) {
  const auto lower = transitive_reduction(lattice);
  // Index order is a linear extension: a <= b forces dim a <= dim b, and
  // within one dimension only equality is comparable.
  std::vector<std::uint32_t> topo(lattice.size());
  for (std::uint32_t i = 0; i < topo.size(); ++i) topo[i] = i;
  auto check = order::check_chain_condition(lower, lattice.bottom(), topo);
  if (!check.holds) return check;
  for (std::uint32_t i = 0; i < lattice.size(); ++i) {
    if (check.height[i] != lattice.dim(i)) {
      order::ChainCheck bad;
      bad.holds = false;
      bad.element = i;
      return bad;
    }
  }
  return check;
}

CountProfile count_profile(const SubspaceLattice& lattice) {
  CountProfile out;
  out.q = lattice.field().q();
  out.m = static_cast<unsigned>(lattice.ambient_dim());
  out.by_dimension.assign(out.m + 1, 0);
  out.upper_cover_counts.assign(out.m + 1, {});
  out.lower_cover_counts.assign(out.m + 1, {});
  for (std::uint32_t i = 0; i < lattice.size(); ++i) {
    const std::size_t d = lattice.dim(i);
    ++out.by_dimension[d];
    if (d < out.m) out.upper_cover_counts[d].insert(lattice.upper_covers(i).size());
    if (d > 0) out.lower_cover_counts[d].insert(lattice.lower_covers(i).size());
  }
  out.atom_count = lattice.atoms().size();
  return out;
}

CountProfile expected_profile(std::uint64_t q, unsigned m) {
  CountProfile out;
  out.q = q;
  out.m = m;
  out.upper_cover_counts.assign(m + 1, {});
  out.lower_cover_counts.assign(m + 1, {});
  for (unsigned d = 0; d <= m; ++d) {
    out.by_dimension.push_back(gaussian_count(q, m, d));
    if (d < m) out.upper_cover_counts[d].insert(upper_covers_count(q, m, d));
    if (d > 0) out.lower_cover_counts[d].insert(lower_covers_count(q, m, d));
  }
  out.atom_count = atom_count(q, m);
  return out;
}

std::string export_dot(const SubspaceLattice& lattice, const DotOptions& options) {
  std::ostringstream os;
  const std::size_t m = lattice.ambient_dim();
  os << "digraph L {\n";
  os << "  label=\"" << lattice.describe() << "\";\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontsize=10];\n";
  for (std::size_t d = 0; d <= m; ++d) {
    os << "  { rank=same;";
    for (std::uint32_t i = 0; i < lattice.size(); ++i)
      if (lattice.dim(i) == d) os << " u" << i << ";";
    os << " }\n";
  }
  for (std::uint32_t i = 0; i < lattice.size(); ++i) {
    os << "  u" << i << " [label=\"" << i << " (d=" << lattice.dim(i) << ")";
    if (options.show_basis) os << "\\n" << lattice.element(i).to_string();
    os << "\"];\n";
  }
  for (std::uint32_t i = 0; i < lattice.size(); ++i)
    for (auto c : lattice.upper_covers(i)) os << "  u" << i << " -> u" << c << ";\n";
  if (options.show_perp) {
    for (std::uint32_t i = 0; i < lattice.size(); ++i) {
      const auto j = lattice.perp(i);
      if (j < i) continue;
      os << "  u" << i << " -> u" << j << " [dir=none, style=dashed, constraint=false];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace sublat::lattice
