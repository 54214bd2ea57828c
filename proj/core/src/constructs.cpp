#include "sublat/constructs.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "sublat/errors.hpp"

namespace sublat::constructs {

namespace {

constexpr gf::Index kNone = ~gf::Index{0};

std::vector<std::uint32_t> iota_from_one(std::uint32_t count) {
  std::vector<std::uint32_t> v(count);
  for (std::uint32_t i = 0; i < count; ++i) v[i] = i + 1;
  return v;
}

std::string subset_label(unsigned mask, unsigned k) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (unsigned i = 0; i < k; ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) os << ',';
    first = false;
    os << i + 1;
  }
  os << '}';
  return os.str();
}

lin::Subspace span_of_subset(const gf::Field& f, std::size_t m, std::span<const lin::Vector> vecs, unsigned mask) {
  std::vector<lin::Vector> chosen;
  for (std::size_t i = 0; i < vecs.size(); ++i)
    if (mask >> i & 1u) chosen.push_back(vecs[i]);
  return lin::rref(f, m, chosen);
}

void require_ortholattice(const props::OrthoLattice& L, const char* which) {
  if (auto v = props::check_antitone_involution(L); !v.holds)
    throw DomainError(std::string(which) + " summand: " + v.detail);
  if (auto v = props::check_complementation(L); !v.holds)
    throw DomainError(std::string(which) + " summand: " + v.detail);
}

}  // namespace

BoundReport thm5_bounds(std::uint32_t p) {
  if (!gf::is_prime(p)) throw NonPrimeCharacteristic(std::to_string(p) + " is not prime");
  BoundReport r;
  r.p = p;
  const std::uint64_t pp = p;
  if ((pp - 1) * (2 * pp - 1) % 6 == 0) {
    r.first_applies = true;
    r.first_bound = p - 1;
    r.first_witness = iota_from_one(p - 1);
  }
  if (p > 2 && (pp + 1) * (pp - 1) % 24 == 0) {
    r.second_applies = true;
    r.second_bound = (p - 1) / 2;
    r.second_witness = iota_from_one((p - 1) / 2);
  }
  if (p > 2 && p % 3 == 2) {
    r.corollary_applies = true;
    r.corollary_bound = p - 1;
  }
  return r;
}

MqResult compute_mq(const gf::Field& field) {
  const std::uint32_t q = field.q();
  // root[s]: smallest nonzero a with a^2 = s.
  std::vector<gf::Index> root(q, kNone);
  std::vector<gf::Index> squares;
  for (gf::Index a = 1; a < q; ++a) {
    const auto s = field.mul(a, a);
    if (root[s] == kNone) {
      root[s] = a;
      squares.push_back(s);
    }
  }
  std::sort(squares.begin(), squares.end());

  // levels[k][v] = (previous sum, square added) for k >= 1 sums.
  struct Step {
    gf::Index prev = kNone;
    gf::Index square = kNone;
  };
  std::vector<std::vector<Step>> levels;
  std::vector<Step> first(q);
  for (auto s : squares) first[s] = {kNone, s};
  levels.push_back(std::move(first));

  // Bounded by p: the p-fold sum 1 + ... + 1 vanishes.
  while (levels.back()[0].square == kNone) {
    const auto& last = levels.back();
    std::vector<Step> next(q);
    std::uint32_t reached = 0;
    for (gf::Index s = 0; s < q && reached < q; ++s) {
      if (last[s].square == kNone) continue;
      for (auto t : squares) {
        const auto v = field.add(s, t);
        if (next[v].square == kNone) {
          next[v] = {s, t};
          if (++reached == q) break;
        }
      }
    }
    levels.push_back(std::move(next));
    if (levels.size() > field.p()) throw std::logic_error("m(q) search exceeded p");
  }

  MqResult r;
  r.q = q;
  r.modulus = field.modulus();
  r.m_q = static_cast<std::uint32_t>(levels.size());
  gf::Index v = 0;
  for (std::size_t k = levels.size(); k-- > 0;) {
    const auto step = levels[k][v];
    r.witness.push_back(root[step.square]);
    v = step.prev;
  }
  std::reverse(r.witness.begin(), r.witness.end());

  r.bounds = thm5_bounds(field.p());
  if (r.bounds.first_applies && r.bounds.first_bound < r.m_q) r.bounds_hold = false;
  if (r.bounds.second_applies && r.bounds.second_bound < r.m_q) r.bounds_hold = false;
  if (r.bounds.corollary_applies && r.bounds.corollary_bound < r.m_q) r.bounds_hold = false;
  if (r.m_q > field.p()) r.bounds_hold = false;
  return r;
}

bool is_orthogonal_basis(std::span<const lin::Vector> basis) {
  if (basis.empty()) throw DimensionMismatch("empty basis");
  const std::size_t m = basis.front().dim();
  if (basis.size() != m)
    throw DimensionMismatch("basis has " + std::to_string(basis.size()) + " vectors for m=" + std::to_string(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (basis[i] == basis[j]) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (lin::dot(basis[i], basis[i]).is_zero()) return false;
    for (std::size_t j = i + 1; j < m; ++j)
      if (!lin::dot(basis[i], basis[j]).is_zero()) return false;
  }
  // Pairwise orthogonal vectors with nonzero self-products are independent.
  if (lin::span_of(basis).dim() != m) throw std::logic_error("orthogonal family is linearly dependent");
  return true;
}

std::optional<std::uint32_t> SubPoset::local_index(std::uint32_t parent_index) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), parent_index);
  if (it == elements.end() || *it != parent_index) return std::nullopt;
  return static_cast<std::uint32_t>(it - elements.begin());
}

SubPoset induced_subposet(const lattice::SubspaceLattice& parent, std::vector<std::uint32_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubPoset s;
  s.q = parent.field().q();
  s.m = parent.ambient_dim();
  s.modulus = parent.field().modulus();
  s.elements = std::move(members);
  for (auto e : s.elements)
    if (e >= parent.size()) throw DomainError("subposet member outside the parent lattice");
  if (!s.local_index(parent.bottom()) || !s.local_index(parent.top()))
    throw DomainError("subposet must contain {0} and V");

  std::vector<std::string> labels;
  std::vector<std::uint32_t> complement;
  for (auto e : s.elements) {
    labels.push_back(parent.element(e).to_string());
    auto local = s.local_index(parent.perp(e));
    if (!local) throw DomainError("subposet is not closed under orthocomplement");
    complement.push_back(*local);
  }
  const auto& elems = s.elements;
  s.order = props::OrthoLattice::from_order(
      std::move(labels), [&](std::uint32_t a, std::uint32_t b) { return parent.leq(elems[a], elems[b]); },
      std::move(complement));

  s.is_subuniverse = true;
  for (std::size_t i = 0; i < elems.size() && s.is_subuniverse; ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const auto a = elems[i], b = elems[j];
      if (auto v = parent.join(a, b); !s.local_index(v)) {
        s.is_subuniverse = false;
        s.closure_witness = ClosureWitness{"+", a, b, v};
        break;
      }
      if (auto v = parent.meet(a, b); !s.local_index(v)) {
        s.is_subuniverse = false;
        s.closure_witness = ClosureWitness{"^", a, b, v};
        break;
      }
    }
  }
  s.orthomodular_as_poset = props::check_orthomodular(s.order);
  return s;
}

BooleanSubalgebra boolean_subalgebra(const lattice::SubspaceLattice& parent, std::span<const lin::Vector> basis) {
  const std::size_t m = parent.ambient_dim();
  const auto& f = parent.field();
  for (const auto& b : basis)
    if (!(b.field() == f) || b.dim() != m) throw NotOrthogonalBasis("basis vector outside the parent space");
  if (basis.size() != m || !is_orthogonal_basis(basis)) throw NotOrthogonalBasis("not an orthogonal basis");

  BooleanSubalgebra out;
  const unsigned full = (1u << m) - 1;
  std::vector<lin::Subspace> spans;
  for (unsigned mask = 0; mask <= full; ++mask) {
    spans.push_back(span_of_subset(f, m, basis, mask));
    out.by_subset.push_back(parent.require_index(spans.back()));
  }

  out.complement_identity = true;
  for (unsigned mask = 0; mask <= full; ++mask)
    if (!(lin::orthocomplement(spans[mask]) == spans[full & ~mask])) out.complement_identity = false;

  const auto& U = out.by_subset;
  bool iso = std::set<std::uint32_t>(U.begin(), U.end()).size() == U.size();
  for (unsigned I = 0; I <= full && iso; ++I) {
    if (parent.perp(U[I]) != U[full & ~I]) iso = false;
    for (unsigned J = 0; J <= full && iso; ++J) {
      const bool subset = (I & ~J) == 0;
      if (subset != parent.leq(U[I], U[J])) iso = false;
      if (parent.join(U[I], U[J]) != U[I | J]) iso = false;
      if (parent.meet(U[I], U[J]) != U[I & J]) iso = false;
    }
  }
  out.power_set_isomorphism = iso;
  out.poset = induced_subposet(parent, out.by_subset);
  return out;
}

props::OrthoLattice boolean_algebra(unsigned k, const std::string& prefix) {
  if (k == 0 || k > 12) throw DomainError("boolean_algebra supports 1 <= k <= 12");
  const unsigned n = 1u << k;
  const unsigned full = n - 1;
  std::vector<std::string> labels(n);
  std::vector<std::uint32_t> join(std::size_t{n} * n), meet(std::size_t{n} * n), comp(n);
  for (unsigned a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "0" : a == full ? "1" : prefix + subset_label(a, k);
    comp[a] = full & ~a;
    for (unsigned b = 0; b < n; ++b) {
      join[std::size_t{a} * n + b] = a | b;
      meet[std::size_t{a} * n + b] = a & b;
    }
  }
  return props::OrthoLattice::from_tables(std::move(labels), std::move(join), std::move(meet), std::move(comp));
}

props::OrthoLattice horizontal_sum(const props::OrthoLattice& first, const props::OrthoLattice& second) {
  if (first.size() <= 2 || second.size() <= 2) throw TrivialInput("horizontal sum needs two nontrivial summands");
  require_ortholattice(first, "first");
  require_ortholattice(second, "second");

  // Index layout: all of `first`, then the non-bound elements of `second`.
  std::vector<std::string> labels = first.labels();
  std::vector<std::uint32_t> from_second(second.size());
  std::set<std::string> seen(labels.begin(), labels.end());
  for (std::uint32_t x = 0; x < second.size(); ++x) {
    if (x == second.bottom()) {
      from_second[x] = first.bottom();
    } else if (x == second.top()) {
      from_second[x] = first.top();
    } else {
      if (!seen.insert(second.label(x)).second)
        throw OverlapViolation("label '" + second.label(x) + "' occurs in both summands");
      from_second[x] = static_cast<std::uint32_t>(labels.size());
      labels.push_back(second.label(x));
    }
  }
  const std::size_t n = labels.size();
  // side[x]: 0 bound, 1 first, 2 second; local[x]: index inside its summand.
  std::vector<int> side(n, 1);
  std::vector<std::uint32_t> local(n);
  for (std::uint32_t x = 0; x < first.size(); ++x) {
    local[x] = x;
    if (x == first.bottom() || x == first.top()) side[x] = 0;
  }
  std::vector<std::uint32_t> bound_in_second(n, 0);
  bound_in_second[first.bottom()] = second.bottom();
  bound_in_second[first.top()] = second.top();
  for (std::uint32_t x = 0; x < second.size(); ++x) {
    if (side[from_second[x]] == 0) continue;
    side[from_second[x]] = 2;
    local[from_second[x]] = x;
  }

  auto in_second = [&](std::uint32_t x) { return side[x] == 0 ? bound_in_second[x] : local[x]; };
  std::vector<std::uint32_t> join(n * n), meet(n * n), comp(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    comp[x] = side[x] == 2 ? from_second[second.perp(local[x])] : first.perp(local[x]);
    for (std::uint32_t y = 0; y < n; ++y) {
      const bool same_first = side[x] != 2 && side[y] != 2;
      const bool same_second = side[x] != 1 && side[y] != 1;
      std::uint32_t j, m;
      if (same_first) {
        j = first.join(local[x], local[y]);
        m = first.meet(local[x], local[y]);
      } else if (same_second) {
        j = from_second[second.join(in_second(x), in_second(y))];
        m = from_second[second.meet(in_second(x), in_second(y))];
      } else {
        j = first.top();
        m = first.bottom();
      }
      join[std::size_t{x} * n + y] = j;
      meet[std::size_t{x} * n + y] = m;
    }
  }
  return props::OrthoLattice::from_tables(std::move(labels), std::move(join), std::move(meet), std::move(comp));
}

std::optional<std::vector<std::uint32_t>> find_isomorphism(const props::OrthoLattice& a, const props::OrthoLattice& b,
                                                           bool preserve_perp) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto signature = [](const props::OrthoLattice& L, std::uint32_t x) {
    std::size_t below = 0, above = 0;
    for (std::uint32_t y = 0; y < L.size(); ++y) {
      below += L.leq(y, x);
      above += L.leq(x, y);
    }
    return std::pair{below, above};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sa(n), sb(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    sa[x] = signature(a, x);
    sb[x] = signature(b, x);
  }
  constexpr auto kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> map(n, kUnset);
  std::vector<bool> used(n, false);

  std::function<bool(std::uint32_t)> assign = [&](std::uint32_t x) -> bool {
    if (x == n) return true;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      bool ok = true;
      for (std::uint32_t z = 0; z < x && ok; ++z)
        ok = a.leq(x, z) == b.leq(y, map[z]) && a.leq(z, x) == b.leq(map[z], y);
      if (ok && preserve_perp) {
        const auto px = a.perp(x);
        if (px < x) ok = map[px] == b.perp(y);
        else if (px == x) ok = b.perp(y) == y;
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (assign(x + 1)) return true;
      used[y] = false;
      map[x] = kUnset;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

HorizontalSumSubposet horizontal_sum_subposet(const lattice::SubspaceLattice& parent) {
  const auto& f = parent.field();
  const std::size_t m = parent.ambient_dim();
  if (m < 2) throw HypothesisViolated("the construction needs m >= 2");
  if (m % f.p() == 0)
    throw HypothesisViolated("p=" + std::to_string(f.p()) + " divides m=" + std::to_string(m));
  if (m > 12) throw DomainError("m too large for the power-set construction");

  HorizontalSumSubposet out;
  std::vector<lin::Vector> units;
  for (std::size_t i = 0; i < m; ++i) units.push_back(lin::Vector::unit(f, m, i));
  const unsigned full = (1u << m) - 1;
  std::vector<std::uint32_t> members;
  for (unsigned mask = 0; mask <= full; ++mask) {
    out.coordinate.push_back(parent.require_index(span_of_subset(f, m, units, mask)));
    members.push_back(out.coordinate.back());
  }
  const lin::Vector ones(f, std::vector<gf::Index>(m, 1));
  const std::vector<lin::Vector> w_rows{ones};
  out.w = parent.require_index(lin::rref(f, m, w_rows));
  out.w_perp = parent.perp(out.w);
  members.push_back(out.w);
  members.push_back(out.w_perp);
  out.poset = induced_subposet(parent, std::move(members));

  const auto reference = horizontal_sum(boolean_algebra(static_cast<unsigned>(m), "a"), boolean_algebra(2, "b"));
  out.matches_horizontal_sum = find_isomorphism(out.poset.order, reference, true).has_value();
  return out;
}

HorizontalSumSubposet horizontal_sum_subposet(const gf::Field& field, std::size_t m) {
  if (m >= 1 && m % field.p() == 0)
    throw HypothesisViolated("p=" + std::to_string(field.p()) + " divides m=" + std::to_string(m));
  if (m < 2) throw HypothesisViolated("the construction needs m >= 2");
  return horizontal_sum_subposet(lattice::build_lattice(field, m));
}

M2Report m2_theorem_check(const gf::Field& field) {
  M2Report r;
  r.p = field.p();
  r.n = field.n();
  r.q = field.q();
  const std::uint64_t p = r.p;
  for (std::uint32_t y = 1; 2 * y <= r.p; ++y)
    for (std::uint32_t x = 1; x <= y; ++x) {
      r.pairs.emplace_back(x, y);
      if (!r.divisible && (std::uint64_t{x} * x + std::uint64_t{y} * y) % p == 0) r.divisible = std::pair{x, y};
    }
  r.predicts_not_orthomodular = r.divisible.has_value();
  if (r.n == 1) r.predicted_orthomodular = !r.divisible.has_value();

  const auto L = lattice::build_lattice(field, 2);
  const auto tables = props::OrthoLattice::from_subspace_lattice(L);
  r.orthomodular = props::check_orthomodular(tables).holds;
  r.mn = props::recognize_Mn(tables);
  r.mon = props::recognize_MOn(tables);

  bool ok = r.mn == std::optional<std::size_t>(r.q + 1);
  if (r.predicts_not_orthomodular && r.orthomodular) ok = false;
  if (r.predicted_orthomodular && *r.predicted_orthomodular != r.orthomodular) ok = false;
  if (r.orthomodular && r.mon != std::optional<std::size_t>((r.q + 1) / 2)) ok = false;
  r.consistent = ok;
  return r;
}

}  // namespace sublat::constructs
