#include "sublat/props.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "sublat/errors.hpp"

namespace sublat::props {

namespace {

std::string chain_text(const std::vector<std::uint32_t>& chain) {
  std::ostringstream os;
  for (std::size_t i = 0; i < chain.size(); ++i) os << (i ? "-" : "") << chain[i];
  return os.str();
}

// Index-sorted list of b with a <= b.
std::vector<std::vector<std::uint32_t>> up_lists(const OrthoLattice& L) {
  std::vector<std::vector<std::uint32_t>> up(L.size());
  for (std::uint32_t a = 0; a < L.size(); ++a)
    for (std::uint32_t b = 0; b < L.size(); ++b)
      if (L.leq(a, b)) up[a].push_back(b);
  return up;
}

}  // namespace

void OrthoLattice::find_bounds() {
  std::optional<std::uint32_t> lo, hi;
  for (std::uint32_t a = 0; a < n_ && !(lo && hi); ++a) {
    bool below_all = true, above_all = true;
    for (std::uint32_t b = 0; b < n_; ++b) {
      below_all = below_all && leq(a, b);
      above_all = above_all && leq(b, a);
    }
    if (below_all) lo = a;
    if (above_all) hi = a;
  }
  if (!lo || !hi) throw NotALattice("order has no least or no greatest element");
  bottom_ = *lo;
  top_ = *hi;
}

OrthoLattice OrthoLattice::from_subspace_lattice(const lattice::SubspaceLattice& lattice, std::size_t cap) {
  if (lattice.size() > cap) throw CapExceeded("lattice table size", lattice.size(), cap);
  OrthoLattice L;
  L.n_ = lattice.size();
  L.words_ = (L.n_ + 63) / 64;
  L.leq_.assign(L.n_ * L.words_, 0);
  L.join_.assign(L.n_ * L.n_, 0);
  L.meet_.assign(L.n_ * L.n_, 0);
  L.perp_.resize(L.n_);
  for (std::uint32_t a = 0; a < L.n_; ++a) {
    L.labels_.push_back(lattice.element(a).to_string());
    L.perp_[a] = lattice.perp(a);
    for (auto b : lattice.up_set(a)) L.set_leq(a, b);
  }
  for (std::uint32_t a = 0; a < L.n_; ++a) {
    for (std::uint32_t b = a; b < L.n_; ++b) {
      const auto j = lattice.join(a, b);
      const auto m = lattice.meet(a, b);
      L.join_[a * L.n_ + b] = L.join_[b * L.n_ + a] = j;
      L.meet_[a * L.n_ + b] = L.meet_[b * L.n_ + a] = m;
    }
  }
  L.bottom_ = lattice.bottom();
  L.top_ = lattice.top();
  return L;
}

OrthoLattice OrthoLattice::from_order(std::vector<std::string> labels,
                                      const std::function<bool(std::uint32_t, std::uint32_t)>& leq,
                                      std::vector<std::uint32_t> complement) {
  OrthoLattice L;
  L.n_ = labels.size();
  if (L.n_ == 0) throw DomainError("empty order");
  if (complement.size() != L.n_) throw DomainError("complement map has the wrong length");
  for (auto c : complement)
    if (c >= L.n_) throw DomainError("complement map leaves the element set");
  L.words_ = (L.n_ + 63) / 64;
  L.leq_.assign(L.n_ * L.words_, 0);
  std::vector<std::uint64_t> down(L.n_ * L.words_, 0);
  for (std::uint32_t a = 0; a < L.n_; ++a)
    for (std::uint32_t b = 0; b < L.n_; ++b)
      if (leq(a, b)) {
        L.set_leq(a, b);
        down[std::size_t{b} * L.words_ + a / 64] |= std::uint64_t{1} << (a % 64);
      }

  const std::size_t W = L.words_;
  auto up_row = [&](std::uint32_t a) { return &L.leq_[std::size_t{a} * W]; };
  auto down_row = [&](std::uint32_t a) { return &down[std::size_t{a} * W]; };
  for (std::uint32_t a = 0; a < L.n_; ++a) {
    if (!L.leq(a, a)) throw DomainError("order is not reflexive at " + labels[a]);
    for (std::uint32_t b = 0; b < L.n_; ++b) {
      if (a == b || !L.leq(a, b)) continue;
      if (L.leq(b, a)) throw DomainError("order is not antisymmetric");
      for (std::size_t w = 0; w < W; ++w)
        if (up_row(b)[w] & ~up_row(a)[w]) throw DomainError("order is not transitive");
    }
  }

  std::vector<int> up_size(L.n_), down_size(L.n_);
  for (std::uint32_t a = 0; a < L.n_; ++a) {
    int u = 0, d = 0;
    for (std::size_t w = 0; w < W; ++w) {
      u += std::popcount(up_row(a)[w]);
      d += std::popcount(down_row(a)[w]);
    }
    up_size[a] = u;
    down_size[a] = d;
  }

  // The least upper bound is the common upper bound whose own up-set is the
  // whole common up-set; it is the one with the largest up-set.
  auto bound = [&](std::uint32_t a, std::uint32_t b, auto row, const std::vector<int>& sizes,
                   const char* what) -> std::uint32_t {
    std::vector<std::uint64_t> common(W);
    for (std::size_t w = 0; w < W; ++w) common[w] = row(a)[w] & row(b)[w];
    std::optional<std::uint32_t> best;
    for (std::size_t w = 0; w < W; ++w) {
      for (std::uint64_t bits = common[w]; bits; bits &= bits - 1) {
        const auto c = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
        if (!best || sizes[c] > sizes[*best]) best = c;
      }
    }
    if (!best || !std::equal(common.begin(), common.end(), row(*best)))
      throw NotALattice(std::string("no ") + what + " for " + labels[a] + ", " + labels[b]);
    return *best;
  };

  L.join_.assign(L.n_ * L.n_, 0);
  L.meet_.assign(L.n_ * L.n_, 0);
  for (std::uint32_t a = 0; a < L.n_; ++a) {
    for (std::uint32_t b = a; b < L.n_; ++b) {
      const auto j = bound(a, b, up_row, up_size, "join");
      const auto m = bound(a, b, down_row, down_size, "meet");
      L.join_[a * L.n_ + b] = L.join_[b * L.n_ + a] = j;
      L.meet_[a * L.n_ + b] = L.meet_[b * L.n_ + a] = m;
    }
  }
  L.labels_ = std::move(labels);
  L.perp_ = std::move(complement);
  L.find_bounds();
  return L;
}

OrthoLattice OrthoLattice::from_tables(std::vector<std::string> labels, std::vector<std::uint32_t> join,
                                       std::vector<std::uint32_t> meet, std::vector<std::uint32_t> complement) {
  OrthoLattice L;
  L.n_ = labels.size();
  if (L.n_ == 0) throw DomainError("empty lattice");
  if (join.size() != L.n_ * L.n_ || meet.size() != L.n_ * L.n_ || complement.size() != L.n_)
    throw DomainError("table shapes do not match the element count");
  for (auto v : join)
    if (v >= L.n_) throw DomainError("join table leaves the element set");
  for (auto v : meet)
    if (v >= L.n_) throw DomainError("meet table leaves the element set");
  for (auto v : complement)
    if (v >= L.n_) throw DomainError("complement map leaves the element set");
  L.words_ = (L.n_ + 63) / 64;
  L.leq_.assign(L.n_ * L.words_, 0);
  for (std::uint32_t a = 0; a < L.n_; ++a) {
    for (std::uint32_t b = 0; b < L.n_; ++b) {
      const bool by_join = join[a * L.n_ + b] == b;
      const bool by_meet = meet[a * L.n_ + b] == a;
      if (by_join != by_meet) throw DomainError("join and meet tables induce different orders");
      if (by_join) L.set_leq(a, b);
    }
  }
  L.labels_ = std::move(labels);
  L.join_ = std::move(join);
  L.meet_ = std::move(meet);
  L.perp_ = std::move(complement);
  L.find_bounds();
  return L;
}

std::optional<std::uint32_t> OrthoLattice::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - labels_.begin());
}

std::vector<std::uint32_t> OrthoLattice::atoms() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (x == bottom_) continue;
    std::size_t below = 0;
    for (std::uint32_t a = 0; a < n_; ++a) below += leq(a, x);
    if (below == 2) out.push_back(x);
  }
  return out;
}

std::vector<std::uint32_t> OrthoLattice::coatoms() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (x == top_) continue;
    std::size_t above = 0;
    for (std::uint32_t a = 0; a < n_; ++a) above += leq(x, a);
    if (above == 2) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> OrthoLattice::lower_covers() const {
  std::vector<std::uint64_t> down(n_ * words_, 0);
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b)
      if (leq(a, b)) down[std::size_t{b} * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
  // a < b is a cover iff the interval [a, b] has exactly two elements.
  std::vector<std::vector<std::uint32_t>> out(n_);
  for (std::uint32_t b = 0; b < n_; ++b) {
    for (std::uint32_t a = 0; a < n_; ++a) {
      if (a == b || !leq(a, b)) continue;
      int interval = 0;
      for (std::size_t w = 0; w < words_; ++w)
        interval += std::popcount(leq_[std::size_t{a} * words_ + w] & down[std::size_t{b} * words_ + w]);
      if (interval == 2) out[b].push_back(a);
    }
  }
  return out;
}

Verdict check_modular(const OrthoLattice& L) {
  const auto up = up_lists(L);
  for (std::uint32_t x = 0; x < L.size(); ++x) {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> best;  // (y, z)
    for (auto z : up[x]) {
      for (std::uint32_t y = 0; y < L.size(); ++y) {
        if (best && y > best->first) break;
        if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) {
          if (!best || std::pair{y, z} < *best) best = std::pair{y, z};
          break;
        }
      }
    }
    if (best) return Verdict::fail({x, best->first, best->second}, "x <= z but x v (y ^ z) != (x v y) ^ z");
  }
  return Verdict::pass();
}

Verdict check_atomistic(const OrthoLattice& L) {
  const auto atoms = L.atoms();
  for (std::uint32_t x = 0; x < L.size(); ++x) {
    std::uint32_t acc = L.bottom();
    for (auto a : atoms)
      if (L.leq(a, x)) acc = L.join(acc, a);
    if (acc != x) return Verdict::fail({x}, "element is not the join of the atoms below it");
  }
  return Verdict::pass();
}

Verdict check_antitone_involution(const OrthoLattice& L) {
  for (std::uint32_t x = 0; x < L.size(); ++x)
    if (L.perp(L.perp(x)) != x) return Verdict::fail({x}, "x'' != x");
  for (std::uint32_t x = 0; x < L.size(); ++x)
    for (std::uint32_t y = 0; y < L.size(); ++y)
      if (L.leq(x, y) && !L.leq(L.perp(y), L.perp(x))) return Verdict::fail({x, y}, "x <= y but not y' <= x'");
  return Verdict::pass();
}

Verdict check_de_morgan(const OrthoLattice& L) {
  for (std::uint32_t x = 0; x < L.size(); ++x)
    for (std::uint32_t y = 0; y < L.size(); ++y)
      if (L.perp(L.meet(x, y)) != L.join(L.perp(x), L.perp(y))) return Verdict::fail({x, y}, "(x ^ y)' != x' v y'");
  return Verdict::pass();
}

Verdict check_complementation(const OrthoLattice& L) {
  for (std::uint32_t x = 0; x < L.size(); ++x) {
    const bool meet_ok = L.meet(x, L.perp(x)) == L.bottom();
    const bool join_ok = L.join(x, L.perp(x)) == L.top();
    if (!meet_ok && !join_ok) return Verdict::fail({x}, "x ^ x' != 0 and x v x' != 1");
    if (!meet_ok) return Verdict::fail({x}, "x ^ x' != 0");
    if (!join_ok) return Verdict::fail({x}, "x v x' != 1");
  }
  return Verdict::pass();
}

std::optional<std::uint32_t> complement_conditions_diverge(const OrthoLattice& L) {
  for (std::uint32_t x = 0; x < L.size(); ++x) {
    const bool meet_ok = L.meet(x, L.perp(x)) == L.bottom();
    const bool join_ok = L.join(x, L.perp(x)) == L.top();
    if (meet_ok != join_ok) return x;
  }
  return std::nullopt;
}

Verdict check_orthomodular(const OrthoLattice& L) {
  if (auto v = check_antitone_involution(L); !v.holds) {
    v.detail = "not an antitone involution: " + v.detail;
    return v;
  }
  if (auto v = check_complementation(L); !v.holds) {
    v.detail = "not a complementation: " + v.detail;
    return v;
  }
  for (std::uint32_t x = 0; x < L.size(); ++x)
    for (std::uint32_t y = 0; y < L.size(); ++y)
      if (L.leq(x, y) && L.join(x, L.meet(L.perp(x), y)) != y)
        return Verdict::fail({x, y}, "x <= y but x v (x' ^ y) != y");
  return Verdict::pass();
}

Verdict check_paraorthomodular(const OrthoLattice& L) {
  for (std::uint32_t x = 0; x < L.size(); ++x)
    for (std::uint32_t y = 0; y < L.size(); ++y)
      if (x != y && L.leq(x, y) && L.meet(L.perp(x), y) == L.bottom())
        return Verdict::fail({x, y}, "x < y and x' ^ y = 0");
  return Verdict::pass();
}

Verdict check_chain_condition(const OrthoLattice& L) {
  const auto lower = L.lower_covers();
  std::vector<std::size_t> below(L.size(), 0);
  for (std::uint32_t a = 0; a < L.size(); ++a)
    for (std::uint32_t b = 0; b < L.size(); ++b) below[b] += L.leq(a, b);
  std::vector<std::uint32_t> topo(L.size());
  std::iota(topo.begin(), topo.end(), 0u);
  std::stable_sort(topo.begin(), topo.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  const auto check = order::check_chain_condition(lower, L.bottom(), topo);
  if (check.holds) return Verdict::pass();
  return Verdict::fail({*check.element},
                       "maximal chains " + chain_text(check.shorter) + " and " + chain_text(check.longer) +
                           " differ in length");
}

std::optional<std::size_t> recognize_Mn(const OrthoLattice& L) {
  if (L.size() < 4) return std::nullopt;
  std::vector<std::uint32_t> middle;
  for (std::uint32_t x = 0; x < L.size(); ++x)
    if (x != L.bottom() && x != L.top()) middle.push_back(x);
  for (auto a : middle)
    for (auto b : middle)
      if (a != b && L.leq(a, b)) return std::nullopt;
  return middle.size();
}

std::optional<std::size_t> recognize_MOn(const OrthoLattice& L) {
  const auto n = recognize_Mn(L);
  if (!n || *n % 2 != 0) return std::nullopt;
  if (L.perp(L.bottom()) != L.top() || L.perp(L.top()) != L.bottom()) return std::nullopt;
  for (std::uint32_t a = 0; a < L.size(); ++a) {
    if (a == L.bottom() || a == L.top()) continue;
    const auto b = L.perp(a);
    if (b == a || b == L.bottom() || b == L.top() || L.perp(b) != a) return std::nullopt;
  }
  return *n / 2;
}

PropertyReport check_all(const lattice::SubspaceLattice& lattice) {
  return check_all(lattice, OrthoLattice::from_subspace_lattice(lattice));
}

PropertyReport check_all(const lattice::SubspaceLattice& lattice, const OrthoLattice& tables) {
  PropertyReport r;
  const auto& f = lattice.field();
  r.p = f.p();
  r.n = f.n();
  r.q = f.q();
  r.modulus = f.modulus();
  r.m = lattice.ambient_dim();
  r.size = lattice.size();
  r.verdicts["modular"] = check_modular(tables);
  r.verdicts["atomistic"] = check_atomistic(tables);
  r.verdicts["antitone_involution"] = check_antitone_involution(tables);
  r.verdicts["complementation"] = check_complementation(tables);
  r.verdicts["orthomodular"] = check_orthomodular(tables);
  r.verdicts["paraorthomodular"] = check_paraorthomodular(tables);
  const auto chains = lattice::chain_condition_check(lattice);
  if (chains.holds) {
    r.verdicts["chain_condition"] = Verdict::pass();
  } else if (chains.shorter.empty()) {
    r.verdicts["chain_condition"] = Verdict::fail({*chains.element}, "chain length differs from dimension");
  } else {
    r.verdicts["chain_condition"] =
        Verdict::fail({*chains.element}, "maximal chains " + chain_text(chains.shorter) + " and " +
                                              chain_text(chains.longer) + " differ in length");
  }
  r.mn = recognize_Mn(tables);
  r.mon = recognize_MOn(tables);
  return r;
}

}  // namespace sublat::props
