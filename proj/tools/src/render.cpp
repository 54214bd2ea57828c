#include <sstream>
#include <stdexcept>

#include "sublat/errors.hpp"
#include "sublat_cli/cli.hpp"

namespace sublat::cli {

using nlohmann::json;

namespace {

std::string join_counts(const std::vector<lattice::Count>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::vector<lattice::Count> dims_of(const lattice::SubspaceLattice& L) {
  std::vector<lattice::Count> by_dim(L.ambient_dim() + 1, 0);
  for (std::uint32_t i = 0; i < L.size(); ++i) ++by_dim[L.dim(i)];
  return by_dim;
}

std::string format_witness(const gf::Field& f, std::span<const gf::Index> w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << f.format(w[i]);
  os << ')';
  return os.str();
}

std::string matrix_text(const Matrix& m) {
  if (m.empty()) return "{0}";
  std::ostringstream os;
  os << '<';
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << (r ? ",(" : "(");
    for (std::size_t c = 0; c < m[r].size(); ++c) os << (c ? "," : "") << m[r][c];
    os << ')';
  }
  os << '>';
  return os.str();
}

}  // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Matrix basis_matrix(const lin::Subspace& u) {
  Matrix m;
  for (std::size_t r = 0; r < u.dim(); ++r) {
    auto row = u.row_span(r);
    m.emplace_back(row.begin(), row.end());
  }
  return m;
}

std::string render_build_text(const lattice::SubspaceLattice& L, bool list_elements) {
  std::ostringstream os;
  os << L.size() << " elements; dims " << join_counts(dims_of(L)) << '\n';
  os << "field: " << L.field().describe() << "; m=" << L.ambient_dim() << '\n';
  os << "atoms: " << L.atoms().size() << "; coatoms: " << L.coatoms().size() << '\n';
  if (list_elements) {
    for (std::uint32_t i = 0; i < L.size(); ++i)
      os << i << " d=" << L.dim(i) << ' ' << L.element(i).to_string() << " perp=" << L.perp(i) << '\n';
  }
  return os.str();
}

json build_json(const lattice::SubspaceLattice& L) {
  json j;
  j["version"] = kJsonVersion;
  j["command"] = "build";
  j["p"] = L.field().p();
  j["n"] = L.field().n();
  j["q"] = L.field().q();
  j["modulus"] = L.field().modulus();
  j["m"] = L.ambient_dim();
  j["size"] = L.size();
  j["by_dimension"] = dims_of(L);
  j["atoms"] = L.atoms().size();
  j["coatoms"] = L.coatoms().size();
  json elems = json::array();
  for (std::uint32_t i = 0; i < L.size(); ++i) {
    auto up = L.upper_covers(i);
    elems.push_back({{"index", i},
                     {"dim", L.dim(i)},
                     {"basis", basis_matrix(L.element(i))},
                     {"perp", L.perp(i)},
                     {"upper_covers", std::vector<std::uint32_t>(up.begin(), up.end())}});
  }
  j["elements"] = std::move(elems);
  return j;
}

CheckDocument make_check_document(const lattice::SubspaceLattice& L, const props::PropertyReport& report) {
  CheckDocument doc;
  doc.report = report;
  for (const auto& [law, v] : report.verdicts) {
    auto& bases = doc.witness_bases[law];
    for (auto w : v.witness) bases.push_back(basis_matrix(L.element(w)));
  }
  return doc;
}

json to_json(const CheckDocument& doc) {
  const auto& r = doc.report;
  json j;
  j["version"] = kJsonVersion;
  j["command"] = "check";
  j["p"] = r.p;
  j["n"] = r.n;
  j["q"] = r.q;
  j["modulus"] = r.modulus;
  j["m"] = r.m;
  j["size"] = r.size;
  json verdicts = json::object();
  for (const auto& [law, v] : r.verdicts) {
    json e{{"holds", v.holds}};
    if (!v.holds) {
      e["witness"] = doc.witness_bases.at(law);
      e["witness_index"] = v.witness;
      e["detail"] = v.detail;
    }
    verdicts[law] = std::move(e);
  }
  j["verdicts"] = std::move(verdicts);
  j["M_n"] = r.mn ? json(*r.mn) : json(nullptr);
  j["MO_n"] = r.mon ? json(*r.mon) : json(nullptr);
  return j;
}

CheckDocument check_document_from_json(const json& j) {
  if (j.at("version").get<int>() != kJsonVersion) throw std::invalid_argument("unsupported report version");
  if (j.at("command").get<std::string>() != "check") throw std::invalid_argument("not a check report");
  CheckDocument doc;
  auto& r = doc.report;
  r.p = j.at("p").get<std::uint32_t>();
  r.n = j.at("n").get<std::uint32_t>();
  r.q = j.at("q").get<std::uint32_t>();
  r.modulus = j.at("modulus").get<gf::Polynomial>();
  r.m = j.at("m").get<std::size_t>();
  r.size = j.at("size").get<std::size_t>();
  for (const auto& [law, e] : j.at("verdicts").items()) {
    props::Verdict v;
    v.holds = e.at("holds").get<bool>();
    auto& bases = doc.witness_bases[law];
    if (!v.holds) {
      v.witness = e.at("witness_index").get<std::vector<std::uint32_t>>();
      v.detail = e.at("detail").get<std::string>();
      bases = e.at("witness").get<std::vector<Matrix>>();
    }
    r.verdicts[law] = std::move(v);
  }
  if (!j.at("M_n").is_null()) r.mn = j.at("M_n").get<std::size_t>();
  if (!j.at("MO_n").is_null()) r.mon = j.at("MO_n").get<std::size_t>();
  return doc;
}

std::string render_check_text(const CheckDocument& doc) {
  const auto& r = doc.report;
  const auto field = gf::Field::make(r.p, r.n, r.modulus);
  std::ostringstream os;
  os << "L(V), V = GF(" << r.q << ")^" << r.m << "; " << field.describe() << "; " << r.size << " elements\n";
  for (const auto& law : props::law_names()) {
    auto it = r.verdicts.find(law);
    if (it == r.verdicts.end()) continue;
    const auto& v = it->second;
    os << law << ": ";
    if (v.holds) {
      os << "holds\n";
      continue;
    }
    os << "fails (" << v.detail << "); witness";
    const auto& bases = doc.witness_bases.at(law);
    for (std::size_t i = 0; i < v.witness.size(); ++i)
      os << ' ' << v.witness[i] << '=' << matrix_text(bases.at(i));
    os << '\n';
  }
  os << "M_n: " << (r.mn ? "M_" + std::to_string(*r.mn) : std::string("no")) << '\n';
  os << "MO_n: " << (r.mon ? "MO_" + std::to_string(*r.mon) : std::string("no")) << '\n';
  return os.str();
}

json to_json(const constructs::MqResult& r) {
  const auto& b = r.bounds;
  json bounds = json::object();
  if (b.first_applies) bounds["first"] = {{"bound", b.first_bound}, {"witness", b.first_witness}};
  if (b.second_applies) bounds["second"] = {{"bound", b.second_bound}, {"witness", b.second_witness}};
  if (b.corollary_applies) bounds["corollary"] = {{"bound", b.corollary_bound}};
  return {{"q", r.q},         {"modulus", r.modulus}, {"m_q", r.m_q},
          {"witness", r.witness}, {"bounds", bounds}, {"bounds_hold", r.bounds_hold}};
}

std::string render_mq_row(const gf::Field& f, const constructs::MqResult& r) {
  std::ostringstream os;
  os << "m(" << r.q << ")=" << r.m_q << ", witness " << format_witness(f, r.witness) << " sums to 0 in squares";
  const auto& b = r.bounds;
  std::vector<std::string> parts;
  auto verdict = [&](std::uint32_t bound) { return bound >= r.m_q ? " holds" : " VIOLATED"; };
  if (b.first_applies) parts.push_back("(i) m<=" + std::to_string(b.first_bound) + verdict(b.first_bound));
  if (b.second_applies) parts.push_back("(ii) m<=" + std::to_string(b.second_bound) + verdict(b.second_bound));
  if (b.corollary_applies)
    parts.push_back("corollary m<=" + std::to_string(b.corollary_bound) + verdict(b.corollary_bound));
  os << "; bounds: ";
  if (parts.empty()) os << "none apply";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? ", " : "") << parts[i];
  return os.str();
}

}  // namespace sublat::cli
