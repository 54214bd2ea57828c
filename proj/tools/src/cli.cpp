#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sublat/constructs.hpp"
#include "sublat/errors.hpp"
#include "sublat_cli/cli.hpp"

namespace sublat::cli {

namespace {

std::uint32_t parse_uint(const std::string& s, const char* what) {
  std::uint32_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty())
    throw std::invalid_argument(std::string("bad ") + what + ": '" + s + "'");
  return v;
}

struct Common {
  FieldArgs field;
  std::optional<std::size_t> m;
  std::string format = "text";
  std::string out_path;
  std::optional<std::uint64_t> cap;
};

void add_field_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--q", c.field.q, "Field order (prime power)");
  cmd->add_option("--p", c.field.p, "Characteristic");
  cmd->add_option("--n", c.field.n, "Extension degree");
  cmd->add_option("--modulus", c.field.modulus, "Modulus coefficients, constant first, comma-separated");
}

void add_output_options(CLI::App* cmd, Common& c, std::vector<std::string> formats) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("--out", c.out_path, "Write output to PATH");
}

std::uint64_t lowered_cap(const Common& c, std::uint64_t builtin) {
  if (!c.cap) return builtin;
  if (*c.cap > lattice::kLatticeCap)
    throw std::invalid_argument("--cap may only lower the built-in cap of " + std::to_string(lattice::kLatticeCap));
  return std::min<std::uint64_t>(*c.cap, builtin);
}

std::size_t require_m(const Common& c) {
  if (!c.m) throw std::invalid_argument("--m is required");
  if (*c.m < 1) throw std::invalid_argument("--m must be at least 1");
  return *c.m;
}

int emit(const Common& c, const std::string& text, std::ostream& out, std::ostream& err) {
  if (c.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write " << c.out_path << '\n';
    return kInvalidArgs;
  }
  return kOk;
}

std::string cmd_build(const Common& c, bool list) {
  const auto field = resolve_field(c.field);
  const auto m = require_m(c);
  const auto L = lattice::build_lattice(field, m, lowered_cap(c, lattice::kLatticeCap));
  if (c.format == "json") return dump(build_json(L));
  if (c.format == "dot") return lattice::export_dot(L, {.show_basis = true, .show_perp = false});
  return render_build_text(L, list);
}

std::string cmd_check(const Common& c) {
  const auto field = resolve_field(c.field);
  const auto m = require_m(c);
  const auto L = lattice::build_lattice(field, m, lowered_cap(c, lattice::kLatticeCap));
  const auto tables = props::OrthoLattice::from_subspace_lattice(L, lowered_cap(c, props::kTableCap));
  const auto doc = make_check_document(L, props::check_all(L, tables));
  if (c.format == "json") return dump(to_json(doc));
  return render_check_text(doc);
}

std::vector<std::uint64_t> prime_powers_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = std::max<std::uint64_t>(lo, 2); q <= hi; ++q) {
    std::uint64_t p = 2;
    while (q % p) ++p;
    std::uint64_t r = q;
    while (r % p == 0) r /= p;
    if (r == 1) out.push_back(q);
  }
  return out;
}

std::string cmd_mq(const Common& c, const std::string& range) {
  std::vector<gf::Field> fields;
  if (!range.empty()) {
    if (c.field.q || c.field.p || c.field.n || c.field.modulus)
      throw std::invalid_argument("--range excludes --q/--p/--n/--modulus");
    const auto dots = range.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("--range expects LO..HI");
    const auto lo = parse_uint(range.substr(0, dots), "range");
    const auto hi = parse_uint(range.substr(dots + 2), "range");
    if (lo > hi || hi > gf::kMaxFieldOrder) throw std::invalid_argument("bad range " + range);
    for (auto q : prime_powers_in(lo, hi)) fields.push_back(gf::Field::of_order(q));
  } else {
    fields.push_back(resolve_field(c.field));
  }
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream text;
  for (const auto& f : fields) {
    const auto r = constructs::compute_mq(f);
    rows.push_back(to_json(r));
    text << render_mq_row(f, r) << '\n';
  }
  if (c.format == "json") return dump({{"version", kJsonVersion}, {"command", "mq"}, {"rows", rows}});
  return text.str();
}

}  // namespace

gf::Polynomial parse_modulus(const std::string& text) {
  gf::Polynomial poly;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }), tok.end());
    poly.push_back(parse_uint(tok, "modulus coefficient"));
  }
  if (poly.size() < 2) throw std::invalid_argument("modulus needs at least two coefficients");
  return poly;
}

gf::Field resolve_field(const FieldArgs& a) {
  if (a.q && (a.p || a.n)) throw std::invalid_argument("give either --q or --p/--n, not both");
  std::optional<gf::Polynomial> modulus;
  if (a.modulus) modulus = parse_modulus(*a.modulus);
  if (a.q) {
    const auto base = gf::Field::of_order(*a.q);
    if (!modulus) return base;
    return gf::Field::make(base.p(), base.n(), modulus);
  }
  if (!a.p) throw std::invalid_argument("a field is required: --q Q or --p P [--n N]");
  std::uint32_t n = a.n.value_or(modulus ? static_cast<std::uint32_t>(modulus->size() - 1) : 1);
  return gf::Field::make(*a.p, n, modulus);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subspace lattices of GF(q)^m with the orthogonality involution", "sublat"};
  app.require_subcommand(1, 1);

  Common c;
  std::string range, only;
  bool list = false;

  auto* build = app.add_subcommand("build", "Enumerate L(V) and summarize it");
  add_field_options(build, c);
  build->add_option("--m", c.m, "Ambient dimension");
  add_output_options(build, c, {"text", "json", "dot"});
  build->add_option("--cap", c.cap, "Lower the lattice size cap");
  build->add_flag("--list", list, "List every element (text format)");

  auto* check = app.add_subcommand("check", "Decide every lattice law on L(V)");
  add_field_options(check, c);
  check->add_option("--m", c.m, "Ambient dimension");
  add_output_options(check, c, {"text", "json"});
  check->add_option("--cap", c.cap, "Lower the lattice and table caps");

  auto* mq = app.add_subcommand("mq", "Compute m(q) with a witness and the bounds on it");
  add_field_options(mq, c);
  mq->add_option("--range", range, "Every prime power in LO..HI");
  add_output_options(mq, c, {"text", "json"});

  auto* tables = app.add_subcommand("paper-tables", "Reproduce the reference tables and figures");
  tables->add_option("--only", only, "Restrict to one section")->check(CLI::IsMember({"lattices", "mq", "m2", "bounds"}));
  tables->add_option("--modulus", c.field.modulus, "Override the GF(9) modulus");
  add_output_options(tables, c, {"text", "json"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgs;
  }
  if (list && c.format != "text") {
    err << "error: --list only applies to text output\n";
    return kInvalidArgs;
  }

  try {
    if (build->parsed()) return emit(c, cmd_build(c, list), out, err);
    if (check->parsed()) return emit(c, cmd_check(c), out, err);
    if (mq->parsed()) return emit(c, cmd_mq(c, range), out, err);

    PaperTablesOptions opt;
    opt.only = only;
    opt.json = c.format == "json";
    if (c.field.modulus) {
      opt.gf9_modulus = parse_modulus(*c.field.modulus);
      gf::Field::make(3, 2, opt.gf9_modulus);  // validates the override
    }
    const auto result = paper_tables(opt);
    const int code = emit(c, result.output, out, err);
    if (code != kOk) return code;
    return exit_code(result);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgs;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArgs;
  }
}

}  // namespace sublat::cli
