#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sublat/constructs.hpp"
#include "sublat/gfield.hpp"
#include "sublat/lattice.hpp"
#include "sublat/props.hpp"

namespace sublat::cli {

enum ExitCode : int { kOk = 0, kInvalidArgs = 1, kCapExceeded = 2, kMismatch = 3 };

inline constexpr int kJsonVersion = 1;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "x^2+1" style field selection: exactly one of q or (p, n), with an
/// optional modulus (coefficients, constant first).
struct FieldArgs {
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> n;
  std::optional<std::string> modulus;
};

/// Throws std::invalid_argument for malformed selections; sublat errors pass through.
gf::Field resolve_field(const FieldArgs& args);
gf::Polynomial parse_modulus(const std::string& text);

/// A basis matrix: rows of field-element indices.
using Matrix = std::vector<std::vector<std::uint32_t>>;
Matrix basis_matrix(const lin::Subspace& u);

/// A property report together with the basis of every witness element, so the
/// document can be rendered without the lattice at hand.
struct CheckDocument {
  props::PropertyReport report;
  std::map<std::string, std::vector<Matrix>> witness_bases;

  bool operator==(const CheckDocument&) const = default;
};

CheckDocument make_check_document(const lattice::SubspaceLattice& lattice, const props::PropertyReport& report);
nlohmann::json to_json(const CheckDocument& doc);
CheckDocument check_document_from_json(const nlohmann::json& j);

nlohmann::json to_json(const constructs::MqResult& r);

/// Pretty JSON with a trailing newline.
std::string dump(const nlohmann::json& j);

std::string render_build_text(const lattice::SubspaceLattice& lattice, bool list_elements);
nlohmann::json build_json(const lattice::SubspaceLattice& lattice);
std::string render_check_text(const CheckDocument& doc);
std::string render_mq_row(const gf::Field& field, const constructs::MqResult& r);

struct PaperTablesOptions {
  /// "", "lattices", "mq", "m2" or "bounds".
  std::string only;
  /// Replaces the GF(9) modulus; witness rows that depend on it become informational.
  std::optional<gf::Polynomial> gf9_modulus;
  bool json = false;
};

struct PaperTablesResult {
  std::string output;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t info = 0;
};

PaperTablesResult paper_tables(const PaperTablesOptions& options);
inline int exit_code(const PaperTablesResult& r) { return r.failed ? kMismatch : kOk; }

}  // namespace sublat::cli
