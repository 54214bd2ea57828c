#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "sublat_cli/cli.hpp"

namespace {

namespace cli = sublat::cli;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(Cli, BuildSummaries) {
  const auto r = run({"build", "--q", "3", "--m", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("6 elements; dims [1,4,1]\n", 0), 0u);
  EXPECT_NE(r.out.find("atoms: 4; coatoms: 4"), std::string::npos);
  EXPECT_EQ(run({"build", "--q", "2", "--m", "1"}).out.rfind("2 elements", 0), 0u);
  EXPECT_EQ(run({"build", "--p", "3", "--n", "1", "--m", "2"}).out, r.out);
  EXPECT_EQ(count(run({"build", "--q", "3", "--m", "2", "--list"}).out, "perp="), 6u);
}

TEST(Cli, BuildDot) {
  const auto r = run({"build", "--q", "2", "--m", "3", "--format", "dot"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(count(r.out, R"(u\d+ \[label=)"), 16u);
  EXPECT_EQ(count(r.out, R"(u\d+ -> u\d+;)"), 35u);
}

TEST(Cli, BuildJson) {
  const auto r = run({"build", "--q", "2", "--m", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(j["size"], 5);
  EXPECT_EQ(j["by_dimension"], nlohmann::json::parse("[1,3,1]"));
  EXPECT_EQ(j["elements"][3]["basis"], nlohmann::json::parse("[[1,1]]"));
  EXPECT_EQ(j["elements"][3]["perp"], 3);
  EXPECT_EQ(cli::dump(j), r.out);
}

TEST(Cli, ModulusOverride) {
  const auto r = run({"build", "--q", "9", "--m", "1", "--modulus", "2,1,1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("x^2+x+2"), std::string::npos);
  EXPECT_EQ(run({"build", "--p", "3", "--modulus", "2,1,1", "--m", "1"}).out, r.out);
  EXPECT_EQ(run({"build", "--q", "9", "--m", "1", "--modulus", "1,0,2"}).code, cli::kInvalidArgs);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kInvalidArgs);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInvalidArgs);
  EXPECT_EQ(run({"build", "--q", "6", "--m", "2"}).code, cli::kInvalidArgs);
  EXPECT_EQ(run({"build", "--q", "3"}).code, cli::kInvalidArgs);
  EXPECT_EQ(run({"build", "--q", "3", "--p", "3", "--m", "2"}).code, cli::kInvalidArgs);
  EXPECT_EQ(run({"build", "--q", "3", "--m", "2", "--format", "xml"}).code, cli::kInvalidArgs);
  EXPECT_EQ(run({"build", "--q", "5", "--m", "9"}).code, cli::kCapExceeded);
  EXPECT_EQ(run({"build", "--q", "2", "--m", "3", "--cap", "15"}).code, cli::kCapExceeded);
  EXPECT_EQ(run({"build", "--q", "2", "--m", "3", "--cap", "16"}).code, cli::kOk);
  EXPECT_EQ(run({"build", "--q", "2", "--m", "3", "--cap", "200000"}).code, cli::kInvalidArgs);
  EXPECT_EQ(run({"check", "--q", "5", "--m", "5"}).code, cli::kCapExceeded);
  EXPECT_EQ(run({"check", "--q", "2", "--m", "3", "--format", "dot"}).code, cli::kInvalidArgs);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, cli::kOk);
  EXPECT_NE(help.out.find("paper-tables"), std::string::npos);
}

TEST(Cli, CheckIsZeroEvenWhenLawsFail) {
  const auto r = run({"check", "--q", "5", "--m", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("orthomodular: fails"), std::string::npos);
  EXPECT_NE(r.out.find("<(1,2)>"), std::string::npos);
  const auto ok = run({"check", "--q", "3", "--m", "2"});
  EXPECT_EQ(count(ok.out, ": holds"), 7u);
  EXPECT_NE(ok.out.find("MO_n: MO_2"), std::string::npos);
  const auto cube = run({"check", "--q", "2", "--m", "3"});
  EXPECT_NE(cube.out.find("modular: holds"), std::string::npos);
  EXPECT_NE(cube.out.find("orthomodular: fails"), std::string::npos);
}

TEST(Cli, CheckJsonRoundTripsByteForByte) {
  for (const auto& [q, m] : {std::pair{"2", "2"}, {"2", "3"}, {"3", "2"}, {"5", "2"}, {"4", "3"}, {"3", "1"}}) {
    const auto r = run({"check", "--q", q, "--m", m, "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto doc = cli::check_document_from_json(nlohmann::json::parse(r.out));
    EXPECT_EQ(cli::dump(cli::to_json(doc)), r.out);
    const auto again = cli::check_document_from_json(cli::to_json(doc));
    EXPECT_EQ(again, doc);
  }
}

TEST(Cli, CheckJsonSchema) {
  const auto j = nlohmann::json::parse(run({"check", "--q", "2", "--m", "2", "--format", "json"}).out);
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(j["verdicts"]["orthomodular"]["holds"], false);
  EXPECT_EQ(j["verdicts"]["orthomodular"]["witness"], nlohmann::json::parse("[[[1,1]]]"));
  EXPECT_EQ(j["verdicts"]["modular"].size(), 1u);
  EXPECT_EQ(j["M_n"], 3);
  EXPECT_TRUE(j["MO_n"].is_null());
}

TEST(Cli, MqRows) {
  const auto r = run({"mq", "--q", "7"});
  EXPECT_EQ(r.out.rfind("m(7)=3, witness (1,3,2) sums to 0", 0), 0u);
  EXPECT_EQ(run({"mq", "--q", "4"}).out.rfind("m(4)=2", 0), 0u);
  const auto table = run({"mq", "--range", "2..17"});
  EXPECT_EQ(count(table.out, "\n"), 11u);
  EXPECT_EQ(count(table.out, "VIOLATED"), 0u);
  const auto j = nlohmann::json::parse(run({"mq", "--range", "2..17", "--format", "json"}).out);
  EXPECT_EQ(j["rows"].size(), 11u);
  EXPECT_EQ(j["rows"][6]["q"], 9);
  EXPECT_EQ(j["rows"][6]["witness"], nlohmann::json::parse("[1,3]"));
  EXPECT_EQ(run({"mq", "--range", "17..2"}).code, cli::kInvalidArgs);
  EXPECT_EQ(run({"mq", "--range", "2..17", "--q", "3"}).code, cli::kInvalidArgs);
}

TEST(Cli, PaperTablesPassAndAreDeterministic) {
  const auto a = run({"paper-tables"});
  const auto b = run({"paper-tables"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(count(a.out, "(?:^|\n)FAIL "), 0u);
  EXPECT_NE(a.out.find(" 0 failed"), std::string::npos);
}

TEST(Cli, PaperTablesSections) {
  const auto m2 = run({"paper-tables", "--only", "m2"});
  EXPECT_EQ(m2.code, cli::kOk);
  EXPECT_EQ(count(m2.out, R"((?:^|\n)\w+ m2\.)"), count(m2.out, "\n") - 1);
  EXPECT_EQ(count(m2.out, R"(m2\.q\d+\.lattice)"), 11u);
  EXPECT_EQ(run({"paper-tables", "--only", "nope"}).code, cli::kInvalidArgs);
}

TEST(Cli, PaperTablesUnderModulusOverride) {
  const auto r = run({"paper-tables", "--modulus", "2,1,1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("PASS mq.q9.m: 2"), std::string::npos);
  EXPECT_NE(r.out.find("INFO mq.q9.reference_witness"), std::string::npos);
  EXPECT_NE(r.out.find("INFO m2.q9.isotropic"), std::string::npos);
  EXPECT_EQ(run({"paper-tables", "--modulus", "1,0,2"}).code, cli::kInvalidArgs);
}

TEST(Cli, PaperTablesJson) {
  const auto r = run({"paper-tables", "--only", "bounds", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_GT(j["passed"].get<int>(), 0);
}

TEST(Cli, MismatchYieldsExitThree) {
  cli::PaperTablesResult r;
  EXPECT_EQ(cli::exit_code(r), cli::kOk);
  r.failed = 1;
  EXPECT_EQ(cli::exit_code(r), cli::kMismatch);
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "sublat_cli_test_out.txt";
  const auto r = run({"build", "--q", "3", "--m", "2", "--out", path.string()});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run({"build", "--q", "3", "--m", "2"}).out);
  std::filesystem::remove(path);
}
