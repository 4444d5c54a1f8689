#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "alexcalc/io.hpp"

using namespace alexcalc;

namespace {

const std::string kSource = ALEXCALC_SOURCE_DIR;

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

// A case file holds "arg <value>" lines, one "exit <n>" line, a "---"
// separator, then the exact expected stdout.  @SRC@ expands to the source
// directory.
struct GoldenCase {
  std::vector<std::string> args;
  int status = 0;
  std::string expected;
};

GoldenCase load(const std::filesystem::path& path) {
  std::ifstream in(path);
  GoldenCase c;
  std::string line;
  while (std::getline(in, line) && line != "---") {
    if (line.rfind("arg ", 0) == 0) {
      std::string a = line.substr(4);
      if (auto at = a.find("@SRC@"); at != std::string::npos) a.replace(at, 5, kSource);
      c.args.push_back(a);
    } else if (line.rfind("exit ", 0) == 0) {
      c.status = std::stoi(line.substr(5));
    }
  }
  std::ostringstream rest;
  rest << in.rdbuf();
  c.expected = rest.str();
  return c;
}

}  // namespace

TEST(Golden, AllCases) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kSource + "/tests/golden")) {
    if (entry.path().extension() != ".case") continue;
    ++seen;
    const GoldenCase c = load(entry.path());
    const CliRun r = run(c.args);
    EXPECT_EQ(r.status, c.status) << entry.path().filename() << "\n" << r.err;
    EXPECT_EQ(r.out, c.expected) << entry.path().filename();
  }
  EXPECT_GE(seen, 20u);
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"enumerate-gluings"}, {"compare", "Q #^{q1,q1} Q", "Q #^{q2,q2} Q"},
        {"--seed", "9", "selftest", "--count", "30"}}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.status, b.status);
  }
}

TEST(Cli, EnumerateGluingsHasSixLinesAndFourClasses) {
  const CliRun r = run({"enumerate-gluings"});
  std::istringstream in(r.out);
  std::set<std::string> classes;
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line); ++lines) classes.insert(line.substr(line.find(" = ") + 3));
  EXPECT_EQ(lines, 6u);
  EXPECT_EQ(classes.size(), 4u);
}

TEST(Cli, DomainErrorsCarrySpans) {
  const CliRun r = run({"normalize", "S3 # Nope"});
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("UnknownAtom"), std::string::npos);
  EXPECT_NE(r.err.find("     ^^^^"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"normalize"}).status, 2);
  EXPECT_EQ(run({"--format", "xml", "normalize", "S3"}).status, 2);
  EXPECT_EQ(run({"surgery"}).status, 2);
  const CliRun help = run({"--help"});
  EXPECT_EQ(help.status, 0);
  EXPECT_NE(help.out.find("normalize"), std::string::npos);
}

TEST(Cli, MachineFormatIsKeyValue) {
  const CliRun r = run({"--format", "machine", "invariants", "Q #^{q1,q1} Q"});
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    const auto colon = line.find(':');
    ASSERT_NE(colon, std::string::npos) << line;
    EXPECT_EQ(line.substr(0, colon).find(' '), std::string::npos) << line;
  }
}

TEST(Cli, ExtraCatalogFile) {
  const auto path = std::filesystem::temp_directory_path() / "alexcalc_extra_catalog.txt";
  {
    std::ofstream f(path);
    f << "atom Lens sites=a,b h1=Z/2 image.a=1 image.b=1 cover=S3 flags=prime,irreducible,!orientable\n";
  }
  const CliRun r = run({"--catalog", path.string(), "normalize", "Lens # S3"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "Lens\n");
  {
    std::ofstream f(path);
    f << "atom Odd sites=a flags=!orientable\n";
  }
  const CliRun bad = run({"--catalog", path.string(), "normalize", "S3"});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.err.find("odd"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, Selftest) {
  const CliRun r = run({"--seed", "3", "--format", "machine", "selftest", "--count", "100"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("failures:0"), std::string::npos);
}
