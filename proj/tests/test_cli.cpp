#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "lietrip/cli.hpp"
#include "lietrip/io.hpp"
#include "support.hpp"

using namespace lietrip;
using support::kQ;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  io::Json report;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  io::Json j;
  if (!out.str().empty() && out.str().front() == '{') j = io::Json::parse(out.str());
  return {code, j, err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("lietrip_cli_" + std::to_string(counter_++) + "_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

void write_text(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"check-lts", "sl2lts"}).code, cli::kTrue);
  EXPECT_EQ(run_cli({"thm-a", "ab2"}).code, cli::kFalse);
  EXPECT_EQ(run_cli({"thm-a", "nonexistent"}).code, cli::kInvalid);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kInvalid);
  EXPECT_EQ(run_cli({"check-lts"}).code, cli::kInvalid);
  EXPECT_EQ(run_cli({"check-lts", "heis"}).code, cli::kInvalid);
  EXPECT_EQ(run_cli({"u0ext", "sl2line"}).code, cli::kInvalid);
}

TEST(Cli, ReportShape) {
  const CliRun r = run_cli({"univ", "sl2lts"});
  ASSERT_EQ(r.code, cli::kTrue);
  for (const char* key : {"command", "inputs", "field", "verdict", "dimensions", "witnesses", "artifacts"})
    EXPECT_TRUE(r.report.contains(key)) << key;
  EXPECT_EQ(r.report["command"], "univ");
  EXPECT_EQ(r.report["dimensions"]["dims"], io::Json::array({3, 3}));
  EXPECT_EQ(r.report["dimensions"]["kernel"], 0);
}

TEST(Cli, CorpusListing) {
  const CliRun r = run_cli({"corpus"});
  ASSERT_EQ(r.code, cli::kTrue);
  EXPECT_FALSE(r.report["artifacts"]["names"].empty());
}

TEST(Cli, RoundTripEveryCorpusEntry) {
  TempDir dir;
  for (const std::string& name : corpus::names()) {
    const std::string path = dir.file(name + ".json");
    ASSERT_EQ(run_cli({"corpus", name, "--out", path}).code, cli::kTrue) << name;
    const io::AlgebraFile loaded = io::load_file(path);
    const corpus::Entry e = corpus::lookup(name, kQ);
    if (auto* t = std::get_if<LieTripleSystem>(&e)) {
      EXPECT_EQ(std::get<LieTripleSystem>(loaded.object), *t) << name;
      EXPECT_EQ(run_cli({"check-lts", path}).code, cli::kTrue) << name;
    } else {
      EXPECT_EQ(std::get<GradedLieAlgebra>(loaded.object), std::get<GradedLieAlgebra>(e)) << name;
      EXPECT_EQ(run_cli({"check-graded", path}).code, cli::kTrue) << name;
    }
    const std::string again = dir.file(name + ".2.json");
    io::save_file(again, loaded);
    EXPECT_EQ(io::load_file(again).object, loaded.object) << name;
  }
}

TEST(Cli, FieldOverride) {
  const CliRun r = run_cli({"h2", "ab2", "--field", "Fp:3"});
  EXPECT_EQ(r.code, cli::kFalse);
  EXPECT_EQ(r.report["field"], "Fp:3");
  EXPECT_EQ(r.report["dimensions"]["h2"], 1);
  EXPECT_EQ(run_cli({"thm-a", "sl2graded", "--field", "Fp:3"}).code, cli::kTrue);
  EXPECT_EQ(run_cli({"thm-a", "heis", "--field", "R"}).code, cli::kInvalid);
}

TEST(Cli, UncheckedAndBrokenInput) {
  TempDir dir;
  auto j = io::to_json(io::Object(corpus::sl2lts(kQ)));
  j["tensor"][0][1][0][1] = "5";
  const std::string path = dir.file("broken.json");
  write_text(path, j.dump());
  EXPECT_EQ(run_cli({"derive", path}).code, cli::kInvalid);
  const CliRun check = run_cli({"check-lts", path});
  EXPECT_EQ(check.code, cli::kFalse);
  EXPECT_FALSE(check.report["witnesses"].empty());
  EXPECT_NE(run_cli({"derive", path, "--unchecked"}).code, cli::kInvalid);
}

TEST(Cli, MalformedFileNamesLocation) {
  TempDir dir;
  auto j = io::to_json(io::Object(corpus::heis(kQ)));
  j["tensor"][1][2][0] = "1/x";
  const std::string path = dir.file("bad.json");
  write_text(path, j.dump());
  const CliRun r = run_cli({"check-graded", path});
  EXPECT_EQ(r.code, cli::kInvalid);
  EXPECT_NE(r.err.find("/tensor/1/2/0"), std::string::npos) << r.err;

  const std::string truncated = dir.file("trunc.json");
  write_text(truncated, "{\"kind\": \"lts\", ");
  EXPECT_EQ(run_cli({"check-lts", truncated}).code, cli::kInvalid);
}

TEST(Cli, UnivOutputIsGradedLie) {
  TempDir dir;
  for (const auto& [name, t] : support::corpus_lts()) {
    const std::string path = dir.file("u.json");
    ASSERT_EQ(run_cli({"univ", name, "--out", path}).code, cli::kTrue) << name;
    EXPECT_EQ(run_cli({"check-graded", path}).code, cli::kTrue) << name;
    EXPECT_EQ(std::get<GradedLieAlgebra>(io::load_file(path).object), universal_algebra(t).algebra) << name;
  }
}

TEST(Cli, AOfName) {
  const corpus::Entry e = corpus::lookup("a_of(abl(2))", kQ);
  EXPECT_EQ(std::get<GradedLieAlgebra>(e), corpus::heis(kQ));
  EXPECT_EQ(run_cli({"thm-a", "a_of(sl2lts)"}).code, cli::kTrue);
  EXPECT_EQ(run_cli({"thm-a", "a_of(nothing)"}).code, cli::kInvalid);
}

TEST(Cli, ExtendAndSplitFromFiles) {
  TempDir dir;
  const std::string hom = dir.file("alpha.json");
  io::save_file(hom, {LtsHom::identity(corpus::odd2(kQ)), "alpha"});
  const std::string ext = dir.file("ext.json");
  const CliRun r = run_cli({"extend", hom, "sl2graded", "--out", ext});
  ASSERT_EQ(r.code, cli::kTrue) << r.err;
  EXPECT_EQ(r.report["dimensions"]["image"], 3);
  const auto g = std::get<GradedHom>(io::load_file(ext).object);
  EXPECT_TRUE(support::is_graded_iso(g.matrix, g.source, g.target));

  const std::string proj = dir.file("proj.json");
  io::save_file(proj, {GradedHom::make(corpus::heis(kQ), corpus::ab2(kQ), Matrix::from_ints(kQ, {{0, 1, 0}, {0, 0, 1}})), "p"});
  const CliRun s = run_cli({"split", proj});
  EXPECT_EQ(s.code, cli::kFalse);
  EXPECT_FALSE(s.report["witnesses"].empty());

  const std::string id = dir.file("id.json");
  io::save_file(id, {GradedHom::identity(corpus::sl2graded(kQ)), "id"});
  EXPECT_EQ(run_cli({"split", id}).code, cli::kTrue);
}

TEST(Cli, ThmAObstructions) {
  const CliRun ab = run_cli({"thm-a", "ab2"});
  ASSERT_EQ(ab.code, cli::kFalse);
  EXPECT_EQ(ab.report["witnesses"][0]["obstruction"], "H2_gr dim 1");
  const CliRun line = run_cli({"thm-a", "sl2line"});
  ASSERT_EQ(line.code, cli::kFalse);
  EXPECT_EQ(line.report["witnesses"][0]["obstruction"], "not generated by L1");
  const CliRun heis = run_cli({"thm-a", "heis"});
  ASSERT_EQ(heis.code, cli::kTrue);
  EXPECT_TRUE(heis.report["witnesses"][0].contains("isomorphism"));
}
