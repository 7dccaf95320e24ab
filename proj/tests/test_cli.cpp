#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "multiarr_cli/commands.hpp"
#include "multiarr_cli/corpus.hpp"
#include "multiarr_cli/desk_suite.hpp"

namespace multiarr::cli {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("multiarr-test-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
    return path_ / name;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

int run_tool(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string("\"") + MULTIARR_TOOL + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Document, RoundTripsEveryCorpusFile) {
  for (const auto& e : builtin_corpus()) {
    const auto text = slurp(fs::path(MULTIARR_CORPUS_DIR) / e.file);
    EXPECT_EQ(text, serialize_document(e.doc)) << e.file << " is stale; regenerate with `multiarr corpus corpus`";
    EXPECT_EQ(serialize_document(parse_document(text)), text) << e.file;
  }
  EXPECT_EQ(load_corpus(MULTIARR_CORPUS_DIR).size(), builtin_corpus().size());
}

TEST(Document, ExactNumbersAreStrings) {
  const auto doc = parse_document(R"({"field":"Q","dim":2,"central":true,
    "hyperplanes":[{"coeffs":["-7/2","1.25"]},{"coeffs":["0","1"],"mult":3}]})");
  const auto json = nlohmann::json::parse(serialize_document(doc));
  EXPECT_EQ(json["hyperplanes"][0]["coeffs"][0], "-7/2");
  EXPECT_EQ(json["hyperplanes"][0]["coeffs"][1], "5/4");
  EXPECT_EQ(json["hyperplanes"][0]["mult"], 1);
  EXPECT_EQ(json["hyperplanes"][1]["mult"], 3);
}

TEST(Document, PrimeFieldAndDigest) {
  const auto doc = parse_document(R"({"field":{"p":2},"dim":2,"central":true,
    "hyperplanes":[{"coeffs":["1","0"],"mult":4},{"coeffs":["0","1"],"mult":4},{"coeffs":["1","1"],"mult":4}]})");
  EXPECT_EQ(doc.field, Field::prime(2));
  auto named = doc;
  named.name = corpus_document("a2-f2-444.json").name;
  EXPECT_EQ(document_digest(named), document_digest(corpus_document("a2-f2-444.json")));
  EXPECT_NE(document_digest(named), document_digest(doc));
  EXPECT_EQ(document_digest(doc).size(), 64U);
}

TEST(Document, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_document("{\n  \"field\": \"Q\",\n  \"dim\": ,\n}");
    FAIL() << "expected a parse error";
  } catch (const DocumentError& e) {
    EXPECT_TRUE(contains(e.what(), "line 3")) << e.what();
    EXPECT_TRUE(contains(e.what(), "column")) << e.what();
  }
}

TEST(Document, RejectsSchemaViolations) {
  const char* bad[] = {
      R"({"field":"Q","dim":2,"central":true,"hyperplanes":[{"coeffs":["1"]}]})",
      R"({"field":"Q","dim":4,"central":true,"hyperplanes":[]})",
      R"({"field":{"p":4},"dim":2,"central":true,"hyperplanes":[{"coeffs":["1","0"]}]})",
      R"({"field":"Q","dim":3,"central":true,"hyperplanes":[{"coeffs":["1","0","0"],"mult":2}]})",
      R"({"field":"Q","dim":2,"central":true,"hyperplanes":[{"coeffs":["x","0"]}]})",
      R"({"field":"Q","dim":2,"central":true,"hyperplanes":[{"coeffs":["1","0"],"mult":-1}]})",
      R"({"field":"Q","dim":2,"central":true,"extra":1,"hyperplanes":[{"coeffs":["1","0"]}]})",
      R"({"field":"Q","dim":2,"central":true,"hyperplanes":[{"coeffs":[1,0]}]})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_document(text), DocumentError) << text;
  const auto dup = parse_document(
      R"({"field":"Q","dim":2,"central":true,"hyperplanes":[{"coeffs":["1","0"]},{"coeffs":["2","0"]}]})");
  EXPECT_THROW(to_multiarrangement(dup), DocumentError);
}

TEST(Commands, ExpHeadlines) {
  EXPECT_TRUE(contains(render_human(cmd_exp(corpus_document("a2.json"))), "exp=(1,2) Δ=1 balanced=true"));
  EXPECT_TRUE(contains(render_human(cmd_exp(corpus_document("a2-511.json"))), "exp=(2,5) Δ=3 balanced=false"));
  const auto r = render_human(cmd_exp(corpus_document("a2-f2-444.json")));
  EXPECT_TRUE(contains(r, "exp=(4,8) Δ=4")) << r;
  EXPECT_TRUE(contains(r, "characteristic")) << r;
  EXPECT_THROW(cmd_exp(corpus_document("braid.json")), DocumentError);
}

TEST(Commands, FreeHeadlines) {
  const auto braid = cmd_free(corpus_document("braid.json"), std::nullopt);
  EXPECT_TRUE(contains(render_human(braid), "FREE exp=(1,2,3) coker=0 combinatorial=true(fc)"));
  EXPECT_EQ(braid.exit_code, kExitOk);
  EXPECT_TRUE(contains(render_human(cmd_free(corpus_document("generic-4.json"), std::nullopt)), "NOT FREE coker=1"));
  EXPECT_TRUE(contains(render_human(cmd_free(corpus_document("boolean.json"), std::nullopt)), "FREE exp=(1,1,1)"));
  EXPECT_THROW(cmd_free(corpus_document("braid.json"), 17), PreconditionError);
  const auto aff = cmd_free(corpus_document("braid-deconing.json"), std::nullopt);
  EXPECT_TRUE(contains(render_human(aff), "FREE exp=(1,2,3)"));
}

TEST(Commands, LatticeAndShift) {
  LatticeOptions opts;
  opts.caps = {3, 3, 3};
  EXPECT_EQ(cmd_lattice(corpus_document("a2.json"), opts).exit_code, kExitOk);
  opts.caps = {4, 4, 4};
  EXPECT_EQ(cmd_lattice(corpus_document("a2-f2-444.json"), opts).exit_code, kExitOk);
  opts.budget = 10;
  EXPECT_THROW(cmd_lattice(corpus_document("a2.json"), opts), PreconditionError);
  EXPECT_EQ(cmd_shift(corpus_document("b2-lines.json"), {}).exit_code, kExitOk);
  EXPECT_EQ(cmd_shift(corpus_document("a2-221.json"), {}).exit_code, kExitOk);
  EXPECT_THROW(cmd_shift(corpus_document("a2.json"), {2, 2, 2}), PreconditionError);
}

// Same input, same bytes; the worker count never shows up in the output.
TEST(Commands, JsonIsDeterministicAcrossJobs) {
  LatticeOptions opts;
  opts.caps = {2, 2, 2, 2};
  opts.jobs = 1;
  const auto one = render_json(cmd_lattice(corpus_document("b2-lines.json"), opts));
  opts.jobs = 4;
  EXPECT_EQ(render_json(cmd_lattice(corpus_document("b2-lines.json"), opts)), one);
  EXPECT_EQ(render_json(cmd_shift(corpus_document("b2-lines.json"), {}, 1)),
            render_json(cmd_shift(corpus_document("b2-lines.json"), {}, 3)));
  const auto free = render_json(cmd_free(corpus_document("braid.json"), std::nullopt));
  EXPECT_EQ(render_json(cmd_free(corpus_document("braid.json"), std::nullopt)), free);
  EXPECT_FALSE(contains(free, "seconds"));
  EXPECT_EQ(nlohmann::json::parse(free)["results"]["free"], true);
}

TEST(DeskSuite, SingleCriteria) {
  const auto corpus = builtin_corpus();
  for (int id : {1, 3, 4, 7, 8, 9}) {
    const auto r = run_criterion(id, corpus);
    EXPECT_TRUE(r.passed()) << summary_line(r);
  }
  EXPECT_EQ(run_criterion(3, corpus).status, VerdictStatus::ExpectedViolation);
  EXPECT_TRUE(contains(summary_line(run_criterion(1, corpus)), "PASS"));
}

TEST(Binary, ExitCodes) {
  TempDir tmp;
  const auto out = tmp.path() / "out.txt";
  const std::string corpus = MULTIARR_CORPUS_DIR;
  EXPECT_EQ(run_tool("exp \"" + corpus + "/a2.json\"", out), 0);
  EXPECT_TRUE(contains(slurp(out), "exp=(1,2)"));

  const auto broken = tmp.write("broken.json", "{\"field\": \"Q\", \"dim\": 2,");
  EXPECT_EQ(run_tool("exp \"" + broken.string() + "\"", out), 3);
  EXPECT_TRUE(contains(slurp(out), "line"));
  EXPECT_EQ(run_tool("exp \"" + (tmp.path() / "missing.json").string() + "\"", out), 3);

  EXPECT_EQ(run_tool("shift --m0 2,2,2 \"" + corpus + "/a2.json\"", out), 1);
  EXPECT_EQ(run_tool("lattice \"" + corpus + "/a2.json\"", out), 1);  // --caps is required
  EXPECT_EQ(run_tool("lattice --caps 2,2,2 \"" + corpus + "/a2.json\"", out), 0);
  EXPECT_EQ(run_tool("shift --m0 1,1,1,1 \"" + corpus + "/b2-lines.json\"", out), 0);
  EXPECT_EQ(run_tool("free --H0 0 \"" + corpus + "/braid.json\"", out), 0);

  // A corrupted corpus directory makes verify-all fail on input.
  tmp.write("bad.json", "not json");
  EXPECT_EQ(run_tool("verify-all --suite desk --corpus \"" + tmp.path().string() + "\"", out), 3);
}

TEST(Binary, JsonStableAndStdin) {
  TempDir tmp;
  const auto a = tmp.path() / "a.txt";
  const auto b = tmp.path() / "b.txt";
  const std::string file = std::string(MULTIARR_CORPUS_DIR) + "/braid.json";
  ASSERT_EQ(run_tool("--json free \"" + file + "\"", a), 0);
  ASSERT_EQ(run_tool("--json --jobs 3 free - < \"" + file + "\"", b), 0);
  const auto ja = nlohmann::json::parse(slurp(a));
  const auto jb = nlohmann::json::parse(slurp(b));
  EXPECT_EQ(ja["results"], jb["results"]);
  EXPECT_EQ(ja["digest"], jb["digest"]);
  ASSERT_EQ(run_tool("--json free \"" + file + "\"", b), 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

}  // namespace
}  // namespace multiarr::cli
