#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coverlab/cache.hpp"
#include "coverlab/corpus.hpp"
#include "coverlab/error.hpp"
#include "coverlab/report.hpp"
#include "coverlab/suites.hpp"

using namespace coverlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("coverlab-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

EngineConfig quick_engine() {
  EngineConfig c;
  c.stanley.budget = std::chrono::milliseconds(20000);
  return c;
}

SuiteConfig suite_on(const char* corpus, std::optional<std::pair<int, int>> k = std::nullopt) {
  SuiteConfig c;
  c.engine = quick_engine();
  c.corpus = load_corpus(corpus);
  c.k_range = k;
  return c;
}

}  // namespace

TEST(Cache, PutGetClear) {
  TempDir dir;
  const Cache cache(dir.path / "nested");
  const auto key = Cache::make_key("abc", 2, "report", "Q;budget=1");
  EXPECT_FALSE(cache.get(key));
  cache.put(key, {{"depth", 1}});
  ASSERT_TRUE(cache.get(key));
  EXPECT_EQ((*cache.get(key))["depth"], 1);
  EXPECT_NE(key, Cache::make_key("abc", 2, "report", "GF(2);budget=1"));
  EXPECT_NE(key, Cache::make_key("abc", 3, "report", "Q;budget=1"));
  cache.put(Cache::make_key("def", 1, "report", "x"), 5);
  EXPECT_EQ(cache.clear(), 2U);
  EXPECT_FALSE(cache.get(key));
}

TEST(Cache, CorruptEntryIsAMiss) {
  TempDir dir;
  const Cache cache(dir.path);
  const auto key = Cache::make_key("abc", 1, "report", "f");
  cache.put(key, 7);
  for (const auto& e : fs::directory_iterator(dir.path)) std::ofstream(e.path()) << "{not json";
  testing::internal::CaptureStderr();
  EXPECT_FALSE(cache.get(key));
  EXPECT_NE(testing::internal::GetCapturedStderr().find("corrupt"), std::string::npos);
  cache.put(key, 8);
  EXPECT_EQ(*cache.get(key), 8);
}

TEST(Cache, DefaultDirectoryFollowsEnvironment) {
  ::setenv("COVERLAB_CACHE", "/tmp/coverlab-env-check", 1);
  EXPECT_EQ(Cache::default_directory(), fs::path("/tmp/coverlab-env-check"));
  ::unsetenv("COVERLAB_CACHE");
}

TEST(Corpus, DefaultAndInline) {
  const auto d = default_corpus();
  std::vector<std::string> names;
  for (const auto& e : d) names.push_back(e.name);
  EXPECT_EQ(names, (std::vector<std::string>{"P2", "P3", "P4", "P5", "C3", "C4", "C5", "K2", "K3", "K4", "K1,3",
                                             "K2,2"}));
  const auto inline_specs = load_corpus("path:3;star:4");
  ASSERT_EQ(inline_specs.size(), 2U);
  EXPECT_EQ(inline_specs[1].name, "K1,3");
  EXPECT_EQ(select(d, {"P3", "K3"}).size(), 2U);
  EXPECT_THROW(load_corpus("wheel:3"), Error);
}

TEST(Corpus, Files) {
  TempDir dir;
  const auto list = dir.path / "list.txt";
  std::ofstream(list) << "# two graphs\npath:4\ncycle:4\n";
  EXPECT_EQ(load_corpus(list.string()).size(), 2U);
  const auto edges = dir.path / "bowtie.txt";
  std::ofstream(edges) << "a b\nb c\na c\nc d\nd e\nc e\n";
  const auto c = load_corpus(edges.string());
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0].name, "bowtie");
  EXPECT_EQ(c[0].graph.num_edges(), 6U);
}

TEST(Corpus, KRange) {
  EXPECT_EQ(parse_k_range("3"), std::make_pair(3, 3));
  EXPECT_EQ(parse_k_range("1..4"), std::make_pair(1, 4));
  EXPECT_THROW(parse_k_range("4..1"), Error);
  EXPECT_THROW(parse_k_range("x"), Error);
}

TEST(Report, Examples) {
  const auto p3 = corpus_entry("path:3");
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(compute_report(p3, k, quick_engine()).depth.value, 1);
  const auto star = compute_report(corpus_entry("star:4"), 1, quick_engine());
  EXPECT_EQ(star.depth.value, 2);
  ReportRequest compare;
  compare.compare_ordinary = true;
  const auto k3 = compute_report(corpus_entry("complete:3"), 2, quick_engine(), compare);
  ASSERT_FALSE(k3.notes.empty());
  EXPECT_NE(k3.notes.front().find("x1*x2*x3"), std::string::npos);
  const auto zero = compute_report(p3, 0, quick_engine());
  EXPECT_EQ(zero.depth.to_string(), "inf");
}

TEST(Report, DeterministicAndCacheTransparent) {
  TempDir dir;
  const Cache cache(dir.path);
  const auto e = corpus_entry("cycle:4");
  const auto fresh = compute_report(e, 2, quick_engine()).to_json().dump();
  EXPECT_EQ(compute_report(e, 2, quick_engine()).to_json().dump(), fresh);
  const auto first = cached_report(e, 2, quick_engine(), {}, &cache).to_json().dump();
  const auto second = cached_report(e, 2, quick_engine(), {}, &cache).to_json().dump();
  EXPECT_EQ(first, fresh);
  EXPECT_EQ(second, fresh);
  EXPECT_EQ(InvariantReport::from_json(nlohmann::json::parse(fresh)).to_json().dump(), fresh);
  EXPECT_NE(quick_engine().fingerprint(), [] {
    auto c = quick_engine();
    c.homology.prime = 2;
    return c.fingerprint();
  }());
}

TEST(Report, TsvRow) {
  std::ostringstream out;
  write_tsv_header(out);
  write_tsv_row(out, compute_report(corpus_entry("path:3"), 1, quick_engine()));
  const auto text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\t')), "graph");
  EXPECT_NE(text.find("\nP3\t3\t1\t1\t1\t1\t"), std::string::npos) << text;
}

TEST(Suites, UnknownRejected) {
  EXPECT_FALSE(is_suite("nope"));
  EXPECT_THROW(run_suite("nope", suite_on("path:3")), Error);
  for (const char* s : {"depth-stabilization", "sdepth-monotone", "sdepth-lower-bounds", "stanley-inequality",
                        "colon-lemma", "bipartite-symbolic-equality", "polarization-coverideal", "polarization-shift",
                        "terai", "dagger", "deletion-sreg", "induced-matching-witness", "embed-gk"}) {
    EXPECT_TRUE(is_suite(s)) << s;
  }
}

TEST(Suites, ColonLemma) {
  const auto r = run_suite("colon-lemma", suite_on("path:3;path:4;complete:3;cycle:4;star:4"));
  EXPECT_EQ(r.aggregate(), Status::pass);
  EXPECT_EQ(r.count(Status::fail), 0U);
  EXPECT_EQ(r.count(Status::pass), 20U);
}

TEST(Suites, BipartiteEquality) {
  const auto bip = run_suite("bipartite-symbolic-equality", suite_on("path:4;cycle:4;complete_bipartite:2,2"));
  EXPECT_EQ(bip.aggregate(), Status::pass);
  const auto k3 = run_suite("bipartite-symbolic-equality", suite_on("complete:3", std::make_pair(2, 2)));
  ASSERT_EQ(k3.instances.size(), 1U);
  EXPECT_EQ(k3.instances[0].status, Status::pass);
  EXPECT_NE(k3.instances[0].detail.find("x1*x2*x3"), std::string::npos);
}

TEST(Suites, DepthStabilizationWithWorkers) {
  auto c = suite_on("path:3;complete:3;star:4");
  c.workers = 3;
  const auto r = run_suite("depth-stabilization", c);
  EXPECT_EQ(r.aggregate(), Status::pass);
  c.workers = 1;
  EXPECT_EQ(run_suite("depth-stabilization", c).to_json().dump(), r.to_json().dump());
}

TEST(Suites, QuickWitnessSuites) {
  for (const char* s : {"induced-matching-witness", "embed-gk", "polarization-coverideal"}) {
    const auto r = run_suite(s, suite_on("path:3;complete:2;cycle:4"));
    EXPECT_EQ(r.aggregate(), Status::pass) << s;
    for (const auto& i : r.instances) EXPECT_NE(i.repro.find("coverlab verify"), std::string::npos);
  }
}

TEST(Suites, GuardBecomesSkip) {
  auto c = suite_on("path:5");
  c.engine.homology.max_hochster_variables = 4;
  const auto r = run_suite("terai", c);
  EXPECT_EQ(r.count(Status::fail), 0U);
  EXPECT_GT(r.count(Status::skip), 0U);
}
