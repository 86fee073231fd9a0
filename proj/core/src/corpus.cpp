#include "coverlab/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coverlab/cache.hpp"
#include "coverlab/error.hpp"

namespace coverlab {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool looks_like_file(std::string_view spec) {
  return spec.find('/') != std::string_view::npos || std::filesystem::is_regular_file(std::string(spec));
}

}  // namespace

CorpusEntry corpus_entry(std::string_view spec) {
  spec = trim(spec);
  if (looks_like_file(spec)) {
    const std::string path(spec);
    return {std::filesystem::path(path).stem().string(), path, load_graph_file(path)};
  }
  return {family_short_name(spec), std::string(spec), make_family(spec)};
}

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> out;
  for (const char* spec : {"path:2", "path:3", "path:4", "path:5", "cycle:3", "cycle:4", "cycle:5", "complete:2",
                           "complete:3", "complete:4", "star:4", "complete_bipartite:2,2"}) {
    out.push_back(corpus_entry(spec));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(std::string_view arg) {
  arg = trim(arg);
  if (arg.empty() || arg == "default") return default_corpus();
  std::vector<std::string> specs;
  if (std::filesystem::is_regular_file(std::string(arg))) {
    // A corpus file lists specs; an edge-list file is a corpus of one graph.
    std::ifstream in{std::string(arg)};
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    bool list = true;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      auto t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      if (t.find(':') == std::string_view::npos && !looks_like_file(t)) list = false;
    }
    if (!list) return {corpus_entry(arg)};
    std::istringstream again(text);
    for (std::string line; std::getline(again, line);) {
      auto t = trim(line);
      if (!t.empty() && t.front() != '#') specs.emplace_back(t);
    }
  } else {
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      const auto next = std::min(arg.find(';', pos), arg.size());
      auto t = trim(arg.substr(pos, next - pos));
      if (!t.empty()) specs.emplace_back(t);
      pos = next + 1;
    }
  }
  std::vector<CorpusEntry> out;
  for (const auto& s : specs) out.push_back(corpus_entry(s));
  if (out.empty()) throw Error("empty corpus");
  return out;
}

std::vector<CorpusEntry> select(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& names) {
  std::vector<CorpusEntry> out;
  for (const auto& e : corpus) {
    if (std::find(names.begin(), names.end(), e.name) != names.end()) out.push_back(e);
  }
  return out;
}

std::pair<int, int> parse_k_range(std::string_view text) {
  text = trim(text);
  auto number = [&](std::string_view s) {
    int v = 0;
    s = trim(s);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw Error("bad k range '" + std::string(text) + "'");
    return v;
  };
  const auto dots = text.find("..");
  const int lo = number(dots == std::string_view::npos ? text : text.substr(0, dots));
  const int hi = dots == std::string_view::npos ? lo : number(text.substr(dots + 2));
  if (lo < 0 || hi < lo) throw Error("bad k range '" + std::string(text) + "'");
  return {lo, hi};
}

std::string graph_hash(const Graph& g) { return hex64(fnv1a(g.canonical_string())); }

}  // namespace coverlab
