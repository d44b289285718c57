#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "indcol/graph.hpp"

namespace indcol {

struct CorpusEntry {
  std::string graph6;
  Graph graph;
};

// One graph6 string per line; blank lines and lines starting with '#' are
// skipped. Parse errors carry the 1-based line number.
std::vector<CorpusEntry> read_corpus(std::istream& in);
std::vector<CorpusEntry> read_corpus(const std::filesystem::path& path);

}  // namespace indcol
