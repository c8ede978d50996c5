#pragma once

#include <cstddef>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "cssg/frontend.hpp"
#include "cssg/pdg.hpp"
#include "cssg/semgraph.hpp"

namespace cssg::testing {

std::filesystem::path data_dir();
std::filesystem::path golden(const std::string& name);

std::string read_file(const std::filesystem::path& path);

/// Source unit with the language taken from the file extension.
SourceUnit load_unit(const std::filesystem::path& path);

/// Desk-corpus solution files of `lang`, sorted by path.
std::vector<std::filesystem::path> desk_files(Language lang);

/// Random valid semantic graph with 1..max_nodes nodes.
SemanticGraph random_graph(std::mt19937_64& rng, std::size_t max_nodes);

/// Random CFG with entry 0 and exit 1 in which every node lies on an entry-exit path.
Cfg random_cfg(std::mt19937_64& rng, std::size_t max_nodes);

/// Python lines that can be removed without touching block headers.
std::vector<std::size_t> deletable_lines(const std::string& python_source);

/// Removes `k` random simple statements, leaving `pass` where a block would become empty.
std::string delete_statements(const std::string& python_source, std::size_t k, std::mt19937_64& rng);

/// Text of the source covered by `span`, cut at the first newline.
std::string span_text(const std::string& text, const Span& span);

} // namespace cssg::testing
