#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cssg/frontend.hpp"

namespace cssg::bench {

inline SourceUnit load(const std::string& relative) {
    const std::filesystem::path path = std::filesystem::path(CSSG_BENCH_DATA_DIR) / relative;
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    const auto lang = path.extension() == ".java" ? Language::Java : Language::Python;
    return {lang, text.str(), path.filename().string()};
}

inline SourceUnit desk(const std::string& problem, const std::string& file) {
    return load("desk_corpus/problems/" + problem + "/" + file);
}

} // namespace cssg::bench
