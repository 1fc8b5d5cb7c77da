#pragma once

// Locating the shipped data directory: flag > environment > build-time default.

#include <skk/simplicial.hpp>

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

#ifndef SKK_DEFAULT_DATA_DIR
#define SKK_DEFAULT_DATA_DIR "data"
#endif

namespace skk {

inline std::string data_dir(const std::string& override_path = "") {
    if (!override_path.empty()) return override_path;
    if (const char* env = std::getenv("SKK_DATA_DIR")) return env;
    return SKK_DEFAULT_DATA_DIR;
}

inline SimplicialComplex load_corpus_complex(const std::string& slug, const std::string& dir = "") {
    std::string path = data_dir(dir) + "/triangulations/" + slug + ".tri";
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open triangulation file: " + path);
    return load_triangulation(is);
}

}  // namespace skk
