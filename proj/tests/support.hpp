#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexiprof/lexicon.hpp"

namespace lexiprof::testing {

/// Directory removed when the object goes out of scope.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> serial{0};
    path_ = std::filesystem::temp_directory_path() /
            ("lexiprof-test-" + std::to_string(::getpid()) + "-" + std::to_string(serial++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(std::string_view name) const { return path_ / name; }

  std::filesystem::path write(std::string_view name, std::string_view contents) const {
    auto p = file(name);
    std::ofstream(p, std::ios::binary) << contents;
    return p;
  }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Marker word(std::string id, std::string pattern) {
  Marker m;
  m.id = std::move(id);
  m.kind = MarkerKind::linguistic;
  m.pattern = std::move(pattern);
  return m;
}

inline Marker graphic(std::string id, std::string pattern) {
  Marker m;
  m.id = std::move(id);
  m.kind = MarkerKind::graphic;
  m.pattern = std::move(pattern);
  return m;
}

/// Partial lexicon over the given markers; `ios` entries are
/// (id, indicator, value, [(marker, weight)]).
struct IoSpec {
  std::string id;
  std::string indicator;
  std::string value;
  std::vector<std::pair<std::string, Rational>> markers;
};

Lexicon partial_lexicon(std::vector<Marker> markers, const std::vector<IoSpec>& ios);

/// Full taxonomy plus the given markers and IOs.
Lexicon full_lexicon(std::vector<Marker> markers, const std::vector<IoSpec>& ios);

}  // namespace lexiprof::testing
