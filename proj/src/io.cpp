#include "actkit/io.hpp"

#include <filesystem>
#include <fstream>

#include "actkit/error.hpp"

namespace actkit {

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::MalformedDocument, "cannot open '" + path + "'", {path});
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw Error(ErrorKind::MalformedDocument, "'" + path + "' is not valid JSON: " + e.what(), {path});
    }
  }

  MonoidPtr resolve_monoid(std::string const& ref, std::string const& base_dir) {
    if (ref.starts_with("builtin:")) {
      return builtin_monoid(ref);
    }
    namespace fs = std::filesystem;
    fs::path path(ref);
    if (path.is_relative() && !base_dir.empty() && fs::exists(fs::path(base_dir) / path)) {
      path = fs::path(base_dir) / path;
    }
    return load_monoid(read_json_file(path.string()));
  }

}  // namespace actkit
