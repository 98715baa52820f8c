#pragma once

#include <string>

#include "actkit/monoid.hpp"

namespace actkit {

  //! Throws Error(MalformedDocument) if the file cannot be read or parsed.
  json read_json_file(std::string const& path);

  //! "builtin:<spec>" or a path to a monoid document; relative paths are
  //! tried against `base_dir` first.
  MonoidPtr resolve_monoid(std::string const& ref, std::string const& base_dir = "");

}  // namespace actkit
