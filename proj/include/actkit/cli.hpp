#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace actkit::cli {

  //! Runs one command line (without the program name). Results go to `out`
  //! (or the --out file) as JSON; errors go to `out` as a single-line JSON
  //! object. Returns 0 on success, 1 when a verification suite reports
  //! violations, 2 on input, validation or budget errors.
  int run(std::vector<std::string> const& args, std::ostream& out);

}  // namespace actkit::cli
