#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace hgcage::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // a verification reported FAIL
  kUsage = 2,
  kDataError = 3,    // unreadable or malformed input
};

/// What a run was asked to do; written as '#' header lines into every output
/// file so that identical manifests give byte-identical files.
struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;

  std::vector<std::string> header() const;
};

/// Entry point behind the `hgcage` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgcage::cli
