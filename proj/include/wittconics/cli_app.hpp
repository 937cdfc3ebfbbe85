#pragma once

#include "wittconics/hyperfield.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace wittconics {

/// Runs one command-line invocation. Exit codes: 0 success, 1 domain
/// error or failed check, 2 usage error. In JSON mode exactly one
/// envelope {status, result, diagnostics} is written to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

void export_hyperfield(const FiniteHyperfield& H, const std::string& path);
FiniteHyperfield import_hyperfield(const std::string& path);

} // namespace wittconics
