#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dfc/gridfn.hpp"
#include "dfc/rational.hpp"

namespace dfc::cli {

/// Exit codes of the command-line tool; nothing else is ever returned.
enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Entry point shared by the `dfc` binary and the tests. args[0] is the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builds an input window from a function spec:
///   const:<r>          f(a+k) = r
///   values:<r>,<r>,... explicit samples (len may truncate)
///   power:<mu>         f(a+k) = falling(mu+k, mu)
///   random:<seed>      rationals n/d, |n| <= 9, 1 <= d <= 9
/// len == 0 means "not given"; it is required except for values:.
GridFunction make_input(const std::string& spec, const Rational& a, std::size_t len);

}  // namespace dfc::cli
