#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tamari/check_report.hpp"
#include "tamari/exactlin.hpp"

namespace tamari::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kCapacity = 3,
};

/// Default degree limits; the --capacity flag overrides them up to the
/// library's hard limits.
inline constexpr int kDefaultVerifyCapacity = 7;
inline constexpr int kDefaultMatrixCapacity = 7;
inline constexpr int kDefaultEnumerateCapacity = 10;

/// Names accepted by `verify --checks`, in execution order.
const std::vector<std::string>& check_names();

/// Runs the named battery at degree n. See README for what n bounds in each.
std::vector<CheckReport> run_checks(const std::string& name, int n);

/// Matrix kinds: zeta, mobius, coxeter, coxeter_inv, tau, theta2.
IntMatrix matrix_of_kind(const std::string& kind, int n);

/// {"degree":n,"size":N,"basis":[...],"rows":[[...],...]} with no whitespace.
/// Rows are row-major; column j is the image of basis tree j.
std::string matrix_json(int n, const IntMatrix& m);
/// One line per row, comma separated, no header.
std::string matrix_csv(const IntMatrix& m);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Data goes to `out`; diagnostics and timings go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tamari::cli
