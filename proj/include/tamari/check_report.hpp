#pragma once

#include <chrono>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace tamari {

/// Outcome of one equation-keyed verification. Pass/fail is exact; a failing
/// report always carries the first counterexample found.
struct CheckReport {
  std::string name;
  std::string equation;  // e.g. "Eq(14)"
  std::vector<int> degrees;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
  std::string detail;  // extra facts such as a least matrix order
  double seconds = 0.0;

  explicit operator bool() const noexcept { return passed; }
};

/// Accumulates cases for a CheckReport and stamps wall time on finish().
class CheckRecorder {
 public:
  CheckRecorder(std::string name, std::string equation, std::vector<int> degrees)
      : start_(std::chrono::steady_clock::now()) {
    report_.name = std::move(name);
    report_.equation = std::move(equation);
    report_.degrees = std::move(degrees);
  }

  /// Records one case. Only the first failure's description is kept; the
  /// describe callback is invoked lazily so passing cases cost nothing.
  template <typename Describe>
  bool expect(bool ok, Describe&& describe) {
    ++report_.cases;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = describe();
    }
    return ok;
  }

  /// Folds a sub-check into this one: its cases count here and its first
  /// failure becomes ours, prefixed by its equation tag.
  void absorb(const CheckReport& sub) {
    report_.cases += sub.cases;
    if (!sub.passed && report_.passed) {
      report_.passed = false;
      report_.counterexample = sub.equation + ": " + sub.counterexample;
    }
  }

  bool failed() const noexcept { return !report_.passed; }
  void set_detail(std::string detail) { report_.detail = std::move(detail); }

  CheckReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return report_;
  }

 private:
  CheckReport report_;
  std::chrono::steady_clock::time_point start_;
};

/// One line: "PASS name Eq(..) [degrees] cases=N detail". No timing.
std::string summary_line(const CheckReport& report);

std::ostream& operator<<(std::ostream& os, const CheckReport& report);

}  // namespace tamari
