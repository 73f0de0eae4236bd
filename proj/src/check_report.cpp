#include "tamari/check_report.hpp"

#include <sstream>

namespace tamari {

std::string summary_line(const CheckReport& report) {
  std::ostringstream os;
  os << (report.passed ? "PASS " : "FAIL ") << report.name << ' ' << report.equation << " degrees=";
  for (std::size_t i = 0; i < report.degrees.size(); ++i) {
    if (i) os << ',';
    os << report.degrees[i];
  }
  os << " cases=" << report.cases;
  if (!report.detail.empty()) os << ' ' << report.detail;
  if (!report.passed) os << " counterexample: " << report.counterexample;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CheckReport& report) {
  return os << summary_line(report);
}

}  // namespace tamari
