// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tamari/anticyclic.hpp"
#include "tamari/cli.hpp"
#include "tamari/coxeter.hpp"
#include "tamari/dendriform.hpp"
#include "tamari/tamari.hpp"

using namespace tamari;

namespace {

// Collects sub-results; the first failure becomes the reason.
struct Outcome {
  bool ok = true;
  std::string reason;
  std::string detail;

  void expect(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      reason = why;
    }
  }
  void expect(const CheckReport& r) {
    expect(r.passed, summary_line(r));
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome theorem() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    o.expect(tau_matrix(n).matrix.rows() == static_cast<Eigen::Index>(catalan(n)), "size at n=" + std::to_string(n));
    o.expect(verify_theorem(n));
  }
  return o;
}

Outcome theta_period() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const CheckReport r = check_theta_order(n);
    o.expect(r);
    o.detail += (n > 1 ? "," : "") + r.detail;
  }
  return o;
}

Outcome tau_period() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    const IntMatrix& m = tau_matrix(n).matrix;
    o.expect(is_identity<CheckedInt>(power<CheckedInt>(m, n + 1)), "tau^(n+1) != Id at n=" + std::to_string(n));
  }
  return o;
}

Outcome product_oracle() {
  Outcome o;
  const CheckReport exhaustive = check_star_oracle(6);
  const CheckReport sampled = check_star_oracle_random(7, 8, 500, 0x5eed);
  o.expect(exhaustive);
  o.expect(sampled);
  o.expect(sampled.cases >= 500, "fewer than 500 random pairs");
  o.detail = "exhaustive=" + std::to_string(exhaustive.cases) + " random=" + std::to_string(sampled.cases);
  return o;
}

Outcome dendriform_axioms() {
  Outcome o;
  o.expect(check_dendriform_axioms(6));
  HalfProducts bad = standard_half_products();
  bad.succ = [](const Tree& x, const Tree& y) {
    return wedge_lin(star(x, y.right()), LinComb::basis(y.left()));
  };
  o.expect(!check_dendriform_axiom(2, 6, bad).passed, "corrupted split was not caught by the second relation");
  return o;
}

Outcome lemmas() {
  Outcome o;
  for (int n1 = 0; n1 <= 6; ++n1) {
    for (int n2 = 0; n1 + n2 <= 6; ++n2) {
      o.expect(check_lemma_2_1(n1, n2));
      o.expect(check_lemma_3_3(n1, n2));
      o.expect(check_zeta_under_to_star(n1, n2));
    }
  }
  return o;
}

Outcome graded_theta() {
  Outcome o;
  o.expect(check_prop_6_4(6));
  o.expect(check_prop_6_6(6));
  o.expect(check_corollaries(7));
  return o;
}

Outcome structure() {
  Outcome o;
  for (int n = 0; n <= 10; ++n) {
    o.expect(enumerate(n).size() == catalan(n), "|Y(n)| != catalan(n) at n=" + std::to_string(n));
  }
  for (int n = 0; n <= 7; ++n) {
    o.expect(check_poset_axioms(n));
    const TamariPoset& p = tamari_poset(n);
    o.expect(p.min_element() == left_comb(n), "minimum is not the left comb at n=" + std::to_string(n));
    o.expect(p.max_element() == right_comb(n), "maximum is not the right comb at n=" + std::to_string(n));
  }
  for (int n = 0; n <= 6; ++n) o.expect(check_lattice(n));
  return o;
}

Outcome golden() {
  Outcome o;
  for (const std::string kind : {"zeta", "mobius", "coxeter", "tau", "theta2"}) {
    std::ostringstream out, err;
    const int code = cli::run({"matrix", kind, "2", "--format", "json"}, out, err);
    o.expect(code == cli::kOk, kind + ": exit " + std::to_string(code));
    o.expect(out.str() == slurp(std::string(TAMARI_GOLDEN_DIR) + "/" + kind + "_2.json"), kind + ": bytes differ");
  }
  return o;
}

Outcome overflow_discipline() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"verify", "7"}, out, err);
  o.expect(code == cli::kOk, "verify 7 exited with " + std::to_string(code) + ": " + err.str());
  o.expect(out.str().find("FAIL") == std::string::npos, "verify 7 reported a failure");
  o.expect(err.str().find("error") == std::string::npos, "verify 7 wrote an error");
  // Overflow must surface as exit 3.
  std::ostringstream out2, err2;
  o.expect(cli::run({"verify", "9", "--capacity", "9"}, out2, err2) == cli::kCapacity, "capacity breach not exit 3");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tau = (-1)^n theta^2 for n = 1..7", theorem},
      {"theta^(2n+2) = Id for n = 1..6", theta_period},
      {"tau^(n+1) = Id for n = 1..7", tau_period},
      {"interval product = recursive product", product_oracle},
      {"dendriform relations, mutation caught", dendriform_axioms},
      {"graft bijection and interval partition", lemmas},
      {"graded theta relations", graded_theta},
      {"structural baselines", structure},
      {"degree-2 golden matrices", golden},
      {"verify 7 without overflow", overflow_discipline},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.reason = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
    std::cout << " (" << std::fixed << std::setprecision(2) << seconds << "s)";
    if (!o.ok) std::cout << " -- " << o.reason;
    std::cout << '\n';
    failures += o.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
