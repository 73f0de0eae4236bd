#include "tamari/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tamari/anticyclic.hpp"
#include "tamari/coxeter.hpp"
#include "tamari/dendriform.hpp"
#include "tamari/errors.hpp"
#include "tamari/tamari.hpp"
#include "tamari/tree.hpp"

namespace tamari::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

void require_capacity(int n, int capacity, const std::string& what) {
  if (n < 0) throw std::invalid_argument(what + ": degree must be nonnegative");
  if (n > capacity) {
    throw CapacityError(what + ": degree " + std::to_string(n) + " exceeds capacity " + std::to_string(capacity) +
                        " (raise with --capacity)");
  }
}

ordered_json basis_json(int n) {
  ordered_json basis = ordered_json::array();
  for (const Tree& t : enumerate(n)) basis.push_back(format(t));
  return basis;
}

// Folds the per-degree (or per-split) reports of one family into a single line.
CheckReport fold(const std::string& name, const std::string& equation, std::vector<int> degrees,
                 const std::vector<CheckReport>& parts) {
  CheckRecorder rec(name, equation, std::move(degrees));
  for (const CheckReport& p : parts) rec.absorb(p);
  std::string detail;
  for (const CheckReport& p : parts) {
    if (p.detail.empty()) continue;
    if (!detail.empty()) detail += ',';
    detail += std::to_string(p.degrees.front()) + ':' + p.detail;
  }
  rec.set_detail(detail);
  CheckReport r = rec.finish();
  r.seconds = 0;
  for (const CheckReport& p : parts) r.seconds += p.seconds;
  return r;
}

template <typename F>
CheckReport per_degree(const std::string& name, const std::string& equation, int from, int n, F&& check) {
  std::vector<CheckReport> parts;
  for (int k = from; k <= n; ++k) parts.push_back(check(k));
  return fold(name, equation, {n}, parts);
}

template <typename F>
CheckReport per_split(const std::string& name, const std::string& equation, int n, F&& check) {
  std::vector<CheckReport> parts;
  for (int n1 = 0; n1 <= n; ++n1) {
    for (int n2 = 0; n1 + n2 <= n; ++n2) parts.push_back(check(n1, n2));
  }
  return fold(name, equation, {n}, parts);
}

int cmd_trees(int n, const std::string& fmt, int capacity, std::ostream& out) {
  require_capacity(n, std::min(capacity, kMaxEnumerationDegree), "trees");
  if (fmt == "json") {
    ordered_json j;
    j["degree"] = n;
    j["count"] = catalan(n);
    j["trees"] = basis_json(n);
    out << j.dump() << '\n';
  } else {
    for (const Tree& t : enumerate(n)) out << format(t) << '\n';
  }
  return kOk;
}

int cmd_poset(int n, const std::string& fmt, int capacity, std::ostream& out) {
  require_capacity(n, std::min(capacity, kMaxPosetDegree), "poset");
  const TamariPoset& p = tamari_poset(n);
  if (fmt == "dot") {
    out << to_dot(p);
  } else if (fmt == "json") {
    ordered_json j;
    j["degree"] = n;
    j["size"] = p.size();
    j["basis"] = basis_json(n);
    ordered_json covers = ordered_json::array();
    for (const auto& [lo, hi] : p.covers()) covers.push_back({lo, hi});
    j["covers"] = covers;
    j["linear_extension"] = p.linear_extension();
    j["minimum"] = format(p.min_element());
    j["maximum"] = format(p.max_element());
    out << j.dump() << '\n';
  } else {
    for (const auto& [lo, hi] : p.covers()) out << format(p.basis()[lo]) << " < " << format(p.basis()[hi]) << '\n';
  }
  return kOk;
}

int cmd_matrix(const std::string& kind, int n, const std::string& fmt, int capacity, std::ostream& out) {
  require_capacity(n, std::min(capacity, kMaxMatrixDegree), "matrix");
  const IntMatrix m = matrix_of_kind(kind, n);
  out << (fmt == "csv" ? matrix_csv(m) : matrix_json(n, m) + "\n");
  return kOk;
}

int cmd_verify(int n, const std::string& checks, int capacity, std::ostream& out, std::ostream& err) {
  require_capacity(n, std::min(capacity, kMaxMatrixDegree), "verify");
  std::vector<std::string> selected;
  std::stringstream ss(checks);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (item == "all") {
      selected = check_names();
      break;
    }
    if (std::find(check_names().begin(), check_names().end(), item) == check_names().end()) {
      throw std::invalid_argument("unknown check '" + item + "'");
    }
    selected.push_back(item);
  }
  if (selected.empty()) throw std::invalid_argument("no checks selected");

  std::size_t total = 0;
  std::size_t failed = 0;
  for (const std::string& name : selected) {
    for (const CheckReport& r : run_checks(name, n)) {
      ++total;
      if (!r.passed) ++failed;
      out << summary_line(r) << '\n';
      err << "[" << r.name << "] " << std::fixed << std::setprecision(3) << r.seconds << "s\n";
    }
  }
  if (failed == 0) {
    out << "verify " << n << ": all " << total << " checks passed\n";
    return kOk;
  }
  out << "verify " << n << ": " << failed << " of " << total << " checks failed\n";
  return kCheckFailed;
}

int cmd_order(int n, int capacity, std::ostream& out) {
  require_capacity(n, std::min(capacity, kMaxMatrixDegree), "order");
  if (n < 1) throw std::invalid_argument("order: degree must be at least 1");
  const CheckReport theta = check_theta_order(n);
  const CheckReport tau = check_tau_order(n);
  out << "degree " << n << '\n';
  out << "theta " << (theta.detail.empty() ? "order=none" : theta.detail) << " period=" << 2 * n + 2
      << (theta.passed ? " ok" : " FAIL") << '\n';
  out << "tau " << (tau.detail.empty() ? "order=none" : tau.detail) << " period=" << n + 1
      << (tau.passed ? " ok" : " FAIL") << '\n';
  return theta.passed && tau.passed ? kOk : kCheckFailed;
}

int cmd_product(const std::string& op, const std::string& lhs, const std::string& rhs, std::ostream& out) {
  static const std::map<std::string, std::function<LinComb(const LinComb&, const LinComb&)>> ops = {
      {"star", [](const LinComb& a, const LinComb& b) { return star(a, b); }},
      {"star_recursive", [](const LinComb& a, const LinComb& b) { return star_recursive(a, b); }},
      {"prec", prec},
      {"succ", succ},
      {"under", under_lin},
      {"over", over_lin},
      {"wedge", wedge_lin},
  };
  const auto it = ops.find(op);
  if (it == ops.end()) throw std::invalid_argument("unknown product '" + op + "'");
  const Tree a = parse(lhs);
  const Tree b = parse(rhs);
  if (a.degree() + b.degree() + 1 > kMaxMatrixDegree + 2) {
    throw CapacityError("product: total degree too large");
  }
  out << format(it->second(LinComb::basis(a), LinComb::basis(b))) << '\n';
  return kOk;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"structure", "theorem",    "orders", "axioms", "oracle",
                                                 "lemmas",    "tau_splits", "prop64", "prop66", "corollaries"};
  return names;
}

std::vector<CheckReport> run_checks(const std::string& name, int n) {
  if (name == "structure") {
    return {per_degree("poset_axioms", "order", 0, n, check_poset_axioms),
            per_degree("lattice", "meet/join", 0, n, check_lattice),
            per_degree("mirror_anti_automorphism", "order", 0, n, check_mirror_anti_automorphism)};
  }
  if (name == "theorem") return {per_degree("theorem", "Eq(14)", 1, n, verify_theorem)};
  if (name == "orders") {
    return {per_degree("theta_order", "theta^(2n+2)=Id", 1, n, check_theta_order),
            per_degree("tau_order", "tau^(n+1)=Id", 1, n, check_tau_order)};
  }
  if (name == "axioms") return {check_dendriform_axioms(n), check_half_product_sum(n)};
  if (name == "oracle") return {check_star_oracle(n), check_star_associative(n), check_star_mirror(n)};
  if (name == "lemmas") {
    return {per_split("lemma_2_1", "Lemma2.1", n, check_lemma_2_1),
            per_split("lemma_3_3", "Lemma3.3", n, check_lemma_3_3),
            per_split("zeta_transpose_under", "Lemma2.1", n, check_zeta_transpose_under),
            per_split("zeta_under_to_star", "Lemma3.3", n, check_zeta_under_to_star)};
  }
  if (name == "tau_splits") return {per_degree("tau_well_defined", "Eq(15)-(17)", 1, n, check_tau_well_defined)};
  if (name == "prop64") return {check_prop_6_4(n)};
  if (name == "prop66") return {check_prop_6_6(std::max(n - 1, 0))};
  if (name == "corollaries") return {check_corollaries(n)};
  throw std::invalid_argument("unknown check '" + name + "'");
}

IntMatrix matrix_of_kind(const std::string& kind, int n) {
  if (kind == "zeta") return tamari_poset(n).zeta_matrix();
  if (kind == "mobius") return tamari_poset(n).mobius_matrix();
  if (kind == "coxeter") return coxeter_map(n).theta;
  if (kind == "coxeter_inv") return coxeter_map(n).theta_inv;
  if (kind == "tau") return tau_matrix(n).matrix;
  if (kind == "theta2") return signed_theta_squared(n);
  throw std::invalid_argument("unknown matrix kind '" + kind + "'");
}

std::string matrix_json(int n, const IntMatrix& m) {
  ordered_json j;
  j["degree"] = n;
  j["size"] = m.rows();
  j["basis"] = basis_json(n);
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).value());
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string matrix_csv(const IntMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (k) os << ',';
      os << m(i, k);
    }
    os << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tamari lattices, Coxeter transformations and the dendriform anticyclic map"};
  app.require_subcommand(1);
  app.fallthrough();
  int capacity = -1;
  app.add_option("--capacity", capacity, "Override the default degree limit");

  int n = 0;
  std::string trees_fmt;
  std::string poset_fmt;
  std::string matrix_fmt;
  std::string kind;
  std::string checks = "all";
  std::string op;
  std::string lhs;
  std::string rhs;

  auto* trees = app.add_subcommand("trees", "List Y(n) in canonical order");
  trees->add_option("n", n, "Degree")->required();
  trees->add_option("--format", trees_fmt, "text|json")->check(CLI::IsMember({"text", "json"}))->default_val("text");

  auto* poset = app.add_subcommand("poset", "Covering relations of T(n)");
  poset->add_option("n", n, "Degree")->required();
  poset->add_option("--format", poset_fmt, "dot|json|text")->check(CLI::IsMember({"dot", "json", "text"}))->default_val("dot");

  auto* matrix = app.add_subcommand("matrix", "Export a matrix in the canonical basis");
  matrix->add_option("kind", kind, "zeta|mobius|coxeter|coxeter_inv|tau|theta2")
      ->required()
      ->check(CLI::IsMember({"zeta", "mobius", "coxeter", "coxeter_inv", "tau", "theta2"}));
  matrix->add_option("n", n, "Degree")->required();
  matrix->add_option("--format", matrix_fmt, "json|csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  auto* verify = app.add_subcommand("verify", "Run the verification battery");
  verify->add_option("n", n, "Degree bound")->required();
  verify->add_option("--checks", checks, "Comma-separated subset of checks, or 'all'")->default_val("all");

  auto* order = app.add_subcommand("order", "Least orders of theta and tau");
  order->add_option("n", n, "Degree")->required();

  auto* product = app.add_subcommand("product", "Evaluate a product of two trees");
  product->add_option("op", op, "star|star_recursive|prec|succ|under|over|wedge")->required();
  product->add_option("a", lhs, "Left tree literal")->required();
  product->add_option("b", rhs, "Right tree literal")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto limit = [&](int fallback) { return capacity >= 0 ? capacity : fallback; };
  try {
    if (*trees) return cmd_trees(n, trees_fmt, limit(kDefaultEnumerateCapacity), out);
    if (*poset) return cmd_poset(n, poset_fmt, limit(kDefaultEnumerateCapacity), out);
    if (*matrix) return cmd_matrix(kind, n, matrix_fmt, limit(kDefaultMatrixCapacity), out);
    if (*verify) return cmd_verify(n, checks, limit(kDefaultVerifyCapacity), out, err);
    if (*order) return cmd_order(n, limit(kDefaultMatrixCapacity), out);
    if (*product) return cmd_product(op, lhs, rhs, out);
  } catch (const CapacityError& e) {  // includes OverflowError
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::invalid_argument& e) {  // parse errors, degree mismatches, bad names
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace tamari::cli
