#include "tamari/lincomb.hpp"

#include <sstream>
#include <stdexcept>

#include "tamari/errors.hpp"

namespace tamari {

LinComb::LinComb(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("LinComb: negative degree");
}

LinComb LinComb::basis(const Tree& t, CheckedInt coeff) {
  LinComb a(t.degree());
  a.add(rank(t), coeff);
  return a;
}

LinComb LinComb::from_vector(int degree, const IntVector& coords) {
  LinComb a(degree);
  if (static_cast<std::uint64_t>(coords.size()) != catalan(degree)) {
    throw DegreeMismatch("LinComb::from_vector: vector length " + std::to_string(coords.size()) +
                         " does not match degree " + std::to_string(degree));
  }
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (coords[i] != CheckedInt(0)) a.terms_.emplace_hint(a.terms_.end(), static_cast<std::uint64_t>(i), coords[i]);
  }
  return a;
}

CheckedInt LinComb::coefficient(std::uint64_t rank) const {
  auto it = terms_.find(rank);
  return it == terms_.end() ? CheckedInt(0) : it->second;
}

CheckedInt LinComb::coefficient(const Tree& t) const {
  if (t.degree() != degree_) return 0;
  return coefficient(rank(t));
}

void LinComb::add(std::uint64_t r, CheckedInt c) {
  if (r >= catalan(degree_)) {
    throw std::out_of_range("LinComb: rank " + std::to_string(r) + " invalid for degree " + std::to_string(degree_));
  }
  if (c == CheckedInt(0)) return;
  auto [it, inserted] = terms_.try_emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second == CheckedInt(0)) terms_.erase(it);
  }
}

void LinComb::add(const Tree& t, CheckedInt c) {
  if (t.degree() != degree_) {
    throw DegreeMismatch("LinComb: adding a tree of degree " + std::to_string(t.degree()) +
                         " to a combination of degree " + std::to_string(degree_));
  }
  add(rank(t), c);
}

IntVector LinComb::to_vector() const {
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(catalan(degree_)));
  for (const auto& [r, c] : terms_) v[static_cast<Eigen::Index>(r)] = c;
  return v;
}

void LinComb::require_same_degree(const LinComb& o, const char* op) const {
  if (o.degree_ != degree_) {
    throw DegreeMismatch(std::string("LinComb ") + op + ": degrees " + std::to_string(degree_) + " and " +
                         std::to_string(o.degree_));
  }
}

LinComb& LinComb::operator+=(const LinComb& o) {
  require_same_degree(o, "+");
  for (const auto& [r, c] : o.terms_) add(r, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
  require_same_degree(o, "-");
  for (const auto& [r, c] : o.terms_) add(r, -c);
  return *this;
}

LinComb& LinComb::operator*=(CheckedInt c) {
  if (c == CheckedInt(0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [r, coeff] : terms_) coeff *= c;
  return *this;
}

LinComb LinComb::operator-() const {
  LinComb out = *this;
  return out *= -1;
}

std::string format(const LinComb& a) {
  if (a.is_zero()) return "0";
  const auto& trees = enumerate(a.degree());
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << '*' << format(trees[r]);
  }
  return os.str();
}

LinComb mirror(const LinComb& a) {
  LinComb out(a.degree());
  for (const auto& [r, c] : a.terms()) out.add(mirror(unrank(a.degree(), r)), c);
  return out;
}

Accumulator::Accumulator(int degree)
    : degree_(degree), coords_(IntVector::Zero(static_cast<Eigen::Index>(catalan(degree)))) {}

void Accumulator::add(const LinComb& a, CheckedInt scale) {
  if (a.degree() != degree_) throw DegreeMismatch("Accumulator: degree mismatch");
  for (const auto& [r, c] : a.terms()) add(r, c * scale);
}

}  // namespace tamari
