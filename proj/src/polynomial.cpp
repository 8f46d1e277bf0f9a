#include "scount/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace scount {

int Term::degree() const {
  int d = 0;
  for (auto [var, e] : powers)
    d += e;
  return d;
}

int Polynomial::degree() const {
  int d = 0;
  for (const Term &t : terms)
    d = std::max(d, t.degree());
  return d;
}

int Polynomial::degree_in(std::span<const char> in_group) const {
  int d = 0;
  for (const Term &t : terms) {
    int s = 0;
    for (auto [var, e] : t.powers)
      if (in_group[var])
        s += e;
    d = std::max(d, s);
  }
  return d;
}

Complex Polynomial::evaluate(std::span<const Complex> x) const {
  Complex sum = 0.0;
  for (const Term &t : terms) {
    Complex p = t.coef;
    for (auto [var, e] : t.powers)
      for (int k = 0; k < e; ++k)
        p *= x[var];
    sum += p;
  }
  return sum;
}

void Polynomial::accumulate_gradient(std::span<const Complex> x,
                                     std::span<Complex> grad) const {
  for (const Term &t : terms) {
    for (std::size_t i = 0; i < t.powers.size(); ++i) {
      auto [var, e] = t.powers[i];
      Complex p = t.coef * static_cast<double>(e);
      for (int k = 0; k < e - 1; ++k)
        p *= x[var];
      for (std::size_t j = 0; j < t.powers.size(); ++j) {
        if (j == i)
          continue;
        auto [other, f] = t.powers[j];
        for (int k = 0; k < f; ++k)
          p *= x[other];
      }
      grad[var] += p;
    }
  }
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  std::ostringstream os;
  bool first = true;
  for (const Term &t : terms) {
    if (!first)
      os << " + ";
    first = false;
    if (t.coef.imag() == 0.0)
      os << t.coef.real();
    else
      os << "(" << t.coef.real() << (t.coef.imag() < 0 ? "" : "+")
         << t.coef.imag() << "i)";
    for (auto [var, e] : t.powers) {
      os << "*" << names[var];
      if (e > 1)
        os << "^" << e;
    }
  }
  return first ? "0" : os.str();
}

std::vector<Complex> PolySystem::evaluate(std::span<const Complex> x) const {
  std::vector<Complex> out;
  out.reserve(equations.size());
  for (const Polynomial &p : equations)
    out.push_back(p.evaluate(x));
  return out;
}

std::uint64_t PolySystem::total_degree() const {
  std::uint64_t d = 1;
  for (const Polynomial &p : equations)
    d *= static_cast<std::uint64_t>(std::max(1, p.degree()));
  return d;
}

} // namespace scount
