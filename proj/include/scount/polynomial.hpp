#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace scount {

using Complex = std::complex<double>;

/// coef * prod x[var]^exp, with distinct vars and positive exponents.
struct Term {
  Complex coef;
  std::vector<std::pair<int, int>> powers;

  int degree() const;
};

struct Polynomial {
  std::vector<Term> terms;

  int degree() const;
  /// Highest total exponent of the variables in `in_group` (a 0/1 mask
  /// indexed by variable) over all terms.
  int degree_in(std::span<const char> in_group) const;

  Complex evaluate(std::span<const Complex> x) const;
  /// Adds d p / d x_i into grad[i].
  void accumulate_gradient(std::span<const Complex> x,
                           std::span<Complex> grad) const;

  std::string to_string(std::span<const std::string> names) const;
};

/// Square or non-square list of polynomials over num_vars unknowns.
struct PolySystem {
  int num_vars = 0;
  std::vector<Polynomial> equations;
  std::vector<std::string> var_names;

  std::vector<Complex> evaluate(std::span<const Complex> x) const;
  std::uint64_t total_degree() const;
};

} // namespace scount
