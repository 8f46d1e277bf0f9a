#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace scount {

/// Integer triple (a, b, c) attached to a calligraph. b belongs to the first
/// base endpoint and c to the second.
struct S2Class {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  /// The class of the same calligraph with its base endpoints exchanged.
  S2Class swapped() const { return {a, c, b}; }

  std::string to_string() const;

  bool operator==(const S2Class &) const = default;
};

/// 2 (a1 a2 - b1 b2 - c1 c2): the realization count of the union of two
/// calligraphs glued along base edge and apex.
constexpr std::int64_t quad_form(const S2Class &x, const S2Class &y) {
  return 2 * (x.a * y.a - x.b * y.b - x.c * y.c);
}

inline const S2Class kClassL{1, 1, 0};
inline const S2Class kClassR{1, 0, 1};
inline const S2Class kClassC{2, 0, 0};

using Matrix3 = std::array<std::array<std::int64_t, 3>, 3>;

/// The lattice automorphism exchanging the two admissible choices (2,0,0)
/// and (6,4,4) for the class of the C gadget while fixing the L and R
/// classes, together with the Gram matrix of quad_form.
struct ClassTransform {
  static constexpr Matrix3 O{{{3, -2, -2}, {2, -1, -2}, {2, -2, -1}}};
  static constexpr Matrix3 A{{{2, 0, 0}, {0, -2, 0}, {0, 0, -2}}};

  static constexpr S2Class apply(const Matrix3 &m, const S2Class &x) {
    return {m[0][0] * x.a + m[0][1] * x.b + m[0][2] * x.c,
            m[1][0] * x.a + m[1][1] * x.b + m[1][2] * x.c,
            m[2][0] * x.a + m[2][1] * x.b + m[2][2] * x.c};
  }
};

constexpr Matrix3 multiply(const Matrix3 &x, const Matrix3 &y) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r[i][j] += x[i][k] * y[k][j];
  return r;
}

constexpr Matrix3 transpose(const Matrix3 &x) {
  Matrix3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = x[j][i];
  return r;
}

} // namespace scount
