// Builds the rot3 example by hand and prints what the library finds out about it.
#include <iostream>

#include "flatlie/flatlie.hpp"

int main() {
  using namespace flatlie;
  // [s,e1] = e2, [s,e2] = -e1 with s timelike.
  const LieAlgebra a = LieAlgebra::from_brackets(3, {{0, 1, Vector{0, 0, 1}}, {0, 2, Vector{0, -1, 0}}},
                                                 {"s", "e1", "e2"});
  const MetricLieAlgebra m(a, QMatrix::diagonal(Vector{-1, 1, 1}));

  const Theorem1Report t1 = theorem1_check(m);
  std::cout << "flat: " << std::boolalpha << t1.curvature.flat << '\n'
            << "S(g) dim: " << t1.killing.dim() << ", timelike: " << t1.killing_has_timelike << '\n'
            << "orthogonal split: " << t1.split.holds() << ", dim [g,g] = " << t1.derived.dim() << '\n';

  const MetricLieAlgebra companion = riemannian_companion(m);
  std::cout << "companion gram: " << to_string(companion.gram()) << '\n'
            << "same connection: " << same_connection(m, companion) << '\n';

  const RotationForm rf = rotation_form(m, *t1.split_data);
  for (const auto& p : rf.planes) std::cout << "plane frequency: " << p.frequencies.front() << '\n';
  return 0;
}
