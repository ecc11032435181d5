// Walks through the geometric objects of a symmetric three-species
// competition model at its interior equilibrium and at a nearby point.

#include <cstdio>

#include "lhgeom/lhgeom.hpp"

namespace {

void print_matrix(const char* name, const lhg::Matrix& m) {
  std::printf("%s =\n", name);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::printf("  ");
    for (std::size_t j = 0; j < m.cols(); ++j) std::printf("%10.5f ", m(i, j));
    std::printf("\n");
  }
}

}  // namespace

int main() {
  using namespace lhg;
  const auto model = lotka_volterra(Matrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}, {4, 4, 4});

  const Vector eq{1, 1, 1};
  const auto report = jacobi_classify(model, {eq, {0, 0, 0}});
  print_matrix("J(1,1,1)", jacobian(model, eq));
  print_matrix("P(1,1,1; y=0)", report.p_matrix);
  std::printf("spectrum(P):");
  for (const auto& v : report.spectrum) std::printf(" %g%+gi", v.real(), v.imag());
  std::printf("\nverdict: %s\n\n", std::string(to_string(report.verdict)).c_str());

  const Vector x{0.5, 1.5, 1.0};
  const auto v = model.evaluate(x);
  print_matrix("N(0.5,1.5,1)", nonlinear_connection(model, x));
  print_matrix("N^H(0.5,1.5,1)", hamilton_connection(model, x));
  std::printf("EYM = %g\n", yang_mills_energy(model, x));
  const auto on_flow = jacobi_classify(model, {x, v});
  std::printf("on-trajectory verdict: %s\n", std::string(to_string(on_flow.verdict)).c_str());
  return 0;
}
