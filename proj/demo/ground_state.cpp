// Lowest levels of each l channel at one coupling pair, with the ordering of
// every shell n = 2 n_r + l up to n = 9.
#include <iostream>

#include "npo/npo.hpp"

int main(int argc, char** argv) {
  const double g = argc > 1 ? std::stod(argv[1]) : 0.1;
  const double lambda = argc > 2 ? std::stod(argv[2]) : 0.1;

  const npo::Solver solver;
  const npo::ParameterSpectrum spectrum(solver, npo::PotentialParams(g, lambda),
                                        9);
  std::cout << "g = " << g << ", lambda = " << lambda << "\n";
  for (int n = 0; n <= 9; ++n) {
    const auto sig = npo::ordering_signature(spectrum, n);
    std::cout << "n=" << n << "  " << sig.to_string() << "\n";
    for (const auto& level : sig.levels)
      std::cout << "    " << level.state.name() << "  "
                << npo::format_truncated(level.two_e, 12) << "\n";
  }
}
