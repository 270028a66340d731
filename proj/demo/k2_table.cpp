// Prints #K_2 and #K_6 of Z[zeta_m + zeta_m^{-1}] for small prime m.

#include <iostream>

#include "kcyc/kcyc.hpp"

int main() {
  for (long m : {5, 7, 11, 13, 17, 19}) {
    for (long k : {1, 3}) {
      const auto r = kcyc::k_order(kcyc::RealCyclotomic{m}, k);
      std::cout << "m=" << m << " K_" << 2 * k << ": " << r.order << " = " << r.factorization.to_string() << '\n';
    }
  }
}
