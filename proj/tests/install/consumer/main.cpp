#include <cstdio>
#include "fbl/norms.hpp"
#include "fbl/random_fields.hpp"
int main() {
  const fbl::GridSpec g(16, 3);
  auto part = fbl::build_partition(g);
  auto f = fbl::random_field(g, {1, 0.0, 6.0, 0.0, true, false}, 1, 0);
  std::printf("%.6g\n", fbl::fourier_besov_norm(f, 0.5, 2.0, 1.0, part).value);
}
