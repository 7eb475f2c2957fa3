// Walks one shape through the library: minimal permutations, jump
// partitions of small size, their images, and the decomposition back.
#include <iostream>

#include <shapeinv/shapeinv.hpp>

using namespace shapeinv;

int main() {
  const auto shape = parse_shape("2^6");
  std::cout << "shape " << format_shape(shape) << ", columns " << format_shape(conjugate(shape))
            << ", min inversions " << min_inversions(shape) << '\n';

  for (const auto& m : all_minimal(shape)) {
    std::cout << "minimal: " << format_permutation(m.permutation) << '\n';
    for (int delta = 0; delta <= 2; ++delta) {
      for (const auto& J : enumerate_jumps(m.composition, delta)) {
        const auto sigma = apply(J, m.permutation);
        const auto back = decompose_two_column(sigma);
        std::cout << "  Δ=" << delta << "  inner " << format_jump_side(J.inner()) << "  outer "
                  << format_jump_side(J.outer()) << "  " << format_permutation(sigma)
                  << (back.jumps == J ? "" : "  (decomposition mismatch)") << '\n';
      }
    }
  }

  const auto table = sweep(6);
  std::cout << "S_6 by shape and Δ (" << table.counts().size() << " buckets):\n" << csv_of(table);
}
