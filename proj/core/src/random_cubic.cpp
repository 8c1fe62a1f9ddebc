#include "socle3/random_cubic.hpp"

#include "socle3/apolarity.hpp"
#include "socle3/error.hpp"

namespace socle3 {

Polynomial random_cubic(std::size_t n, std::mt19937_64& rng, int bound) {
  if (n == 0) throw PreconditionError("random cubic needs n >= 1");
  if (bound < 1) throw PreconditionError("coefficient bound must be positive");
  const auto monomials = monomials_of_degree(n, 3);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  while (true) {
    Polynomial f(VarSpace::Dual, n);
    for (const auto& m : monomials) {
      const long c = static_cast<long>(rng() % span) - bound;
      f.add_term(m, c);
    }
    if (!f.is_zero() && is_nondegenerate(f, n)) return f;
  }
}

}  // namespace socle3
