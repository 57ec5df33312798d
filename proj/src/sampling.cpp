#include "mwrat/sampling.hpp"

namespace mwrat {

Int random_int(Rng& rng, long lo, long hi) { return Int(std::uniform_int_distribution<long>(lo, hi)(rng)); }

Rat random_rational(Rng& rng, bool nonzero) {
    for (;;) {
        Rat r(random_int(rng, -9, 9), random_int(rng, 1, 6));
        r.canonicalize();
        if (!nonzero || sgn(r) != 0) return r;
    }
}

PencilCoefficients random_pencil(int genus, Rng& rng) {
    std::map<PencilCoefficients::Key, Rat> c;
    c[{2, 0}] = random_rational(rng, true);
    c[{0, 1}] = random_rational(rng, true);
    auto maybe = [&]() { return random_int(rng, 0, 3) == 0 ? Rat(0) : random_rational(rng); };
    for (int j = 1; j <= genus + 1; ++j) c[{1, j}] = maybe();
    for (int j = 1; j <= 2 * genus + 1; ++j) c[{2, j}] = maybe();
    return PencilCoefficients(genus, std::move(c));
}

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_int(rng, -bound, bound);
    return m;
}

RatMatrix random_positive_gram(Rng& rng, std::size_t n) {
    IntMatrix b;
    do {
        b = random_int_matrix(rng, n, n, 3);
    } while (sgn(determinant(b)) == 0);
    const Rat den(random_int(rng, 1, 3));
    RatMatrix g = to_rational(b * b.transpose());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) /= den;
    return g;
}

DivisorClass random_class(Rng& rng, const SurfaceModel& m, long bound) {
    IntVector v(m.picard_number());
    for (auto& x : v) x = random_int(rng, -bound, bound);
    return DivisorClass(m, std::move(v));
}

}  // namespace mwrat
