#include "mwrat/oracle.hpp"

#include "mwrat/errors.hpp"

#include <algorithm>
#include <functional>

namespace mwrat::oracle {

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Int isqrt_floor(const Rat& x) {
    // floor(sqrt(x)) for x >= 0.
    if (sgn(x) <= 0) return 0;
    Int q = x.get_num() / x.get_den();
    Int s = sqrt(q);
    while (Rat((s + 1) * (s + 1)) <= x) ++s;
    while (s > 0 && Rat(s * s) > x) --s;
    return s;
}

}  // namespace

std::vector<Int> invariant_factors(const IntMatrix& m) {
    std::vector<Int> divisors{Int(1)};
    const std::size_t kmax = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        Int g = 0;
        for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
                g = gcd(g, determinant(sub));
            });
        });
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<Int> out;
    for (std::size_t k = 1; k < divisors.size(); ++k) out.push_back(divisors[k] / divisors[k - 1]);
    return out;
}

namespace {

std::vector<Int> box_radii(const RatMatrix& gram, const Rat& bound) {
    const RatMatrix inv = inverse(gram);
    std::vector<Int> box(gram.rows());
    for (std::size_t i = 0; i < gram.rows(); ++i) box[i] = isqrt_floor(bound * inv(i, i));
    return box;
}

}  // namespace

Int box_size(const RatMatrix& gram, const Rat& bound) {
    Int total = 1;
    for (const auto& r : box_radii(gram, bound)) total *= 2 * r + 1;
    return total;
}

std::vector<IntVector> short_vectors(const RatMatrix& gram, const Rat& bound) {
    const std::size_t n = gram.rows();
    const std::vector<Int> box = box_radii(gram, bound);
    std::vector<IntVector> out;
    IntVector v(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            Rat q = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) q += gram(a, b) * v[a] * v[b];
            bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
            if (!zero && q <= bound) out.push_back(v);
            return;
        }
        for (Int x = -box[i]; x <= box[i]; ++x) {
            v[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t complement_root_count(int genus) {
    // x = aΔ + bΓ − Σ m_i E_i with x·E_n = m_n = 0 and x·F = a + 2b − Σ m_i = 0.
    // Norm in NS⁻ is Σ_{i<n} (m_i − a/2)² + a²/4, which bounds the search box.
    const int n = 4 * genus + 4;
    const int free = n - 1;
    std::size_t count = 0;
    std::vector<int> m(static_cast<std::size_t>(free));
    for (int a = -2; a <= 2; ++a) {
        const Rat budget = Rat(2) - Rat(a * a, 4);
        std::function<void(int, Rat)> rec = [&](int i, Rat used) {
            if (i == free) {
                long sum = 0;
                for (int x : m) sum += x;
                if ((sum - a) % 2 != 0) return;
                const long b = (sum - a) / 2;
                // Norm evaluated straight from the intersection form: −(−g a² + 2ab − Σ m²).
                long q = static_cast<long>(genus) * a * a - 2L * a * b;
                for (int x : m) q += static_cast<long>(x) * x;
                if (q > 0 && q <= 2) ++count;
                return;
            }
            for (int x = -3; x <= 3; ++x) {
                const Rat d = Rat(2 * x - a, 2);
                const Rat next = used + d * d;
                if (next > budget) continue;
                m[static_cast<std::size_t>(i)] = x;
                rec(i + 1, next);
            }
        };
        rec(0, Rat(0));
    }
    return count;
}

SparsePoly factored_discriminant(const PencilCoefficients& pc) {
    const int g = pc.genus();
    const Rat c01 = pc.get(0, 1);
    const Rat c20 = pc.get(2, 0);
    const SparsePoly t = SparsePoly::variable(Var::T);
    const SparsePoly y = SparsePoly::variable(Var::Y);
    SparsePoly sum2;
    for (int j = 1; j <= 2 * g + 1; ++j) sum2 += SparsePoly::constant(pc.get(2, j)) * y.pow(static_cast<unsigned>(j));
    SparsePoly sum1;
    for (int j = 1; j <= g + 1; ++j) sum1 += SparsePoly::constant(pc.get(1, j)) * y.pow(static_cast<unsigned>(j - 1));
    const SparsePoly inner = SparsePoly::constant(4 * c01) * y.pow(static_cast<unsigned>(2 * g + 1)) -
                             SparsePoly::constant(4 * c20 * c01) * t - SparsePoly::constant(4 * c01) * t * sum2 +
                             t * y * sum1 * sum1;
    return t * y * inner;
}

IntMatrix condition2a_gram(int genus) {
    const std::size_t n = static_cast<std::size_t>(4 * genus + 5);
    IntMatrix g(n, n);
    for (std::size_t i = 0; i + 2 < n; ++i) g(i, i) = -2;
    g(n - 2, n - 2) = -2;
    g(n - 1, n - 1) = -genus - 1;
    // Chain Θ_0 .. Θ_{4g+2}.
    for (std::size_t i = 0; i + 3 < n; ++i) g(i, i + 1) = g(i + 1, i) = 1;
    // Θ_{4g+1} meets Θ_{4g+3}; Θ_{4g+2} meets Θ_{4g+4}.
    g(n - 4, n - 2) = g(n - 2, n - 4) = 1;
    g(n - 3, n - 1) = g(n - 1, n - 3) = 1;
    return g;
}

}  // namespace mwrat::oracle
