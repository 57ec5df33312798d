#include "mwrat/numeric.hpp"

#include "mwrat/errors.hpp"

#include <ostream>
#include <regex>

namespace mwrat {

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

template <typename T>
std::vector<T> apply(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw DimensionError("matrix-vector product: dimensions differ");
    std::vector<T> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
    return out;
}

template <typename T>
bool symmetric(const Matrix<T>& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

// Row echelon form over Q; returns rank and leaves the determinant sign/scale in `det`.
std::size_t eliminate(RatMatrix& a, Rat* det) {
    std::size_t r = 0;
    if (det) *det = 1;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && sgn(a(piv, c)) == 0) ++piv;
        if (piv == a.rows()) {
            if (det) *det = 0;
            continue;
        }
        if (piv != r) {
            a.swap_rows(piv, r);
            if (det) *det = -*det;
        }
        const Rat p = a(r, c);
        if (det) *det *= p;
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (sgn(a(i, c)) == 0) continue;
            const Rat f = a(i, c) / p;
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

template <typename T>
std::ostream& print(std::ostream& os, const Matrix<T>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m(i, j);
        }
        os << ']';
    }
    return os << ']';
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }
IntVector operator*(const IntMatrix& a, const IntVector& v) { return apply(a, v); }
RatVector operator*(const RatMatrix& a, const RatVector& v) { return apply(a, v); }

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

bool is_symmetric(const IntMatrix& m) { return symmetric(m); }
bool is_symmetric(const RatMatrix& m) { return symmetric(m); }

Int determinant(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && sgn(a(piv, k)) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rat determinant(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    RatMatrix a = m;
    Rat det;
    eliminate(a, &det);
    return det;
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return eliminate(a, nullptr);
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(a(piv, c)) == 0) ++piv;
        if (piv == n) throw DegeneracyError("matrix is singular");
        a.swap_rows(piv, c);
        const Rat p = a(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a(i, c)) == 0) continue;
            const Rat f = a(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
    return out;
}

Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot product: lengths differ");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string rational_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat parse_rational(const std::string& s) {
    static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) throw InputError("not a rational number: \"" + s + "\"");
    std::string num = m[1].str();
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    Int n(num);
    Int d = m[2].matched ? Int(m[2].str()) : Int(1);
    if (sgn(d) == 0) throw InputError("zero denominator in \"" + s + "\"");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

Int parse_integer(const std::string& s) {
    static const std::regex pattern(R"(\s*[+-]?\d+\s*)");
    if (!std::regex_match(s, pattern)) throw InputError("not an integer: \"" + s + "\"");
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '+' && ch != '\t') t.push_back(ch);
    return Int(t);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return print(os, m); }
std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return print(os, m); }

}  // namespace mwrat
