#pragma once

// Sparse polynomials in t, x, y, z with exact rational coefficients.

#include "mwrat/numeric.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace mwrat {

enum class Var : int { T = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::size_t kVarCount = 4;
using Exponent = std::array<int, kVarCount>;

const char* var_name(Var v);

/// Graded lexicographic order: total degree first, then t > x > y > z.
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

class SparsePoly {
public:
    using Terms = std::map<Exponent, Rat, GradedLex>;

    SparsePoly() = default;
    static SparsePoly constant(const Rat& c);
    static SparsePoly variable(Var v);
    static SparsePoly monomial(const Exponent& e, const Rat& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rat coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Rat& c);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rat& c) const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);
    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly pow(unsigned k) const;

    /// -1 for the zero polynomial.
    int degree_in(Var v) const;
    int total_degree() const;
    /// Smallest exponent of v over all terms; -1 for the zero polynomial.
    int min_degree_in(Var v) const;
    /// Coefficient of v^k, as a polynomial in the remaining variables.
    SparsePoly coefficient_in(Var v, int k) const;
    bool involves(Var v) const { return degree_in(v) > 0; }

    /// Replace v by the polynomial p.
    SparsePoly substitute(Var v, const SparsePoly& p) const;
    /// Replace several variables at once; unset entries are left alone.
    SparsePoly compose(const std::array<std::optional<SparsePoly>, kVarCount>& images) const;
    SparsePoly evaluate(Var v, const Rat& value) const { return substitute(v, constant(value)); }

    /// Exact division by a monomial; throws ShapeError unless every term is divisible.
    SparsePoly divide_by_monomial(const Exponent& e) const;

    /// Homogeneous part of total degree d.
    SparsePoly homogeneous_part(int d) const;
    /// Lowest total degree among the terms; -1 for zero.
    int order() const;

    std::string to_string() const;

private:
    Terms terms_;
};

SparsePoly operator*(const Rat& c, const SparsePoly& p);

/// Shorthand for a single-term exponent vector.
Exponent exponent(int t, int x, int y, int z = 0);

}  // namespace mwrat
