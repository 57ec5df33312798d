#include "mwrat/poly.hpp"

#include "mwrat/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace mwrat {

const char* var_name(Var v) {
    switch (v) {
        case Var::T: return "t";
        case Var::X: return "x";
        case Var::Y: return "y";
        case Var::Z: return "z";
    }
    return "?";
}

Exponent exponent(int t, int x, int y, int z) { return Exponent{t, x, y, z}; }

namespace {

int total(const Exponent& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
    const int da = total(a);
    const int db = total(b);
    if (da != db) return da < db;
    return a < b;
}

SparsePoly SparsePoly::constant(const Rat& c) {
    SparsePoly p;
    p.add_term(Exponent{}, c);
    return p;
}

SparsePoly SparsePoly::variable(Var v) {
    Exponent e{};
    e[idx(v)] = 1;
    return monomial(e, Rat(1));
}

SparsePoly SparsePoly::monomial(const Exponent& e, const Rat& c) {
    SparsePoly p;
    p.add_term(e, c);
    return p;
}

Rat SparsePoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::add_term(const Exponent& e, const Rat& c) {
    for (int v : e)
        if (v < 0) throw ShapeError("negative exponent");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    r += o;
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    r -= o;
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponent e;
            for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

SparsePoly SparsePoly::operator*(const Rat& c) const {
    if (sgn(c) == 0) return {};
    SparsePoly r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

SparsePoly operator*(const Rat& c, const SparsePoly& p) { return p * c; }

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
    *this = *this * o;
    return *this;
}

SparsePoly SparsePoly::pow(unsigned k) const {
    SparsePoly result = constant(Rat(1));
    SparsePoly base = *this;
    while (k) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k) base *= base;
    }
    return result;
}

int SparsePoly::degree_in(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx(v)]);
    return d;
}

int SparsePoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
}

int SparsePoly::min_degree_in(Var v) const {
    if (terms_.empty()) return -1;
    int d = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) d = std::min(d, e[idx(v)]);
    return d;
}

SparsePoly SparsePoly::coefficient_in(Var v, int k) const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) {
        if (e[idx(v)] != k) continue;
        Exponent f = e;
        f[idx(v)] = 0;
        r.add_term(f, c);
    }
    return r;
}

SparsePoly SparsePoly::substitute(Var v, const SparsePoly& p) const {
    std::array<std::optional<SparsePoly>, kVarCount> images;
    images[idx(v)] = p;
    return compose(images);
}

SparsePoly SparsePoly::compose(const std::array<std::optional<SparsePoly>, kVarCount>& images) const {
    // Powers of each image, shared across terms.
    std::array<std::vector<SparsePoly>, kVarCount> powers;
    auto power = [&](std::size_t i, int k) -> const SparsePoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(Rat(1)));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * *images[i]);
        return cache[static_cast<std::size_t>(k)];
    };
    SparsePoly r;
    for (const auto& [e, c] : terms_) {
        Exponent kept{};
        SparsePoly term;
        bool first = true;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (!images[i] || e[i] == 0) {
                kept[i] = e[i];
                continue;
            }
            term = first ? power(i, e[i]) : term * power(i, e[i]);
            first = false;
        }
        if (first) {
            r.add_term(kept, c);
        } else {
            r += term * monomial(kept, c);
        }
    }
    return r;
}

SparsePoly SparsePoly::divide_by_monomial(const Exponent& d) const {
    SparsePoly r;
    for (const auto& [e, c] : terms_) {
        Exponent f;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            f[i] = e[i] - d[i];
            if (f[i] < 0) throw ShapeError("polynomial is not divisible by the given monomial");
        }
        r.terms_.emplace(f, c);
    }
    return r;
}

SparsePoly SparsePoly::homogeneous_part(int d) const {
    SparsePoly r;
    for (const auto& [e, c] : terms_)
        if (total(e) == d) r.terms_.emplace(e, c);
    return r;
}

int SparsePoly::order() const { return terms_.empty() ? -1 : total(terms_.begin()->first); }

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        const bool is_const = total(e) == 0;
        if (!unit || is_const) os << mag.get_str();
        bool need_star = !unit || is_const;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << var_name(static_cast<Var>(i));
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace mwrat
