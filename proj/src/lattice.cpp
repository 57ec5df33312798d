#include "mwrat/lattice.hpp"

#include "mwrat/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace mwrat {

// ---------------------------------------------------------------------------
// Surface models and divisor classes

SurfaceModel SurfaceModel::make(int degree, int blowups, int genus) {
    if (degree < 0) throw InvalidModelError("Hirzebruch degree must be non-negative");
    if (blowups < 0) throw InvalidModelError("number of blow-ups must be non-negative");
    if (genus < 1) throw InvalidModelError("fiber genus must be at least 1");
    return SurfaceModel{degree, blowups, genus};
}

DivisorClass::DivisorClass(SurfaceModel model, IntVector coeffs) : model_(model), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != model_.picard_number())
        throw DimensionError("divisor class has " + std::to_string(coeffs_.size()) + " coordinates, model needs " +
                             std::to_string(model_.picard_number()));
}

DivisorClass DivisorClass::zero(const SurfaceModel& m) { return DivisorClass(m, IntVector(m.picard_number())); }

DivisorClass DivisorClass::delta(const SurfaceModel& m) {
    auto d = zero(m);
    d.coeffs_[0] = 1;
    return d;
}

DivisorClass DivisorClass::gamma(const SurfaceModel& m) {
    auto d = zero(m);
    d.coeffs_[1] = 1;
    return d;
}

DivisorClass DivisorClass::exceptional(const SurfaceModel& m, int i) {
    if (i < 1 || i > m.blowups) throw DimensionError("exceptional index " + std::to_string(i) + " out of range");
    auto d = zero(m);
    d.coeffs_[static_cast<std::size_t>(i) + 1] = -1;
    return d;
}

void DivisorClass::require_same_model(const DivisorClass& o) const {
    if (!(model_ == o.model_)) throw DimensionError("divisor classes live on different surface models");
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    DivisorClass r = *this;
    r += o;
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    DivisorClass r = *this;
    r -= o;
    return r;
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    require_same_model(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    require_same_model(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

DivisorClass operator*(const Int& k, const DivisorClass& d) {
    DivisorClass r = d;
    for (auto& c : r.coeffs_) c *= k;
    return r;
}

std::string DivisorClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](Int c, const std::string& sym) {
        if (sgn(c) == 0) return;
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (c != 1) os << c;
        os << sym;
        first = false;
    };
    term(coeffs_[0], "D");
    term(coeffs_[1], "G");
    for (std::size_t i = 2; i < coeffs_.size(); ++i) term(-coeffs_[i], "E" + std::to_string(i - 1));
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// Intersection form

GramMatrix::GramMatrix(IntMatrix entries) : entries_(std::move(entries)) {
    if (!entries_.is_square()) throw DimensionError("Gram matrix must be square");
    if (!is_symmetric(entries_)) throw DimensionError("Gram matrix must be symmetric");
}

GramMatrix GramMatrix::negated() const {
    IntMatrix m = entries_;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
    return GramMatrix(std::move(m));
}

Int GramMatrix::pair(const IntVector& x, const IntVector& y) const {
    if (x.size() != size() || y.size() != size()) throw DimensionError("vector length does not match Gram matrix");
    Int s = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < size(); ++j) row += entries_(i, j) * y[j];
        s += x[i] * row;
    }
    return s;
}

GramMatrix intersection_form(const SurfaceModel& model, FormSign sign) {
    const std::size_t n = model.picard_number();
    IntMatrix g(n, n);
    // Coordinates are (a, b, m_i) for aΔ + bΓ − Σ m_i E_i, so the E-block keeps E_i² = −1.
    g(0, 0) = -model.degree;
    g(0, 1) = 1;
    g(1, 0) = 1;
    for (std::size_t i = 2; i < n; ++i) g(i, i) = -1;
    GramMatrix form(std::move(g));
    return sign == FormSign::Intersection ? form : form.negated();
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
    if (!(a.model() == b.model())) throw DimensionError("cannot intersect classes on different surface models");
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    Int s = -a.model().degree * x[0] * y[0] + x[0] * y[1] + x[1] * y[0];
    for (std::size_t i = 2; i < x.size(); ++i) s -= x[i] * y[i];
    return s;
}

Int self_intersection(const DivisorClass& a) { return intersect(a, a); }

DivisorClass canonical_class(const SurfaceModel& model) {
    IntVector c(model.picard_number(), Int(-1));
    c[0] = -2;
    c[1] = -(model.degree + 2);
    return DivisorClass(model, std::move(c));
}

DivisorClass fiber_class(const SurfaceModel& model) {
    if (!model.is_maximal())
        throw InvalidModelError("fiber class needs n = 4g+4 blow-ups (g = " + std::to_string(model.genus) +
                                ", n = " + std::to_string(model.blowups) + ")");
    IntVector c(model.picard_number(), Int(1));
    c[0] = 2;
    c[1] = model.degree + model.genus + 1;
    return DivisorClass(model, std::move(c));
}

Int adjunction_genus(const DivisorClass& d) {
    const Int twice = self_intersection(d) + intersect(canonical_class(d.model()), d);
    if (mpz_odd_p(twice.get_mpz_t())) throw ParityError("D^2 + K.D is odd; not an integral class");
    return twice / 2 + 1;
}

// ---------------------------------------------------------------------------
// Abelian group invariants and Smith normal form

std::string AbelianGroupInvariants::to_string() const {
    if (is_trivial()) return "trivial";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
        if (sgn(S(i, i)) != 0) ++r;
    return r;
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
    if (sgn(k) == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
    if (sgn(k) == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        bool any = false;
        for (;;) {
            // Pivot: smallest nonzero absolute value in the trailing block.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (sgn(a(i, j)) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) break;
            any = true;
            a.swap_rows(t, pr);
            u.swap_rows(t, pr);
            a.swap_cols(t, pc);
            v.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(a(i, t)) == 0) continue;
                const Int q = floor_div(a(i, t), a(t, t));
                add_row_multiple(a, i, t, -q);
                add_row_multiple(u, i, t, -q);
                if (sgn(a(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(a(t, j)) == 0) continue;
                const Int q = floor_div(a(t, j), a(t, t));
                add_col_multiple(a, j, t, -q);
                add_col_multiple(v, j, t, -q);
                if (sgn(a(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce s_t | every remaining entry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        add_row_multiple(a, t, i, 1);
                        add_row_multiple(u, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (!any) break;
        if (sgn(a(t, t)) < 0) {
            for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
        }
    }
    return SmithForm{std::move(u), std::move(a), std::move(v)};
}

AbelianGroupInvariants cokernel_invariants(const IntMatrix& embedding) {
    const SmithForm snf = smith_normal_form(embedding);
    AbelianGroupInvariants g;
    g.free_rank = embedding.cols() - snf.rank();
    for (const auto& s : snf.diagonal())
        if (s > 1) g.torsion.push_back(s);
    return g;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        // Euclid on column c among rows r..end.
        for (;;) {
            std::size_t piv = a.rows();
            for (std::size_t i = r; i < a.rows(); ++i)
                if (sgn(a(i, c)) != 0 && (piv == a.rows() || abs(a(i, c)) < abs(a(piv, c)))) piv = i;
            if (piv == a.rows()) break;
            a.swap_rows(r, piv);
            bool done = true;
            for (std::size_t i = r + 1; i < a.rows(); ++i) {
                if (sgn(a(i, c)) == 0) continue;
                add_row_multiple(a, i, r, -floor_div(a(i, c), a(r, c)));
                if (sgn(a(i, c)) != 0) done = false;
            }
            if (done) break;
        }
        if (sgn(a(r, c)) == 0) continue;
        if (sgn(a(r, c)) < 0)
            for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
        for (std::size_t i = 0; i < r; ++i) add_row_multiple(a, i, r, -floor_div(a(i, c), a(r, c)));
        ++r;
    }
    IntMatrix out(r, a.cols());
    for (std::size_t i = 0; i < r; ++i) out.set_row(i, a.row(i));
    return out;
}

// ---------------------------------------------------------------------------
// Lattices

namespace {

IntMatrix induced_gram(const IntMatrix& basis, const GramMatrix& form) {
    if (basis.rows() > 0 && basis.cols() != form.size())
        throw DimensionError("basis vectors do not match the ambient form");
    IntMatrix g(basis.rows(), basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        const IntVector bi = basis.row(i);
        for (std::size_t j = i; j < basis.rows(); ++j) {
            g(i, j) = form.pair(bi, basis.row(j));
            g(j, i) = g(i, j);
        }
    }
    return g;
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw DegeneracyError("expected an integral matrix");
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

}  // namespace

IntegerLattice::IntegerLattice(IntMatrix basis, const GramMatrix& ambient_form)
    : ambient_rank_(ambient_form.size()), basis_(std::move(basis)) {
    if (basis_.rows() == 0) basis_ = IntMatrix(0, ambient_rank_);
    if (basis_.cols() != ambient_rank_) throw DimensionError("basis vectors do not match the ambient rank");
    if (mwrat::rank(basis_) != basis_.rows()) throw DegeneracyError("lattice basis rows are linearly dependent");
    gram_ = GramMatrix(induced_gram(basis_, ambient_form));
}

IntegerLattice IntegerLattice::span(const IntMatrix& generators, const GramMatrix& ambient_form) {
    if (generators.rows() == 0) return IntegerLattice(IntMatrix(0, ambient_form.size()), ambient_form);
    return IntegerLattice(hermite_normal_form(generators), ambient_form);
}

IntegerLattice IntegerLattice::from_gram(const GramMatrix& gram) {
    return IntegerLattice(IntMatrix::identity(gram.size()), gram);
}

Int IntegerLattice::discriminant() const { return abs(gram_.determinant()); }

IntegerLattice orthogonal_complement(const IntegerLattice& sub, const GramMatrix& ambient_form) {
    const std::size_t n = ambient_form.size();
    if (sub.ambient_rank() != n) throw DimensionError("sublattice and ambient form differ in rank");
    if (sub.rank() == 0) return IntegerLattice(IntMatrix::identity(n), ambient_form);
    const IntMatrix pairing = sub.basis() * ambient_form.entries();  // k × n
    const SmithForm snf = smith_normal_form(pairing);
    const std::size_t r = snf.rank();
    IntMatrix kernel(n - r, n);
    for (std::size_t k = r; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) kernel(k - r, i) = snf.V(i, k);
    if (kernel.rows() == 0) return IntegerLattice(IntMatrix(0, n), ambient_form);
    return IntegerLattice(hermite_normal_form(kernel), ambient_form);
}

Saturation saturate(const IntMatrix& generators, const GramMatrix& ambient_form) {
    const std::size_t n = ambient_form.size();
    if (generators.rows() == 0) return Saturation{IntegerLattice(IntMatrix(0, n), ambient_form), {}};
    if (generators.cols() != n) throw DimensionError("generators do not match the ambient rank");
    const SmithForm snf = smith_normal_form(generators);
    const std::size_t r = snf.rank();
    const IntMatrix v_inv = to_integer(inverse(to_rational(snf.V)));
    IntMatrix sat(r, n);
    for (std::size_t i = 0; i < r; ++i) sat.set_row(i, v_inv.row(i));
    Saturation out{IntegerLattice(hermite_normal_form(sat), ambient_form), {}};
    for (const auto& s : snf.diagonal())
        if (s > 1) out.quotient.torsion.push_back(s);
    return out;
}

Saturation saturate(const IntegerLattice& sub, const GramMatrix& ambient_form) {
    return saturate(sub.basis(), ambient_form);
}

DualLattice dual_gram(const RatMatrix& gram) {
    if (!gram.is_square()) throw DimensionError("Gram matrix must be square");
    const Rat det = determinant(gram);
    if (sgn(det) == 0) throw DegeneracyError("Gram matrix is singular; dual lattice undefined");
    DualLattice d;
    d.gram = gram.rows() ? inverse(gram) : RatMatrix();
    const Rat a = abs(det);
    // For a rational Gram this is only the numerator of |det|; the exact value is 1/dual_discriminant.
    d.discriminant = a.get_num();
    d.dual_discriminant = 1 / a;
    return d;
}

DualLattice dual_gram(const IntegerLattice& lattice) { return dual_gram(to_rational(lattice.gram().entries())); }

std::optional<LdlFactor> positive_ldl(const RatMatrix& gram) {
    if (!gram.is_square() || !is_symmetric(gram)) return std::nullopt;
    const std::size_t n = gram.rows();
    RatMatrix l(n, n);
    RatVector d(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat s = gram(i, i);
        for (std::size_t k = 0; k < i; ++k) s -= d[k] * l(i, k) * l(i, k);
        if (sgn(s) <= 0) return std::nullopt;
        d[i] = s;
        l(i, i) = 1;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat t = gram(j, i);
            for (std::size_t k = 0; k < i; ++k) t -= d[k] * l(j, k) * l(i, k);
            l(j, i) = t / d[i];
        }
    }
    LdlFactor f;
    f.d = std::move(d);
    f.mu = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) f.mu(i, j) = l(j, i);
    return f;
}

bool is_positive_definite(const RatMatrix& gram) { return positive_ldl(gram).has_value(); }

std::vector<IntVector> short_vectors(const RatMatrix& gram, const Rat& bound) {
    const auto ldl = positive_ldl(gram);
    if (!ldl) throw FormError("short-vector enumeration needs a positive definite form");
    const std::size_t n = gram.rows();
    std::vector<IntVector> out;
    if (n == 0 || sgn(bound) <= 0) return out;

    IntVector x(n);
    // Level i chooses x_i given x_{i+1..n-1}; `remaining` is the unused part of the bound.
    std::function<void(std::size_t, const Rat&)> descend = [&](std::size_t i, const Rat& remaining) {
        Rat c = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (sgn(x[j]) != 0) c += ldl->mu(i, j) * x[j];
        const Rat neg = -c;
        Int start;
        mpz_cdiv_q(start.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
        auto visit = [&](const Int& xi) -> bool {
            const Rat t = xi + c;
            const Rat used = ldl->d[i] * t * t;
            if (used > remaining) return false;
            x[i] = xi;
            if (i == 0) {
                bool zero = std::all_of(x.begin(), x.end(), [](const Int& e) { return sgn(e) == 0; });
                if (!zero) out.push_back(x);
            } else {
                descend(i - 1, remaining - used);
            }
            return true;
        };
        for (Int xi = start; visit(xi); ++xi) {}
        for (Int xi = start - 1; visit(xi); --xi) {}
        x[i] = 0;
    };
    descend(n - 1, bound);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVector> short_vectors(const IntegerLattice& lattice, const Rat& bound) {
    return short_vectors(to_rational(lattice.gram().entries()), bound);
}

}  // namespace mwrat
