#pragma once

// Semisimple structure theory. Exact factor counting for the named families
// comes from the real factorization of x^n -+ 1; arbitrary commutative
// semisimple algebras get a floating-point signature from the eigenvalues of
// a random regular-representation matrix (characteristic polynomial computed
// exactly, roots numerically).
//
// Numeric tolerances: kMapTolerance (1e-9) for decomposition-map identities,
// kEigenImagTolerance (1e-8) for classifying eigenvalues as real. The CLI
// can override the map tolerance (--tol, ALGKIT_TOL).

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "algkit/algebra.hpp"
#include "algkit/error.hpp"
#include "algkit/linalg.hpp"
#include "algkit/presentation.hpp"
#include "algkit/qpoly.hpp"

namespace algkit {

inline constexpr double kMapTolerance = 1e-9;
inline constexpr double kEigenImagTolerance = 1e-8;

struct WedderburnSignature {
    int real_factors = 0;     // m
    int complex_factors = 0;  // k
    bool operator==(const WedderburnSignature&) const = default;
};

// ---- real factorization of x^n - 1 and x^n + 1 ----

struct RealFactorization {
    int sign;  // -1 for x^n - 1, +1 for x^n + 1
    int n;
    std::vector<double> linear_roots;           // factors (x - r)
    std::vector<double> quadratic_cos;          // factors x^2 - 2 cos(t) x + 1
};

inline RealFactorization real_factorization_xn(int sign, int n) {
    if (n < 1) throw Error("exponent must be positive");
    if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");
    RealFactorization out{sign, n, {}, {}};
    if (sign < 0) {
        // roots e^{2 pi i k / n}
        out.linear_roots.push_back(1.0);
        if (n % 2 == 0) out.linear_roots.push_back(-1.0);
        for (int k = 1; 2 * k < n; ++k) out.quadratic_cos.push_back(std::cos(2.0 * std::numbers::pi * k / n));
    } else {
        // roots e^{i pi (2k+1) / n}
        if (n % 2 == 1) out.linear_roots.push_back(-1.0);
        for (int k = 0; 2 * k + 1 < n; ++k) out.quadratic_cos.push_back(std::cos(std::numbers::pi * (2 * k + 1) / n));
    }
    return out;
}

// Expanded coefficients (low to high) of the factorization product; matches
// x^n -+ 1 up to floating error.
inline std::vector<double> expand_real_factorization(const RealFactorization& f) {
    std::vector<double> p{1.0};
    auto mul_by = [&](const std::vector<double>& q) {
        std::vector<double> r(p.size() + q.size() - 1, 0.0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
        p = std::move(r);
    };
    for (double r : f.linear_roots) mul_by({-r, 1.0});
    for (double c : f.quadratic_cos) mul_by({1.0, -2.0 * c, 1.0});
    return p;
}

// ---- plain double-precision matrix helpers ----

using DMatrix = std::vector<std::vector<double>>;

inline DMatrix dmat_identity(std::size_t n) {
    DMatrix m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline std::vector<double> dmat_apply(const DMatrix& m, const std::vector<double>& v) {
    std::vector<double> out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

inline DMatrix dmat_mul(const DMatrix& a, const DMatrix& b) {
    DMatrix out(a.size(), std::vector<double>(b[0].size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline DMatrix dmat_inverse(DMatrix m) {
    const std::size_t n = m.size();
    DMatrix inv = dmat_identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
        if (std::abs(m[p][c]) < 1e-14) throw Error("decomposition matrix is numerically singular");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        double d = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0.0) continue;
            double f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// ---- explicit decomposition maps for the semisimple families ----

// forward maps algebra coordinates onto (R^m, C^k) coordinates, each complex
// component flattened as (re, im); one representative per conjugate pair,
// chosen with positive imaginary part.
struct DecompositionMap {
    AlgebraPtr source;
    WedderburnSignature signature;
    DMatrix forward;
    DMatrix inverse;

    std::size_t component_count() const {
        return static_cast<std::size_t>(signature.real_factors + signature.complex_factors);
    }

    std::vector<double> to_components(const Element& e) const {
        std::vector<double> x(e.coords().size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = e.coord(i).get_d();
        return dmat_apply(forward, x);
    }

    // Componentwise product in R^m x C^k of two flattened vectors.
    std::vector<double> component_product(const std::vector<double>& u, const std::vector<double>& v) const {
        std::vector<double> out(u.size(), 0.0);
        int m = signature.real_factors;
        for (int i = 0; i < m; ++i) out[i] = u[i] * v[i];
        for (int c = 0; c < signature.complex_factors; ++c) {
            std::size_t re = m + 2 * c, im = re + 1;
            out[re] = u[re] * v[re] - u[im] * v[im];
            out[im] = u[re] * v[im] + u[im] * v[re];
        }
        return out;
    }
};

inline DecompositionMap family_decomposition(Family f, int n) {
    if (f == Family::G || f == Family::Xi)
        throw NotSemisimple(family_name(f) + " is not semisimple; no Wedderburn decomposition map");
    PresentedAlgebra pa = family(f, n);
    const std::size_t dim = pa.algebra->dim();
    DecompositionMap out;
    out.source = pa.algebra;

    if (f == Family::H || f == Family::C) {
        RealFactorization rf = real_factorization_xn(f == Family::C ? +1 : -1, n);
        out.signature = {static_cast<int>(rf.linear_roots.size()), static_cast<int>(rf.quadratic_cos.size())};
        // generator maps to the vector of roots; basis vector q is j^q
        out.forward.assign(dim, std::vector<double>(dim, 0.0));
        std::size_t row = 0;
        for (double r : rf.linear_roots) {
            double p = 1.0;
            for (std::size_t q = 0; q < dim; ++q) {
                out.forward[row][q] = p;
                p *= r;
            }
            ++row;
        }
        for (double c : rf.quadratic_cos) {
            double s = std::sqrt(std::max(0.0, 1.0 - c * c));  // positive imaginary part
            std::complex<double> z(c, s), p(1.0, 0.0);
            for (std::size_t q = 0; q < dim; ++q) {
                out.forward[row][q] = p.real();
                out.forward[row + 1][q] = p.imag();
                p *= z;
            }
            row += 2;
        }
    } else {  // CC(n): one complex component per sign pattern with s_1 = +1
        out.signature = {0, static_cast<int>(dim / 2)};
        out.forward.assign(dim, std::vector<double>(dim, 0.0));
        const auto& basis = *pa.monomial_basis;
        const std::size_t gens = static_cast<std::size_t>(n);
        std::size_t row = 0;
        for (std::size_t pattern = 0; pattern < (dim / 2); ++pattern) {
            // sign of generator t: s_1 = +1, the rest from the pattern bits
            std::vector<int> sign(gens, 1);
            for (std::size_t t = 1; t < gens; ++t)
                if (pattern & (std::size_t(1) << (t - 1))) sign[t] = -1;
            for (std::size_t q = 0; q < dim; ++q) {
                const Monomial& m = basis[q];
                int total = 0, s = 1;
                for (std::size_t t = 0; t < gens; ++t) {
                    total += static_cast<int>(m[t]);
                    if (m[t] % 2 == 1 && sign[t] < 0) s = -s;
                }
                // i^total cycles 1, i, -1, -i
                double re = 0.0, im = 0.0;
                switch (total % 4) {
                    case 0: re = s; break;
                    case 1: im = s; break;
                    case 2: re = -s; break;
                    case 3: im = -s; break;
                }
                out.forward[row][q] = re;
                out.forward[row + 1][q] = im;
            }
            row += 2;
        }
    }
    out.inverse = dmat_inverse(out.forward);
    return out;
}

// ---- numeric signature for arbitrary commutative semisimple algebras ----

// Exact characteristic polynomial of a rational matrix (Faddeev-LeVerrier),
// monic, coefficients low to high.
inline QPoly characteristic_polynomial(const QMatrix& m) {
    const std::size_t n = m.rows();
    QPoly coeffs(n + 1, Rat(0));
    coeffs[n] = 1;
    QMatrix nmat = QMatrix::identity(n);  // N_0 = I
    Rat c(1);
    for (std::size_t k = 1; k <= n; ++k) {
        // N_k = M N_{k-1} + c_{n-k+1} I handled via accumulated matrix
        QMatrix mn = m * nmat;
        Rat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mn(i, i);
        c = -tr / Rat(static_cast<long>(k));
        coeffs[n - k] = c;
        nmat = mn;
        for (std::size_t i = 0; i < n; ++i) nmat(i, i) += c;
    }
    return coeffs;
}

// Durand-Kerner root finder for a squarefree monic polynomial.
inline std::vector<std::complex<double>> polynomial_roots(const QPoly& monic) {
    const int deg = qdeg(monic);
    std::vector<std::complex<double>> z(static_cast<std::size_t>(deg));
    std::complex<double> seed(0.4, 0.9), acc(1.0, 0.0);
    for (int i = 0; i < deg; ++i) {
        acc *= seed;
        z[static_cast<std::size_t>(i)] = acc;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double delta = 0.0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> num = qeval(monic, z[i]);
            std::complex<double> den(1.0, 0.0);
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= z[i] - z[j];
            std::complex<double> step = num / den;
            z[static_cast<std::size_t>(i)] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-13) break;
    }
    return z;
}

// Samples a random element (integer coordinates in [-9, 9]), requires its
// characteristic polynomial to be squarefree (checked exactly), and counts
// real eigenvalues vs conjugate pairs. Retries up to 5 times.
inline WedderburnSignature numeric_signature(const AlgebraPtr& a, unsigned seed) {
    if (!a->commutative()) throw NotCommutative("numeric_signature");
    if (!is_semisimple(a)) throw NotSemisimple("numeric_signature needs a semisimple algebra");
    std::mt19937 rng(seed);
    for (int attempt = 0; attempt < 5; ++attempt) {
        QVec coords(a->dim());
        for (Rat& c : coords) c = Rat(static_cast<long>(rng() % 19) - 9);
        Element sample = a->element(coords);
        QPoly p = characteristic_polynomial(regular_matrix(sample));
        if (qdeg(qgcd(p, qderiv(p))) != 0) continue;  // repeated eigenvalues; resample
        auto roots = polynomial_roots(p);
        int real = 0, positive_imag = 0, negative_imag = 0;
        for (const auto& z : roots) {
            if (std::abs(z.imag()) < kEigenImagTolerance)
                ++real;
            else if (z.imag() > 0)
                ++positive_imag;
            else
                ++negative_imag;
        }
        if (positive_imag != negative_imag) continue;
        if (real + 2 * positive_imag != static_cast<int>(a->dim())) continue;
        return {real, positive_imag};
    }
    throw DegenerateSample();
}

// ---- zero-divisor geometry of R^m x C^k ----

struct ZdComponent {
    bool complex_component;
    int zero_set_dim;  // dimension of {x : this component of x vanishes}
};

struct ZdGeometry {
    WedderburnSignature signature;
    int ambient_dim;
    std::vector<ZdComponent> components;  // m real components, then k complex
};

// An element is a zero divisor iff it vanishes in at least one component;
// its annihilator is spanned by the components where it vanishes. A real
// component's zero set has dimension (m-1) + 2k, a complex one's m + 2(k-1).
inline ZdGeometry zd_structure(const WedderburnSignature& sig) {
    ZdGeometry out;
    out.signature = sig;
    out.ambient_dim = sig.real_factors + 2 * sig.complex_factors;
    for (int i = 0; i < sig.real_factors; ++i)
        out.components.push_back({false, (sig.real_factors - 1) + 2 * sig.complex_factors});
    for (int c = 0; c < sig.complex_factors; ++c)
        out.components.push_back({true, sig.real_factors + 2 * (sig.complex_factors - 1)});
    return out;
}

// Map-quality checks shared by tests and the CLI: identity round trip, unit
// image, multiplicativity on basis pairs.
inline double decomposition_map_error(const DecompositionMap& d) {
    const std::size_t n = d.source->dim();
    double err = 0.0;
    DMatrix prod = dmat_mul(d.forward, d.inverse);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) err = std::max(err, std::abs(prod[i][j] - (i == j ? 1.0 : 0.0)));
    std::vector<double> unit = d.to_components(d.source->unit());
    for (int i = 0; i < d.signature.real_factors; ++i) err = std::max(err, std::abs(unit[i] - 1.0));
    for (int c = 0; c < d.signature.complex_factors; ++c) {
        std::size_t re = d.signature.real_factors + 2 * c;
        err = std::max(err, std::abs(unit[re] - 1.0));
        err = std::max(err, std::abs(unit[re + 1]));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element vi = d.source->basis_element(i), vj = d.source->basis_element(j);
            std::vector<double> lhs = d.to_components(vi * vj);
            std::vector<double> rhs = d.component_product(d.to_components(vi), d.to_components(vj));
            for (std::size_t t = 0; t < lhs.size(); ++t) err = std::max(err, std::abs(lhs[t] - rhs[t]));
        }
    return err;
}

}  // namespace algkit
