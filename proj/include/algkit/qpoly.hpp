#pragma once

// Dense univariate polynomials over the rationals, coefficients low-to-high.
// Empty vector = zero polynomial. Used for relation gcds, minimal and
// characteristic polynomials, and rational root extraction.

#include <complex>
#include <cstddef>
#include <vector>

#include "algkit/error.hpp"
#include "algkit/rational.hpp"

namespace algkit {

using QPoly = std::vector<Rat>;

inline void qnormalize(QPoly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline int qdeg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly qadd(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    qnormalize(r);
    return r;
}

inline QPoly qscale(QPoly a, const Rat& c) {
    if (is_zero(c)) return {};
    for (Rat& x : a) x *= c;
    return a;
}

inline QPoly qsub(const QPoly& a, const QPoly& b) { return qadd(a, qscale(b, Rat(-1))); }

inline QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qnormalize(r);
    return r;
}

inline std::pair<QPoly, QPoly> qdivmod(QPoly f, const QPoly& g) {
    if (g.empty()) throw Error("univariate division by zero polynomial");
    qnormalize(f);
    if (f.size() < g.size()) return {{}, std::move(f)};
    QPoly q(f.size() - g.size() + 1, Rat(0));
    Rat inv_lead = 1 / g.back();
    for (std::size_t k = f.size(); k-- >= g.size();) {
        Rat c = f[k] * inv_lead;
        if (!is_zero(c)) {
            q[k - g.size() + 1] = c;
            for (std::size_t j = 0; j < g.size(); ++j) f[k - g.size() + 1 + j] -= c * g[j];
        }
        if (k == 0) break;
    }
    f.resize(g.size() - 1);
    qnormalize(f);
    qnormalize(q);
    return {std::move(q), std::move(f)};
}

inline QPoly qmonic(QPoly p) {
    qnormalize(p);
    if (p.empty()) return p;
    Rat inv = 1 / p.back();
    for (Rat& x : p) x *= inv;
    return p;
}

inline QPoly qgcd(QPoly a, QPoly b) {
    qnormalize(a);
    qnormalize(b);
    while (!b.empty()) {
        QPoly r = qdivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qmonic(std::move(a));
}

inline QPoly qderiv(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(static_cast<long>(i));
    qnormalize(d);
    return d;
}

inline Rat qeval(const QPoly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
        if (i == 0) break;
    }
    return acc;
}

inline std::complex<double> qeval(const QPoly& p, std::complex<double> x) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i].get_d();
        if (i == 0) break;
    }
    return acc;
}

namespace detail {

// Divisors of |n|, ascending; bails out (returns what it has plus a flag)
// when n is too large for trial division at desk scale.
inline bool small_divisors(const mpz_class& n, std::vector<mpz_class>& out) {
    mpz_class a = abs(n);
    if (a == 0) return false;
    if (a > mpz_class("1000000000000")) return false;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    std::sort(out.begin(), out.end());
    return true;
}

}  // namespace detail

// All rational roots of p with multiplicity, by the rational root test on
// the integer-scaled polynomial plus deflation. `complete` reports whether
// the search was exhaustive (it is at the coefficient sizes we deal with).
inline std::vector<Rat> rational_roots(QPoly p, bool* complete = nullptr) {
    if (complete) *complete = true;
    qnormalize(p);
    std::vector<Rat> roots;
    if (p.empty()) return roots;
    while (p.size() > 1 && is_zero(p.front())) {
        roots.push_back(Rat(0));
        p.erase(p.begin());
    }
    while (p.size() > 1) {
        mpz_class den_lcm = 1;
        for (const Rat& c : p) {
            mpz_class d = c.get_den();
            den_lcm = den_lcm / gcd(den_lcm, d) * d;
        }
        std::vector<mpz_class> ip;
        for (const Rat& c : p) {
            Rat scaled = c * Rat(den_lcm);
            ip.push_back(scaled.get_num());
        }
        std::vector<mpz_class> ps, qs;
        if (!detail::small_divisors(ip.front(), ps) || !detail::small_divisors(ip.back(), qs)) {
            if (complete) *complete = false;
            return roots;
        }
        bool found = false;
        for (const mpz_class& num : ps) {
            for (const mpz_class& q : qs) {
                for (int s = 1; s >= -1 && !found; s -= 2) {
                    Rat cand(s > 0 ? num : -num, q);
                    cand.canonicalize();
                    if (is_zero(qeval(p, cand))) {
                        roots.push_back(cand);
                        QPoly lin{-cand, Rat(1)};
                        p = qdivmod(p, lin).first;
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    return roots;
}

}  // namespace algkit
