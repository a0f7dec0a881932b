#pragma once

// Test-only reference computations, deliberately independent of the library
// code paths they are used to check.

#include <cstdint>
#include <map>
#include <vector>

#include "forge/field.hpp"
#include "forge/poly.hpp"

namespace forge::oracle {

/// Determinant by fraction-based Gaussian elimination.
inline Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/// Resultant as the determinant of the Sylvester matrix.
inline Rat sylvester_resultant(const PolyQ& p, const PolyQ& q) {
    const int m = p.degree(), n = q.degree();
    const int size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= m; ++i) s[r][r + i] = p.coeff(m - i);
    }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = q.coeff(n - i);
    }
    return determinant(s);
}

inline Rat sylvester_discriminant(const PolyQ& p) {
    const int n = p.degree();
    Rat d = sylvester_resultant(p, p.derivative()) / p.lead();
    return (n * (n - 1) / 2) % 2 == 0 ? d : Rat(-d);
}

/// Degree pattern by repeated trial division with every monic polynomial of
/// degree <= deg/2; the least-degree monic divisor is always irreducible.
inline DegreePattern trial_division_pattern(PolyFp f) {
    const std::uint64_t l = f.modulus();
    DegreePattern out;
    f = f.monic();
    for (int d = 1; 2 * d <= f.degree();) {
        bool split = false;
        std::vector<std::uint64_t> c(d + 1, 0);
        c[d] = 1;
        while (true) {
            const PolyFp g(l, c);
            auto [q, r] = f.divmod(g);
            if (r.is_zero()) {
                out.push_back(static_cast<unsigned>(d));
                f = q.monic();
                split = true;
                break;
            }
            int i = 0;
            while (i < d && ++c[i] == l) c[i++] = 0;
            if (i == d) break;
        }
        if (!split) ++d;
    }
    if (f.degree() > 0) out.push_back(static_cast<unsigned>(f.degree()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of irreducible factors of a squarefree f: the nullity of Q - I, where row i of Q
/// holds x^(i*l) mod f (Berlekamp). Plain vectors only; no library polynomial arithmetic.
inline std::size_t berlekamp_factor_count(const PolyFp& f) {
    const std::uint64_t l = f.modulus();
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const auto mulmod = [l](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % l);
    };
    const auto inv = [&](std::uint64_t a) {
        std::uint64_t r = 1, e = l - 2;
        for (; e; e >>= 1, a = mulmod(a, a)) {
            if (e & 1) r = mulmod(r, a);
        }
        return r;
    };
    std::vector<std::uint64_t> monic(n + 1);
    const std::uint64_t lead_inv = inv(f.lead());
    for (std::size_t i = 0; i <= n; ++i) monic[i] = mulmod(f.coeff(static_cast<unsigned>(i)), lead_inv);
    // multiply a residue (length n) by x, reducing with the monic f
    const auto times_x = [&](std::vector<std::uint64_t>& v) {
        const std::uint64_t top = v[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) v[i] = (v[i - 1] + l - mulmod(top, monic[i])) % l;
        v[0] = (l - mulmod(top, monic[0])) % l;
    };
    std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
    std::vector<std::uint64_t> cur(n, 0);
    cur[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = cur;
        q[i][i] = (q[i][i] + l - 1) % l;
        if (i + 1 < n) {
            for (std::uint64_t j = 0; j < l; ++j) times_x(cur);
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && q[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(q[pivot], q[rank]);
        const std::uint64_t pinv = inv(q[rank][col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || q[r][col] == 0) continue;
            const std::uint64_t factor = mulmod(q[r][col], pinv);
            for (std::size_t c = 0; c < n; ++c) q[r][c] = (q[r][c] + l - mulmod(factor, q[rank][c])) % l;
        }
        ++rank;
    }
    return n - rank;
}

/// Number of x in F_l with f(x) = 0, by Horner evaluation of the rational coefficients.
inline std::size_t brute_root_count(const PolyQ& f, std::uint64_t l) {
    std::size_t roots = 0;
    const Int L(static_cast<unsigned long>(l));
    for (std::uint64_t x = 0; x < l; ++x) {
        const Rat v = f(Rat(Int(static_cast<unsigned long>(x))));
        Int num = v.get_num() % L;
        if (num == 0) ++roots;
    }
    return roots;
}

/// Some monic irreducible polynomial of degree d in 1..3 over F_l.
inline PolyFp irreducible_of_degree(std::uint64_t l, unsigned d) {
    std::vector<std::uint64_t> c(d + 1, 0);
    c[d] = 1;
    while (true) {
        const PolyFp g(l, c);
        bool has_root = false;
        for (std::uint64_t x = 0; x < l && !has_root; ++x) has_root = g(x) == 0;
        if (d == 1 || !has_root) return g;
        unsigned i = 0;
        while (i < d && ++c[i] == l) c[i++] = 0;
    }
}

/// All elements of F_l[x]/(g).
inline std::vector<ExtFieldElem> all_elements(const PolyFp& g) {
    const std::uint64_t l = g.modulus();
    const unsigned d = static_cast<unsigned>(g.degree());
    std::vector<ExtFieldElem> out;
    std::vector<std::uint64_t> c(d, 0);
    const ExtFieldElem zero(g, PolyFp(l));
    while (true) {
        out.push_back(zero.with(PolyFp(l, c)));
        unsigned i = 0;
        while (i < d && ++c[i] == l) c[i++] = 0;
        if (i == d) break;
    }
    return out;
}

/// #E(F_l[x]/(g)) by enumerating every x and counting square roots of x^3 + ax + b.
inline std::uint64_t naive_count(const Rat& a, const Rat& b, const PolyFp& g) {
    const auto elems = all_elements(g);
    std::map<std::vector<std::uint64_t>, std::uint64_t> roots_of;
    for (const auto& y : elems) ++roots_of[(y * y).value().coeffs()];
    const ExtFieldElem A = field_from(elems.front(), a), B = field_from(elems.front(), b);
    std::uint64_t count = 1;
    for (const auto& x : elems) {
        auto it = roots_of.find((x * x * x + A * x + B).value().coeffs());
        if (it != roots_of.end()) count += it->second;
    }
    return count;
}

}  // namespace forge::oracle
