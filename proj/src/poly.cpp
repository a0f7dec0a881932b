#include "forge/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "forge/error.hpp"
#include "forge/modular.hpp"

namespace forge {

namespace md = modular;

// ---------------------------------------------------------------- PolyQ

PolyQ::PolyQ(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::monomial(const Rat& c, unsigned degree) {
    std::vector<Rat> v(degree + 1, Rat(0));
    v[degree] = c;
    return PolyQ(std::move(v));
}

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat PolyQ::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyQ PolyQ::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return PolyQ(std::move(d));
}

PolyQ PolyQ::compose(const PolyQ& inner) const {
    PolyQ acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

PolyQ PolyQ::operator-() const {
    std::vector<Rat> v(coeffs_);
    for (auto& c : v) c = -c;
    return PolyQ(std::move(v));
}

PolyQ operator+(const PolyQ& p, const PolyQ& q) {
    std::vector<Rat> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i) + q.coeff(i);
    return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& p, const PolyQ& q) { return p + (-q); }

PolyQ operator*(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rat> v(p.coeffs_.size() + q.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return PolyQ(std::move(v));
}

PolyQ operator*(const Rat& s, const PolyQ& p) { return PolyQ::constant(s) * p; }

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& divisor) const {
    if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<Rat> rem(coeffs_);
    const int dd = divisor.degree();
    if (degree() < dd) return {PolyQ{}, *this};
    std::vector<Rat> quo(degree() - dd + 1, Rat(0));
    const Rat lead_inv = 1 / divisor.lead();
    for (int i = degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] * lead_inv;
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.coeffs_[j];
    }
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

Rat eval(const PolyQ& p, const Rat& x) { return p(x); }

Rat resultant(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero() || q.is_zero()) fail(ErrorKind::InvalidInput, "resultant of the zero polynomial");
    // res(f, g) = (-1)^(mn) lc(g)^(m - deg r) res(g, r), r = f mod g
    PolyQ f = p, g = q;
    Rat acc = 1;
    while (true) {
        const int m = f.degree(), n = g.degree();
        if (n == 0) return acc * pow(g.lead(), m);
        PolyQ r = f.divmod(g).second;
        if (r.is_zero()) return 0;
        if ((m * n) % 2 == 1) acc = -acc;
        acc *= pow(g.lead(), m - r.degree());
        f = std::move(g);
        g = std::move(r);
    }
}

Rat discriminant(const PolyQ& p) {
    const int n = p.degree();
    if (n < 1) fail(ErrorKind::InvalidInput, "discriminant of a constant polynomial");
    Rat d = resultant(p, p.derivative()) / p.lead();
    return (n * (n - 1) / 2) % 2 == 0 ? d : Rat(-d);
}

namespace {

template <class Coeff, class Abs, class IsNeg, class IsOne>
std::string format_terms(const std::vector<std::pair<Coeff, std::string>>& terms, Abs abs_of, IsNeg is_neg,
                         IsOne is_one) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, mono] : terms) {
        const bool neg = is_neg(c);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            os << abs_of(c);
        } else {
            if (!is_one(c)) os << abs_of(c) << '*';
            os << mono;
        }
    }
    return os.str();
}

std::string power_of(const std::string& var, unsigned e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace

std::string format(const PolyQ& p, const std::string& var) {
    std::vector<std::pair<Rat, std::string>> terms;
    for (int i = p.degree(); i >= 0; --i) {
        if (p.coeff(i) != 0) terms.emplace_back(p.coeff(i), power_of(var, i));
    }
    return format_terms(
        terms, [](const Rat& c) { return to_string(Rat(abs(c))); }, [](const Rat& c) { return sgn(c) < 0; },
        [](const Rat& c) { return abs(c) == 1; });
}

std::vector<std::string> coeff_strings(const PolyQ& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

std::vector<Rat> rational_roots(const PolyQ& p) {
    if (p.is_zero()) fail(ErrorKind::InvalidInput, "rational roots of the zero polynomial");
    Int den_lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> z;
    for (const auto& c : p.coeffs()) z.push_back(Int(c * den_lcm));

    std::set<Rat> roots;
    std::size_t shift = 0;
    while (shift < z.size() && z[shift] == 0) ++shift;
    if (shift > 0) roots.insert(Rat(0));
    z.erase(z.begin(), z.begin() + static_cast<long>(shift));
    if (z.size() >= 2) {
        auto divisors = [](const Int& n) {
            std::vector<Int> ds{1};
            for (const auto& [prime, e] : factorize(n).factors) {
                const std::size_t base = ds.size();
                Int pk = 1;
                for (unsigned k = 1; k <= e; ++k) {
                    pk *= prime;
                    for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
                }
            }
            return ds;
        };
        PolyQ reduced(std::vector<Rat>(p.coeffs().begin() + static_cast<long>(shift), p.coeffs().end()));
        for (const Int& num : divisors(z.front())) {
            for (const Int& den : divisors(z.back())) {
                for (int s : {1, -1}) {
                    Rat cand = make_rat(num * s, den);
                    if (reduced(cand) == 0) roots.insert(cand);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

// ---------------------------------------------------------------- PolyFp

PolyFp::PolyFp(std::uint64_t modulus, std::vector<std::uint64_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
    if (modulus_ < 2) fail(ErrorKind::InvalidInput, "modulus must be prime");
    for (auto& c : coeffs_) c %= modulus_;
    trim();
}

PolyFp PolyFp::x_power(std::uint64_t modulus, unsigned degree) {
    std::vector<std::uint64_t> v(degree + 1, 0);
    v[degree] = 1;
    return PolyFp(modulus, std::move(v));
}

void PolyFp::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t PolyFp::operator()(std::uint64_t x) const {
    std::uint64_t acc = 0;
    x %= modulus_;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = md::add(md::mul(acc, x, modulus_), *it, modulus_);
    return acc;
}

PolyFp PolyFp::derivative() const {
    if (coeffs_.size() <= 1) return PolyFp(modulus_);
    std::vector<std::uint64_t> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = md::mul(coeffs_[i], i % modulus_, modulus_);
    return PolyFp(modulus_, std::move(d));
}

PolyFp PolyFp::monic() const {
    if (is_zero()) return *this;
    const std::uint64_t li = md::inv(lead(), modulus_);
    std::vector<std::uint64_t> v(coeffs_);
    for (auto& c : v) c = md::mul(c, li, modulus_);
    return PolyFp(modulus_, std::move(v));
}

namespace {
void require_same_modulus(const PolyFp& p, const PolyFp& q) {
    if (p.modulus() != q.modulus()) fail(ErrorKind::FieldMismatch, "polynomials over different prime fields");
}
}  // namespace

PolyFp operator+(const PolyFp& p, const PolyFp& q) {
    require_same_modulus(p, q);
    const auto m = p.modulus_;
    std::vector<std::uint64_t> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = md::add(p.coeff(i), q.coeff(i), m);
    return PolyFp(m, std::move(v));
}

PolyFp operator-(const PolyFp& p, const PolyFp& q) {
    require_same_modulus(p, q);
    const auto m = p.modulus_;
    std::vector<std::uint64_t> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = md::sub(p.coeff(i), q.coeff(i), m);
    return PolyFp(m, std::move(v));
}

PolyFp operator*(const PolyFp& p, const PolyFp& q) {
    require_same_modulus(p, q);
    const auto m = p.modulus_;
    if (p.is_zero() || q.is_zero()) return PolyFp(m);
    std::vector<std::uint64_t> v(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
            v[i + j] = md::add(v[i + j], md::mul(p.coeffs_[i], q.coeffs_[j], m), m);
        }
    }
    return PolyFp(m, std::move(v));
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp& divisor) const {
    require_same_modulus(*this, divisor);
    if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    const auto m = modulus_;
    const int dd = divisor.degree();
    if (degree() < dd) return {PolyFp(m), *this};
    std::vector<std::uint64_t> rem(coeffs_), quo(degree() - dd + 1, 0);
    const std::uint64_t li = md::inv(divisor.lead(), m);
    for (int i = degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        const std::uint64_t f = md::mul(rem[i], li, m);
        quo[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] = md::sub(rem[i - dd + j], md::mul(f, divisor.coeffs_[j], m), m);
    }
    return {PolyFp(m, std::move(quo)), PolyFp(m, std::move(rem))};
}

PolyFp gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
        PolyFp r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyFp pow_mod(const PolyFp& base, std::uint64_t e, const PolyFp& m) {
    PolyFp result = PolyFp(base.modulus(), {1}) % m;
    PolyFp b = base % m;
    while (e) {
        if (e & 1) result = (result * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return result;
}

PolyFp reduce_mod(const PolyQ& p, std::uint64_t ell) {
    std::vector<std::uint64_t> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(md::reduce(c, ell));
    return PolyFp(ell, std::move(v));
}

std::vector<std::uint64_t> roots_mod(const PolyFp& p) {
    if (p.is_zero()) fail(ErrorKind::InvalidInput, "roots of the zero polynomial");
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < p.modulus(); ++x) {
        if (p(x) == 0) out.push_back(x);
    }
    return out;
}

namespace {

// f(x) = g(x^l)  ->  g(x), valid over F_l since a^l = a.
PolyFp pth_root(const PolyFp& f) {
    const auto l = f.modulus();
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0; i < f.coeffs().size(); i += l) v.push_back(f.coeffs()[i]);
    return PolyFp(l, std::move(v));
}

bool is_one(const PolyFp& f) { return f.degree() == 0 && f.lead() == 1; }

// Squarefree factorization of a monic polynomial: (factor, multiplicity).
void squarefree_parts(const PolyFp& f, unsigned scale, std::vector<std::pair<PolyFp, unsigned>>& out) {
    if (f.degree() < 1) return;
    const auto l = f.modulus();
    const PolyFp fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_parts(pth_root(f), scale * static_cast<unsigned>(l), out);
        return;
    }
    PolyFp c = gcd(f, fp);
    PolyFp w = f / c;
    unsigned i = 1;
    while (!is_one(w)) {
        PolyFp y = gcd(w, c);
        PolyFp fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
        ++i;
        w = y;
        c = c / y;
    }
    if (!is_one(c)) squarefree_parts(pth_root(c.monic()), scale * static_cast<unsigned>(l), out);
}

void distinct_degree(PolyFp g, unsigned multiplicity, DegreePattern& out) {
    const auto l = g.modulus();
    const PolyFp x = PolyFp::x_power(l, 1);
    PolyFp h = x % g;
    for (unsigned i = 1; g.degree() >= 2 * static_cast<int>(i); ++i) {
        h = pow_mod(h, l, g);
        PolyFp d = gcd(g, h - x);
        if (d.degree() > 0) {
            for (int k = 0; k < d.degree() / static_cast<int>(i); ++k) out.insert(out.end(), multiplicity, i);
            g = g / d;
            h = h % g;
        }
    }
    if (g.degree() > 0) out.insert(out.end(), multiplicity, static_cast<unsigned>(g.degree()));
}

}  // namespace

DegreePattern ddf_pattern(const PolyFp& p) {
    if (p.is_zero()) fail(ErrorKind::InvalidInput, "degree pattern of the zero polynomial");
    std::vector<std::pair<PolyFp, unsigned>> parts;
    squarefree_parts(p.monic(), 1, parts);
    DegreePattern pattern;
    for (const auto& [g, mult] : parts) distinct_degree(g, mult, pattern);
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

std::string format(const DegreePattern& pattern) {
    std::string s = "(";
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(pattern[i]);
    }
    return s + ")";
}

std::string_view to_string(Irreducibility status) {
    switch (status) {
        case Irreducibility::Irreducible: return "irreducible";
        case Irreducibility::Reducible: return "reducible";
        case Irreducibility::Unknown: return "unknown";
    }
    return "unknown";
}

Irreducibility irreducibility_sieve(const PolyQ& p, unsigned prime_budget) {
    const int n = p.degree();
    if (n < 1) fail(ErrorKind::InvalidInput, "irreducibility of a constant polynomial");
    if (n == 1) return Irreducibility::Irreducible;
    const Rat disc = discriminant(p);
    if (disc == 0) fail(ErrorKind::InvalidInput, "polynomial is not squarefree");
    if (!rational_roots(p).empty()) return Irreducibility::Reducible;

    // feasible[s]: a factor of degree s is still compatible with every pattern seen
    std::vector<bool> feasible(n, true);
    feasible[0] = false;
    unsigned tried = 0;
    for (std::uint64_t ell = 3; tried < prime_budget; ell += 2) {
        if (!is_prime(ell)) continue;
        const Int big_ell = static_cast<unsigned long>(ell);
        auto divides = [&](const Int& v) { return v != 0 && mpz_divisible_p(v.get_mpz_t(), big_ell.get_mpz_t()); };
        bool bad = divides(disc.get_num()) || divides(disc.get_den()) || divides(p.lead().get_num());
        for (const auto& c : p.coeffs()) bad = bad || divides(c.get_den());
        if (bad) continue;
        ++tried;
        const DegreePattern pattern = ddf_pattern(reduce_mod(p, ell));
        std::vector<bool> sums(n + 1, false);
        sums[0] = true;
        for (unsigned d : pattern) {
            for (int s = n; s >= static_cast<int>(d); --s) sums[s] = sums[s] || sums[s - d];
        }
        bool any = false;
        for (int s = 1; s < n; ++s) {
            feasible[s] = feasible[s] && sums[s];
            any = any || feasible[s];
        }
        if (!any) return Irreducibility::Irreducible;
    }
    return Irreducibility::Unknown;
}

// ---------------------------------------------------------------- BiPolyQ

BiPolyQ BiPolyQ::constant(const Rat& c) { return monomial(c, 0, 0); }
BiPolyQ BiPolyQ::k() { return monomial(1, 1, 0); }
BiPolyQ BiPolyQ::t() { return monomial(1, 0, 1); }

BiPolyQ BiPolyQ::monomial(const Rat& c, unsigned k_degree, unsigned t_degree) {
    BiPolyQ f;
    f.add_term({k_degree, t_degree}, c);
    return f;
}

BiPolyQ BiPolyQ::in_k(const PolyQ& p) {
    BiPolyQ f;
    for (int i = 0; i <= p.degree(); ++i) f.add_term({static_cast<unsigned>(i), 0}, p.coeff(i));
    return f;
}

void BiPolyQ::add_term(const Key& key, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat BiPolyQ::operator()(const Rat& kv, const Rat& tv) const {
    Rat acc = 0;
    for (const auto& [key, c] : terms_) acc += c * pow(kv, key.k) * pow(tv, key.t);
    return acc;
}

BiPolyQ BiPolyQ::operator-() const {
    BiPolyQ f(*this);
    for (auto& [key, c] : f.terms_) c = -c;
    return f;
}

BiPolyQ operator+(const BiPolyQ& f, const BiPolyQ& g) {
    BiPolyQ h(f);
    for (const auto& [key, c] : g.terms_) h.add_term(key, c);
    return h;
}

BiPolyQ operator-(const BiPolyQ& f, const BiPolyQ& g) { return f + (-g); }

BiPolyQ operator*(const BiPolyQ& f, const BiPolyQ& g) {
    BiPolyQ h;
    for (const auto& [kf, cf] : f.terms_) {
        for (const auto& [kg, cg] : g.terms_) h.add_term({kf.k + kg.k, kf.t + kg.t}, cf * cg);
    }
    return h;
}

BiPolyQ operator*(const Rat& s, const BiPolyQ& f) { return BiPolyQ::constant(s) * f; }

bool operator==(const BiPolyQ& f, const BiPolyQ& g) {
    return f.terms_.size() == g.terms_.size() &&
           std::equal(f.terms_.begin(), f.terms_.end(), g.terms_.begin(), [](const auto& x, const auto& y) {
               return x.first.k == y.first.k && x.first.t == y.first.t && x.second == y.second;
           });
}

BiPolyQ pow(const BiPolyQ& base, unsigned exponent) {
    BiPolyQ r = BiPolyQ::constant(1);
    for (unsigned i = 0; i < exponent; ++i) r = r * base;
    return r;
}

std::string format(const BiPolyQ& f) {
    std::vector<std::pair<Rat, std::string>> terms;
    for (const auto& [key, c] : f.terms()) {
        std::string mono = power_of("k", key.k);
        const std::string tp = power_of("t", key.t);
        if (!mono.empty() && !tp.empty()) mono += '*';
        terms.emplace_back(c, mono + tp);
    }
    return format_terms(
        terms, [](const Rat& c) { return to_string(Rat(abs(c))); }, [](const Rat& c) { return sgn(c) < 0; },
        [](const Rat& c) { return abs(c) == 1; });
}

}  // namespace forge
