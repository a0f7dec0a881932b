#include "forge/anomaly.hpp"

#include "forge/construction.hpp"
#include "forge/parallel.hpp"

namespace forge {

namespace {

void add_support(std::set<Int>& out, const Int& n) {
    if (n == 0) return;
    for (const auto& p : factorize(n).primes()) out.insert(p);
}

void require_generic(const Curve& E) {
    if (E.a() == 0) fail(ErrorKind::WrongBranch, "generic branch required (a != 0)");
}

std::vector<std::uint64_t> scan_primes(const Curve& E, std::uint64_t bound, ResidueClass filter) {
    const ExceptionSet exc = exception_set(E);
    std::vector<std::uint64_t> out;
    for (auto ell : primes_in(2, bound)) {
        if (!exc.contains(ell) && E.admissible(ell) && matches(filter, ell)) out.push_back(ell);
    }
    return out;
}

}  // namespace

ExceptionSet exception_set(const Curve& E) {
    ExceptionSet s;
    s.primes = {Int(2), Int(3)};
    if (E.a() != 0) {
        const Rat core = E.disc_core();
        for (const Int* n : {&E.a().get_num(), &E.a().get_den(), &core.get_num(), &core.get_den()}) add_support(s.primes, *n);
    } else {
        add_support(s.primes, E.b().get_num());
        add_support(s.primes, E.b().get_den());
    }
    return s;
}

bool is_anomalous(const Curve& E, std::uint64_t ell) { return count_points(E, ell).anomalous; }

bool matches(ResidueClass cls, std::uint64_t ell) {
    switch (cls) {
        case ResidueClass::All: return true;
        case ResidueClass::TwoMod3: return ell % 3 == 2;
        case ResidueClass::OneMod3: return ell % 3 == 1;
    }
    return false;
}

CorrelationReport correlation_scan(const Curve& E, std::uint64_t bound, ResidueClass filter, unsigned jobs) {
    require_generic(E);
    const PolyQ P = build_polynomial(E).P;
    CorrelationReport report;
    report.p_status = irreducibility_sieve(P, kSievePrimeBudget);
    const auto primes = scan_primes(E, bound, filter);
    report.rows = parallel_map(primes.size(), jobs, [&](std::size_t i) {
        CorrelationRow row;
        row.ell = primes[i];
        row.has_root = !roots_mod(reduce_mod(P, row.ell)).empty();
        row.anomalous = is_anomalous(E, row.ell);
        row.agree = row.has_root == row.anomalous;
        return row;
    });
    for (const auto& row : report.rows) report.mismatches += row.agree ? 0 : 1;
    return report;
}

std::vector<PatternRow> degree_pattern_scan(const Curve& E, std::uint64_t bound, ResidueClass filter, unsigned jobs) {
    require_generic(E);
    const PolyQ P = build_polynomial(E).P;
    const auto primes = scan_primes(E, bound, filter);
    return parallel_map(primes.size(), jobs, [&](std::size_t i) {
        return PatternRow{primes[i], ddf_pattern(reduce_mod(P, primes[i]))};
    });
}

std::vector<PrimeReport> anomalous_scan(const Curve& E, std::uint64_t bound, ResidueClass filter, unsigned jobs) {
    std::vector<std::uint64_t> primes;
    for (auto ell : primes_in(2, bound)) {
        if (E.admissible(ell) && matches(filter, ell)) primes.push_back(ell);
    }
    return parallel_map(primes.size(), jobs, [&](std::size_t i) { return count_points(E, primes[i]); });
}

std::vector<DivisorClass> classify_divisors(const Curve& E, const Int& m) {
    const ExceptionSet exc = exception_set(E);
    std::vector<DivisorClass> out;
    for (const auto& q : factorize(m).primes()) {
        DivisorClass d;
        d.prime = q;
        if (mpz_sizeinbase(q.get_mpz_t(), 2) > 62) {
            fail(ErrorKind::InvalidInput, "prime divisor " + to_string(q) + " is too large to count points");
        }
        const std::uint64_t ell = q.get_ui();
        d.exceptional = exc.contains(q) || !E.admissible(ell);
        d.anomalous = !d.exceptional && is_anomalous(E, ell);
        out.push_back(std::move(d));
    }
    return out;
}

std::string_view to_string(ConditionVerdict v) {
    switch (v) {
        case ConditionVerdict::Satisfied: return "satisfied";
        case ConditionVerdict::ExceptionalOnly: return "exceptional-only";
        case ConditionVerdict::NotSatisfied: return "not-satisfied";
    }
    return "not-satisfied";
}

ConditionReport condition_ii_check(const Curve& E, const Int& m) {
    if (m < 2) fail(ErrorKind::InvalidInput, "condition (ii) needs m >= 2");
    ConditionReport r;
    r.m = m;
    r.divisors = classify_divisors(E, m);
    bool any_regular = false, any_anomalous = false;
    for (const auto& d : r.divisors) {
        any_regular = any_regular || !d.exceptional;
        any_anomalous = any_anomalous || (!d.exceptional && d.anomalous);
    }
    r.verdict = any_anomalous  ? ConditionVerdict::Satisfied
                : any_regular ? ConditionVerdict::NotSatisfied
                              : ConditionVerdict::ExceptionalOnly;
    return r;
}

std::string_view to_string(Lemma11Class c) {
    return c == Lemma11Class::DivisibleBy11 ? "divisible-by-11" : "prime-to-11";
}

Lemma11Class lemma11_classify(const Int& x) {
    const unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), 11);
    if (r == 0) fail(ErrorKind::InvalidParameter, "x must be prime to 11");
    return r == 1 || r == 10 ? Lemma11Class::DivisibleBy11 : Lemma11Class::PrimeTo11;
}

}  // namespace forge
