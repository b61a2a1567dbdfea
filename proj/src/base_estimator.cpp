#include "tricount/base_estimator.hpp"

#include <cmath>

#include "tricount/approx_counter.hpp"
#include "tricount/errors.hpp"

namespace tricount {

BaseEstimate estimate_base(const BigInt& lambda, unsigned long n, double epsilon) {
    if (sgn(lambda) == 0) throw UndefinedBase("estimate_base: lambda is zero");
    if (sgn(lambda) < 0 || n < 3) throw InvalidInput("estimate_base: need lambda >= 1, n >= 3");
    if (!(epsilon > 0.0 && epsilon < 0.5))
        throw InvalidInput("estimate_base: epsilon must lie in (0, 1/2)");

    double base = std::exp2(log2_big(lambda) / (double)n);

    // Cross-check against the exact integer n-th root: floor(lambda^(1/n))
    // must bracket the logarithmic evaluation.
    BigInt iroot;
    mpz_root(iroot.get_mpz_t(), lambda.get_mpz_t(), n);
    double lo = iroot.get_d();
    if (base < lo * (1.0 - 1e-9) || base > (lo + 1.0) * (1.0 + 1e-9))
        throw InternalError("estimate_base: root cross-check failed");

    BaseEstimate out;
    out.base = base;
    out.lower = base * std::exp2(-epsilon);
    out.upper = base * std::exp2(epsilon);
    out.epsilon_used = epsilon;
    out.n = n;
    return out;
}

BaseSanity sanity_bounds(double base) {
    if (base < 1.0) return BaseSanity::BelowKnownLower;
    if (base > 30.0) return BaseSanity::AboveKnownUpper;
    return BaseSanity::Ok;
}

} // namespace tricount
