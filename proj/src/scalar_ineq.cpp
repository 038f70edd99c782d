#include "l1coh/scalar_ineq.hpp"

#include <cmath>
#include <sstream>

#include "l1coh/config.hpp"
#include "l1coh/error.hpp"

namespace l1coh {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Small tolerance on the upper end of x-ranges so that x computed as k^delta
// by a different route is not rejected for one ulp.
constexpr double kRangeEps = 1e-12;

void check_params(const ScalarParams& p, double min_alpha) {
    if (!(p.alpha >= min_alpha) || !std::isfinite(p.alpha)) {
        throw Error(ErrorCode::DomainError, "alpha = " + num(p.alpha) + " < " + num(min_alpha));
    }
    if (!(p.k > 0.0 && p.k <= 1.0)) throw Error(ErrorCode::DomainError, "k = " + num(p.k) + " not in (0, 1]");
    if (!(p.delta >= 1.0) || !std::isfinite(p.delta)) {
        throw Error(ErrorCode::DomainError, "delta = " + num(p.delta) + " < 1");
    }
}

void check_kd(double kd) {
    if (!(kd > 0.0 && kd <= 1.0)) throw Error(ErrorCode::DomainError, "k^delta = " + num(kd) + " not in (0, 1]");
}

bool is_small_integer(double a) { return a == std::floor(a) && a >= 0.0 && a <= 64.0; }

// (1+x)^a - 1 without cancellation for small x.
double one_plus_pow_minus_one(double x, double a) { return std::expm1(a * std::log1p(x)); }

SlackVerdict verdict(double slack) { return SlackVerdict{slack, slack >= -config().scalar_slack, std::nullopt}; }

} // namespace

double ScalarParams::k_delta() const { return real_pow(k, delta); }

double real_pow(double x, double a) {
    if (x == 0.0) return a == 0.0 ? 1.0 : 0.0;
    if (is_small_integer(a)) {
        auto e = static_cast<unsigned>(a);
        double result = 1.0;
        double base = x;
        while (e != 0U) {
            if (e & 1U) result *= base;
            base *= base;
            e >>= 1U;
        }
        return result;
    }
    return std::exp(a * std::log(x));
}

double gamma_of(double kd, double alpha) {
    check_kd(kd);
    return (one_plus_pow_minus_one(kd, alpha) - kd) / real_pow(kd, alpha);
}

double lambda_of(double kd, double alpha) {
    check_kd(kd);
    return one_plus_pow_minus_one(kd, alpha) / real_pow(kd, alpha);
}

double gamma_coeff(const ScalarParams& p) {
    check_params(p, 2.0);
    return gamma_of(p.k_delta(), p.alpha);
}

double lambda_coeff(const ScalarParams& p) {
    check_params(p, 1.0);
    return lambda_of(p.k_delta(), p.alpha);
}

SlackVerdict lemma1_holds(double x, double alpha) {
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::DomainError, "x = " + num(x) + " not in [0, 1]");
    if (!(alpha >= 2.0)) throw Error(ErrorCode::DomainError, "alpha = " + num(alpha) + " < 2");
    if (x == 0.0) return verdict(0.0);
    // (1+x)^(a-1) - 1 - (a-1)x
    return verdict(one_plus_pow_minus_one(x, alpha - 1.0) - (alpha - 1.0) * x);
}

SlackVerdict lemma2_holds(double x, const ScalarParams& p) {
    check_params(p, 2.0);
    const double kd = p.k_delta();
    if (!(x >= 0.0 && x <= kd * (1.0 + kRangeEps))) {
        throw Error(ErrorCode::DomainError, "x = " + num(x) + " outside [0, k^delta = " + num(kd) + "]");
    }
    if (x == 0.0) return verdict(0.0);
    const double gamma = gamma_of(kd, p.alpha);
    return verdict(one_plus_pow_minus_one(x, p.alpha) - x - gamma * real_pow(x, p.alpha));
}

SlackVerdict ref31_ineq_holds(double t, const ScalarParams& p) {
    check_params(p, 1.0);
    if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::DomainError, "t = " + num(t) + " not in [0, 1]");
    const double kd = p.k_delta();
    SlackVerdict v = t == 0.0 ? verdict(0.0)
                              : verdict(one_plus_pow_minus_one(t, p.alpha) - lambda_of(kd, p.alpha) * real_pow(t, p.alpha));
    if (t > kd * (1.0 + kRangeEps)) {
        v.warning = "t = " + num(t) + " exceeds k^delta = " + num(kd) + "; only t <= k^delta is verified";
    }
    return v;
}

SlackVerdict dominance_check(double x, const ScalarParams& p) {
    check_params(p, 2.0);
    const double kd = p.k_delta();
    if (!(x > 0.0 && x <= kd * (1.0 + kRangeEps))) {
        throw Error(ErrorCode::DomainError, "x = " + num(x) + " outside (0, k^delta = " + num(kd) + "]");
    }
    const double xa = real_pow(x, p.alpha);
    return verdict(x + gamma_of(kd, p.alpha) * xa - lambda_of(kd, p.alpha) * xa);
}

} // namespace l1coh
