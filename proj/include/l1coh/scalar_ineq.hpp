#pragma once

#include <optional>
#include <string>

namespace l1coh {

// alpha: power of the coherence, k in (0, 1], delta >= 1. Only k^delta enters
// the formulas; the split is kept because users sweep k and delta separately.
struct ScalarParams {
    double alpha = 2.0;
    double k = 1.0;
    double delta = 1.0;

    double k_delta() const;
};

// Signed slack of a scalar inequality (lhs - rhs). `holds` is
// slack >= -config().scalar_slack.
struct SlackVerdict {
    double slack = 0.0;
    bool holds = true;
    std::optional<std::string> warning;
};

// x^a with a multiplication fast path for small integer exponents and
// exp(a log x) otherwise. x >= 0.
double real_pow(double x, double a);

// ((1+x)^a - x - 1) / x^a and ((1+x)^a - 1) / x^a for x = k^delta in (0, 1].
double gamma_of(double kd, double alpha);
double lambda_of(double kd, double alpha);

double gamma_coeff(const ScalarParams& p);  // alpha >= 2
double lambda_coeff(const ScalarParams& p); // alpha >= 1

// (1+x)^(a-1) >= 1 + (a-1)x on x in [0,1], a >= 2.
SlackVerdict lemma1_holds(double x, double alpha);
// (1+x)^a >= 1 + x + Gamma x^a on x in [0, k^delta].
SlackVerdict lemma2_holds(double x, const ScalarParams& p);
// (1+t)^a >= 1 + Lambda t^a on t in [0, 1]; warns when t > k^delta.
SlackVerdict ref31_ineq_holds(double t, const ScalarParams& p);
// x + Gamma x^a - Lambda x^a >= 0 on x in (0, k^delta].
SlackVerdict dominance_check(double x, const ScalarParams& p);

} // namespace l1coh
