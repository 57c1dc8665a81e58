#include "neumaier/params.hpp"

#include <algorithm>
#include <numeric>

namespace neumaier {

std::string ParameterSet::str() const {
    return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) +
           ";" + std::to_string(e) + "," + std::to_string(s) + ")";
}

ConditionReport check_basic_bounds(const ParameterSet& p) {
    ConditionReport r;
    if (!(p.v > p.k && p.k >= 1)) r.fail("basic.degree", "need v > k >= 1");
    if (!(p.k < p.v - 1)) r.fail("basic.noncomplete", "need k < v-1");
    if (!(p.s >= 2)) r.fail("basic.clique", "need s >= 2");
    if (!(1 <= p.e && p.e <= p.s - 1)) r.fail("basic.e", "need 1 <= e <= s-1");
    if (!(p.s - 2 <= p.lambda && p.lambda < p.k)) r.fail("basic.lambda", "need s-2 <= lambda < k");
    return r;
}

ConditionReport check_erg_conditions(long v, long k, long lambda) {
    if (!(v > k && k >= 1 && 0 <= lambda && lambda < k))
        throw DomainError("check_erg_conditions: need v > k >= 1 and 0 <= lambda < k");
    ConditionReport r;
    if (v - 2 * k + lambda < 0) r.fail("erg.i", "v-2k+lambda < 0");
    if ((lambda * k) % 2 != 0) r.fail("erg.ii", "lambda*k odd");
    if ((v * k * lambda) % 6 != 0) r.fail("erg.iii", "v*k*lambda not divisible by 6");
    if ((v - k - 1) * (v - k - 2) - k * (v - 2 * k + lambda) < 0)
        r.fail("erg.iv", "(v-k-1)(v-k-2) - k(v-2k+lambda) < 0");
    return r;
}

ConditionReport check_neumaier_conditions(const ParameterSet& p) {
    if (!check_basic_bounds(p).passed)
        throw DomainError("check_neumaier_conditions: basic bounds violated for " + p.str());
    ConditionReport r;
    if (p.k - p.s + p.e - p.lambda - 1 < 0) r.fail("neumaier.i", "k-s+e-lambda-1 < 0");
    if (p.s * (p.k - p.s + 1) != (p.v - p.s) * p.e)
        r.fail("neumaier.ii", "s(k-s+1) != (v-s)e");
    if (p.s * (p.s - 1) * (p.lambda - p.s + 2) != (p.v - p.s) * p.e * (p.e - 1))
        r.fail("neumaier.iii", "s(s-1)(lambda-s+2) != (v-s)e(e-1)");
    return r;
}

ConditionReport check_strict_conditions(const ParameterSet& p) {
    if (!check_basic_bounds(p).passed)
        throw DomainError("check_strict_conditions: basic bounds violated for " + p.str());
    ConditionReport r;
    if (p.s < 4) r.fail("strict.i", "s < 4");
    if (p.e > p.k - 2) r.fail("strict.ii", "e > k-2");
    if (p.v == 2 * p.k - p.lambda || p.v == 2 * p.k - p.lambda + 1)
        r.fail("strict.iii", "v in {2k-lambda, 2k-lambda+1}");
    if (p.k - p.s + p.e - p.lambda - 1 < 1) r.fail("strict.iv", "k-s+e-lambda-1 < 1");
    if ((p.v - p.k - 1) * (p.v - p.k - 2) - p.k * (p.v - 2 * p.k + p.lambda) <= 0)
        r.fail("strict.v", "(v-k-1)(v-k-2) - k(v-2k+lambda) <= 0");
    if ((p.v - 3) % 6 == 0) {
        long l = (p.v - 3) / 6;
        if (l >= 3 && p.k == 4 * l + 2 && p.lambda == 3 * l && p.e == l + 1 && p.s == 2 * l + 1)
            r.fail("strict.vi", "of the excluded form (6l+3,4l+2,3l;l+1,2l+1), l=" +
                                    std::to_string(l));
    }
    return r;
}

bool is_admissible(const ParameterSet& p) {
    if (!check_basic_bounds(p).passed) return false;
    return check_erg_conditions(p.v, p.k, p.lambda).passed &&
           check_neumaier_conditions(p).passed && check_strict_conditions(p).passed;
}

std::vector<ParameterSet> enumerate_admissible(long v_max) {
    if (v_max < 4 || v_max > 64) throw DomainError("v_max must be in 4..64");
    std::vector<ParameterSet> out;
    for (long v = 4; v <= v_max; ++v)
        for (long k = 1; k < v - 1; ++k)
            for (long lambda = 0; lambda < k; ++lambda) {
                if (!check_erg_conditions(v, k, lambda).passed) continue;
                for (long s = 4; s <= lambda + 2; ++s)
                    for (long e = 1; e < s; ++e) {
                        ParameterSet p{v, k, lambda, e, s};
                        if (is_admissible(p)) out.push_back(p);
                    }
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Rational::str() const {
    return integral() ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

ComplementParameters complement_parameters(const ParameterSet& p) {
    auto basic = check_basic_bounds(p);
    if (!basic.passed) throw DomainError("complement_parameters: basic bounds violated");
    ComplementParameters c;
    c.v = p.v;
    c.k_c = p.v - p.k - 1;
    c.mu_c = p.v - 2 * p.k + p.lambda;
    c.e_c = p.s - p.e;
    c.s = p.s;
    Rational frac = make_rational(p.k * (p.k - p.lambda - 1), p.v - p.k - 1);
    c.lambda_c = make_rational((p.v - 2 - 2 * p.k) * frac.den + frac.num, frac.den);
    return c;
}

}  // namespace neumaier
