#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <stdexcept>

namespace neumaier {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (v,k,lambda;e,s): order, degree, common neighbors of adjacent pairs,
// clique regularity, clique size.
struct ParameterSet {
    long v = 0, k = 0, lambda = 0, e = 0, s = 0;

    auto operator<=>(const ParameterSet&) const = default;
    std::string str() const;
};

struct ConditionReport {
    bool passed = true;
    // (condition id, human-readable description) for each failed condition
    std::vector<std::pair<std::string, std::string>> failures;

    void fail(std::string id, std::string what) {
        passed = false;
        failures.emplace_back(std::move(id), std::move(what));
    }
};

// v > k >= 1, k < v-1, s >= 2, 1 <= e <= s-1, s-2 <= lambda < k
ConditionReport check_basic_bounds(const ParameterSet& p);

// Edge-regular graph conditions: nonnegative mu, parity, divisibility by 6,
// and the pair-counting inequality.  Requires v > k >= 1, 0 <= lambda < k.
ConditionReport check_erg_conditions(long v, long k, long lambda);

// Regular-clique counting identities plus k-s+e-lambda-1 >= 0.
ConditionReport check_neumaier_conditions(const ParameterSet& p);

// Extra conditions a strictly Neumaier parameter set must satisfy.
ConditionReport check_strict_conditions(const ParameterSet& p);

bool is_admissible(const ParameterSet& p);

// All admissible sets with v <= v_max, sorted by (v,k,lambda,e,s).
// Everything is exact integer arithmetic; 4 <= v_max <= 64.
std::vector<ParameterSet> enumerate_admissible(long v_max);

// Exact rational, kept reduced with positive denominator.
struct Rational {
    long num = 0;
    long den = 1;

    bool integral() const { return den == 1; }
    bool operator==(const Rational&) const = default;
    std::string str() const;
};

Rational make_rational(long num, long den);

// Parameters of the complement of a (v,k,lambda;e,s) graph: k'-regular,
// mu'-co-edge-regular, with an e'-regular coclique of size s.  lambda' is the
// only common-neighbor count an adjacent pair of the complement may not have.
struct ComplementParameters {
    long v = 0;
    long k_c = 0;        // v-k-1
    long mu_c = 0;       // v-2k+lambda
    long e_c = 0;        // s-e
    long s = 0;
    Rational lambda_c;   // v-2-2k + k(k-lambda-1)/(v-k-1)
};

ComplementParameters complement_parameters(const ParameterSet& p);

}  // namespace neumaier
