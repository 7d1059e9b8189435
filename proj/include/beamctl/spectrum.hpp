#pragma once

#include "beamctl/numerics.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace beamctl::spectrum {

using num::cplx;

struct SpectralParams {
    double alpha = 0.0; // damping exponent, in [0, 2]
    double rho = 1.0;   // damping coefficient, > 0
    int n_modes = 1;    // mode cutoff N

    void validate() const; // throws ConfigError
};

struct RootPair {
    int mode = 0;
    cplx lambda_plus;
    cplx lambda_minus;
    cplx q; // lambda_plus - lambda_minus
    bool is_double = false;
};

// Roots of lambda^2 + rho n^{2alpha} lambda + n^4 = 0. Total function;
// near-equal roots are collapsed to an exact double (relative discriminant
// test) so downstream code sees q = 0, never a denormal gap.
RootPair char_roots(int n, const SpectralParams& params);

struct FrequencySet {
    SpectralParams params;
    // keys -N..-1, 1..N; value(k) = -i * lambda^{sign k}_{|k|}, upper half-plane
    std::map<int, cplx> entries;
    std::vector<int> double_modes;

    cplx at(int k) const { return entries.at(k); }
    const RootPair& roots(int n) const { return root_cache.at(n); }
    bool is_double_mode(int n) const;

    std::vector<cplx> unique_values() const; // double modes listed once

    // populated by char_roots during construction
    std::map<int, RootPair> root_cache;
};

FrequencySet frequency_set(const SpectralParams& params);

struct ClusterMap {
    double epsilon = 0.0;
    std::vector<std::pair<int, int>> pairs; // (l, m): lambda_l^+ near lambda_m^-
    std::map<int, int> iota;                // l -> m over n_plus
    std::vector<int> n_plus;
    std::vector<int> n_minus;
    std::vector<int> n_both;

    bool in_plus(int n) const;
    bool in_minus(int n) const;
};

// Pairs up cross-mode near-coincidences between the + and - branches.
// Exact double modes never participate (their two frequencies are equal by
// construction and get the t-exponential treatment instead). Throws
// EpsilonTooLarge if a frequency would sit in two clusters, or if a
// same-mode non-double pair comes closer than epsilon.
ClusterMap cluster_map(const FrequencySet& fs, double epsilon);

// Half the minimal nonzero pairwise distance in the set: guarantees every
// cluster found with it has exactly two members.
double default_epsilon(const FrequencySet& fs);

// nu_hat(r): max over frequencies of how many other (distinct) frequencies
// lie within distance r. Exhaustive on the truncated set.
int counting_function(const FrequencySet& fs, double r);

// S_N = sum_{n<=N} |Im(1/(i lambda_n^+))|
double blaschke_partial_sum(const SpectralParams& params, long n_terms);

enum class Regime { OneDim, TwoDim, WeakOnly, NotControllable };

std::string regime_name(Regime r);

struct RegimeReport {
    Regime regime = Regime::OneDim;
    bool blaschke_divergent = false;
    double kappa = 0.5; // counting exponent, in (0,1)
    std::string notes;
};

RegimeReport classify_regime(const SpectralParams& params);

// Log-log slope of nu_hat over r in [r_lo, r_hi] on a set with n_fit modes.
double counting_exponent_fit(const SpectralParams& params, int n_fit,
                             double r_lo, double r_hi);

} // namespace beamctl::spectrum
