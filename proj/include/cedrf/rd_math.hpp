#pragma once

// Elementary information-theoretic scalar functions shared by the
// Gaussian and binary evaluators. All rates are in bits per symbol,
// all logarithms are base 2 unless noted otherwise.

namespace cedrf {

/// Binary entropy h(q) = -q log2 q - (1-q) log2(1-q), with 0 log 0 = 0.
/// Throws std::domain_error for q outside [0, 1].
double binary_entropy(double q);

/// Inverse of binary_entropy restricted to [0, 1/2]; bisection to an
/// absolute tolerance well below 1e-12.
/// Throws std::domain_error for h outside [0, 1].
double inv_binary_entropy(double h);

/// Binary convolution a * b = a(1-b) + (1-a)b, the crossover of two
/// cascaded binary symmetric channels. Commutative and associative.
double star(double a, double b);

/// Standard normal tail probability Q(x) = P(N(0,1) > x).
double q_function(double x);

/// max(0, log2 x). Throws std::domain_error for x <= 0.
double log2_plus(double x);

} // namespace cedrf
