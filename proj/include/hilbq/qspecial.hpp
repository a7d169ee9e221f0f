#pragma once

#include "hilbq/laurent.hpp"
#include "hilbq/qseries.hpp"
#include "hilbq/report.hpp"

namespace hilbq {

/// eta(q)^e truncated at order M: q^{e/24} prod_{m=1}^{M} (1 - q^m)^e,
/// carried as a QSeries with offset e/24.
QSeries eta_power(long e, int M);

/// prod_{m=1}^{M} (1 - q^m)^e without the q^{e/24} prefactor (offset 0).
QSeries euler_product_power(long e, int M);

/// Coefficients of f_n(x) = 1 + x + ... + x^n.
std::vector<Rat> fn_poly(int n);

/// The two-variable product
///   prod_{m>0} f_n(q^m t) * prod_{m>=0} f_n(q^m t^{-1}),
/// exact for all t-degrees |d| <= E up to q^M. The m = 0 factor is multiplied
/// first (pruning precondition), then ascending m with t before t^{-1}.
TLaurentSeries double_product(int n, int M, int E);

/// Window at which every monomial with q-exponent <= M survives: t-degrees lie
/// in [-M-n, M], so E = M + n covers all of them.
int full_window(int n, int M);

/// Verifies the Jacobi triple product identity
///   sum_k q^{k(k+1)/2} (-t)^k
///     = prod_{m>=1}(1-q^m) prod_{m>0}(1-q^m t) prod_{m>=0}(1-q^m t^{-1})
/// as TLaurentSeries to q^M, |t-degree| <= E.
CheckReport jacobi_triple_check(int M, int E);

/// Left side of the Jacobi triple product as a TLaurentSeries.
TLaurentSeries jacobi_theta_side(int M, int E);

/// Right side (the triple product) as a TLaurentSeries.
TLaurentSeries jacobi_product_side(int M, int E);

}  // namespace hilbq
