#pragma once

#include <optional>
#include <vector>

#include "hilbq/laurent.hpp"
#include "hilbq/qseries.hpp"
#include "hilbq/report.hpp"

namespace hilbq {

/// Euler-characteristic data of a quasi-projective surface with A_{n_i}
/// singular points. Either Euler number may be supplied; they are tied by
/// chi(resolution) = chi(surface) - l + sum(n_i + 1).
struct SurfaceSpec {
    std::optional<long> chi_resolution;
    std::optional<long> chi_surface;
    std::vector<int> singularities;

    /// Resolves both Euler numbers, enforcing consistency when both are given.
    struct Resolved {
        long chi_resolution;
        long chi_surface;
    };
    Resolved resolve() const;
};

/// Generating series sum_m chi(Hilb^m(A_{n_sing})) q^m to order M, taken as
/// the t^0 coefficient of the double product with f_{n_sing+1}. n_sing = 0 is
/// the smooth plane (partition numbers).
QSeries hilb_series_A(int n_sing, int M);

/// sum_m chi(Quot^m(O_{A_{n-1}}(jD))) q^m to order M, read off the t^{kn-j}
/// slot of the double product after dividing by the twist shift
/// q^{nk(k+1)/2 - jk}. The result is independent of k.
QSeries quot_series_A(int n, int j, long k, int M);

/// Extraction from a caller-supplied product; rejects if the product's
/// window or q-order cannot cover the requested slot.
QSeries quot_series_from_product(const TLaurentSeries& product, int n, int j, long k, int M);

/// prod_{m>=1}(1-q^m)^{n+1} * hilb series of the internal-parameter-n local
/// model; equals theta_n(n, M) coefficientwise.
QSeries theta_from_hilb(int n, int M);

struct SurfaceSeries {
    QSeries series;
    Rat modular_weight;  // -chi(S)/2
};

/// eta(q)^{-chi(resolution)} * prod_i Theta_{n_i}(q) to order M. When
/// normalized, the q^{-chi/24} prefactor is stripped (offset 0).
SurfaceSeries surface_hilb_series(const SurfaceSpec& spec, int M, bool normalized = true);

/// Asserts quot_series_A(n, j, k, M) identical for all |k| <= k_range.
CheckReport k_independence_check(int n, int j, long k_range, int M);

}  // namespace hilbq
