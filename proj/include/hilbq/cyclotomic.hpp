#pragma once

#include <vector>

#include "hilbq/rational.hpp"

namespace hilbq {

/// Element of the group ring Q[Z/m], viewed as a pre-reduction representation
/// of an element of Q(xi_m): counts[r] is the coefficient of xi_m^r.
class CycElem {
public:
    explicit CycElem(long modulus);

    long modulus() const { return modulus_; }
    const std::vector<Rat>& counts() const { return counts_; }

    /// Adds c * xi_m^r (r taken mod m).
    void add_root_power(long r, const Rat& c = Rat(1));

    CycElem& operator+=(const CycElem& other);

    /// Image under the Galois substitution xi_m -> xi_m^s; requires gcd(s, m) = 1.
    CycElem substituted(long s) const;

    /// Canonical coefficients after reduction modulo Phi_m (length phi(m)).
    std::vector<Rat> reduced() const;

    bool is_rational() const;

    /// The unique rational value of a Galois-invariant element, computed as
    /// sum_r counts[r] * c_m(r) / phi(m) with c_m the Ramanujan sum, and
    /// cross-checked against reduction mod Phi_m. Throws if the element is not
    /// rational, naming a Galois conjugate on which it differs.
    Rat rationalize() const;

    friend bool operator==(const CycElem& a, const CycElem& b);

private:
    long modulus_;
    std::vector<Rat> counts_;
};

}  // namespace hilbq
