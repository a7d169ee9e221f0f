#include "hilbq/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

#include "hilbq/arith.hpp"

namespace hilbq {

CycElem::CycElem(long modulus) : modulus_(modulus) {
    if (modulus < 1) throw std::invalid_argument("CycElem: modulus must be >= 1");
    counts_.assign(modulus, Rat(0));
}

void CycElem::add_root_power(long r, const Rat& c) {
    r %= modulus_;
    if (r < 0) r += modulus_;
    counts_[r] += c;
}

CycElem& CycElem::operator+=(const CycElem& other) {
    if (modulus_ != other.modulus_)
        throw std::invalid_argument("CycElem: modulus mismatch");
    for (long r = 0; r < modulus_; ++r) counts_[r] += other.counts_[r];
    return *this;
}

CycElem CycElem::substituted(long s) const {
    if (std::gcd(((s % modulus_) + modulus_) % modulus_, modulus_) != 1)
        throw std::invalid_argument("CycElem::substituted: s must be coprime to the modulus");
    CycElem out(modulus_);
    for (long r = 0; r < modulus_; ++r) out.add_root_power(r * s, counts_[r]);
    return out;
}

std::vector<Rat> CycElem::reduced() const {
    const std::vector<Int> phi = cyclotomic_poly(modulus_);
    const long deg = static_cast<long>(phi.size()) - 1;
    std::vector<Rat> rem(counts_);
    // Phi_m is monic: plain long division of the counts polynomial.
    for (long i = modulus_ - 1; i >= deg; --i) {
        Rat c = rem[i];
        if (c == 0) continue;
        for (long k = 0; k <= deg; ++k) rem[i - deg + k] -= c * Rat(phi[k]);
    }
    rem.resize(deg);
    return rem;
}

bool CycElem::is_rational() const {
    const std::vector<Rat> r = reduced();
    for (size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0) return false;
    return true;
}

Rat CycElem::rationalize() const {
    const long phi = euler_phi(modulus_);
    Rat value = 0;
    for (long r = 0; r < modulus_; ++r) {
        Rat avg(ramanujan_sum(modulus_, r), phi);
        avg.canonicalize();
        value += counts_[r] * avg;
    }

    const std::vector<Rat> red = reduced();
    bool ok = red[0] == value;
    for (size_t i = 1; ok && i < red.size(); ++i) ok = red[i] == 0;
    if (!ok) {
        // Locate a Galois conjugate with a different reduction for the diagnostic.
        for (long s = 2; s < modulus_; ++s) {
            if (std::gcd(s, modulus_) != 1) continue;
            if (substituted(s).reduced() != red)
                throw std::domain_error(
                    "CycElem::rationalize: element is not rational; differs from its "
                    "conjugate under xi -> xi^" + std::to_string(s));
        }
        throw std::domain_error("CycElem::rationalize: element is not rational");
    }
    return value;
}

bool operator==(const CycElem& a, const CycElem& b) {
    if (a.modulus_ != b.modulus_) return false;
    return a.reduced() == b.reduced();
}

}  // namespace hilbq
