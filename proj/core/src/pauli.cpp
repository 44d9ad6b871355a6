#include "ccrgraph/pauli.hpp"

#include "ccrgraph/errors.hpp"

#include <bit>

namespace ccrgraph::repr {

std::uint64_t PauliString::site_bit(std::size_t qubits, std::size_t site)
{
    if (qubits > 63 || site >= qubits)
        throw InvalidArgument("PauliString: site " + std::to_string(site) + " out of range for " +
                              std::to_string(qubits) + " qubits");
    return std::uint64_t{1} << (qubits - 1 - site);
}

PauliString PauliString::flip(std::size_t qubits, std::size_t site)
{
    return {qubits, site_bit(qubits, site), 0, graph::Phase::one()};
}

PauliString PauliString::sign(std::size_t qubits, std::size_t site)
{
    return {qubits, 0, site_bit(qubits, site), graph::Phase::one()};
}

PauliString PauliString::operator*(const PauliString& other) const
{
    if (qubits != other.qubits)
        throw InvalidArgument("PauliString: qubit counts differ");
    // Z^z1 X^x2 = (-1)^{|z1 & x2|} X^x2 Z^z1
    const bool flip_sign = std::popcount(z & other.x) % 2 == 1;
    return {qubits, x ^ other.x, z ^ other.z, phase * other.phase * graph::Phase::sign(flip_sign)};
}

PauliString PauliString::adjoint() const
{
    return {qubits, x, z, phase.conj() * graph::Phase::sign(std::popcount(x & z) % 2 == 1)};
}

bool PauliString::commutes_with(const PauliString& other) const
{
    return (std::popcount(x & other.z) + std::popcount(z & other.x)) % 2 == 0;
}

bool PauliString::is_self_adjoint() const
{
    return adjoint() == *this;
}

Complex PauliString::coefficient(std::uint64_t b) const
{
    const Complex c = phase.value();
    return std::popcount(z & b) % 2 == 1 ? -c : c;
}

void PauliString::apply(std::span<const Complex> in, std::span<Complex> out) const
{
    const std::size_t n = dim();
    if (in.size() != n || out.size() != n)
        throw InvalidArgument("PauliString::apply: vector length does not match dimension");
    const Complex c = phase.value();
    for (std::uint64_t b = 0; b < n; ++b) {
        const Complex v = std::popcount(z & b) % 2 == 1 ? -in[b] : in[b];
        out[b ^ x] = c * v;
    }
}

std::string PauliString::to_string() const
{
    std::string sites;
    graph::Phase p = phase;
    for (std::size_t i = 0; i < qubits; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << (qubits - 1 - i);
        const bool has_x = (x & bit) != 0;
        const bool has_z = (z & bit) != 0;
        if (has_x && has_z) {
            // XZ = -iY
            sites += 'Y';
            p = p * graph::Phase::minus_i();
        } else {
            sites += has_x ? 'X' : has_z ? 'Z' : 'I';
        }
    }
    return p.to_string() + " " + sites;
}

} // namespace ccrgraph::repr
