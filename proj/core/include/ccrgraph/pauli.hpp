#pragma once

#include "ccrgraph/words.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace ccrgraph::repr {

using Complex = std::complex<double>;

// phase · X^x · Z^z on `qubits` two-dimensional sites. Site i is bit
// (qubits-1-i) of a basis index, so site 0 is the leftmost tensor factor.
// The masks below are already in basis-index bit positions.
struct PauliString {
    std::size_t qubits = 0;
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    graph::Phase phase;

    static PauliString identity(std::size_t qubits) { return {qubits, 0, 0, graph::Phase::one()}; }
    // antidiag(1,1) at `site`
    static PauliString flip(std::size_t qubits, std::size_t site);
    // diag(1,-1) at `site`
    static PauliString sign(std::size_t qubits, std::size_t site);
    static std::uint64_t site_bit(std::size_t qubits, std::size_t site);

    std::size_t dim() const { return std::size_t{1} << qubits; }

    PauliString operator*(const PauliString& other) const;
    PauliString operator*(graph::Phase p) const { return {qubits, x, z, phase * p}; }
    PauliString adjoint() const;
    bool commutes_with(const PauliString& other) const;
    bool is_self_adjoint() const;
    bool same_masks(const PauliString& other) const { return x == other.x && z == other.z; }

    // Image of basis vector b: the string maps e_b to coefficient(b)·e_{b^x}.
    std::uint64_t target(std::uint64_t b) const { return b ^ x; }
    Complex coefficient(std::uint64_t b) const;

    // out = P·in; in and out must not alias and have length dim().
    void apply(std::span<const Complex> in, std::span<Complex> out) const;

    bool operator==(const PauliString&) const = default;

    // e.g. "+1 ZXI"; a site carrying both X and Z prints as Y with the phase adjusted.
    std::string to_string() const;
};

} // namespace ccrgraph::repr
