#pragma once

#include "ccrgraph/pauli.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ccrgraph::repr {

inline constexpr std::size_t kDefaultDimensionCap = 4096;

// Dense square complex matrix, row-major.
class Operator {
public:
    Operator() = default;
    explicit Operator(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    // Throws InvalidArgument unless entries.size() == dim² and every entry is finite.
    Operator(std::size_t dim, std::vector<Complex> entries);

    static Operator identity(std::size_t dim);
    static Operator from_pauli(const PauliString& p);
    static Operator from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const { return dim_; }
    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    Complex operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    std::span<const Complex> data() const { return data_; }
    std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * dim_, dim_}; }

    Operator adjoint() const;
    Operator& operator+=(const Operator& other);
    Operator& operator-=(const Operator& other);
    Operator& operator*=(Complex s);

    // Zero entries of the left factor are skipped, so monomial operators multiply in O(dim²).
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator*(Complex s, Operator a) { return a *= s; }

    std::vector<Complex> apply(std::span<const Complex> v) const;
    std::vector<Complex> apply_adjoint(std::span<const Complex> v) const;

    bool is_zero() const;
    double max_abs() const;
    // tr(this† · other)
    Complex trace_inner(const Operator& other) const;

    bool operator==(const Operator&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

Operator kron(const Operator& a, const Operator& b);

struct NormOptions {
    double tolerance = 1e-10;  // stop when ‖A†A·x − λx‖ <= tolerance·λ
    std::size_t max_iterations = 500000;
    std::uint64_t seed = 0;     // start vector
};

using LinearMap = std::function<void(std::span<const Complex>, std::span<Complex>)>;

// Largest singular value by power iteration on A†A. Throws NonConvergence
// after max_iterations.
double operator_norm(const Operator& op, NormOptions options = {});
double operator_norm(std::size_t dim, const LinearMap& apply, const LinearMap& apply_adjoint,
                     NormOptions options = {});

} // namespace ccrgraph::repr
