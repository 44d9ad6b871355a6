#include "ccrgraph/operator.hpp"

#include "ccrgraph/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ccrgraph::repr {

namespace {

void check_same_dim(const Operator& a, const Operator& b, const char* what)
{
    if (a.dim() != b.dim())
        throw InvalidArgument(std::string(what) + ": dimensions " + std::to_string(a.dim()) + " and " +
                              std::to_string(b.dim()) + " differ");
}

double norm2(std::span<const Complex> v)
{
    double s = 0;
    for (const auto& c : v)
        s += std::norm(c);
    return std::sqrt(s);
}

} // namespace

Operator::Operator(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries))
{
    if (data_.size() != dim * dim)
        throw InvalidArgument("Operator: expected " + std::to_string(dim * dim) + " entries, got " +
                              std::to_string(data_.size()));
    for (const auto& c : data_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InvalidArgument("Operator: non-finite entry");
}

Operator Operator::identity(std::size_t dim)
{
    Operator op(dim);
    for (std::size_t i = 0; i < dim; ++i)
        op(i, i) = 1.0;
    return op;
}

Operator Operator::from_pauli(const PauliString& p)
{
    Operator op(p.dim());
    for (std::uint64_t b = 0; b < p.dim(); ++b)
        op(p.target(b), b) = p.coefficient(b);
    return op;
}

Operator Operator::from_rows(std::initializer_list<std::initializer_list<Complex>> rows)
{
    const std::size_t dim = rows.size();
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (const auto& r : rows) {
        if (r.size() != dim)
            throw InvalidArgument("Operator::from_rows: matrix is not square");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Operator(dim, std::move(entries));
}

Operator Operator::adjoint() const
{
    Operator out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            out(c, r) = std::conj((*this)(r, c));
    return out;
}

Operator& Operator::operator+=(const Operator& other)
{
    check_same_dim(*this, other, "Operator +");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

Operator& Operator::operator-=(const Operator& other)
{
    check_same_dim(*this, other, "Operator -");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

Operator& Operator::operator*=(Complex s)
{
    for (auto& c : data_)
        c *= s;
    return *this;
}

Operator operator*(const Operator& a, const Operator& b)
{
    check_same_dim(a, b, "Operator *");
    const std::size_t n = a.dim();
    Operator out(n);
    for (std::size_t r = 0; r < n; ++r) {
        Complex* dst = out.data_.data() + r * n;
        for (std::size_t k = 0; k < n; ++k) {
            const Complex s = a(r, k);
            if (s == Complex{})
                continue;
            const Complex* src = b.data_.data() + k * n;
            for (std::size_t c = 0; c < n; ++c)
                dst[c] += s * src[c];
        }
    }
    return out;
}

std::vector<Complex> Operator::apply(std::span<const Complex> v) const
{
    if (v.size() != dim_)
        throw InvalidArgument("Operator::apply: vector length does not match dimension");
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex s{};
        for (std::size_t c = 0; c < dim_; ++c)
            s += data_[r * dim_ + c] * v[c];
        out[r] = s;
    }
    return out;
}

std::vector<Complex> Operator::apply_adjoint(std::span<const Complex> v) const
{
    if (v.size() != dim_)
        throw InvalidArgument("Operator::apply_adjoint: vector length does not match dimension");
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        const Complex s = v[r];
        if (s == Complex{})
            continue;
        for (std::size_t c = 0; c < dim_; ++c)
            out[c] += std::conj(data_[r * dim_ + c]) * s;
    }
    return out;
}

bool Operator::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Complex& c) { return c == Complex{}; });
}

double Operator::max_abs() const
{
    double m = 0;
    for (const auto& c : data_)
        m = std::max(m, std::abs(c));
    return m;
}

Complex Operator::trace_inner(const Operator& other) const
{
    check_same_dim(*this, other, "Operator::trace_inner");
    Complex s{};
    for (std::size_t i = 0; i < data_.size(); ++i)
        s += std::conj(data_[i]) * other.data_[i];
    return s;
}

Operator kron(const Operator& a, const Operator& b)
{
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    Operator out(na * nb);
    for (std::size_t ar = 0; ar < na; ++ar)
        for (std::size_t ac = 0; ac < na; ++ac) {
            const Complex s = a(ar, ac);
            if (s == Complex{})
                continue;
            for (std::size_t br = 0; br < nb; ++br)
                for (std::size_t bc = 0; bc < nb; ++bc)
                    out(ar * nb + br, ac * nb + bc) = s * b(br, bc);
        }
    return out;
}

double operator_norm(std::size_t dim, const LinearMap& apply, const LinearMap& apply_adjoint, NormOptions options)
{
    if (dim == 0)
        return 0;
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> gauss;
    std::vector<Complex> x(dim);
    for (auto& c : x)
        c = {gauss(rng), gauss(rng)};
    std::vector<Complex> ax(dim);
    std::vector<Complex> bx(dim);

    double scale = norm2(x);
    for (auto& c : x)
        c /= scale;
    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        apply(x, ax);
        apply_adjoint(ax, bx);
        // Rayleigh quotient of A†A at unit x.
        const double a_norm = norm2(ax);
        const double lambda = a_norm * a_norm;
        if (lambda == 0)
            return 0;
        double residual = 0;
        for (std::size_t i = 0; i < dim; ++i)
            residual += std::norm(bx[i] - lambda * x[i]);
        residual = std::sqrt(residual);
        if (residual <= options.tolerance * lambda)
            return std::sqrt(lambda);
        scale = norm2(bx);
        for (std::size_t i = 0; i < dim; ++i)
            x[i] = bx[i] / scale;
    }
    throw NonConvergence("operator_norm: power iteration did not reach residual " +
                         std::to_string(options.tolerance) + " within " + std::to_string(options.max_iterations) +
                         " iterations");
}

double operator_norm(const Operator& op, NormOptions options)
{
    if (op.is_zero())
        return 0;
    const std::size_t n = op.dim();
    auto apply = [&](std::span<const Complex> in, std::span<Complex> out) {
        std::fill(out.begin(), out.end(), Complex{});
        for (std::size_t r = 0; r < n; ++r) {
            const auto row = op.row(r);
            Complex s{};
            for (std::size_t c = 0; c < n; ++c)
                s += row[c] * in[c];
            out[r] = s;
        }
    };
    auto apply_adjoint = [&](std::span<const Complex> in, std::span<Complex> out) {
        std::fill(out.begin(), out.end(), Complex{});
        for (std::size_t r = 0; r < n; ++r) {
            const Complex s = in[r];
            if (s == Complex{})
                continue;
            const auto row = op.row(r);
            for (std::size_t c = 0; c < n; ++c)
                out[c] += std::conj(row[c]) * s;
        }
    };
    return operator_norm(n, apply, apply_adjoint, options);
}

} // namespace ccrgraph::repr
