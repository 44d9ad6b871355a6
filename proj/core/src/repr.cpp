#include "ccrgraph/repr.hpp"

#include "ccrgraph/errors.hpp"
#include "ccrgraph/gf2.hpp"
#include "ccrgraph/switching.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <stdexcept>

namespace ccrgraph::repr {

namespace {

using graph::Graph;
using graph::VertexSet;
using MatrixXc = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kRankThreshold = 1e-8;    // relative to the largest eigenvalue
constexpr double kRankFloor = 1e-9;        // absolute; below this the matrix counts as zero
constexpr std::uint64_t kGramBudget = std::uint64_t{1} << 24;
constexpr std::size_t kMaxWordVertices = 10;
constexpr std::size_t kDenseCommutantDim = 32;
constexpr double kPreconditionTolerance = 1e-9;

std::size_t checked_qubits(std::size_t qubits, std::size_t cap, const char* what)
{
    if (qubits > 62 || (std::size_t{1} << qubits) > cap)
        throw LimitExceeded(std::string(what) + ": dimension 2^" + std::to_string(qubits) + " exceeds cap " +
                            std::to_string(cap));
    return qubits;
}

// Exact relation check on the Pauli form.
void check_pattern(const Graph& g, const std::vector<PauliString>& strings, const char* what)
{
    for (std::size_t a = 0; a < strings.size(); ++a) {
        if (!strings[a].is_self_adjoint())
            throw std::logic_error(std::string(what) + ": generator " + std::to_string(a) + " is not self-adjoint");
        for (std::size_t b = a + 1; b < strings.size(); ++b)
            if (strings[a].commutes_with(strings[b]) == g.adjacent(a, b))
                throw std::logic_error(std::string(what) + ": generators " + std::to_string(a) + ", " +
                                       std::to_string(b) + " break the commutation pattern");
    }
}

Representation materialize(const Graph& g, std::vector<PauliString> strings, std::size_t qubits, Kind kind,
                           const ReprOptions& options)
{
    Representation rep;
    rep.graph = g;
    rep.dim = std::size_t{1} << qubits;
    rep.kind = kind;
    rep.tolerance = options.tolerance;
    rep.generators.reserve(strings.size());
    for (const auto& s : strings)
        rep.generators.push_back(Operator::from_pauli(s));
    rep.strings = std::move(strings);
    return rep;
}

std::vector<PauliString> pair_strings(const Graph& g, std::size_t qubits)
{
    const std::size_t n = g.size();
    std::vector<PauliString> u(n, PauliString::identity(qubits));
    std::size_t site = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++site) {
            if (!g.adjacent(i, j))
                continue;
            u[i] = u[i] * PauliString::sign(qubits, site);
            u[j] = u[j] * PauliString::flip(qubits, site);
        }
    return u;
}

std::vector<PauliString> bipartite_strings(const setfam::SetFamily& fam)
{
    const std::size_t q = fam.universe_size();
    std::vector<PauliString> u;
    for (std::size_t i = 0; i < q; ++i)
        u.push_back(PauliString::flip(q, i));
    for (const auto& x : fam.members()) {
        PauliString v = PauliString::identity(q);
        x.for_each_set([&](std::size_t i) { v = v * PauliString::sign(q, i); });
        u.push_back(v);
    }
    return u;
}

bool strings_match(const Representation& rep)
{
    if (rep.strings.size() != rep.generators.size())
        return false;
    for (std::size_t i = 0; i < rep.strings.size(); ++i)
        if (rep.strings[i].dim() != rep.dim || Operator::from_pauli(rep.strings[i]) != rep.generators[i])
            return false;
    return true;
}

double deviation(const Operator& op)
{
    return op.is_zero() ? 0.0 : operator_norm(op);
}

// Row-compressed copy of an operator. Generators built from Pauli strings
// have one entry per row, so relation checks stay linear in the dimension.
class SparseOp {
public:
    using Row = std::vector<std::pair<std::size_t, Complex>>;

    explicit SparseOp(const Operator& op) : rows_(op.dim())
    {
        for (std::size_t r = 0; r < op.dim(); ++r)
            for (std::size_t c = 0; c < op.dim(); ++c)
                if (op(r, c) != Complex{})
                    rows_[r].emplace_back(c, op(r, c));
    }

    static SparseOp identity(std::size_t dim)
    {
        SparseOp out(dim);
        for (std::size_t r = 0; r < dim; ++r)
            out.rows_[r].emplace_back(r, Complex{1.0});
        return out;
    }

    std::size_t dim() const { return rows_.size(); }

    // a * b
    friend SparseOp operator*(const SparseOp& a, const SparseOp& b)
    {
        SparseOp out(a.dim());
        for (std::size_t r = 0; r < a.dim(); ++r) {
            Row acc;
            for (const auto& [k, s] : a.rows_[r])
                for (const auto& [c, t] : b.rows_[k])
                    acc.emplace_back(c, s * t);
            out.rows_[r] = merge(std::move(acc));
        }
        return out;
    }

    // a + sign * b
    static SparseOp combine(const SparseOp& a, const SparseOp& b, double sign)
    {
        SparseOp out(a.dim());
        for (std::size_t r = 0; r < a.dim(); ++r) {
            Row acc = a.rows_[r];
            for (const auto& [c, t] : b.rows_[r])
                acc.emplace_back(c, sign * t);
            out.rows_[r] = merge(std::move(acc));
        }
        return out;
    }

    SparseOp adjoint() const
    {
        SparseOp out(dim());
        for (std::size_t r = 0; r < dim(); ++r)
            for (const auto& [c, t] : rows_[r])
                out.rows_[c].emplace_back(r, std::conj(t));
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(rows_.begin(), rows_.end(), [](const Row& row) { return row.empty(); });
    }

    void apply(std::span<const Complex> in, std::span<Complex> out) const
    {
        for (std::size_t r = 0; r < dim(); ++r) {
            Complex s{};
            for (const auto& [c, t] : rows_[r])
                s += t * in[c];
            out[r] = s;
        }
    }

private:
    explicit SparseOp(std::size_t dim) : rows_(dim) {}

    // Sorts by column, sums duplicates and drops exact zeros.
    static Row merge(Row acc)
    {
        std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        Row out;
        for (const auto& [c, t] : acc) {
            if (!out.empty() && out.back().first == c)
                out.back().second += t;
            else
                out.emplace_back(c, t);
        }
        std::erase_if(out, [](const auto& e) { return e.second == Complex{}; });
        return out;
    }

    std::vector<Row> rows_;
};

double deviation(const SparseOp& op)
{
    if (op.is_zero())
        return 0.0;
    const SparseOp adj = op.adjoint();
    return operator_norm(
        op.dim(), [&](std::span<const Complex> in, std::span<Complex> out) { op.apply(in, out); },
        [&](std::span<const Complex> in, std::span<Complex> out) { adj.apply(in, out); });
}

std::vector<SparseOp> sparse_generators(const Representation& rep)
{
    std::vector<SparseOp> out;
    out.reserve(rep.generators.size());
    for (const auto& u : rep.generators)
        out.emplace_back(u);
    return out;
}

std::size_t numeric_rank(const MatrixXc& hermitian)
{
    if (hermitian.rows() == 0)
        return 0;
    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(hermitian, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    const double top = ev.maxCoeff();
    if (top <= kRankFloor)
        return 0;
    return static_cast<std::size_t>((ev.array() > kRankThreshold * top).count());
}

void check_word_budget(const Representation& rep, const char* what)
{
    const std::size_t n = rep.generators.size();
    if (n > kMaxWordVertices ||
        (std::uint64_t{1} << n) * static_cast<std::uint64_t>(rep.dim) * rep.dim > kGramBudget)
        throw LimitExceeded(std::string(what) + ": 2^" + std::to_string(n) + " words of dimension " +
                            std::to_string(rep.dim) + " exceed the Gram budget of 2^24 entries");
}

// w_s = ∏_{v in s} u_v for every subset s (bit v of the index), built by
// extending s \ {max s}.
std::vector<Operator> all_words(const Representation& rep)
{
    const std::size_t n = rep.generators.size();
    std::vector<Operator> words(std::size_t{1} << n);
    words[0] = Operator::identity(rep.dim);
    for (std::size_t s = 1; s < words.size(); ++s) {
        const std::size_t top = static_cast<std::size_t>(std::bit_width(s) - 1);
        words[s] = words[s ^ (std::size_t{1} << top)] * rep.generators[top];
    }
    return words;
}

MatrixXc gram_rows(std::size_t rows, std::size_t width)
{
    return MatrixXc::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(width));
}

void set_row(MatrixXc& m, std::size_t r, const Operator& op, double scale)
{
    const auto data = op.data();
    for (std::size_t c = 0; c < data.size(); ++c)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = data[c] * scale;
}

MatrixXc to_eigen(const Operator& op)
{
    const auto n = static_cast<Eigen::Index>(op.dim());
    MatrixXc m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            m(r, c) = op(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    return m;
}

// m += sign · (a ⊗ b)
void add_kron(MatrixXc& m, const MatrixXc& a, const MatrixXc& b, double sign)
{
    const Eigen::Index nb = b.rows();
    for (Eigen::Index ar = 0; ar < a.rows(); ++ar)
        for (Eigen::Index ac = 0; ac < a.cols(); ++ac) {
            const Complex s = a(ar, ac) * sign;
            if (s == Complex{})
                continue;
            m.block(ar * nb, ac * nb, nb, nb) += s * b;
        }
}

std::uint64_t commutant_dense(const Representation& rep)
{
    if (rep.dim > kDenseCommutantDim)
        throw LimitExceeded("commutant_dimension: dense route limited to dimension 32, got " +
                            std::to_string(rep.dim));
    const auto d = static_cast<Eigen::Index>(rep.dim);
    const Eigen::Index big = d * d;
    if (rep.generators.empty())
        return static_cast<std::uint64_t>(big);
    // Row-major vec: vec(AXB) = (A ⊗ Bᵀ) vec(X). With K = I⊗uᵀ − u⊗I,
    // K†K = I⊗(ū uᵀ) − u⊗ū − u†⊗uᵀ + (u†u)⊗I.
    MatrixXc m = MatrixXc::Zero(big, big);
    const MatrixXc eye = MatrixXc::Identity(d, d);
    for (const auto& g : rep.generators) {
        const MatrixXc u = to_eigen(g);
        const MatrixXc ubar = u.conjugate();
        const MatrixXc ut = u.transpose();
        const MatrixXc uh = u.adjoint();
        add_kron(m, eye, ubar * ut, 1.0);
        add_kron(m, u, ubar, -1.0);
        add_kron(m, uh, ut, -1.0);
        add_kron(m, uh * u, eye, 1.0);
    }
    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    const double threshold = kRankThreshold * std::max(ev.maxCoeff(), 1.0);
    return static_cast<std::uint64_t>((ev.array() <= threshold).count());
}

// X^a Z^b commutes with X^x Z^z iff |a∧z| + |b∧x| is even; the commutant is
// spanned by the strings satisfying this against every generator.
std::uint64_t commutant_pauli(const Representation& rep)
{
    const std::size_t q = static_cast<std::size_t>(std::countr_zero(rep.dim));
    if (2 * q > 63)
        throw LimitExceeded("commutant_dimension: 4^" + std::to_string(q) + " does not fit in 64 bits");
    gf2::BitMatrix constraints(rep.strings.size(), 2 * q);
    for (std::size_t g = 0; g < rep.strings.size(); ++g)
        for (std::size_t t = 0; t < q; ++t) {
            constraints.set(g, t, (rep.strings[g].z >> t) & 1U);
            constraints.set(g, q + t, (rep.strings[g].x >> t) & 1U);
        }
    return std::uint64_t{1} << (2 * q - gf2::rank(constraints));
}

double inner_magnitude(std::span<const Complex> bxi, std::span<const Complex> xi)
{
    Complex s{};
    for (std::size_t i = 0; i < xi.size(); ++i)
        s += bxi[i] * std::conj(xi[i]);
    return std::abs(s);
}

// Orthonormal basis of the range of (I + sign·u)/2 by Gram-Schmidt on its columns.
std::vector<std::vector<Complex>> eigenbasis(const Operator& u, double sign)
{
    const std::size_t n = u.dim();
    double trace = 0;
    for (std::size_t i = 0; i < n; ++i)
        trace += (1.0 + sign * u(i, i).real()) / 2;
    const auto target = static_cast<std::size_t>(std::lround(trace));
    std::vector<std::vector<Complex>> basis;
    for (std::size_t c = 0; c < n && basis.size() < target; ++c) {
        std::vector<Complex> v(n);
        for (std::size_t r = 0; r < n; ++r)
            v[r] = ((r == c ? 1.0 : 0.0) + sign * u(r, c)) / 2.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& e : basis) {
                Complex dot{};
                for (std::size_t r = 0; r < n; ++r)
                    dot += std::conj(e[r]) * v[r];
                for (std::size_t r = 0; r < n; ++r)
                    v[r] -= dot * e[r];
            }
        double len = 0;
        for (const auto& z : v)
            len += std::norm(z);
        len = std::sqrt(len);
        if (len < 1e-6)
            continue;
        for (auto& z : v)
            z /= len;
        basis.push_back(std::move(v));
    }
    return basis;
}

void check_support(std::size_t n, const graph::GeneratorWord& w, const char* what)
{
    if (w.support.size() != n)
        throw InvalidArgument(std::string(what) + ": word has width " + std::to_string(w.support.size()) +
                              ", representation has " + std::to_string(n) + " generators");
}

} // namespace

std::string to_string(Kind kind)
{
    switch (kind) {
    case Kind::pairs:
        return "pairs";
    case Kind::bipartite:
        return "bipartite";
    case Kind::canonical:
        return "canonical";
    }
    return "unknown";
}

Representation rep_pairs(const Graph& g, ReprOptions options)
{
    const std::size_t n = g.size();
    const std::size_t q = checked_qubits(n * (n - std::min<std::size_t>(n, 1)) / 2, options.cap, "rep_pairs");
    auto strings = pair_strings(g, q);
    check_pattern(g, strings, "rep_pairs");
    return materialize(g, std::move(strings), q, Kind::pairs, options);
}

Representation rep_bipartite(const setfam::SetFamily& fam, ReprOptions options)
{
    const std::size_t q = checked_qubits(fam.universe_size(), options.cap, "rep_bipartite");
    const Graph g = setfam::bipartite_graph(fam);
    auto strings = bipartite_strings(fam);
    check_pattern(g, strings, "rep_bipartite");
    return materialize(g, std::move(strings), q, Kind::bipartite, options);
}

Representation rep_canonical(const Graph& g, ReprOptions options)
{
    const graph::CanonicalForm form = graph::canonicalize(g);
    const std::size_t q = checked_qubits(form.k + form.l, options.cap, "rep_canonical");
    const Graph target = Graph::canonical(form.k, form.l);

    std::vector<PauliString> canonical;
    for (std::size_t j = 0; j < form.k; ++j) {
        canonical.push_back(PauliString::sign(q, j));
        canonical.push_back(PauliString::flip(q, j));
    }
    for (std::size_t r = 0; r < form.l; ++r)
        canonical.push_back(PauliString::sign(q, form.k + r));

    // Original vertex x is the product of the canonical vertices in column x
    // of the inverse basis change.
    std::vector<PauliString> strings;
    for (std::size_t x = 0; x < g.size(); ++x) {
        const VertexSet support = form.basis.inverse.column(x);
        PauliString s = PauliString::identity(q);
        support.for_each_set([&](std::size_t c) { s = s * canonical[c]; });
        strings.push_back(s * graph::self_adjoint_phase(target, support));
    }
    check_pattern(g, strings, "rep_canonical");
    return materialize(g, std::move(strings), q, Kind::canonical, options);
}

double RelationReport::max_deviation() const
{
    return std::max({self_adjoint, unitary, anticommute, commute});
}

RelationReport verify_relations(const Representation& rep)
{
    RelationReport report;
    const std::size_t n = rep.generators.size();
    const SparseOp eye = SparseOp::identity(rep.dim);
    const auto gens = sparse_generators(rep);
    auto record = [&](double& slot, double value, std::string name) {
        slot = std::max(slot, value);
        if (!(value <= rep.tolerance)) {
            report.pass = false;
            report.failures.push_back(std::move(name));
        }
    };
    for (std::size_t a = 0; a < n; ++a) {
        const SparseOp& u = gens[a];
        record(report.self_adjoint, deviation(SparseOp::combine(u, u.adjoint(), -1)),
               "self_adjoint " + std::to_string(a));
        record(report.unitary, deviation(SparseOp::combine(u * u, eye, -1)), "unitary " + std::to_string(a));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const SparseOp uv = gens[a] * gens[b];
            const SparseOp vu = gens[b] * gens[a];
            const std::string pair = std::to_string(a) + " " + std::to_string(b);
            if (rep.graph.adjacent(a, b))
                record(report.anticommute, deviation(SparseOp::combine(uv, vu, 1)), "anticommute " + pair);
            else
                record(report.commute, deviation(SparseOp::combine(uv, vu, -1)), "commute " + pair);
        }
    return report;
}

std::size_t span_dimension(const Representation& rep)
{
    check_word_budget(rep, "span_dimension");
    const auto words = all_words(rep);
    const double scale = 1.0 / std::sqrt(static_cast<double>(rep.dim));
    MatrixXc w = gram_rows(words.size(), rep.dim * rep.dim);
    for (std::size_t s = 0; s < words.size(); ++s)
        set_row(w, s, words[s], scale);
    return numeric_rank(w * w.adjoint());
}

std::size_t center_dimension(const Representation& rep)
{
    check_word_budget(rep, "center_dimension");
    const auto words = all_words(rep);
    const double scale = 1.0 / std::sqrt(static_cast<double>(rep.dim));
    MatrixXc w = gram_rows(words.size(), rep.dim * rep.dim);
    for (std::size_t s = 0; s < words.size(); ++s)
        set_row(w, s, words[s], scale);
    const std::size_t word_rank = numeric_rank(w * w.adjoint());

    MatrixXc lifted = MatrixXc::Zero(w.rows(), w.rows());
    for (const auto& u : rep.generators) {
        for (std::size_t s = 0; s < words.size(); ++s)
            set_row(w, s, words[s] * u - u * words[s], scale);
        lifted += w * w.adjoint();
    }
    return word_rank - numeric_rank(lifted);
}

std::uint64_t commutant_dimension(const Representation& rep, CommutantMethod method)
{
    switch (method) {
    case CommutantMethod::dense:
        return commutant_dense(rep);
    case CommutantMethod::pauli:
        if (!strings_match(rep))
            throw InvalidArgument("commutant_dimension: generators are not the stored Pauli strings");
        return commutant_pauli(rep);
    case CommutantMethod::automatic:
        break;
    }
    return strings_match(rep) ? commutant_pauli(rep) : commutant_dense(rep);
}

double min_generator_distance(const Representation& rep)
{
    const std::size_t n = rep.generators.size();
    if (n < 2)
        throw InvalidArgument("min_generator_distance: needs at least two generators");
    const auto gens = sparse_generators(rep);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            best = std::min(best, deviation(SparseOp::combine(gens[a], gens[b], -1)));
    return best;
}

Operator word_to_operator(const Representation& rep, const graph::GeneratorWord& w)
{
    check_support(rep.generators.size(), w, "word_to_operator");
    Operator out = Operator::identity(rep.dim);
    w.support.for_each_set([&](std::size_t v) { out = out * rep.generators[v]; });
    if (w.phase != graph::Phase::one())
        out *= w.phase.value();
    return out;
}

TensorGap tensor_gap_bound(const Operator& a, const Operator& b, const Operator& v, const Operator& w,
                           std::size_t samples, double tolerance)
{
    if (a.dim() != b.dim() || v.dim() != w.dim())
        throw InvalidArgument("tensor_gap_bound: a, b and v, w must have matching dimensions");
    if (samples == 0)
        throw InvalidArgument("tensor_gap_bound: samples must be positive");
    for (const Operator* u : {&v, &w}) {
        const double off = deviation(u->adjoint() * *u - Operator::identity(u->dim()));
        if (off > tolerance)
            throw InvalidArgument("tensor_gap_bound: v and w must be unitary (deviation " + std::to_string(off) +
                                  ")");
    }
    TensorGap gap;
    gap.lhs = deviation(kron(a, v) - kron(b, w));
    gap.rhs = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < samples; ++k) {
        const Complex lambda = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / samples);
        gap.rhs = std::min(gap.rhs, deviation(lambda * a - b));
    }
    // ‖λa − b‖ is ‖a‖-Lipschitz in λ and every point of the circle lies within
    // chord π/samples of the grid.
    const double norm_a = deviation(a);
    gap.slack = std::numbers::pi / samples * norm_a + 1e-8 * (norm_a + deviation(b) + 1);
    return gap;
}

double state_vanishing_check(const Representation& rep, std::size_t u_index, const graph::GeneratorWord& word)
{
    if (u_index >= rep.generators.size())
        throw InvalidArgument("state_vanishing_check: generator index out of range");
    const Operator& u = rep.generators[u_index];
    const Operator b = word_to_operator(rep, word);
    if (deviation(u * b + b * u) > kPreconditionTolerance)
        throw InvalidArgument("state_vanishing_check: word " + word.to_string() + " does not anticommute with u_" +
                              std::to_string(u_index));
    double worst = 0;
    for (double sign : {1.0, -1.0})
        for (const auto& xi : eigenbasis(u, sign))
            worst = std::max(worst, inner_magnitude(b.apply(xi), xi));
    return worst;
}

LazyRepresentation lazy_rep_pairs(const Graph& g, std::size_t max_qubits)
{
    const std::size_t n = g.size();
    const std::size_t q = n * (n - std::min<std::size_t>(n, 1)) / 2;
    if (q > max_qubits)
        throw LimitExceeded("lazy_rep_pairs: " + std::to_string(q) + " sites exceed the lazy cap of " +
                            std::to_string(max_qubits));
    LazyRepresentation rep{g, q, pair_strings(g, q), Kind::pairs};
    check_pattern(g, rep.strings, "lazy_rep_pairs");
    return rep;
}

LazyRepresentation lazy_rep_bipartite(const setfam::SetFamily& fam, std::size_t max_qubits)
{
    const std::size_t q = fam.universe_size();
    if (q > max_qubits)
        throw LimitExceeded("lazy_rep_bipartite: " + std::to_string(q) + " sites exceed the lazy cap of " +
                            std::to_string(max_qubits));
    LazyRepresentation rep{setfam::bipartite_graph(fam), q, bipartite_strings(fam), Kind::bipartite};
    check_pattern(rep.graph, rep.strings, "lazy_rep_bipartite");
    return rep;
}

PauliString word_string(const LazyRepresentation& rep, const graph::GeneratorWord& w)
{
    check_support(rep.strings.size(), w, "word_string");
    PauliString out = PauliString::identity(rep.qubits);
    w.support.for_each_set([&](std::size_t v) { out = out * rep.strings[v]; });
    return out * w.phase;
}

std::vector<Complex> apply_word(const LazyRepresentation& rep, const graph::GeneratorWord& w,
                                std::span<const Complex> state)
{
    std::vector<Complex> out(rep.dim());
    word_string(rep, w).apply(state, out);
    return out;
}

double min_generator_distance(const LazyRepresentation& rep)
{
    const std::size_t n = rep.strings.size();
    if (n < 2)
        throw InvalidArgument("min_generator_distance: needs at least two generators");
    const std::size_t dim = rep.dim();
    std::vector<Complex> tmp(dim);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const PauliString& p = rep.strings[a];
            const PauliString& q = rep.strings[b];
            if (p == q) {
                best = 0;
                continue;
            }
            auto difference = [&](const PauliString& lhs, const PauliString& rhs) {
                return [&, lhs, rhs](std::span<const Complex> in, std::span<Complex> out) {
                    lhs.apply(in, out);
                    rhs.apply(in, tmp);
                    for (std::size_t i = 0; i < dim; ++i)
                        out[i] -= tmp[i];
                };
            };
            best = std::min(best, operator_norm(dim, difference(p, q), difference(p.adjoint(), q.adjoint())));
        }
    return best;
}

double state_vanishing_check(const LazyRepresentation& rep, std::size_t u_index, const graph::GeneratorWord& word,
                             std::size_t samples, std::mt19937_64& rng)
{
    if (u_index >= rep.strings.size())
        throw InvalidArgument("state_vanishing_check: generator index out of range");
    const PauliString& u = rep.strings[u_index];
    const PauliString b = word_string(rep, word);
    if (u.commutes_with(b))
        throw InvalidArgument("state_vanishing_check: word " + word.to_string() + " does not anticommute with u_" +
                              std::to_string(u_index));
    const std::size_t dim = rep.dim();
    std::normal_distribution<double> gauss;
    std::vector<Complex> phi(dim);
    std::vector<Complex> uphi(dim);
    std::vector<Complex> xi(dim);
    std::vector<Complex> bxi(dim);
    double worst = 0;
    for (std::size_t t = 0; t < samples; ++t) {
        for (auto& c : phi)
            c = {gauss(rng), gauss(rng)};
        u.apply(phi, uphi);
        for (double sign : {1.0, -1.0}) {
            double len = 0;
            for (std::size_t i = 0; i < dim; ++i) {
                xi[i] = phi[i] + sign * uphi[i];
                len += std::norm(xi[i]);
            }
            len = std::sqrt(len);
            if (len < 1e-6)
                continue;
            for (auto& c : xi)
                c /= len;
            b.apply(xi, bxi);
            worst = std::max(worst, inner_magnitude(bxi, xi));
        }
    }
    return worst;
}

} // namespace ccrgraph::repr
