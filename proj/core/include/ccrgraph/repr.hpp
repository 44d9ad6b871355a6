#pragma once

#include "ccrgraph/graph.hpp"
#include "ccrgraph/operator.hpp"
#include "ccrgraph/pauli.hpp"
#include "ccrgraph/setfam.hpp"
#include "ccrgraph/words.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

// Explicit finite-dimensional representations of B(G): one self-adjoint
// unitary per vertex, adjacent vertices anticommuting, the rest commuting.
// Every generator built here is a phased Pauli string; the dense matrices
// are materialized from those strings, and all checks below run on the
// dense matrices.
namespace ccrgraph::repr {

enum class Kind { pairs, bipartite, canonical };

std::string to_string(Kind kind);

struct ReprOptions {
    std::size_t cap = kDefaultDimensionCap;
    double tolerance = 1e-12;
};

struct Representation {
    graph::Graph graph;
    std::size_t dim = 1;
    std::vector<Operator> generators;  // one per vertex
    // Pauli form of each generator. Code that edits `generators` should
    // clear this; stale strings are detected and ignored.
    std::vector<PauliString> strings;
    Kind kind = Kind::pairs;
    double tolerance = 1e-12;
};

// One site per pair i<j (lexicographic). u_k carries diag(1,-1) at (k,j) and
// antidiag(1,1) at (i,k) for every edge. Not faithful: an isolated vertex
// gets the identity, so graphs with two isolated vertices have repeated
// generators. Use rep_canonical when faithfulness matters.
Representation rep_pairs(const graph::Graph& g, ReprOptions options = {});

// Sites are the universe. Element i flips site i; member x is the sign mask
// on its elements. Generator order follows bipartite_graph(fam).
Representation rep_bipartite(const setfam::SetFamily& fam, ReprOptions options = {});

// Faithful representation on (C²)^{⊗k} ⊗ C^{2^l}: canonical pair j is
// (diag, antidiag) at site j, unmatched vertex r is the sign at site k+r;
// every original vertex is the self-adjoint word over canonical generators
// given by the inverse of the canonicalizing basis change.
Representation rep_canonical(const graph::Graph& g, ReprOptions options = {});

struct RelationReport {
    double self_adjoint = 0;  // max ‖u − u†‖
    double unitary = 0;       // max ‖u² − 1‖
    double anticommute = 0;   // max ‖uv + vu‖ over edges
    double commute = 0;       // max ‖uv − vu‖ over non-edges
    bool pass = true;
    std::vector<std::string> failures;  // e.g. "anticommute 0 1"

    double max_deviation() const;
};

RelationReport verify_relations(const Representation& rep);

// Rank of the Gram matrix tr(w_s† w_t)/dim over all 2^n words; eigenvalues
// below 1e-8 × the largest count as zero. Throws LimitExceeded when
// 2^n·dim² exceeds 2^24.
std::size_t span_dimension(const Representation& rep);

// Dimension of the span of the words intersected with the commutant of the
// generators: rank(words) − rank(words after X ↦ ([X,u_i])_i).
std::size_t center_dimension(const Representation& rep);

enum class CommutantMethod {
    automatic,  // pauli when the strings match the generators, else dense
    dense,      // null space of Σ_i K_i†K_i, K_i = X ↦ Xu_i − u_iX; dim <= 32
    pauli,      // exact: Pauli strings commuting with every generator
};

std::uint64_t commutant_dimension(const Representation& rep, CommutantMethod method = CommutantMethod::automatic);

// Minimum over vertex pairs of ‖u_x − u_y‖. Throws InvalidArgument with fewer
// than two generators.
double min_generator_distance(const Representation& rep);

// phase · ∏ generators over the support, increasing.
Operator word_to_operator(const Representation& rep, const graph::GeneratorWord& w);

struct TensorGap {
    double lhs = 0;    // ‖a⊗v − b⊗w‖
    double rhs = 0;    // min over the λ-grid of ‖λa − b‖
    double slack = 0;  // grid error bound: (π/samples)·‖a‖ plus rounding
};

// Throws InvalidArgument when v or w is not unitary within `tolerance`, or
// the shapes disagree.
TensorGap tensor_gap_bound(const Operator& a, const Operator& b, const Operator& v, const Operator& w,
                           std::size_t samples, double tolerance = 1e-10);

// max |⟨bξ, ξ⟩| over an orthonormal eigenbasis of u's ±1 eigenspaces, b the
// operator of `word`. Throws InvalidArgument unless b anticommutes with u.
double state_vanishing_check(const Representation& rep, std::size_t u_index, const graph::GeneratorWord& word);

// Generators kept as Pauli strings and applied to state vectors directly;
// no dense matrices. Reaches rep_pairs on 6 vertices (dim 32768).
struct LazyRepresentation {
    graph::Graph graph;
    std::size_t qubits = 0;
    std::vector<PauliString> strings;
    Kind kind = Kind::pairs;

    std::size_t dim() const { return std::size_t{1} << qubits; }
};

inline constexpr std::size_t kLazyQubitCap = 20;

LazyRepresentation lazy_rep_pairs(const graph::Graph& g, std::size_t max_qubits = kLazyQubitCap);
LazyRepresentation lazy_rep_bipartite(const setfam::SetFamily& fam, std::size_t max_qubits = kLazyQubitCap);

PauliString word_string(const LazyRepresentation& rep, const graph::GeneratorWord& w);
std::vector<Complex> apply_word(const LazyRepresentation& rep, const graph::GeneratorWord& w,
                                std::span<const Complex> state);

double min_generator_distance(const LazyRepresentation& rep);

// As the dense check, with `samples` seeded random vectors projected onto
// each eigenspace of u in place of a full eigenbasis.
double state_vanishing_check(const LazyRepresentation& rep, std::size_t u_index, const graph::GeneratorWord& word,
                             std::size_t samples, std::mt19937_64& rng);

} // namespace ccrgraph::repr
