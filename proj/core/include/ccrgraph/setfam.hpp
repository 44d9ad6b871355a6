#pragma once

#include "ccrgraph/bitvector.hpp"
#include "ccrgraph/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ccrgraph::setfam {

// Indexed multiset of subsets of Y = {0..universe_size-1}. Duplicates and
// empty members are allowed; indices are part of the identity (the double
// dual is the identity only with indices preserved).
class SetFamily {
public:
    SetFamily() = default;
    explicit SetFamily(std::size_t universe_size) : universe_size_(universe_size) {}
    SetFamily(std::size_t universe_size, std::vector<BitVector> members);
    SetFamily(std::size_t universe_size, const std::vector<std::vector<std::size_t>>& members);

    static SetFamily singletons(std::size_t m);
    // All 2^m subsets in binary counting order (member t has characteristic vector t).
    static SetFamily power_set(std::size_t m);
    // power_set without the empty set; member t-1 is the set t.
    static SetFamily nonempty_subsets(std::size_t m);
    static SetFamily random(std::size_t m, std::size_t members, double p, std::mt19937_64& rng);

    std::size_t universe_size() const { return universe_size_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<BitVector>& members() const { return members_; }
    const BitVector& member(std::size_t i) const { return members_[i]; }

    void add(BitVector member);
    void replace(std::size_t i, BitVector member);
    void toggle(std::size_t i, std::size_t element) { members_.at(i).flip(element); }

    // Drops repeated members, keeping the first occurrence.
    SetFamily deduplicated() const;

    bool operator==(const SetFamily&) const = default;

private:
    std::size_t universe_size_ = 0;
    std::vector<BitVector> members_;
};

// F: member indices, G: universe elements.
struct FinitePair {
    BitVector f;
    BitVector g;

    bool operator==(const FinitePair&) const = default;
};

struct Selection {
    std::vector<std::size_t> f;  // members intersected
    std::vector<std::size_t> g;  // members removed
};

struct IndependenceResult {
    bool independent = true;
    std::optional<Selection> counterexample;  // first empty ∩F \ ∪G found
};

// Checks every disjoint (F, G) with F nonempty and |F| + |G| <= max_selection,
// smallest total size first. Throws InvalidArgument if max_selection exceeds
// the number of members.
IndependenceResult is_independent(const SetFamily& fam, std::size_t max_selection);

struct SeparationResult {
    bool separating = true;
    std::uint64_t witnessed = 0;  // pairs (s, j) with some x ∩ s = {j}
    std::uint64_t total = 0;      // pairs (s, j) checked
    std::optional<std::pair<BitVector, std::size_t>> failure;  // first unwitnessed (s, j)
};

// Every nonempty s ⊆ Y and j ∈ s has a member x with x ∩ s = {j}. Exhaustive
// over all s; universe_size must be at most 12 (LimitExceeded otherwise).
bool is_separating(const SetFamily& fam);
// Same condition restricted to |s| <= max_s_size; works up to 64 elements.
SeparationResult separation(const SetFamily& fam, std::size_t max_s_size);

struct NoncoverResult {
    bool noncovered = true;
    std::optional<std::size_t> covered_member;  // first x ⊆ ∪(other members)
};

// Every member keeps an element outside the union of all other members.
NoncoverResult is_noncovered(const SetFamily& fam);

// Member z(i) for each element i of the universe: z(i) = {x : i ∈ member x}.
SetFamily dual(const SetFamily& fam);

// |x ∩ y| <= threshold for all distinct member indices.
bool is_almost_disjoint(const SetFamily& fam, std::size_t threshold);

// One universe element of the finite independent-family construction: a set
// T of binary strings, all of length `level`. Strings of length m are numbered
// by their value with the first character most significant.
struct LevelSet {
    std::size_t level = 0;
    std::uint64_t strings = 0;  // bit b set iff string number b is in T

    std::string to_string() const;  // e.g. "{01,11}", "{ε}", "{}"
};

struct FkFamily {
    SetFamily family;
    std::vector<LevelSet> legend;  // universe index -> level set
};

// Universe: every T ⊆ {0,1}^m for m = 0..depth, levels ascending, T in binary
// counting order within a level. Member f (binary order on f ∈ {0,1}^depth)
// is X_f = {T : f↾m ∈ T}. depth <= 3 (LimitExceeded otherwise).
FkFamily fk_family(std::size_t depth);

// Vertices 0..m-1 are the universe, m..m+|members|-1 the members; element i
// is adjacent to member x iff i ∈ x.
graph::Graph bipartite_graph(const SetFamily& fam);

// Result of growing a finite pair into one whose generated subalgebra is a
// full matrix algebra. With n = |members| = |elements| and 1 <= split <= n,
// members[j] meets {elements} exactly in elements[j] for j < split, and
// elements[i] lies in no member other than members[i] for i >= split.
struct Extension {
    FinitePair pair;
    std::vector<std::size_t> members;
    std::vector<std::size_t> elements;
    std::size_t split = 0;
};

// Pads (F, G) to equal size l, picks for every given member a private
// element outside G and the other members, then picks for every element of
// G a member meeting the chosen elements exactly there. Throws
// ResourceExhausted when the finite family cannot supply what is needed.
// Independence plus separation of fam is sufficient for success.
Extension extend_to_full_matrix(const SetFamily& fam, const FinitePair& pair);

// True iff the extension satisfies its documented pattern against fam.
bool has_pairing_pattern(const SetFamily& fam, const Extension& ext);

struct DensifyOptions {
    std::size_t selection_size = 4;  // independence is preserved up to this |F|+|G|
    std::size_t max_s_size = 2;      // separation is scored on |s| <= this
};

struct Edit {
    std::size_t member = 0;
    std::size_t element = 0;  // toggled
};

struct DensifyReport {
    std::uint64_t witnessed_before = 0;
    std::uint64_t witnessed_after = 0;
    std::uint64_t total = 0;
    std::size_t budget_used = 0;
    std::vector<Edit> edits;
    std::vector<std::pair<BitVector, std::size_t>> unsatisfied;  // remaining (s, j)
};

struct DensifyResult {
    SetFamily family;
    DensifyReport report;
};

// Greedy finite edits toward separation: for each unwitnessed (s, j), in
// order, the lowest-index member that can be edited so that x ∩ s = {j}
// within the remaining budget is edited, provided independence (at
// selection_size) survives and the witnessed count strictly grows.
DensifyResult densify(const SetFamily& fam, std::size_t edit_budget, DensifyOptions options = {});

} // namespace ccrgraph::setfam
