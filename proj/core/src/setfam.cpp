#include "ccrgraph/setfam.hpp"

#include "ccrgraph/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace ccrgraph::setfam {

namespace {

constexpr std::size_t kExhaustiveSeparationLimit = 12;
constexpr std::size_t kExtensionSearchLimit = 12;
constexpr std::size_t kFkDepthLimit = 3;
constexpr std::uint64_t kSubsetBudget = std::uint64_t{1} << 24;

void check_member(std::size_t m, const BitVector& member)
{
    if (member.size() != m)
        throw InvalidArgument("member width " + std::to_string(member.size()) + " does not match universe size " +
                              std::to_string(m));
}

void check_mask_universe(const SetFamily& fam, const char* what)
{
    if (fam.universe_size() > 64)
        throw LimitExceeded(std::string(what) + ": universe larger than 64 elements");
}

std::uint64_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kSubsetBudget)
            return kSubsetBudget + 1;
    }
    return r;
}

// Calls f(mask) for every subset of {0..m-1} with 1 <= size <= max_size,
// ordered by size, then lexicographically by element list.
template <class F>
void for_each_small_subset(std::size_t m, std::size_t max_size, F&& f)
{
    max_size = std::min(max_size, m);
    std::uint64_t budget = 0;
    for (std::size_t size = 1; size <= max_size; ++size)
        budget += binomial(m, size);
    if (budget > kSubsetBudget)
        throw LimitExceeded("too many subsets to enumerate; lower the subset size bound");
    std::vector<std::size_t> idx;
    for (std::size_t size = 1; size <= max_size; ++size) {
        idx.resize(size);
        for (std::size_t i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (std::size_t i : idx)
                mask |= std::uint64_t{1} << i;
            f(mask);
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == m - size + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < size; ++i)
                idx[i] = idx[i - 1] + 1;
        }
    }
}

std::vector<std::uint64_t> member_masks(const SetFamily& fam)
{
    std::vector<std::uint64_t> masks;
    masks.reserve(fam.size());
    for (const auto& x : fam.members())
        masks.push_back(x.to_mask());
    return masks;
}

// Elements j of s such that some member meets s exactly in {j}.
std::uint64_t witnessed_in(std::uint64_t s, const std::vector<std::uint64_t>& masks)
{
    std::uint64_t seen = 0;
    for (std::uint64_t x : masks) {
        const std::uint64_t t = x & s;
        if (t != 0 && (t & (t - 1)) == 0)
            seen |= t;
    }
    return seen;
}

} // namespace

SetFamily::SetFamily(std::size_t universe_size, std::vector<BitVector> members) : universe_size_(universe_size)
{
    for (auto& x : members)
        add(std::move(x));
}

SetFamily::SetFamily(std::size_t universe_size, const std::vector<std::vector<std::size_t>>& members)
    : universe_size_(universe_size)
{
    for (const auto& x : members)
        add(BitVector::from_indices(universe_size, x));
}

SetFamily SetFamily::singletons(std::size_t m)
{
    SetFamily fam(m);
    for (std::size_t i = 0; i < m; ++i)
        fam.add(BitVector::from_indices(m, {i}));
    return fam;
}

SetFamily SetFamily::power_set(std::size_t m)
{
    if (m > 20)
        throw LimitExceeded("power_set: universe too large");
    SetFamily fam(m);
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << m); ++t)
        fam.add(BitVector::from_mask(m, t));
    return fam;
}

SetFamily SetFamily::nonempty_subsets(std::size_t m)
{
    if (m > 20)
        throw LimitExceeded("nonempty_subsets: universe too large");
    SetFamily fam(m);
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << m); ++t)
        fam.add(BitVector::from_mask(m, t));
    return fam;
}

SetFamily SetFamily::random(std::size_t m, std::size_t members, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    SetFamily fam(m);
    for (std::size_t i = 0; i < members; ++i) {
        BitVector x(m);
        for (std::size_t e = 0; e < m; ++e)
            if (coin(rng))
                x.set(e);
        fam.add(std::move(x));
    }
    return fam;
}

void SetFamily::add(BitVector member)
{
    check_member(universe_size_, member);
    members_.push_back(std::move(member));
}

void SetFamily::replace(std::size_t i, BitVector member)
{
    check_member(universe_size_, member);
    members_.at(i) = std::move(member);
}

SetFamily SetFamily::deduplicated() const
{
    SetFamily out(universe_size_);
    std::set<BitVector> seen;
    for (const auto& x : members_)
        if (seen.insert(x).second)
            out.add(x);
    return out;
}

IndependenceResult is_independent(const SetFamily& fam, std::size_t max_selection)
{
    const std::size_t count = fam.size();
    if (max_selection > count)
        throw InvalidArgument("is_independent: max_selection " + std::to_string(max_selection) + " exceeds " +
                              std::to_string(count) + " members");
    const std::size_t m = fam.universe_size();
    BitVector everything(m);
    for (std::size_t e = 0; e < m; ++e)
        everything.set(e);

    Selection current;
    std::optional<Selection> found;
    // Assign members idx.. to F, G or neither until exactly `remaining` are chosen.
    std::function<void(std::size_t, std::size_t, const BitVector&, const BitVector&)> search =
        [&](std::size_t idx, std::size_t remaining, const BitVector& inter, const BitVector& uni) {
            if (found)
                return;
            if (remaining == 0) {
                BitVector rest = inter;
                rest.and_not(uni);
                if (!current.f.empty() && rest.none())
                    found = current;
                return;
            }
            if (count - idx < remaining)
                return;
            const BitVector& x = fam.member(idx);
            current.f.push_back(idx);
            search(idx + 1, remaining - 1, inter & x, uni);
            current.f.pop_back();
            current.g.push_back(idx);
            search(idx + 1, remaining - 1, inter, uni | x);
            current.g.pop_back();
            search(idx + 1, remaining, inter, uni);
        };
    for (std::size_t total = 1; total <= max_selection && !found; ++total)
        search(0, total, everything, BitVector(m));
    if (found)
        return {false, found};
    return {true, std::nullopt};
}

SeparationResult separation(const SetFamily& fam, std::size_t max_s_size)
{
    check_mask_universe(fam, "separation");
    const auto masks = member_masks(fam);
    SeparationResult result;
    for_each_small_subset(fam.universe_size(), max_s_size, [&](std::uint64_t s) {
        const std::uint64_t seen = witnessed_in(s, masks);
        result.total += static_cast<std::uint64_t>(std::popcount(s));
        result.witnessed += static_cast<std::uint64_t>(std::popcount(seen));
        if (seen != s && !result.failure) {
            result.separating = false;
            const std::uint64_t missing = s & ~seen;
            result.failure.emplace(BitVector::from_mask(fam.universe_size(), s),
                                   static_cast<std::size_t>(std::countr_zero(missing)));
        }
    });
    return result;
}

bool is_separating(const SetFamily& fam)
{
    if (fam.universe_size() > kExhaustiveSeparationLimit)
        throw LimitExceeded("is_separating: exhaustive check limited to 12 elements; use separation() with a size bound");
    return separation(fam, fam.universe_size()).separating;
}

NoncoverResult is_noncovered(const SetFamily& fam)
{
    const std::size_t m = fam.universe_size();
    BitVector once(m);
    BitVector multi(m);
    for (const auto& x : fam.members()) {
        multi |= once & x;
        once ^= x;
        once.and_not(multi);
    }
    for (std::size_t i = 0; i < fam.size(); ++i) {
        // Elements covered by x alone.
        BitVector own = fam.member(i) & once;
        if (own.none())
            return {false, i};
    }
    return {true, std::nullopt};
}

SetFamily dual(const SetFamily& fam)
{
    const std::size_t m = fam.universe_size();
    std::vector<BitVector> z(m, BitVector(fam.size()));
    for (std::size_t x = 0; x < fam.size(); ++x)
        fam.member(x).for_each_set([&](std::size_t i) { z[i].set(x); });
    return SetFamily(fam.size(), std::move(z));
}

bool is_almost_disjoint(const SetFamily& fam, std::size_t threshold)
{
    for (std::size_t a = 0; a < fam.size(); ++a)
        for (std::size_t b = a + 1; b < fam.size(); ++b)
            if (fam.member(a).count_and(fam.member(b)) > threshold)
                return false;
    return true;
}

std::string LevelSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << level); ++b) {
        if (!((strings >> b) & 1U))
            continue;
        if (!first)
            out += ',';
        first = false;
        if (level == 0)
            out += "ε";
        for (std::size_t c = level; c-- > 0;)
            out += ((b >> c) & 1U) ? '1' : '0';
    }
    return out + "}";
}

FkFamily fk_family(std::size_t depth)
{
    if (depth > kFkDepthLimit)
        throw LimitExceeded("fk_family: depth " + std::to_string(depth) + " exceeds limit 3");
    FkFamily out;
    std::vector<std::size_t> level_offset(depth + 1);
    for (std::size_t m = 0; m <= depth; ++m) {
        level_offset[m] = out.legend.size();
        const std::uint64_t subsets = std::uint64_t{1} << (std::uint64_t{1} << m);
        for (std::uint64_t t = 0; t < subsets; ++t)
            out.legend.push_back({m, t});
    }
    const std::size_t universe = out.legend.size();
    out.family = SetFamily(universe);
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << depth); ++f) {
        BitVector x(universe);
        for (std::size_t m = 0; m <= depth; ++m) {
            const std::uint64_t prefix = f >> (depth - m);
            const std::uint64_t subsets = std::uint64_t{1} << (std::uint64_t{1} << m);
            for (std::uint64_t t = 0; t < subsets; ++t)
                if ((t >> prefix) & 1U)
                    x.set(level_offset[m] + t);
        }
        out.family.add(std::move(x));
    }
    return out;
}

graph::Graph bipartite_graph(const SetFamily& fam)
{
    const std::size_t m = fam.universe_size();
    graph::Graph g(m + fam.size());
    for (std::size_t x = 0; x < fam.size(); ++x)
        fam.member(x).for_each_set([&](std::size_t i) { g.add_edge(i, m + x); });
    return g;
}

bool has_pairing_pattern(const SetFamily& fam, const Extension& ext)
{
    const std::size_t n = ext.members.size();
    if (n == 0 || ext.elements.size() != n || ext.split < 1 || ext.split > n)
        return false;
    if (std::set<std::size_t>(ext.members.begin(), ext.members.end()).size() != n ||
        std::set<std::size_t>(ext.elements.begin(), ext.elements.end()).size() != n)
        return false;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (j >= ext.split && i < ext.split)
                continue;
            if (fam.member(ext.members[j]).test(ext.elements[i]) != (i == j))
                return false;
        }
    return true;
}

namespace {

Extension make_extension(const SetFamily& fam, std::vector<std::size_t> members, std::vector<std::size_t> elements,
                         std::size_t split)
{
    Extension ext;
    ext.pair.f = BitVector::from_indices(fam.size(), members);
    ext.pair.g = BitVector::from_indices(fam.universe_size(), elements);
    ext.members = std::move(members);
    ext.elements = std::move(elements);
    ext.split = split;
    return ext;
}

// Elements of member x outside G and outside every other member in `others`.
BitVector private_part(const SetFamily& fam, std::size_t x, const std::vector<std::size_t>& others,
                       const BitVector& g)
{
    BitVector own = fam.member(x);
    own.and_not(g);
    for (std::size_t y : others)
        if (y != x)
            own.and_not(fam.member(y));
    return own;
}

// The two selection steps of the cofinality argument.
std::optional<Extension> extend_by_selection(const SetFamily& fam, const FinitePair& pair)
{
    std::vector<std::size_t> given_members = pair.f.indices();
    std::vector<std::size_t> given_elements = pair.g.indices();
    const std::size_t l = std::max({given_members.size(), given_elements.size(), std::size_t{1}});

    // Pad F with members that keep every chosen member's private part nonempty.
    for (std::size_t cand = 0; cand < fam.size() && given_members.size() < l; ++cand) {
        if (pair.f.test(cand) ||
            std::find(given_members.begin(), given_members.end(), cand) != given_members.end())
            continue;
        auto trial = given_members;
        trial.push_back(cand);
        const bool keeps = std::all_of(trial.begin(), trial.end(),
                                       [&](std::size_t x) { return private_part(fam, x, trial, pair.g).any(); });
        if (keeps)
            given_members = std::move(trial);
    }
    if (given_members.size() < l)
        return std::nullopt;

    // Step one: k(j) ∈ x(j) \ (other x(i) ∪ G).
    std::vector<std::size_t> fresh;
    for (std::size_t x : given_members) {
        const auto own = private_part(fam, x, given_members, pair.g).first();
        if (!own)
            return std::nullopt;
        fresh.push_back(*own);
    }

    // Pad G with elements that are neither in G nor chosen in step one,
    // preferring elements outside every chosen member.
    BitVector taken = pair.g;
    for (std::size_t e : fresh)
        taken.set(e);
    BitVector covered(fam.universe_size());
    for (std::size_t x : given_members)
        covered |= fam.member(x);
    for (int pass = 0; pass < 2 && given_elements.size() < l; ++pass)
        for (std::size_t e = 0; e < fam.universe_size() && given_elements.size() < l; ++e)
            if (!taken.test(e) && (pass == 1 || !covered.test(e))) {
                taken.set(e);
                given_elements.push_back(e);
            }
    if (given_elements.size() < l)
        return std::nullopt;

    // Step two: x(j) ∩ {k(1..2l)} = {k(j)} for each j <= l.
    std::vector<std::size_t> exact_members;
    for (std::size_t e : given_elements) {
        std::optional<std::size_t> choice;
        for (std::size_t x = 0; x < fam.size() && !choice; ++x) {
            BitVector trace = fam.member(x) & taken;
            if (trace.count() == 1 && trace.test(e))
                choice = x;
        }
        if (!choice)
            return std::nullopt;
        exact_members.push_back(*choice);
    }

    std::vector<std::size_t> members = exact_members;
    members.insert(members.end(), given_members.begin(), given_members.end());
    std::vector<std::size_t> elements = given_elements;
    elements.insert(elements.end(), fresh.begin(), fresh.end());
    return make_extension(fam, std::move(members), std::move(elements), l);
}

// For a fixed element set K split into row-exact R and column-exact C, each
// member is forced into a role by its trace on K; missing partners are then
// independent choices. Returns the extension or nothing.
std::optional<Extension> extend_with_roles(const SetFamily& fam, const FinitePair& pair, std::uint64_t rows,
                                           std::uint64_t cols)
{
    const std::uint64_t k_set = rows | cols;
    const std::size_t count = std::popcount(k_set);
    std::vector<std::optional<std::size_t>> partner(fam.universe_size());
    auto role_of = [&](std::size_t x) -> std::optional<std::size_t> {
        const std::uint64_t t = fam.member(x).to_mask();
        const std::uint64_t in_cols = t & cols;
        if (std::popcount(in_cols) == 1)
            return static_cast<std::size_t>(std::countr_zero(in_cols));
        if (in_cols == 0 && std::popcount(t & k_set) == 1 && (t & rows) != 0)
            return static_cast<std::size_t>(std::countr_zero(t & rows));
        return std::nullopt;
    };
    std::vector<bool> in_x(fam.size(), false);
    for (std::size_t x : pair.f.indices()) {
        const auto e = role_of(x);
        if (!e || partner[*e])
            return std::nullopt;
        partner[*e] = x;
        in_x[x] = true;
    }
    for (std::size_t e = 0; e < fam.universe_size(); ++e) {
        if (!((k_set >> e) & 1U) || partner[e])
            continue;
        for (std::size_t x = 0; x < fam.size() && !partner[e]; ++x)
            if (!in_x[x] && role_of(x) == e) {
                partner[e] = x;
                in_x[x] = true;
            }
        if (!partner[e])
            return std::nullopt;
    }
    // A column element lies in its partner only.
    for (std::size_t e = 0; e < fam.universe_size(); ++e) {
        if (!((cols >> e) & 1U))
            continue;
        for (std::size_t x = 0; x < fam.size(); ++x)
            if (in_x[x] && x != *partner[e] && fam.member(x).test(e))
                return std::nullopt;
    }

    std::vector<std::size_t> members;
    std::vector<std::size_t> elements;
    for (std::uint64_t part : {rows, cols})
        for (std::size_t e = 0; e < fam.universe_size(); ++e)
            if ((part >> e) & 1U) {
                elements.push_back(e);
                members.push_back(*partner[e]);
            }
    const std::size_t split = rows == 0 ? count : static_cast<std::size_t>(std::popcount(rows));
    return make_extension(fam, std::move(members), std::move(elements), split);
}

std::optional<Extension> extend_by_search(const SetFamily& fam, const FinitePair& pair)
{
    const std::size_t m = fam.universe_size();
    if (m > kExtensionSearchLimit)
        return std::nullopt;
    const std::uint64_t g_mask = pair.g.to_mask();
    const std::size_t min_size = std::max<std::size_t>({pair.f.count(), pair.g.count(), 1});
    std::optional<Extension> found;
    for (std::size_t size = min_size; size <= m && !found; ++size) {
        for_each_small_subset(m, size, [&](std::uint64_t k_set) {
            if (found || static_cast<std::size_t>(std::popcount(k_set)) != size || (k_set & g_mask) != g_mask)
                return;
            // Enumerate row-exact subsets R of K; C = K \ R.
            std::uint64_t rows = k_set;
            while (!found) {
                found = extend_with_roles(fam, pair, rows, k_set & ~rows);
                if (rows == 0)
                    break;
                rows = (rows - 1) & k_set;
            }
        });
    }
    return found;
}

} // namespace

Extension extend_to_full_matrix(const SetFamily& fam, const FinitePair& pair)
{
    if (pair.f.size() != fam.size())
        throw InvalidArgument("extend_to_full_matrix: member selection has width " + std::to_string(pair.f.size()) +
                              ", family has " + std::to_string(fam.size()) + " members");
    if (pair.g.size() != fam.universe_size())
        throw InvalidArgument("extend_to_full_matrix: element selection has width " + std::to_string(pair.g.size()) +
                              ", universe has " + std::to_string(fam.universe_size()) + " elements");
    if (auto ext = extend_by_selection(fam, pair))
        return *ext;
    if (auto ext = extend_by_search(fam, pair))
        return *ext;
    throw ResourceExhausted("extend_to_full_matrix: the family cannot supply the fresh elements or separating members "
                            "needed to extend F=" +
                            pair.f.to_string() + ", G=" + pair.g.to_string());
}

DensifyResult densify(const SetFamily& fam, std::size_t edit_budget, DensifyOptions options)
{
    check_mask_universe(fam, "densify");
    const std::size_t selection = std::min(options.selection_size, fam.size());
    DensifyResult result{fam, {}};
    auto& report = result.report;
    SeparationResult current = separation(fam, options.max_s_size);
    report.witnessed_before = current.witnessed;
    report.total = current.total;
    const bool guard_independence = is_independent(fam, selection).independent;

    std::vector<std::pair<std::uint64_t, std::size_t>> targets;
    {
        const auto masks = member_masks(fam);
        for_each_small_subset(fam.universe_size(), options.max_s_size, [&](std::uint64_t s) {
            const std::uint64_t missing = s & ~witnessed_in(s, masks);
            for (std::uint64_t bits = missing; bits != 0; bits &= bits - 1)
                targets.emplace_back(s, static_cast<std::size_t>(std::countr_zero(bits)));
        });
    }

    std::size_t remaining = edit_budget;
    for (const auto& [s, j] : targets) {
        if (remaining == 0)
            break;
        const auto masks = member_masks(result.family);
        if ((witnessed_in(s, masks) >> j) & 1U)
            continue;
        const std::uint64_t want = std::uint64_t{1} << j;
        for (std::size_t x = 0; x < result.family.size(); ++x) {
            const std::uint64_t flips = (masks[x] & s) ^ want;
            const std::size_t cost = static_cast<std::size_t>(std::popcount(flips));
            if (cost > remaining)
                continue;
            SetFamily trial = result.family;
            for (std::uint64_t bits = flips; bits != 0; bits &= bits - 1)
                trial.toggle(x, static_cast<std::size_t>(std::countr_zero(bits)));
            if (guard_independence && !is_independent(trial, selection).independent)
                continue;
            const SeparationResult after = separation(trial, options.max_s_size);
            if (after.witnessed <= current.witnessed)
                continue;
            for (std::uint64_t bits = flips; bits != 0; bits &= bits - 1)
                report.edits.push_back({x, static_cast<std::size_t>(std::countr_zero(bits))});
            remaining -= cost;
            report.budget_used += cost;
            result.family = std::move(trial);
            current = after;
            break;
        }
    }

    report.witnessed_after = current.witnessed;
    const auto masks = member_masks(result.family);
    for_each_small_subset(fam.universe_size(), options.max_s_size, [&](std::uint64_t s) {
        const std::uint64_t missing = s & ~witnessed_in(s, masks);
        for (std::uint64_t bits = missing; bits != 0; bits &= bits - 1)
            report.unsatisfied.emplace_back(BitVector::from_mask(fam.universe_size(), s),
                                            static_cast<std::size_t>(std::countr_zero(bits)));
    });
    return result;
}

} // namespace ccrgraph::setfam
