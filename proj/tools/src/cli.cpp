#include "ccrgraph/cli.hpp"

#include "ccrgraph/errors.hpp"
#include "ccrgraph/family_io.hpp"
#include "ccrgraph/gf2.hpp"
#include "ccrgraph/ginf.hpp"
#include "ccrgraph/graph_io.hpp"
#include "ccrgraph/repr.hpp"
#include "ccrgraph/setfam.hpp"
#include "ccrgraph/switching.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iterator>
#include <optional>
#include <random>
#include <stdexcept>

namespace ccrgraph::cli {

namespace {

using nlohmann::json;
using graph::Graph;
using setfam::SetFamily;

// Bad flag combinations that CLI11 cannot express; mapped to exit 2.
class UsageError : public Error {
public:
    using Error::Error;
};

struct GraphSource {
    std::string file;
    std::string text;
    std::string named;
};

struct FamilySource {
    std::string file;
    std::string text;
    std::string named;
};

struct Globals {
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    std::string dot;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::size_t to_size(const std::string& s, const std::string& what)
{
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw UsageError(what + ": expected a non-negative integer, got '" + s + "'");
    }
}

double to_double(const std::string& s, const std::string& what)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(what + ": expected a number, got '" + s + "'");
    }
}

std::string read_path(const std::string& path, std::istream& in)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path);
    if (!file)
        throw UsageError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

// Inline text uses ';' as the line separator.
std::string inline_text(std::string text)
{
    std::replace(text.begin(), text.end(), ';', '\n');
    return text;
}

Graph named_graph(const std::string& spec, std::uint64_t seed)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw UsageError("named graph '" + spec + "' must look like kind:args");
    const std::string kind = spec.substr(0, colon);
    const auto args = split(spec.substr(colon + 1), ',');
    auto arg = [&](std::size_t i) { return to_size(args.at(i), "named graph " + kind); };
    if (kind == "canonical") {
        if (args.size() != 2)
            throw UsageError("canonical graph needs K,L");
        return Graph::canonical(arg(0), arg(1));
    }
    if (kind == "random") {
        if (args.size() != 2)
            throw UsageError("random graph needs N,P");
        std::mt19937_64 rng(seed);
        return Graph::random(arg(0), to_double(args[1], "random graph edge probability"), rng);
    }
    if (args.size() != 1)
        throw UsageError("named graph " + kind + " takes one size");
    const std::size_t n = arg(0);
    if (kind == "null")
        return Graph::null_graph(n);
    if (kind == "complete")
        return Graph::complete(n);
    if (kind == "path")
        return Graph::path(n);
    if (kind == "star")
        return Graph::star(n);
    if (kind == "cycle")
        return Graph::cycle(n);
    throw UsageError("unknown named graph '" + kind + "'");
}

SetFamily named_family(const std::string& spec, std::uint64_t seed)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw UsageError("named family '" + spec + "' must look like kind:args");
    const std::string kind = spec.substr(0, colon);
    const auto args = split(spec.substr(colon + 1), ',');
    auto arg = [&](std::size_t i) { return to_size(args.at(i), "named family " + kind); };
    if (kind == "random") {
        if (args.size() != 3)
            throw UsageError("random family needs M,MEMBERS,P");
        std::mt19937_64 rng(seed);
        return SetFamily::random(arg(0), arg(1), to_double(args[2], "random family density"), rng);
    }
    if (args.size() != 1)
        throw UsageError("named family " + kind + " takes one size");
    if (kind == "power")
        return SetFamily::power_set(arg(0));
    if (kind == "nonempty")
        return SetFamily::nonempty_subsets(arg(0));
    if (kind == "singletons")
        return SetFamily::singletons(arg(0));
    if (kind == "fk")
        return setfam::fk_family(arg(0)).family;
    throw UsageError("unknown named family '" + kind + "'");
}

template <typename Source>
void require_one(const Source& src, const std::string& what)
{
    const int given = !src.file.empty() + !src.text.empty() + !src.named.empty();
    if (given != 1)
        throw UsageError("exactly one " + what + " input is required (file, text or named)");
}

Graph load_graph(const GraphSource& src, std::istream& in, std::uint64_t seed, const std::string& what)
{
    require_one(src, what);
    if (!src.named.empty())
        return named_graph(src.named, seed);
    return graph::parse_graph(src.text.empty() ? read_path(src.file, in) : inline_text(src.text));
}

SetFamily load_family(const FamilySource& src, std::istream& in, std::uint64_t seed)
{
    require_one(src, "family");
    if (!src.named.empty())
        return named_family(src.named, seed);
    return setfam::parse_family(src.text.empty() ? read_path(src.file, in) : inline_text(src.text));
}

void add_graph_options(CLI::App* sub, GraphSource& src, const std::string& name = "graph")
{
    sub->add_option("--" + name, src.file, "Graph file ('-' for standard input)");
    sub->add_option("--" + name + "-text", src.text, "Inline graph text, ';' separates lines");
    sub->add_option("--" + name + "-named", src.named,
                    "null:N, complete:N, path:N, star:N, cycle:N, canonical:K,L or random:N,P");
}

void add_family_options(CLI::App* sub, FamilySource& src)
{
    sub->add_option("--family", src.file, "Family file ('-' for standard input)");
    sub->add_option("--family-text", src.text, "Inline family text, ';' separates lines");
    sub->add_option("--family-named", src.named, "power:M, nonempty:M, singletons:M, fk:D or random:M,MEMBERS,P");
}

json indices_json(const BitVector& v)
{
    return json(v.indices());
}

json graph_json(const Graph& g)
{
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.size()}, {"edges", edges}};
}

json family_json(const SetFamily& fam)
{
    json members = json::array();
    for (const auto& x : fam.members())
        members.push_back(indices_json(x));
    return {{"m", fam.universe_size()}, {"members", members}};
}

json class_json(const graph::AlgebraClass& c)
{
    return {{"n", c.n}, {"k", c.k}, {"l", c.l}, {"label", c.label}, {"simple", c.simple}};
}

void write_dot(const Globals& globals, const Graph& g, const std::vector<std::string>& labels = {})
{
    if (globals.dot.empty())
        return;
    std::ofstream file(globals.dot);
    if (!file)
        throw UsageError("cannot write DOT file '" + globals.dot + "'");
    file << graph::to_dot(g, labels);
}

struct Outcome {
    json inputs = json::object();
    json results = json::object();
    std::optional<bool> pass;
};

Outcome do_classify(const Graph& g, const Globals& globals)
{
    Outcome o;
    o.inputs["graph"] = graph_json(g);
    const auto c = graph::classify(g);
    o.results = class_json(c);
    const auto simplicity = graph::is_simple(g);
    o.results["central_witness"] = simplicity.witness ? indices_json(*simplicity.witness) : json(nullptr);
    write_dot(globals, g);
    return o;
}

Outcome do_canonicalize(const Graph& g, const Globals& globals)
{
    Outcome o;
    o.inputs["graph"] = graph_json(g);
    const auto form = graph::canonicalize(g);
    json moves = json::array();
    for (const auto& m : form.moves)
        moves.push_back({{"x", m.x}, {"s", indices_json(m.s)}});
    const Graph result = graph::replay(g, form.moves);
    const bool matches = result == Graph::canonical(form.k, form.l);
    const bool congruent = gf2::congruence(g.adjacency(), form.basis.forward) == result.adjacency();
    o.results = {{"k", form.k},
                 {"l", form.l},
                 {"label", graph::algebra_label(form.k, form.l)},
                 {"moves", moves},
                 {"move_count", form.moves.size()},
                 {"replay_matches", matches},
                 {"basis_congruent", congruent}};
    o.pass = matches && congruent;
    write_dot(globals, result);
    return o;
}

Outcome do_equiv(const Graph& g, const Graph& h)
{
    Outcome o;
    o.inputs = {{"graph", graph_json(g)}, {"other", graph_json(h)}};
    o.results = {{"equivalent", graph::equivalent(g, h)},
                 {"graph", class_json(graph::classify(g))},
                 {"other", class_json(graph::classify(h))}};
    return o;
}

Outcome do_enumerate(std::size_t n, const Globals& globals)
{
    Outcome o;
    o.inputs = {{"n", n}, {"jobs", globals.jobs}};
    graph::EnumerateOptions options;
    options.jobs = globals.jobs;
    const auto rows = graph::enumerate_classes(n, options);
    json classes = json::array();
    for (const auto& r : rows)
        classes.push_back({{"k", r.k},
                           {"label", graph::algebra_label(r.k, n - 2 * r.k)},
                           {"labeled", r.labeled},
                           {"types", r.types ? json(*r.types) : json(nullptr)}});
    o.results = {{"class_count", rows.size()}, {"classes", classes}};
    return o;
}

Outcome do_ginf(const Graph& g, std::size_t max_n, const Globals& globals)
{
    Outcome o;
    o.inputs = {{"graph", graph_json(g)}, {"max_n", max_n}};
    const Graph inf = graph::g_infinity(g, max_n);
    json subsets = json::array();
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < inf.size(); ++v) {
        const auto s = graph::g_infinity_subset(g.size(), v);
        subsets.push_back(indices_json(s));
        labels.push_back(s.to_string());
    }
    o.results = {{"graph", graph_json(inf)}, {"subsets", subsets}};
    write_dot(globals, inf, labels);
    return o;
}

Outcome do_iso(const Graph& g, const Graph& h)
{
    Outcome o;
    o.inputs = {{"graph", graph_json(g)}, {"other", graph_json(h)}};
    const auto map = graph::graphs_isomorphic(g, h);
    o.results = {{"isomorphic", map.has_value()}, {"mapping", map ? json(*map) : json(nullptr)}};
    return o;
}

json separation_failure_json(const std::optional<std::pair<BitVector, std::size_t>>& f)
{
    if (!f)
        return nullptr;
    return {{"s", indices_json(f->first)}, {"j", f->second}};
}

Outcome do_family_check(const SetFamily& fam, std::optional<std::size_t> max_selection, std::size_t max_s_size,
                        std::optional<std::size_t> almost_disjoint)
{
    Outcome o;
    const std::size_t selection = max_selection.value_or(std::min<std::size_t>(4, fam.size()));
    o.inputs = {{"family", family_json(fam)}, {"max_selection", selection}, {"max_s_size", max_s_size}};
    const auto ind = setfam::is_independent(fam, selection);
    json counter = nullptr;
    if (ind.counterexample)
        counter = {{"f", ind.counterexample->f}, {"g", ind.counterexample->g}};
    const auto sep = setfam::separation(fam, max_s_size);
    const auto nc = setfam::is_noncovered(fam);
    o.results = {{"independent", ind.independent},
                 {"independence_counterexample", counter},
                 {"separating_bounded", sep.separating},
                 {"separation_witnessed", sep.witnessed},
                 {"separation_total", sep.total},
                 {"separation_failure", separation_failure_json(sep.failure)},
                 {"noncovered", nc.noncovered},
                 {"covered_member", nc.covered_member ? json(*nc.covered_member) : json(nullptr)}};
    if (fam.universe_size() <= 12)
        o.results["separating"] = setfam::is_separating(fam);
    if (almost_disjoint) {
        o.inputs["almost_disjoint_threshold"] = *almost_disjoint;
        o.results["almost_disjoint"] = setfam::is_almost_disjoint(fam, *almost_disjoint);
    }
    return o;
}

Outcome do_dual(const SetFamily& fam)
{
    Outcome o;
    o.inputs["family"] = family_json(fam);
    const SetFamily d = setfam::dual(fam);
    o.results = {{"dual", family_json(d)}, {"double_dual_is_identity", setfam::dual(d) == fam}};
    return o;
}

Outcome do_fk(std::size_t depth)
{
    Outcome o;
    o.inputs["depth"] = depth;
    const auto fk = setfam::fk_family(depth);
    json legend = json::array();
    for (const auto& t : fk.legend)
        legend.push_back({{"level", t.level}, {"strings", t.to_string()}});
    o.results = {{"family", family_json(fk.family)}, {"legend", legend}};
    return o;
}

Outcome do_bipartite(const SetFamily& fam, const Globals& globals)
{
    Outcome o;
    o.inputs["family"] = family_json(fam);
    const Graph g = setfam::bipartite_graph(fam);
    o.results = {{"graph", graph_json(g)}, {"class", class_json(graph::classify(g))}};
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < fam.universe_size(); ++i)
        labels.push_back("y" + std::to_string(i));
    for (std::size_t x = 0; x < fam.size(); ++x)
        labels.push_back("x" + std::to_string(x));
    write_dot(globals, g, labels);
    return o;
}

Outcome do_densify(const SetFamily& fam, std::size_t budget, setfam::DensifyOptions options)
{
    Outcome o;
    o.inputs = {{"family", family_json(fam)},
                {"budget", budget},
                {"selection_size", options.selection_size},
                {"max_s_size", options.max_s_size}};
    const auto result = setfam::densify(fam, budget, options);
    const auto& r = result.report;
    json edits = json::array();
    for (const auto& e : r.edits)
        edits.push_back({{"member", e.member}, {"element", e.element}});
    json unsatisfied = json::array();
    for (const auto& [s, j] : r.unsatisfied)
        unsatisfied.push_back({{"s", indices_json(s)}, {"j", j}});
    o.results = {{"family", family_json(result.family)},
                 {"witnessed_before", r.witnessed_before},
                 {"witnessed_after", r.witnessed_after},
                 {"total", r.total},
                 {"budget_used", r.budget_used},
                 {"edits", edits},
                 {"unsatisfied", unsatisfied}};
    return o;
}

std::vector<std::size_t> parse_index_list(const std::string& s, const std::string& what)
{
    std::vector<std::size_t> out;
    if (s.empty())
        return out;
    for (const auto& part : split(s, ','))
        out.push_back(to_size(part, what));
    return out;
}

Outcome do_extend(const SetFamily& fam, const std::string& f_text, const std::string& g_text)
{
    Outcome o;
    const auto f = parse_index_list(f_text, "--members");
    const auto g = parse_index_list(g_text, "--elements");
    for (std::size_t x : f)
        if (x >= fam.size())
            throw UsageError("--members: index " + std::to_string(x) + " out of range");
    for (std::size_t e : g)
        if (e >= fam.universe_size())
            throw UsageError("--elements: element " + std::to_string(e) + " out of range");
    o.inputs = {{"family", family_json(fam)}, {"members", f}, {"elements", g}};
    setfam::FinitePair pair{BitVector::from_indices(fam.size(), f), BitVector::from_indices(fam.universe_size(), g)};
    const auto ext = setfam::extend_to_full_matrix(fam, pair);
    const bool pattern = setfam::has_pairing_pattern(fam, ext);

    // Subgraph of the bipartite graph on the chosen elements and members.
    std::vector<std::size_t> vertices = ext.elements;
    for (std::size_t x : ext.members)
        vertices.push_back(fam.universe_size() + x);
    const Graph sub = setfam::bipartite_graph(fam).induced(vertices);
    const auto c = graph::classify(sub);
    o.results = {{"members", ext.members},
                 {"elements", ext.elements},
                 {"split", ext.split},
                 {"pattern_holds", pattern},
                 {"induced_class", class_json(c)}};
    o.pass = pattern && c.l == 0;
    return o;
}

Outcome do_repr(const std::string& kind, const std::optional<Graph>& g, const std::optional<SetFamily>& fam,
                double tolerance)
{
    Outcome o;
    repr::ReprOptions options;
    options.tolerance = tolerance;
    repr::Representation rep;
    if (kind == "bipartite") {
        if (!fam)
            throw UsageError("repr --kind bipartite needs a family input");
        o.inputs["family"] = family_json(*fam);
        rep = repr::rep_bipartite(*fam, options);
    } else {
        if (!g)
            throw UsageError("repr --kind " + kind + " needs a graph input");
        o.inputs["graph"] = graph_json(*g);
        if (kind == "pairs")
            rep = repr::rep_pairs(*g, options);
        else if (kind == "canonical")
            rep = repr::rep_canonical(*g, options);
        else
            throw UsageError("unknown representation kind '" + kind + "'");
    }
    o.inputs["kind"] = kind;

    const auto rel = repr::verify_relations(rep);
    // Quantities beyond their budgets are reported as null.
    auto guarded = [](auto f) -> json {
        try {
            return f();
        } catch (const LimitExceeded&) {
            return nullptr;
        }
    };
    o.results = {{"kind", repr::to_string(rep.kind)},
                 {"dim", rep.dim},
                 {"tolerance", rep.tolerance},
                 {"max_deviation_per_check",
                  {{"self_adjoint", rel.self_adjoint},
                   {"unitary", rel.unitary},
                   {"anticommute", rel.anticommute},
                   {"commute", rel.commute}}},
                 {"failures", rel.failures},
                 {"span_dim", guarded([&] { return json(repr::span_dimension(rep)); })},
                 {"center_dim", guarded([&] { return json(repr::center_dimension(rep)); })},
                 {"commutant_dim", guarded([&] { return json(repr::commutant_dimension(rep)); })},
                 {"min_pair_distance",
                  rep.generators.size() < 2 ? json(nullptr) : json(repr::min_generator_distance(rep))},
                 {"pass", rel.pass}};
    o.pass = rel.pass;
    return o;
}

template <typename F>
double seconds(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome do_bench(const std::string& suite, std::size_t size, const Globals& globals)
{
    Outcome o;
    o.inputs = {{"suite", suite}, {"size", size}, {"seed", globals.seed}};
    std::mt19937_64 rng(globals.seed);
    if (suite == "gf2-rank") {
        const auto m = gf2::BitMatrix::random_alternating(size, rng);
        std::size_t r = 0;
        const double t = seconds([&] { r = gf2::rank(m); });
        o.results = {{"rank", r}, {"seconds", t}, {"row_words", m.words_per_row()}};
    } else if (suite == "canonicalize") {
        const Graph g = Graph::random(size, 0.5, rng);
        graph::CanonicalForm form;
        const double t = seconds([&] { form = graph::canonicalize(g); });
        o.results = {{"k", form.k}, {"l", form.l}, {"moves", form.moves.size()}, {"seconds", t}};
    } else if (suite == "repr-verify") {
        const Graph g = Graph::random(size, 0.5, rng);
        json checks = json::object();
        bool ok = true;
        const double t = seconds([&] {
            const auto pairs = repr::rep_pairs(g);
            const auto canonical = repr::rep_canonical(g);
            const auto rel_pairs = repr::verify_relations(pairs);
            const auto rel_canonical = repr::verify_relations(canonical);
            const std::size_t span = repr::span_dimension(canonical);
            const std::size_t center = repr::center_dimension(canonical);
            const std::uint64_t commutant = repr::commutant_dimension(canonical);
            const std::size_t l = graph::canonicalize(g).l;
            ok = rel_pairs.pass && rel_canonical.pass && span == (std::size_t{1} << size) &&
                 center == (std::size_t{1} << l) && commutant == (std::uint64_t{1} << l);
            checks = {{"pairs_dim", pairs.dim},
                      {"canonical_dim", canonical.dim},
                      {"span_dim", span},
                      {"center_dim", center},
                      {"commutant_dim", commutant}};
        });
        o.results = {{"checks", checks}, {"consistent", ok}, {"seconds", t}};
    } else {
        throw UsageError("unknown bench suite '" + suite + "' (gf2-rank, canonicalize, repr-verify)");
    }
    o.results["suite"] = suite;
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Graph C*-algebra classification, set families and explicit representations", "ccrgraph"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Globals globals;
    app.add_option("--seed", globals.seed, "Seed for every randomized input or suite")->capture_default_str();
    app.add_option("--jobs", globals.jobs, "Worker cap for parallel enumeration")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--dot", globals.dot, "Write the verb's graph as Graphviz DOT to this path");

    GraphSource graph_src;
    GraphSource other_src;
    FamilySource family_src;
    std::size_t n = 0;
    std::size_t max_n = 4;
    std::size_t depth = 3;
    std::size_t budget = 0;
    std::size_t size = 0;
    std::size_t max_s_size = 2;
    std::optional<std::size_t> max_selection;
    std::optional<std::size_t> almost_disjoint;
    setfam::DensifyOptions densify_options;
    std::string members_text;
    std::string elements_text;
    std::string kind = "canonical";
    std::string suite;
    double tolerance = 1e-12;

    auto* classify = app.add_subcommand("classify", "Isomorphism class of B(G)");
    add_graph_options(classify, graph_src);
    auto* canonicalize = app.add_subcommand("canonicalize", "Switch-move reduction to the canonical graph");
    add_graph_options(canonicalize, graph_src);
    auto* equiv = app.add_subcommand("equiv", "Decide B(G) ≅ B(K)");
    add_graph_options(equiv, graph_src);
    add_graph_options(equiv, other_src, "other");
    auto* enumerate = app.add_subcommand("enumerate", "Class counts over all labelled graphs on n vertices");
    enumerate->add_option("--n", n, "Vertex count")->required();
    auto* ginf = app.add_subcommand("ginf", "Graph on the nonempty vertex subsets");
    add_graph_options(ginf, graph_src);
    ginf->add_option("--max-n", max_n, "Largest accepted vertex count")->capture_default_str();
    auto* iso = app.add_subcommand("iso", "Graph isomorphism (up to 16 vertices)");
    add_graph_options(iso, graph_src);
    add_graph_options(iso, other_src, "other");
    auto* family_check = app.add_subcommand("family-check", "Independence, separation and noncover of a family");
    add_family_options(family_check, family_src);
    family_check->add_option("--max-selection", max_selection, "Largest |F|+|G| for independence");
    family_check->add_option("--max-s-size", max_s_size, "Largest |s| for bounded separation")->capture_default_str();
    family_check->add_option("--almost-disjoint", almost_disjoint, "Also check |x ∩ y| <= this bound");
    auto* dual = app.add_subcommand("dual", "Dual family z(i) = {x : i in x}");
    add_family_options(dual, family_src);
    auto* fk = app.add_subcommand("fk", "Finite independent family on level sets of binary strings");
    fk->add_option("--depth", depth, "String length bound (at most 3)")->capture_default_str();
    auto* bipartite = app.add_subcommand("bipartite", "Element/member incidence graph");
    add_family_options(bipartite, family_src);
    auto* densify = app.add_subcommand("densify", "Greedy edits toward separation");
    add_family_options(densify, family_src);
    densify->add_option("--budget", budget, "Number of element toggles allowed")->required();
    densify->add_option("--selection-size", densify_options.selection_size, "Independence bound to preserve")
        ->capture_default_str();
    densify->add_option("--max-s-size", densify_options.max_s_size, "Largest |s| scored")->capture_default_str();
    auto* extend = app.add_subcommand("extend", "Grow (F, G) to a full-matrix pairing");
    add_family_options(extend, family_src);
    extend->add_option("--members", members_text, "Member indices of F, comma-separated");
    extend->add_option("--elements", elements_text, "Elements of G, comma-separated");
    auto* repr_cmd = app.add_subcommand("repr", "Build and verify an explicit representation");
    add_graph_options(repr_cmd, graph_src);
    add_family_options(repr_cmd, family_src);
    repr_cmd->add_option("--kind", kind, "pairs, bipartite or canonical")
        ->capture_default_str()
        ->check(CLI::IsMember({"pairs", "bipartite", "canonical"}));
    repr_cmd->add_option("--tolerance", tolerance, "Relation tolerance")->capture_default_str();
    auto* bench = app.add_subcommand("bench", "Timing suites");
    bench->add_option("--suite", suite, "gf2-rank, canonicalize or repr-verify")->required();
    bench->add_option("--size", size, "Problem size")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    CLI::App* verb = app.get_subcommands().front();
    const std::string name = verb->get_name();
    try {
        Outcome o;
        auto graph_in = [&] { return load_graph(graph_src, in, globals.seed, "graph"); };
        auto other_in = [&] { return load_graph(other_src, in, globals.seed + 1, "other graph"); };
        auto family_in = [&] { return load_family(family_src, in, globals.seed); };
        if (name == "classify") {
            o = do_classify(graph_in(), globals);
        } else if (name == "canonicalize") {
            o = do_canonicalize(graph_in(), globals);
        } else if (name == "equiv") {
            o = do_equiv(graph_in(), other_in());
        } else if (name == "enumerate") {
            o = do_enumerate(n, globals);
        } else if (name == "ginf") {
            o = do_ginf(graph_in(), max_n, globals);
        } else if (name == "iso") {
            o = do_iso(graph_in(), other_in());
        } else if (name == "family-check") {
            o = do_family_check(family_in(), max_selection, max_s_size, almost_disjoint);
        } else if (name == "dual") {
            o = do_dual(family_in());
        } else if (name == "fk") {
            o = do_fk(depth);
        } else if (name == "bipartite") {
            o = do_bipartite(family_in(), globals);
        } else if (name == "densify") {
            o = do_densify(family_in(), budget, densify_options);
        } else if (name == "extend") {
            o = do_extend(family_in(), members_text, elements_text);
        } else if (name == "repr") {
            std::optional<Graph> g;
            std::optional<SetFamily> fam;
            if (kind == "bipartite")
                fam = family_in();
            else
                g = graph_in();
            o = do_repr(kind, g, fam, tolerance);
        } else {
            o = do_bench(suite, size, globals);
        }

        json report = {{"schema_version", kSchemaVersion}, {"verb", name}, {"inputs", o.inputs}, {"results", o.results}};
        if (o.pass)
            report["pass"] = *o.pass;
        out << report.dump(2) << "\n";
        if (o.pass && !*o.pass) {
            err << name << ": check failed\n";
            return kCheckFailed;
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kUsageError;
    } catch (const LimitExceeded& e) {
        err << "limit exceeded: " << e.what() << "\n";
        return kResourceExhausted;
    } catch (const ResourceExhausted& e) {
        err << "resource exhausted: " << e.what() << "\n";
        return kResourceExhausted;
    } catch (const NonConvergence& e) {
        err << "no convergence: " << e.what() << "\n";
        return kResourceExhausted;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kCheckFailed;
    }
}

} // namespace ccrgraph::cli
