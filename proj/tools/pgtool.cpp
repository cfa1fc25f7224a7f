#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "pg/analysis.hpp"
#include "pg/canonical.hpp"
#include "pg/catalog.hpp"
#include "pg/group.hpp"
#include "pg/group_spec.hpp"
#include "pg/io.hpp"
#include "pg/numbers.hpp"
#include "pg/power_graph.hpp"
#include "pg/reconstruct.hpp"

namespace {

constexpr int kCliDefaultMaxOrder = 512;

pg::FiniteGroup load_group(const std::string& spec_text, const std::string& cayley_path,
                           bool trust, int max_order) {
    if (spec_text.empty() == cayley_path.empty())
        throw pg::Error(pg::ErrorCode::SpecSyntax,
                        "provide exactly one of --group and --cayley");
    if (!spec_text.empty())
        return pg::realize(pg::parse_group_spec(spec_text), max_order);
    std::ifstream in(cayley_path);
    if (!in) throw pg::Error(pg::ErrorCode::FileFormat, "cannot open " + cayley_path);
    const std::vector<std::vector<int>> table = pg::read_cayley_table(in);
    if (static_cast<int>(table.size()) > max_order)
        throw pg::Error(pg::ErrorCode::OrderBound,
                        "group order " + std::to_string(table.size()) +
                            " exceeds the limit " + std::to_string(max_order));
    return trust ? pg::FiniteGroup::trusted(table, cayley_path)
                 : pg::FiniteGroup::from_cayley_table(table, cayley_path);
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (int x : v) {
        if (!out.empty()) out += ",";
        out += std::to_string(x);
    }
    return out;
}

std::string join(const pg::Bitset& s) { return join(s.to_vector()); }

template <class G>
void write_graph_file(const std::string& path, const G& g,
                      const std::vector<std::string>& labels) {
    std::ofstream out(path);
    if (!out)
        throw pg::Error(pg::ErrorCode::FileFormat, "cannot open " + path + " for writing");
    if (path.ends_with(".dot"))
        pg::write_dot(out, g, labels);
    else if (path.ends_with(".edges"))
        pg::write_edge_list(out, g);
    else
        throw pg::Error(pg::ErrorCode::FileFormat,
                        "output file must end in .dot or .edges, got " + path);
}

struct GroupArgs {
    std::string spec;
    std::string cayley;
    bool trust = false;
    int max_order = kCliDefaultMaxOrder;

    void attach(CLI::App* cmd) {
        cmd->add_option("--group", spec, "group spec, e.g. C12 or C2xQ8");
        cmd->add_option("--cayley", cayley, "Cayley table file");
        cmd->add_flag("--trust", trust, "skip associativity and inverse checks on --cayley");
        cmd->add_option("--max-order", max_order, "largest accepted group order")
            ->check(CLI::Range(1, pg::kMaxGroupOrder))
            ->capture_default_str();
    }

    pg::FiniteGroup load() const { return load_group(spec, cayley, trust, max_order); }
};

int run_build(const GroupArgs& args, bool digraph, const std::string& out_path) {
    const pg::FiniteGroup g = args.load();
    if (digraph) {
        const pg::DiGraph d = pg::directed_power_graph(g);
        write_graph_file(out_path, d, g.element_names());
        std::cout << "wrote directed power graph of " << g.name() << " (" << d.vertex_count()
                  << " vertices, " << d.arc_count() << " arcs) to " << out_path << "\n";
    } else {
        const pg::Graph p = pg::power_graph(g);
        write_graph_file(out_path, p, g.element_names());
        std::cout << "wrote power graph of " << g.name() << " (" << p.vertex_count()
                  << " vertices, " << p.edge_count() << " edges) to " << out_path << "\n";
    }
    return 0;
}

int run_classes(const GroupArgs& args) {
    const pg::FiniteGroup g = args.load();
    const pg::Graph p = pg::power_graph(g);
    const pg::EquivPartition classes = pg::equivalence_classes(p);
    std::cout << "# block\tsize\tmembers\n";
    for (std::size_t b = 0; b < classes.blocks.size(); ++b)
        std::cout << b << "\t" << classes.blocks[b].size() << "\t" << join(classes.blocks[b])
                  << "\n";
    const pg::DiGraph q = pg::quotient_digraph(pg::directed_power_graph(g), classes);
    std::cout << "# quotient_arc\tfrom\tto\n";
    for (int u = 0; u < q.vertex_count(); ++u)
        q.out(u).for_each([&](int v) { std::cout << "arc\t" << u << "\t" << v << "\n"; });
    return 0;
}

int run_roots(const GroupArgs& args, int element, long long n) {
    const pg::FiniteGroup g = args.load();
    if (element >= g.order())
        throw pg::Error(pg::ErrorCode::SpecRange,
                        "element " + std::to_string(element) + " out of range for order " +
                            std::to_string(g.order()));
    std::vector<int> targets;
    if (element >= 0)
        targets.push_back(element);
    else
        for (int u = 0; u < g.order(); ++u) targets.push_back(u);
    std::cout << "# element\torder\t"
              << (n > 0 ? "nth_roots(n=" + std::to_string(n) + ")" : std::string("prime_roots"))
              << "\n";
    for (int u : targets) {
        const pg::Bitset roots = n > 0 ? pg::nth_roots(g, u, n) : pg::prime_roots(g, u);
        std::cout << u << "\t" << pg::element_order(g, u) << "\t" << join(roots) << "\n";
    }
    return 0;
}

int run_cover(const GroupArgs& args, int element) {
    const pg::FiniteGroup g = args.load();
    if (element < 0 || element >= g.order())
        throw pg::Error(pg::ErrorCode::SpecRange,
                        "element " + std::to_string(element) + " out of range for order " +
                            std::to_string(g.order()));
    std::cout << "# prime_roots\t" << join(pg::prime_roots(g, element)) << "\n";
    const pg::CyclicCover cover = pg::min_cyclic_cover_of_prime_roots(g, element);
    std::cout << "# count\t" << cover.count << "\n";
    std::cout << "# generator\torder\telements\n";
    for (const pg::CyclicSubgroup& c : cover.cover)
        std::cout << c.generator << "\t" << c.elements.count() << "\t" << join(c.elements)
                  << "\n";
    return 0;
}

int run_reconstruct(const std::string& graph_path, const std::string& expect_spec,
                    const std::string& out_path, int max_order) {
    std::ifstream in(graph_path);
    if (!in) throw pg::Error(pg::ErrorCode::FileFormat, "cannot open " + graph_path);
    const std::variant<pg::Graph, pg::DiGraph> loaded = pg::read_edge_list(in);
    if (!std::holds_alternative<pg::Graph>(loaded))
        throw pg::Error(pg::ErrorCode::FileFormat,
                        "reconstruct expects an undirected graph file");
    const pg::Graph& g = std::get<pg::Graph>(loaded);

    pg::ReconstructOptions opts;
    opts.max_order = max_order;
    const pg::ReconstructionReport report = pg::reconstruct_digraph(g, opts);
    std::cout << "# case\t" << pg::to_string(report.case_used) << "\n";
    std::cout << "# identity_class\t" << join(report.identity_class) << "\n";
    if (!report.notes.empty()) std::cout << "# notes\t" << report.notes << "\n";
    pg::write_edge_list(std::cout, report.digraph);
    if (!out_path.empty()) write_graph_file(out_path, report.digraph, {});

    if (expect_spec.empty()) return 0;
    const pg::FiniteGroup h =
        pg::realize(pg::parse_group_spec(expect_spec), std::max(max_order, g.vertex_count()));
    const bool match = h.order() == g.vertex_count() &&
                       pg::verify_reconstruction(pg::directed_power_graph(h), report.digraph);
    std::cout << "# expect\t" << expect_spec << "\t" << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? 0 : 1;
}

bool is_cyclic_spec(const pg::GroupSpec& spec) {
    return spec.terms.size() == 1 && spec.terms[0].kind == pg::Atom::Kind::Cyclic;
}

std::vector<int> random_relabeling(int n, std::mt19937& rng) {
    std::vector<int> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    return relabel;
}

// Round trip for one catalog entry: rebuild the arcs from the bare power
// graph and from 10 relabelings of it, requiring digraph isomorphism with
// the truth every time.
int round_trip_failures(const pg::CatalogEntry& entry, std::mt19937& rng,
                        std::vector<std::string>& failures) {
    const int n = entry.group.order();
    int bad = 0;
    auto check = [&](const pg::Graph& input, const std::string& what) {
        try {
            pg::ReconstructOptions opts;
            opts.max_order = std::max(n, kCliDefaultMaxOrder);
            const pg::ReconstructionReport rep = pg::reconstruct_digraph(input, opts);
            if (pg::underlying(rep.digraph) != input)
                throw pg::Error(pg::ErrorCode::GraphInvariant,
                                "reconstruction changed the underlying graph");
            if (!pg::verify_reconstruction(entry.directed, rep.digraph)) {
                ++bad;
                failures.push_back(entry.spec.text() + " " + what + ": not isomorphic");
            }
        } catch (const pg::Error& e) {
            ++bad;
            failures.push_back(entry.spec.text() + " " + what + ": " + e.what());
        }
    };
    check(entry.power_graph, "direct");
    for (int i = 0; i < 10; ++i)
        check(pg::permuted(entry.power_graph, random_relabeling(n, rng)),
              "relabeling " + std::to_string(i));
    return bad;
}

int run_verify(int max_order, unsigned seed) {
    const std::vector<pg::CatalogEntry> catalog = pg::build_catalog(max_order);
    const pg::VerificationReport report = pg::run_theorem_suite(catalog);

    std::cout << "catalog_entries\t" << catalog.size() << "\n";
    std::cout << "pairs_tested\t" << report.pairs_tested << "\n";
    for (const auto& [a, b] : report.pg_isomorphic_pairs)
        std::cout << "pg_isomorphic\t" << a << "\t" << b << "\n";
    for (const auto& [a, b] : report.violations)
        std::cout << "violation\t" << a << "\t" << b << "\n";
    for (const pg::TwinPair& t : report.twins)
        std::cout << "twin\t" << t.a << "\t" << t.b << "\t" << t.certificate << "\n";

    std::mt19937 rng(seed);
    int round_trip_groups = 0;
    int failures = 0;
    std::vector<std::string> failure_notes;
    for (const pg::CatalogEntry& entry : catalog) {
        const int n = entry.group.order();
        if (!(n == 1 || pg::prime_power(n) || is_cyclic_spec(entry.spec))) continue;
        ++round_trip_groups;
        failures += round_trip_failures(entry, rng, failure_notes);
    }
    for (const std::string& note : failure_notes) std::cout << "roundtrip_fail\t" << note << "\n";

    std::cout << "summary: " << catalog.size() << " groups, " << report.pairs_tested
              << " pairs, " << report.pg_isomorphic_pairs.size() << " pg-isomorphic, "
              << report.violations.size() << " violations, " << report.twins.size()
              << " twins, " << round_trip_groups << " round-trip groups, " << failures
              << " round-trip failures, " << report.elapsed_seconds << "s sweep\n";
    const bool pass = report.violations.empty() && failures == 0;
    std::cout << "RESULT: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

int run_twins(int max_order) {
    const std::vector<pg::CatalogEntry> catalog = pg::build_catalog(max_order);
    const std::vector<pg::TwinPair> twins = pg::find_powergraph_twins(catalog);
    std::cout << "# a\tb\tcertificate\n";
    for (const pg::TwinPair& t : twins)
        std::cout << t.a << "\t" << t.b << "\t" << t.certificate << "\n";
    std::cout << "# " << twins.size() << " twin pair(s) among " << catalog.size()
              << " groups of order <= " << max_order << "\n";
    return 0;
}

int run_catalog(int max_order) {
    std::cout << "# spec\torder\tpg_edges\tdpg_arcs\n";
    for (const pg::CatalogEntry& entry : pg::build_catalog(max_order))
        std::cout << entry.spec.text() << "\t" << entry.group.order() << "\t"
                  << entry.power_graph.edge_count() << "\t" << entry.directed.arc_count()
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power graphs of finite groups: build, analyze, reconstruct, verify"};
    app.require_subcommand(1);

    GroupArgs build_args;
    bool build_digraph = false;
    std::string build_out;
    CLI::App* cmd_build = app.add_subcommand("build", "write a power graph to a file");
    build_args.attach(cmd_build);
    cmd_build->add_flag("--digraph", build_digraph, "write the directed power graph");
    cmd_build->add_option("--out", build_out, "output file (.dot or .edges)")->required();

    GroupArgs classes_args;
    CLI::App* cmd_classes =
        app.add_subcommand("classes", "closed-neighborhood classes and their quotient arcs");
    classes_args.attach(cmd_classes);

    GroupArgs roots_args;
    int roots_element = -1;
    long long roots_n = 0;
    CLI::App* cmd_roots = app.add_subcommand("roots", "prime roots or n-th roots per element");
    roots_args.attach(cmd_roots);
    cmd_roots->add_option("--element", roots_element, "restrict to one element index");
    cmd_roots->add_option("--n", roots_n, "report n-th roots instead of prime roots")
        ->check(CLI::PositiveNumber);

    GroupArgs cover_args;
    int cover_element = 0;
    CLI::App* cmd_cover =
        app.add_subcommand("cover", "minimum cyclic-subgroup cover of the prime roots");
    cover_args.attach(cmd_cover);
    cmd_cover->add_option("--element", cover_element, "target element index")->required();

    std::string rec_graph, rec_expect, rec_out;
    int rec_max_order = kCliDefaultMaxOrder;
    CLI::App* cmd_rec =
        app.add_subcommand("reconstruct", "rebuild arc directions from an undirected power graph");
    cmd_rec->add_option("--graph", rec_graph, "edge-list file (kind graph)")->required();
    cmd_rec->add_option("--expect-group", rec_expect,
                        "verify against this group's directed power graph");
    cmd_rec->add_option("--out", rec_out, "also write the digraph here (.dot or .edges)");
    cmd_rec->add_option("--max-order", rec_max_order, "largest accepted vertex count")
        ->check(CLI::Range(1, pg::kMaxGroupOrder))
        ->capture_default_str();

    int verify_max_order = 32;
    unsigned verify_seed = 1;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "catalog-wide theorem sweep plus reconstruction round trips");
    cmd_verify->add_option("--max-order", verify_max_order, "catalog bound")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    cmd_verify->add_option("--seed", verify_seed, "seed for the random relabelings")
        ->capture_default_str();

    int twins_max_order = 32;
    CLI::App* cmd_twins =
        app.add_subcommand("twins", "non-isomorphic groups with isomorphic power graphs");
    cmd_twins->add_option("--max-order", twins_max_order, "catalog bound")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();

    int catalog_max_order = 32;
    CLI::App* cmd_catalog = app.add_subcommand("catalog", "list the group catalog");
    cmd_catalog->add_option("--max-order", catalog_max_order, "catalog bound")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_build) return run_build(build_args, build_digraph, build_out);
        if (*cmd_classes) return run_classes(classes_args);
        if (*cmd_roots) return run_roots(roots_args, roots_element, roots_n);
        if (*cmd_cover) return run_cover(cover_args, cover_element);
        if (*cmd_rec) return run_reconstruct(rec_graph, rec_expect, rec_out, rec_max_order);
        if (*cmd_verify) return run_verify(verify_max_order, verify_seed);
        if (*cmd_twins) return run_twins(twins_max_order);
        if (*cmd_catalog) return run_catalog(catalog_max_order);
    } catch (const pg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
