// Command-line front end: census, homology, loci, verify and export
// subcommands with deterministic output and stable exit codes (0 success,
// 1 usage or validation error, 2 budget exhausted, 3 internal inconsistency).
#include "tcov/cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "tcov/cache.hpp"
#include "tcov/delta_complex.hpp"
#include "tcov/genus2_oracles.hpp"
#include "tcov/io.hpp"
#include "tcov/loci.hpp"

namespace tcov {

namespace {

struct UsageError {
    std::string message;
};

struct Options {
    int genus = 2;
    int prime = 5;
    int max_prime = 13;
    std::string cache_dir;
    bool no_cache = false;
    long long max_candidates = 0; // 0 keeps the library default
    std::string out_dir = "out";

    std::string locus = "w";
    bool with_betti = false;
    bool allow_p2_experimental = false;
    bool only_b1 = false;

    bool paper = false;
    bool property_suite = false;
    std::vector<int> primes;

    int dimension = -1;
    int index = -1;
    std::string format = "json";
};

CensusBudget budget_of(const Options& o) {
    CensusBudget b;
    if (o.max_candidates > 0) {
        b.max_graph_candidates = o.max_candidates;
        b.max_cover_candidates = o.max_candidates;
    }
    return b;
}

std::filesystem::path cache_root(const Options& o) {
    return o.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(o.cache_dir);
}

void check_genus_prime(const Options& o, int p) {
    if (o.genus != 2 && o.genus != 3) throw UsageError{"--genus must be 2 or 3"};
    if (!is_prime(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (p > o.max_prime)
        throw UsageError{"p = " + std::to_string(p) + " exceeds --max-prime = " +
                         std::to_string(o.max_prime)};
}

std::vector<CensusLevel> levels_of(const Options& o, int p) {
    return cached_all_cells(cache_root(o), o.genus, p, o.no_cache, budget_of(o));
}

std::string fmt_vector(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

// ---------------------------------------------------------------- census ---

void cmd_census(const Options& o, std::ostream& out) {
    check_genus_prime(o, o.prime);
    const std::vector<CensusLevel> cells = levels_of(o, o.prime);

    const std::filesystem::path dir(o.out_dir);
    std::filesystem::create_directories(dir);
    const std::string stem =
        "census_g" + std::to_string(o.genus) + "_p" + std::to_string(o.prime);
    const std::filesystem::path csv_path = dir / (stem + ".csv");
    const std::filesystem::path json_path = dir / (stem + ".json");
    std::ofstream(csv_path) << census_csv(cells);
    nlohmann::json levels = nlohmann::json::array();
    for (const CensusLevel& level : cells) levels.push_back(census_level_to_json(level));
    std::ofstream(json_path) << levels.dump(1) << '\n';

    long long total = 0;
    out << "census genus " << o.genus << " prime " << o.prime << "\n";
    for (const CensusLevel& level : cells) {
        out << "n=" << level.n << ": " << level.orbit_reps.size() << " classes\n";
        total += static_cast<long long>(level.orbit_reps.size());
    }
    out << "total: " << total << " classes\n";
    out << "wrote " << csv_path.generic_string() << " and " << json_path.generic_string()
        << "\n";
}

// -------------------------------------------------------------- homology ---

void cmd_homology(const Options& o, std::ostream& out) {
    check_genus_prime(o, o.prime);
    const DeltaComplex X = assemble(levels_of(o, o.prime));
    const BettiVector bv = betti(X);
    const long long chi = euler_characteristic(X);
    if (o.only_b1) {
        out << "b1 = " << bv.b[1] << "\n";
        return;
    }
    out << "b = " << fmt_vector(bv.b) << "\n";
    out << "reduced = " << fmt_vector(bv.reduced) << "\n";
    out << "chain dims = " << fmt_vector(bv.chain_dims) << "\n";
    out << "euler = " << chi << " (consistent)\n";
}

// ------------------------------------------------------------------ loci ---

Locus parse_locus(const std::string& name) {
    for (Locus l : {Locus::w, Locus::lw, Locus::br, Locus::scon, Locus::par})
        if (name == locus_name(l)) return l;
    throw UsageError{"--locus must be one of w, lw, br, scon, par"};
}

void cmd_loci(const Options& o, std::ostream& out) {
    check_genus_prime(o, o.prime);
    const Locus which = parse_locus(o.locus);
    if (o.prime == 2 && (which == Locus::scon || which == Locus::par) &&
        !o.allow_p2_experimental)
        throw UsageError{"locus " + o.locus +
                         " at p = 2 is outside the verified range; pass "
                         "--allow-p2-experimental to proceed"};

    const DeltaComplex X = assemble(levels_of(o, o.prime));
    out << locus_csv(X, locus_membership(X));
    if (o.with_betti) {
        const DeltaComplex sub = locus_subcomplex(X, which);
        const BettiVector bv = betti(sub);
        out << "locus " << locus_name(which) << " cells = " << sub.cell_count() << "\n";
        out << "reduced = " << fmt_vector(bv.reduced) << "\n";
    }
}

// ---------------------------------------------------------------- verify ---

struct CheckLog {
    std::ostream& out;
    nlohmann::json summary = nlohmann::json::array();
    int failed = 0;

    void add(const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) out << ": " << detail;
        out << "\n";
        summary.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
        failed += ok ? 0 : 1;
    }
};

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t rows = a.size();
    const std::size_t mid = b.size();
    const std::size_t cols = mid ? b[0].size() : 0;
    IntMatrix out(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < mid && k < a[i].size(); ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

bool is_zero(const IntMatrix& m) {
    for (const auto& row : m)
        for (std::int64_t x : row)
            if (x != 0) return false;
    return true;
}

PCover spiral_of(int p, int a) {
    GraphBuilder b;
    const int v = b.add_vertex(1);
    b.add_edge(v, v);
    const WeightedGraph g = b.build();
    return make_cover(g, p, {}, {}, {}, {{0, GainSpec{g.edges[0].a, a}}});
}

void paper_checks(const Options& o, int p, const std::vector<CensusLevel>& cells,
                  const DeltaComplex& X, CheckLog& log) {
    const std::string tag = " p=" + std::to_string(p);

    const long long maximal = static_cast<long long>(cells.back().orbit_reps.size());
    log.add("maximal-cells" + tag, maximal == expected_maximal_cells(p),
            std::to_string(maximal) + " classes (expected " +
                std::to_string(expected_maximal_cells(p)) + ")");

    const BettiVector bv = betti(X);
    const std::vector<int> want = {1, 0, static_cast<int>(expected_wedge_count(p))};
    bool euler_ok = true;
    try {
        euler_characteristic(X);
    } catch (const Error&) {
        euler_ok = false;
    }
    log.add("betti" + tag, bv.b == want && euler_ok,
            "b = " + fmt_vector(bv.b) + ", b2 = " + std::to_string(bv.b[2]) + " (expected " +
                fmt_vector(want) + ")");

    std::vector<Locus> loci = {Locus::w, Locus::lw, Locus::br};
    if (p != 2) {
        loci.push_back(Locus::scon);
        loci.push_back(Locus::par);
    }
    bool vanish = true;
    std::string names;
    for (Locus l : loci) {
        const DeltaComplex sub = locus_subcomplex(X, l);
        bool flat = !sub.empty();
        for (int r : betti(sub).reduced) flat = flat && r == 0;
        vanish = vanish && flat;
        names += std::string(names.empty() ? "" : ",") + locus_name(l);
    }
    log.add("loci-vanishing" + tag, vanish, "reduced homology zero for " + names);

    if (p >= 5) {
        const long long polya = polya_free_theta_count(p);
        const long long bracelet = bracelet_free_theta_count(p);
        const long long reps = static_cast<long long>(free_theta_representatives(p).size());
        const DilatedThetaCensus dc = dilated_theta_census(p);
        log.add("theta-census" + tag, polya == bracelet && polya == reps,
                std::to_string(polya) + " free classes, " +
                    std::to_string(dc.distinct_count + dc.reflection_count) +
                    " dilated classes");

        const FamilyReport report = maximal_family_census_check(p, cells.back());
        const long long free_distinct =
            report.counted.at("theta free, distinct gains, dihedral") +
            report.counted.at("theta free, distinct gains, cyclic");
        const long long dilated = report.counted.at("theta dilated, repeated flow") +
                                  report.counted.at("theta dilated, distinct flows");
        log.add("family-classification" + tag,
                report.ok && free_distinct == polya &&
                    dilated == dc.distinct_count + dc.reflection_count,
                std::to_string(report.total) + " cells in 13 families");
    }
    (void)o;
}

void property_checks(const Options& o, int p, const std::vector<CensusLevel>& cells,
                     const DeltaComplex& X, CheckLog& log) {
    const std::string tag = " p=" + std::to_string(p);

    bool boundary_ok = true;
    for (int n = 1; n + 1 <= X.dimension(); ++n)
        boundary_ok =
            boundary_ok && is_zero(matrix_product(boundary_matrix(X, n), boundary_matrix(X, n + 1)));
    log.add("boundary-squared" + tag, boundary_ok, "d(n) . d(n+1) = 0");

    bool canon_ok = true;
    bool switching_ok = true;
    bool rh_ok = true;
    bool roundtrip_ok = true;
    for (const CensusLevel& level : cells)
        for (const PCover& c : level.orbit_reps) {
            const CanonKey key = canonical_form(c).key;
            const int cells_count = c.target.num_cells;
            std::vector<int> rotate(cells_count), reverse(cells_count);
            for (int i = 0; i < cells_count; ++i) {
                rotate[i] = (i + 1) % cells_count;
                reverse[i] = cells_count - 1 - i;
            }
            canon_ok = canon_ok && canonical_form(apply_cover_permutation(c, rotate)).key == key &&
                       canonical_form(apply_cover_permutation(c, reverse)).key == key;
            for (int v : c.target.vertices)
                if (!c.vertex_is_dilated(v))
                    switching_ok =
                        switching_ok && canonical_form(switch_gains(c, v, 1)).key == key &&
                        canonical_form(switch_gains(c, v, p - 1)).key == key;
            rh_ok = rh_ok &&
                    graph_genus(build_source(c).graph) == p * (graph_genus(c.target) - 1) + 1;
            roundtrip_ok =
                roundtrip_ok && canonical_form(cover_from_json(cover_to_json(c))).key == key;
        }
    log.add("canonical-invariance" + tag, canon_ok, "keys stable under relabeling");
    log.add("switching-invariance" + tag, switching_ok, "keys stable under re-gauging");
    log.add("riemann-hurwitz" + tag, rh_ok, "source genus = p(g-1)+1 on every cover");
    log.add("json-round-trip" + tag, roundtrip_ok, "covers survive serialization");

    bool nesting_ok = true;
    for (const auto& level : locus_membership(X))
        for (const LocusMembership& m : level) {
            nesting_ok = nesting_ok && (!m.w || m.lw) && (!m.lw || m.br) && (!m.br || m.scon) &&
                         (!m.scon || m.par);
        }
    log.add("locus-nesting" + tag, nesting_ok, "w <= lw <= br <= scon <= par cell-wise");

    bool spiral_class_ok = true;
    for (int a = 1; a < p; ++a)
        for (int b = 1; b < p; ++b) {
            const bool same =
                canonical_form(spiral_of(p, a)).key == canonical_form(spiral_of(p, b)).key;
            spiral_class_ok = spiral_class_ok && same == (a == b || a + b == p);
        }
    log.add("spiral-classes" + tag, spiral_class_ok, "S_a = S_b exactly when a = +-b");

    if (p != 2) {
        bool unique_ok = true;
        std::map<std::pair<CanonKey, CanonKey>, std::set<CanonKey>> groups;
        for (const CensusLevel& level : cells) {
            if (level.n == 0) continue;
            for (const PCover& c : level.orbit_reps)
                for (const auto& [e, a] : spiral_edges(c)) {
                    const CoverContraction k = contract(c, e);
                    if (!k.cover.is_free_cover()) continue;
                    const SpiralPoints sp = spiral_articulation_points(k.cover);
                    unique_ok = unique_ok &&
                                std::count(sp.vertices.begin(), sp.vertices.end(),
                                           k.merged_vertex) == 1 &&
                                sp.common_ascent == a;
                    PCover marked = k.cover;
                    marked.target.genus[k.merged_vertex] += 7;
                    groups[{canonical_form(k.cover).key, canonical_form(marked).key}].insert(
                        canonical_form(c).key);
                }
        }
        for (const auto& [site, classes] : groups)
            unique_ok = unique_ok && classes.size() == 1;
        log.add("spiral-uniqueness" + tag, unique_ok,
                std::to_string(groups.size()) + " uncontraction sites, all unique");
    }
    (void)o;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.genus != 2) throw UsageError{"verify runs the genus-2 oracle suite; use --genus 2"};
    const bool run_paper = o.paper || !o.property_suite;
    const bool run_properties = o.property_suite || !o.paper;
    std::vector<int> primes = o.primes.empty() ? std::vector<int>{2, 3, 5, 7} : o.primes;

    CheckLog log{out};
    for (int p : primes) {
        check_genus_prime(o, p);
        const std::vector<CensusLevel> cells = levels_of(o, p);
        const DeltaComplex X = assemble(cells);
        if (run_paper) paper_checks(o, p, cells, X, log);
        if (run_properties) property_checks(o, p, cells, X, log);
    }

    const nlohmann::json summary = {{"checks", log.summary},
                                    {"passed", log.summary.size() - log.failed},
                                    {"failed", log.failed},
                                    {"ok", log.failed == 0}};
    out << summary.dump() << "\n";
    return log.failed == 0 ? 0 : 3;
}

// ---------------------------------------------------------------- export ---

void cmd_export(const Options& o, std::ostream& out) {
    check_genus_prime(o, o.prime);
    if (o.format != "dot" && o.format != "json")
        throw UsageError{"--format must be dot or json"};
    const std::vector<CensusLevel> cells = levels_of(o, o.prime);

    if (o.dimension < 0) {
        if (o.format != "json")
            throw UsageError{"export of the whole complex requires --format json"};
        out << complex_to_json(assemble(cells)).dump() << "\n";
        return;
    }
    const auto level = std::find_if(cells.begin(), cells.end(),
                                    [&](const CensusLevel& l) { return l.n == o.dimension; });
    if (level == cells.end())
        throw UsageError{"--dimension must be between 0 and " +
                         std::to_string(cells.back().n)};
    if (o.index < 0 || o.index >= static_cast<int>(level->orbit_reps.size()))
        throw UsageError{"--index must be between 0 and " +
                         std::to_string(level->orbit_reps.size() - 1)};
    const PCover& c = level->orbit_reps[static_cast<std::size_t>(o.index)];
    const std::string name =
        "cell_n" + std::to_string(o.dimension) + "_i" + std::to_string(o.index);
    if (o.format == "dot")
        out << cover_to_dot(c, name);
    else
        out << cover_to_json(c).dump(1) << "\n";
}

void add_common_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--genus", o.genus, "target graph genus (2 or 3)");
    cmd->add_option("--cache-dir", o.cache_dir, "census cache directory");
    cmd->add_flag("--no-cache", o.no_cache, "skip reading and writing the census cache");
    cmd->add_option("--max-candidates", o.max_candidates,
                    "enumeration budget (graph and cover candidates)");
    cmd->add_option("--max-prime", o.max_prime, "largest admissible prime");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"moduli of Z/p-covers of stable weighted graphs: census, homology and loci"};
    app.require_subcommand(1);

    CLI::App* census = app.add_subcommand("census", "enumerate cover classes per dimension");
    add_common_options(census, o);
    census->add_option("--prime", o.prime, "deck group order");
    census->add_option("--out", o.out_dir, "artifact output directory");

    CLI::App* homology = app.add_subcommand("homology", "Betti numbers of the cover complex");
    add_common_options(homology, o);
    homology->add_option("--prime", o.prime, "deck group order");
    homology->add_flag("--only-b1", o.only_b1, "print only the first Betti number");

    CLI::App* loci = app.add_subcommand("loci", "locus membership table and subcomplex homology");
    add_common_options(loci, o);
    loci->add_option("--prime", o.prime, "deck group order");
    loci->add_option("--locus", o.locus, "one of w, lw, br, scon, par")->required();
    loci->add_flag("--betti", o.with_betti, "also compute the locus subcomplex homology");
    loci->add_flag("--allow-p2-experimental", o.allow_p2_experimental,
                   "allow scon/par at p = 2 (outside the verified range)");

    CLI::App* verify = app.add_subcommand("verify", "run the oracle cross-check suite");
    add_common_options(verify, o);
    verify->add_flag("--paper", o.paper, "run the pinned-value checks");
    verify->add_flag("--property-suite", o.property_suite, "run the structural property checks");
    verify->add_option("--primes", o.primes, "comma-separated primes to verify")
        ->delimiter(',');

    CLI::App* exporter = app.add_subcommand("export", "dump cells or the complex as DOT/JSON");
    add_common_options(exporter, o);
    exporter->add_option("--prime", o.prime, "deck group order");
    exporter->add_option("--dimension", o.dimension, "cell dimension (omit for the whole complex)");
    exporter->add_option("--index", o.index, "cell index within the dimension");
    exporter->add_option("--format", o.format, "dot or json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (census->parsed()) {
            cmd_census(o, out);
        } else if (homology->parsed()) {
            cmd_homology(o, out);
        } else if (loci->parsed()) {
            cmd_loci(o, out);
        } else if (verify->parsed()) {
            return cmd_verify(o, out);
        } else if (exporter->parsed()) {
            cmd_export(o, out);
        }
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.message << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code) {
        case Errc::resource_budget_exceeded:
            return 2;
        case Errc::internal:
        case Errc::inconsistent_euler:
            return 3;
        default:
            return 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace tcov
