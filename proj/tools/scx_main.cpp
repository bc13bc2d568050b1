// scx command-line front end: generate cyclic-window complexes and their
// corridor/pseudo-manifold derivatives, verify structural predicates,
// measure dual-graph diameters, search primitive polynomials, and print
// bound reports. Exit codes: 0 success / all predicates true, 1 a checked
// property is false or a bound is violated, 2 usage, I/O, or construction
// errors.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scx/scx.hpp"

namespace {

using scx::u64;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) scx::fail(scx::errc::bad_argument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) scx::fail(scx::errc::bad_argument, "cannot write " + path);
    out << content;
}

std::vector<u64> parse_u64_list(const std::string& csv) {
    std::vector<u64> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) scx::fail(scx::errc::bad_argument, "empty entry in list: " + csv);
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            scx::fail(scx::errc::bad_argument, "bad integer in list: " + item);
        }
        if (used != item.size()) scx::fail(scx::errc::bad_argument, "bad integer in list: " + item);
        out.push_back(v);
    }
    if (out.empty()) scx::fail(scx::errc::bad_argument, "empty list");
    return out;
}

std::string join_u64(const std::vector<u64>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string summary_line(const scx::PureComplex& c) {
    std::ostringstream os;
    os << scx::kind_name(scx::classify_dual(c).kind) << ", " << c.facet_count() << " facets, n="
       << c.ambient_vertices() << ", used=" << c.used_vertex_count();
    return os.str();
}

struct GenLfsrArgs {
    u64 q = 0;
    int d = 0;
    std::string poly_csv, seed_csv, output;
    int drop = 0;
    bool drop_given = false;
};

int run_gen_lfsr(const GenLfsrArgs& args) {
    scx::Field field = scx::make_field(args.q);
    std::optional<scx::Polynomial> poly;
    if (!args.poly_csv.empty())
        poly = scx::Polynomial::from_descending(field, parse_u64_list(args.poly_csv));
    std::optional<std::vector<u64>> seed;
    if (!args.seed_csv.empty()) seed = parse_u64_list(args.seed_csv);

    scx::LfsrComplexResult r = scx::build_lfsr_complex(args.q, args.d, poly, seed);
    scx::PureComplex out = r.complex;
    std::vector<std::string> comments{
        "encoding lfsr q=" + std::to_string(args.q) + " d=" + std::to_string(args.d) +
        " vertex=(index(u)+q*color)",
        "poly " + join_u64(r.poly.descending_coeffs()) + " seed " + join_u64(r.seed)};
    if (args.drop_given) {
        out = scx::drop_facet(out, args.drop);
        comments.push_back("dropped facet " + std::to_string(args.drop));
    }
    write_file(args.output, scx::serialize_complex(out, comments));
    std::cout << summary_line(out) << "\n";
    return 0;
}

struct GenDoubleArgs {
    std::string input, output;
    bool closed = false;
};

int run_gen_double(const GenDoubleArgs& args) {
    scx::PureComplex base = scx::parse_complex(read_file(args.input));
    scx::PureComplex doubled =
        args.closed ? scx::double_closed_corridor(base) : scx::double_corridor(base);
    std::vector<std::string> comments{"encoding doubled copy j of v -> 2v+(j-1)"};
    write_file(args.output, scx::serialize_complex(doubled, comments));
    std::cout << summary_line(doubled) << "\n";
    return 0;
}

struct CheckArgs {
    std::string input;
    bool pm = false, duoid = false, normal = false, corridor = false, closed_corridor = false;
};

int run_check(const CheckArgs& args) {
    scx::PureComplex c = scx::parse_complex(read_file(args.input));
    if (!args.pm && !args.duoid && !args.normal && !args.corridor && !args.closed_corridor) {
        std::cout << summary_line(c) << "\n";
        return 0;
    }
    bool all = true;
    auto emit = [&all](const char* name, bool value) {
        std::cout << name << ": " << (value ? "true" : "false") << "\n";
        all = all && value;
    };
    if (args.pm) emit("pm", scx::is_pseudo_manifold(c));
    if (args.duoid) emit("duoid", scx::is_semi_duoid(c));
    if (args.normal) emit("normal", scx::is_normal(c));
    if (args.corridor || args.closed_corridor) {
        scx::DualKind kind = c.facet_count() == 0 ? scx::DualKind::Disconnected
                                                  : scx::classify_dual(c).kind;
        if (args.corridor) emit("corridor", kind == scx::DualKind::Path);
        if (args.closed_corridor) emit("closed-corridor", kind == scx::DualKind::Cycle);
    }
    return all ? 0 : 1;
}

struct DiameterArgs {
    std::string input;
    unsigned threads = 1;
};

int run_diameter(const DiameterArgs& args) {
    scx::PureComplex c = scx::parse_complex(read_file(args.input));
    try {
        std::cout << scx::diameter(c, args.threads) << "\n";
    } catch (const scx::Error& e) {
        if (e.code() == scx::errc::disconnected) {
            std::cerr << "disconnected\n";
            return 1;
        }
        throw;
    }
    return 0;
}

struct PolySearchArgs {
    u64 q = 0;
    unsigned deg = 0;
    bool all_nonzero = false, count = false;
};

int run_poly_search(const PolySearchArgs& args) {
    scx::Field field = scx::make_field(args.q);
    if (args.count) {
        u64 n = args.all_nonzero ? scx::count_primitive_all_nonzero(field, args.deg)
                                 : scx::count_primitive(field, args.deg);
        std::cout << n << "\n";
        return 0;
    }
    try {
        scx::Polynomial f = args.all_nonzero ? scx::find_primitive_all_nonzero(field, args.deg)
                                             : scx::find_primitive(field, args.deg);
        std::cout << join_u64(f.descending_coeffs()) << "\n";
    } catch (const scx::Error& e) {
        if (e.code() == scx::errc::not_found) {
            std::cerr << e.what() << "\n";
            return 1;
        }
        throw;
    }
    return 0;
}

struct ReportArgs {
    u64 q = 0;
    int d = 0;
    bool doubled = false, tsv = false;
};

struct ReportRow {
    std::string kind;
    u64 q;
    int d;
    int n;
    int facets;
    int diameter;
    long long lower;
    u64 upper;
};

int run_report(const ReportArgs& args) {
    std::vector<ReportRow> rows;

    scx::LfsrComplexResult r = scx::build_lfsr_complex(args.q, args.d);
    scx::PureComplex corridor = scx::drop_facet(r.complex, 0);
    const u64 dm1 = static_cast<u64>(args.d) - 1;
    {
        const int n = corridor.ambient_vertices();
        const long long lower =
            static_cast<long long>(scx::checked_pow(static_cast<u64>(n), dm1) /
                                   scx::checked_pow(static_cast<u64>(args.d) + 2, dm1)) -
            3;
        rows.push_back({"corridor", args.q, args.d, n, corridor.facet_count(),
                        scx::diameter(corridor), lower,
                        scx::hirsch_upper_bound(static_cast<u64>(n), static_cast<u64>(args.d))});
    }
    if (args.doubled) {
        scx::PureComplex doubled = scx::double_corridor(corridor);
        const int n2 = doubled.ambient_vertices();
        const long long lower =
            static_cast<long long>(scx::checked_pow(static_cast<u64>(n2), dm1) /
                                   scx::checked_pow(2 * (static_cast<u64>(args.d) + 2), dm1)) -
            1;
        rows.push_back({"doubled", args.q, args.d, n2, doubled.facet_count(),
                        scx::diameter(doubled), lower,
                        scx::hirsch_upper_bound(static_cast<u64>(n2), static_cast<u64>(args.d))});
    }

    if (args.tsv) {
        std::cout << "kind\tq\td\tn\tfacets\tdiameter\tlower\tupper\n";
        for (const auto& row : rows)
            std::cout << row.kind << "\t" << row.q << "\t" << row.d << "\t" << row.n << "\t"
                      << row.facets << "\t" << row.diameter << "\t" << row.lower << "\t"
                      << row.upper << "\n";
    } else {
        std::cout << std::left << std::setw(10) << "kind" << std::right << std::setw(4) << "q"
                  << std::setw(4) << "d" << std::setw(7) << "n" << std::setw(8) << "facets"
                  << std::setw(10) << "diameter" << std::setw(8) << "lower" << std::setw(8)
                  << "upper" << "\n";
        for (const auto& row : rows)
            std::cout << std::left << std::setw(10) << row.kind << std::right << std::setw(4)
                      << row.q << std::setw(4) << row.d << std::setw(7) << row.n << std::setw(8)
                      << row.facets << std::setw(10) << row.diameter << std::setw(8) << row.lower
                      << std::setw(8) << row.upper << "\n";
    }

    for (const auto& row : rows) {
        if (row.lower > row.diameter || static_cast<u64>(row.diameter) > row.upper) {
            std::cerr << "bound violated for " << row.kind << " q=" << row.q << " d=" << row.d
                      << "\n";
            return 1;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scx: extremal simplicial complex construction and verification"};
    app.require_subcommand(1);

    GenLfsrArgs gen_lfsr_args;
    GenDoubleArgs gen_double_args;
    CheckArgs check_args;
    DiameterArgs diameter_args;
    PolySearchArgs poly_args;
    ReportArgs report_args;

    auto* gen = app.add_subcommand("gen", "generate a complex and write an scx file");
    gen->require_subcommand(1);
    auto* gen_lfsr = gen->add_subcommand("lfsr", "cyclic window complex over GF(q)");
    gen_lfsr->add_option("--q", gen_lfsr_args.q, "field order (prime power)")->required();
    gen_lfsr->add_option("--d", gen_lfsr_args.d, "facet size d >= 2")->required();
    gen_lfsr->add_option("--poly", gen_lfsr_args.poly_csv,
                         "coefficients a_1,...,a_{d-1} as canonical indices");
    gen_lfsr->add_option("--seed", gen_lfsr_args.seed_csv, "seed s_0,...,s_{d-2}");
    gen_lfsr->add_option("--drop-facet", gen_lfsr_args.drop, "delete this facet after building");
    gen_lfsr->add_option("-o,--output", gen_lfsr_args.output, "output file")->required();

    auto* gen_double = gen->add_subcommand("double", "pseudo-manifold doubling of a corridor");
    gen_double->add_option("--input", gen_double_args.input, "input scx file")->required();
    gen_double->add_flag("--closed", gen_double_args.closed, "input is a closed corridor");
    gen_double->add_option("-o,--output", gen_double_args.output, "output file")->required();

    auto* check = app.add_subcommand("check", "evaluate predicates on an scx file");
    check->add_option("--input", check_args.input, "input scx file")->required();
    check->add_flag("--pm", check_args.pm, "pseudo-manifold without boundary");
    check->add_flag("--duoid", check_args.duoid, "semi-duoid (every ridge in evenly many facets)");
    check->add_flag("--normal", check_args.normal, "normal complex");
    check->add_flag("--corridor", check_args.corridor, "dual graph is a path");
    check->add_flag("--closed-corridor", check_args.closed_corridor, "dual graph is a cycle");

    auto* diam = app.add_subcommand("diameter", "dual-graph diameter of an scx file");
    diam->add_option("--input", diameter_args.input, "input scx file")->required();
    diam->add_option("--threads", diameter_args.threads, "BFS worker threads");

    auto* poly = app.add_subcommand("poly", "primitive polynomial utilities");
    poly->require_subcommand(1);
    auto* poly_search = poly->add_subcommand("search", "find or count primitive polynomials");
    poly_search->add_option("--q", poly_args.q, "field order (prime power)")->required();
    poly_search->add_option("--deg", poly_args.deg, "degree")->required();
    poly_search->add_flag("--all-nonzero", poly_args.all_nonzero,
                          "require every coefficient nonzero");
    poly_search->add_flag("--count", poly_args.count, "print the number of matches instead");

    auto* report = app.add_subcommand("report", "measured diameters against the known bounds");
    report->add_option("--q", report_args.q, "field order (prime power)")->required();
    report->add_option("--d", report_args.d, "facet size d >= 2")->required();
    report->add_flag("--double", report_args.doubled, "also report the doubled corridor");
    report->add_flag("--tsv", report_args.tsv, "tab-separated output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    gen_lfsr_args.drop_given = gen_lfsr->count("--drop-facet") > 0;

    try {
        if (gen_lfsr->parsed()) return run_gen_lfsr(gen_lfsr_args);
        if (gen_double->parsed()) return run_gen_double(gen_double_args);
        if (check->parsed()) return run_check(check_args);
        if (diam->parsed()) return run_diameter(diameter_args);
        if (poly_search->parsed()) return run_poly_search(poly_args);
        if (report->parsed()) return run_report(report_args);
    } catch (const scx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
