#include "inversive/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "inversive/apollonian.hpp"
#include "inversive/descartes.hpp"
#include "inversive/document.hpp"
#include "inversive/error.hpp"
#include "inversive/numfmt.hpp"
#include "inversive/nsphere.hpp"

namespace inversive::cli {

using ojson = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

/// Usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SingularMatrix: return kDegenerateConfiguration;
        case ErrorKind::NotTangent: return kNotTangent;
        case ErrorKind::DegenerateTriple: return kDegenerateTriple;
        case ErrorKind::ComplexRoots:
        case ErrorKind::InvalidSeed: return kInvalidSeed;
        case ErrorKind::NotNormalized: return kNotNormalized;
        default: return kParseError;
    }
}

struct Options {
    double tol = 1e-8;
    bool json = false;
};

ojson header(const char *command) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

template <class M>
ojson matrix_json(const M &m, std::size_t n) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < n; ++i) {
        ojson row = ojson::array();
        for (std::size_t j = 0; j < n; ++j) {
            if constexpr (std::is_same_v<M, Matrix>) row.push_back(json_number(m(i, j)));
            else row.push_back(json_number(m[i][j]));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class M>
void print_matrix(std::ostream &out, const M &m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out << ' ';
        for (std::size_t j = 0; j < n; ++j) {
            if constexpr (std::is_same_v<M, Matrix>) out << ' ' << format_double(m(i, j));
            else out << ' ' << format_double(m[i][j]);
        }
        out << '\n';
    }
}

std::string join(std::span<const double> values, char sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += sep;
        s += format_double(values[i]);
    }
    return s;
}

std::vector<double> parse_number_list(const std::string &text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        double v = 0.0;
        const char *first = item.data();
        const char *last = item.data() + item.size();
        if (!item.empty() && *first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (item.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
            throw UsageError("not a finite number: \"" + item + "\"");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

void require_finite(std::span<const double> values) {
    for (double v : values)
        if (!std::isfinite(v)) throw UsageError("numbers must be finite");
}

// ---------------------------------------------------------------------------

int cmd_verify(const Options &opt, const std::string &path, std::ostream &out) {
    const DiskDocument doc = load_disk_document(path);
    ojson report = header("verify");
    double residual = 0.0;

    if (doc.is_ndim()) {
        const int n = *doc.dim;
        if (doc.spheres.size() != std::size_t(n) + 2)
            throw UsageError("expected " + std::to_string(n + 2) + " spheres, got " + std::to_string(doc.spheres.size()));
        std::vector<NVector> vs;
        for (const auto &s : doc.spheres) vs.push_back(lift_n(s));
        const Matrix f = gramian_n(vs);
        const Matrix f_inv = invert(f);
        residual = verify_generalized_n(vs, n);
        const std::size_t m = vs.size();
        if (opt.json) {
            report["dim"] = n;
            report["gramian"] = matrix_json(f, m);
            report["inverse"] = matrix_json(f_inv, m);
        } else {
            out << "gramian:\n";
            print_matrix(out, f, m);
            out << "inverse:\n";
            print_matrix(out, f_inv, m);
        }
    } else {
        if (doc.disks.size() != 4) throw UsageError("expected 4 disks, got " + std::to_string(doc.disks.size()));
        std::array<CircleVector, 4> c;
        for (std::size_t i = 0; i < 4; ++i) c[i] = lift(doc.disks[i]);
        const Mat4 f = gramian(c);
        const Mat4 f_inv = invert4(f);
        residual = verify_generalized(c);
        if (opt.json) {
            report["dim"] = 2;
            report["gramian"] = matrix_json(f, 4);
            report["inverse"] = matrix_json(f_inv, 4);
        } else {
            out << "gramian:\n";
            print_matrix(out, f, 4);
            out << "inverse:\n";
            print_matrix(out, f_inv, 4);
        }
    }

    const bool pass = residual <= opt.tol;
    if (opt.json) {
        report["residual"] = json_number(residual);
        report["tolerance"] = opt.tol;
        report["pass"] = pass;
        out << report.dump(2) << '\n';
    } else {
        out << "residual: " << format_double(residual) << '\n';
        out << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kPass : kCheckFailed;
}

int cmd_solve4(const std::string &path, std::ostream &out, std::ostream &err) {
    const DiskDocument doc = load_disk_document(path);
    if (doc.is_ndim()) throw UsageError("solve4 works on planar documents only");
    if (doc.disks.size() != 3) throw UsageError("expected 3 disks, got " + std::to_string(doc.disks.size()));
    std::array<CircleVector, 3> c;
    for (std::size_t i = 0; i < 3; ++i) c[i] = lift(doc.disks[i]);

    std::pair<CircleVector, CircleVector> sols;
    try {
        sols = solve_fourth_disk(c[0], c[1], c[2]);
    } catch (const GeometryError &e) {
        if (e.kind() == ErrorKind::NotTangent) {
            const TangencyDefect d = worst_tangency(c);
            err << "offending pair: disks[" << d.i << "], disks[" << d.j << "]; |<c_i,c_j> - 1| = "
                << format_double(d.residual) << '\n';
        }
        throw;
    }

    ojson report = header("solve4");
    ojson disks = ojson::array();
    ojson details = ojson::array();
    for (const CircleVector &x : {sols.first, sols.second}) {
        const Disk d = project(x);
        disks.push_back(disk_record(d));
        const std::array<CircleVector, 4> quad{c[0], c[1], c[2], x};
        ojson s;
        s["disk"] = disk_record(d);
        s["vector"] = {json_number(x.xdot), json_number(x.ydot), json_number(x.beta), json_number(x.gamma)};
        s["curvature"] = json_number(x.beta);
        s["descartes_residual"] = json_number(descartes_residual(c[0].beta, c[1].beta, c[2].beta, x.beta));
        s["tangency_residual"] = json_number(tangency_residual(quad));
        details.push_back(std::move(s));
    }
    report["disks"] = std::move(disks);
    report["solutions"] = std::move(details);
    out << report.dump(2) << '\n';
    return kPass;
}

struct GasketArgs {
    std::string seed;
    std::string input;
    std::optional<int> depth;
    std::optional<double> max_curvature;
    std::size_t max_count = 1000000;
    std::string svg;
    std::string csv;
    bool fill_by_depth = false;
};

void write_file(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << content;
    if (!f) throw UsageError("failed writing " + path);
}

int cmd_gasket(const Options &opt, const GasketArgs &a, std::ostream &out) {
    if (a.seed.empty() == a.input.empty()) throw UsageError("give exactly one of --seed or --input");

    Quadruple seed;
    if (!a.seed.empty()) {
        const auto ks = parse_number_list(a.seed);
        if (ks.size() != 3 && ks.size() != 4) throw UsageError("--seed needs 3 or 4 curvatures");
        seed = canonical_quadruple(ks);
    } else {
        const DiskDocument doc = load_disk_document(a.input);
        if (doc.is_ndim() || doc.disks.size() != 4)
            throw UsageError("expected 4 planar disks, got " + std::to_string(doc.disks.size()));
        for (std::size_t i = 0; i < 4; ++i) seed.c[i] = lift(doc.disks[i]);
    }

    GenerationLimits limits;
    limits.max_depth = a.depth;
    limits.max_curvature = a.max_curvature;
    limits.max_count = a.max_count;
    const Gasket g = generate(seed, limits);

    if (!a.csv.empty()) {
        std::ostringstream csv;
        csv << "depth,curvature,x,y\n";
        for (const auto &d : g.disks) {
            csv << d.depth << ',' << format_double(d.vector.beta) << ',';
            const Disk shape = project(d.vector);
            if (const auto *c = std::get_if<Circle>(&shape))
                csv << format_double(c->center.x) << ',' << format_double(c->center.y);
            else
                csv << ',';
            csv << '\n';
        }
        write_file(a.csv, csv.str());
    }
    if (!a.svg.empty()) {
        RenderStyle style;
        style.fill_by_depth = a.fill_by_depth;
        if (!a.fill_by_depth) style.fill = "none";
        write_file(a.svg, render_svg(g, style));
    }

    std::optional<double> min_radius;
    int deepest = 0;
    for (const auto &d : g.disks) {
        deepest = std::max(deepest, d.depth);
        if (d.vector.beta != 0.0) {
            const double r = std::abs(1.0 / d.vector.beta);
            if (!min_radius || r < *min_radius) min_radius = r;
        }
    }

    if (opt.json) {
        ojson report = header("gasket");
        report["disk_count"] = g.disks.size();
        report["quadruple_count"] = g.quadruples.size();
        report["max_depth"] = deepest;
        report["min_radius"] = min_radius ? ojson(json_number(*min_radius)) : ojson(nullptr);
        ojson spectrum = ojson::array();
        for (const auto &line : curvature_spectrum(g))
            spectrum.push_back({{"curvature", json_number(line.curvature)}, {"multiplicity", line.multiplicity}});
        report["spectrum"] = std::move(spectrum);
        out << report.dump(2) << '\n';
    } else {
        out << "disks: " << g.disks.size() << '\n';
        out << "quadruples: " << g.quadruples.size() << '\n';
        out << "max depth: " << deepest << '\n';
        out << "min radius: " << (min_radius ? format_double(*min_radius) : std::string("none")) << '\n';
    }
    return kPass;
}

int cmd_soddy(const Options &opt, int dim, const std::vector<double> &curvatures, std::ostream &out) {
    require_finite(curvatures);
    const double residual = soddy_gosset_residual(curvatures, dim);
    double abs_sum = 0.0;
    for (double b : curvatures) abs_sum += std::abs(b);
    const bool pass = std::abs(residual) <= opt.tol * abs_sum * abs_sum;
    if (opt.json) {
        ojson report = header("soddy");
        report["dim"] = dim;
        report["curvatures"] = curvatures;
        report["residual"] = json_number(residual);
        report["tolerance"] = opt.tol;
        report["pass"] = pass;
        out << report.dump(2) << '\n';
    } else {
        out << "residual: " << format_double(residual) << '\n';
        out << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kPass : kCheckFailed;
}

int cmd_lift(const Options &opt, const std::string &kind, const std::vector<double> &v, std::ostream &out) {
    require_finite(v);
    std::vector<double> lifted;
    if (kind == "circle") {
        if (v.size() != 3) throw UsageError("lift circle needs: x y r");
        const CircleVector c = lift(Circle{{v[0], v[1]}, v[2]});
        lifted = {c.xdot, c.ydot, c.beta, c.gamma};
    } else if (kind == "halfplane") {
        if (v.size() != 3) throw UsageError("lift halfplane needs: nx ny offset");
        const CircleVector c = lift(Halfplane{{v[0], v[1]}, v[2]});
        lifted = {c.xdot, c.ydot, c.beta, c.gamma};
    } else if (kind == "sphere") {
        if (v.size() < 3) throw UsageError("lift sphere needs: x1 ... xn r with n >= 2");
        lifted = lift_n(NSphere{{v.begin(), v.end() - 1}, v.back()}).coords;
    } else {
        throw UsageError("unknown disk kind \"" + kind + "\" (circle, halfplane, sphere)");
    }

    if (opt.json) {
        ojson report = header("lift");
        ojson vec = ojson::array();
        for (double x : lifted) vec.push_back(json_number(x));
        report["vector"] = std::move(vec);
        out << report.dump(2) << '\n';
    } else {
        out << join(lifted, ' ') << '\n';
    }
    return kPass;
}

int cmd_project(const Options &opt, const std::vector<double> &v, std::ostream &out) {
    require_finite(v);
    if (v.size() != 4) throw UsageError("project needs 4 numbers: xdot ydot beta gamma");
    const Disk d = project(CircleVector{v[0], v[1], v[2], v[3]});
    if (opt.json) {
        ojson report = header("project");
        report["disk"] = disk_record(d);
        out << report.dump(2) << '\n';
    } else if (const auto *c = std::get_if<Circle>(&d)) {
        out << "circle (" << format_double(c->center.x) << ',' << format_double(c->center.y)
            << ") r=" << format_double(c->radius) << '\n';
    } else {
        const auto &h = std::get<Halfplane>(d);
        out << "halfplane n=(" << format_double(h.normal.x) << ',' << format_double(h.normal.y)
            << ") c=" << format_double(h.offset) << '\n';
    }
    return kPass;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Disk configurations in the Minkowski model: verification, tangent-disk solving, gaskets"};
    app.name("inversive");
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--tol", opt.tol, "Tolerance for all pass/fail checks")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", opt.json, "Machine-readable output");

    std::string verify_path;
    auto *verify = app.add_subcommand("verify", "Check D f^-1 D^T = G for 4 disks (or n+2 spheres)");
    verify->add_option("input", verify_path, "Disk document (JSON)")->required();

    std::string solve_path;
    auto *solve4 = app.add_subcommand("solve4", "Find both disks tangent to three mutually tangent disks");
    solve4->add_option("input", solve_path, "Disk document with 3 disks")->required();

    GasketArgs ga;
    auto *gasket = app.add_subcommand("gasket", "Grow an Apollonian gasket by Vieta reflection");
    gasket->add_option("--seed", ga.seed, "Comma-separated curvatures (3 or 4)");
    gasket->add_option("--input", ga.input, "Disk document with a Descartes quadruple");
    gasket->add_option("--depth", ga.depth, "Maximum reflection depth")->check(CLI::NonNegativeNumber);
    gasket->add_option("--max-curvature", ga.max_curvature, "Do not emit disks above this curvature");
    gasket->add_option("--max-count", ga.max_count, "Cap on the number of disks")->capture_default_str();
    gasket->add_option("--svg", ga.svg, "Write an SVG rendering");
    gasket->add_option("--csv", ga.csv, "Write depth,curvature,x,y rows");
    gasket->add_flag("--fill-by-depth", ga.fill_by_depth, "Colour disks by generation");

    int soddy_dim = 2;
    std::vector<double> soddy_values;
    auto *soddy = app.add_subcommand("soddy", "Evaluate (sum b)^2 - n sum b^2 for n+2 curvatures");
    soddy->add_option("--dim", soddy_dim, "Dimension n")->required();
    soddy->add_option("curvatures", soddy_values, "n+2 curvatures")->required();

    std::string lift_kind;
    std::vector<double> lift_values;
    auto *lift_cmd = app.add_subcommand("lift", "Print the Minkowski vector of a disk");
    lift_cmd->add_option("kind", lift_kind, "circle | halfplane | sphere")->required();
    lift_cmd->add_option("values", lift_values, "circle: x y r; halfplane: nx ny offset; sphere: x1..xn r")->required();

    std::vector<double> project_values;
    auto *project_cmd = app.add_subcommand("project", "Print the disk of a unit Minkowski vector");
    project_cmd->add_option("values", project_values, "xdot ydot beta gamma")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (*verify) return cmd_verify(opt, verify_path, out);
        if (*solve4) return cmd_solve4(solve_path, out, err);
        if (*gasket) return cmd_gasket(opt, ga, out);
        if (*soddy) return cmd_soddy(opt, soddy_dim, soddy_values, out);
        if (*lift_cmd) return cmd_lift(opt, lift_kind, lift_values, out);
        if (*project_cmd) return cmd_project(opt, project_values, out);
    } catch (const GeometryError &e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const DocumentError &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
    return kParseError;
}

}  // namespace inversive::cli
