// Acceptance suite: one pass/fail line per criterion.
//   acceptance            run everything
//   acceptance 3 5        run selected criteria
// Exit status is the number of failed criteria among those run.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "inversive/apollonian.hpp"
#include "inversive/cli.hpp"
#include "inversive/descartes.hpp"
#include "inversive/error.hpp"
#include "inversive/minkowski.hpp"
#include "inversive/nsphere.hpp"
#include "json.hpp"
#include "support/oracles.hpp"
#include "support/triples.hpp"

using namespace inversive;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const double kRoot3 = std::sqrt(3.0);

// shared corpus for 1 and 2
std::vector<std::pair<Circle, Circle>> pair_corpus() {
    std::mt19937_64 rng(20240601);
    const oracle::CircleSampler sampler{100.0, 1e-3, 1e3, true};
    std::vector<std::pair<Circle, Circle>> pairs(10000);
    for (auto &[a, b] : pairs) {
        a = sampler(rng);
        b = sampler(rng);
    }
    return pairs;
}

Quadruple geometric_quadruple() {
    return {{lift(Circle{{0, 0}, -1}), lift(Circle{{0.5, 0}, 0.5}), lift(Circle{{-0.5, 0}, 0.5}),
             lift(Circle{{0, 2.0 / 3}, 1.0 / 3})}};
}

Outcome criterion1() {
    double worst = 0;
    for (const auto &[a, b] : pair_corpus()) {
        const double v = inner_geometric(a, b);
        worst = std::max(worst, std::abs(inner(lift(a), lift(b)) - v) / std::max(1.0, std::abs(v)));
    }
    return {worst <= 1e-10, fmt("10000 pairs, worst relative gap %.3g (limit 1e-10)", worst)};
}

Outcome criterion2() {
    std::mt19937_64 rng(20240602);
    std::vector<CircleVector> lifted;
    for (const auto &[a, b] : pair_corpus()) {
        lifted.push_back(lift(a));
        lifted.push_back(lift(b));
    }
    for (int i = 0; i < 10000; ++i) lifted.push_back(lift(oracle::random_halfplane(rng)));
    std::size_t bad = 0;
    double worst = 0, worst_rel = 0;
    for (const auto &c : lifted) {
        const double e = std::abs(inner(c, c) + 1.0);
        if (e > 1e-12) ++bad;
        worst = std::max(worst, e);
        worst_rel = std::max(worst_rel, e / normalization_scale(c));
    }
    return {bad == 0, fmt("%zu lifts, %zu above 1e-12, worst |<C,C>+1| %.3g (relative to component scale %.3g)",
                          lifted.size(), bad, worst, worst_rel)};
}

Outcome criterion3() {
    std::mt19937_64 rng(20240603);
    const oracle::CircleSampler sampler{1.0, 0.1, 10.0, true};
    int accepted = 0, over = 0;
    double worst = 0;
    while (accepted < 1000) {
        std::array<CircleVector, 4> c;
        for (auto &v : c) v = lift(sampler(rng));
        double cond;
        try {
            cond = condition_number(gramian(c));
        } catch (const GeometryError &) {
            continue;
        }
        if (cond > 1e6) continue;
        const double r = verify_generalized(c);
        worst = std::max(worst, r);
        if (r > 1e-8) ++over;
        ++accepted;
    }
    return {over == 0, fmt("1000 quadruples (cond <= 1e6), %d above 1e-8, worst residual %.3g", over, worst)};
}

Outcome criterion4() {
    const Matrix f = Matrix::from(gramian(geometric_quadruple().c));
    Matrix tangent(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) tangent(i, j) = i == j ? -1.0 : 1.0;
    const double shape = max_abs_entry(f - tangent);
    Matrix four(4, 4), quarter(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            four(i, j) = i == j ? 4.0 : 0.0;
            quarter(i, j) = f(i, j) / 4;
        }
    const double square = max_abs_entry(f * f - four);
    const double inv = max_abs_entry(invert(f) - quarter);
    return {shape <= 1e-9 && square <= 1e-12 && inv <= 1e-12,
            fmt("|f - tangent pattern| %.3g (1e-9), |f^2 - 4I| %.3g (1e-12), |f^-1 - f/4| %.3g (1e-12)", shape, square, inv)};
}

Outcome criterion5() {
    const auto c1 = lift(Circle{{0, 0}, 1}), c2 = lift(Circle{{2, 0}, 1}), c3 = lift(Circle{{1, kRoot3}, 1});
    const auto [hi, lo] = solve_fourth_disk(c1, c2, c3);
    const double curv = std::max(std::abs(hi.beta - (3 + 2 * kRoot3)), std::abs(lo.beta - (3 - 2 * kRoot3)));
    double centre = 0, tangency = 0, descartes = 0;
    for (const auto &s : {hi, lo}) {
        const Circle c = std::get<Circle>(project(s));
        centre = std::max({centre, std::abs(c.center.x - 1), std::abs(c.center.y - kRoot3 / 3)});
        const std::array<CircleVector, 4> q{c1, c2, c3, s};
        tangency = std::max(tangency, tangency_residual(q));
        descartes = std::max(descartes, std::abs(descartes_residual(1, 1, 1, s.beta)));
    }
    return {curv <= 1e-9 && centre <= 1e-9 && tangency <= 1e-9 && descartes <= 1e-9,
            fmt("curvature err %.3g, centre err %.3g, tangency %.3g, descartes %.3g (all 1e-9)", curv, centre,
                tangency, descartes)};
}

double gramian_drift(const Quadruple &q, std::size_t i) {
    return max_abs_entry(Matrix::from(gramian(vieta_reflect(q, i).c)) - Matrix::from(gramian(q.c)));
}

double component_scale(const Quadruple &q) {
    double s = 0;
    for (const auto &c : q.c)
        for (double x : c.to_array()) s = std::max(s, std::abs(x));
    return s;
}

Outcome criterion6() {
    // the (-1,2,2,3) quadruple with its first two generations, and the equilateral triple with its outer disk
    std::vector<Quadruple> quads;
    GenerationLimits limits;
    limits.max_depth = 2;
    for (const auto &node : generate(geometric_quadruple(), limits).quadruples) quads.push_back(node.quadruple);
    const auto c1 = lift(Circle{{0, 0}, 1}), c2 = lift(Circle{{2, 0}, 1}), c3 = lift(Circle{{1, kRoot3}, 1});
    quads.push_back({{c1, c2, c3, solve_fourth_disk(c1, c2, c3).second}});

    double twice = 0, invariance = 0;
    for (const auto &q : quads)
        for (std::size_t i = 0; i < 4; ++i) {
            const Quadruple back = vieta_reflect(vieta_reflect(q, i), i);
            for (std::size_t k = 0; k < 4; ++k) {
                const auto a = q.c[k].to_array(), b = back.c[k].to_array();
                for (int m = 0; m < 4; ++m) twice = std::max(twice, std::abs(a[m] - b[m]));
            }
            invariance = std::max(invariance, gramian_drift(q, i));
        }

    // informational: random tangent quadruples, drift relative to the squared component scale
    std::mt19937_64 rng(20240606);
    double scaled_drift = 0;
    for (int k = 0; k < 500; ++k) {
        const auto t = fixtures::random_tangent_triple(rng, k % 2 == 0);
        const auto [hi, lo] = solve_fourth_disk(lift(t[0]), lift(t[1]), lift(t[2]));
        const Quadruple q{{lift(t[0]), lift(t[1]), lift(t[2]), k % 3 ? hi : lo}};
        const double s = component_scale(q);
        for (std::size_t i = 0; i < 4; ++i) scaled_drift = std::max(scaled_drift, gramian_drift(q, i) / (s * s));
    }

    // integer curvature rows, walked to depth 6 against int64 arithmetic
    Quadruple seed = geometric_quadruple();
    const std::array<std::int64_t, 4> ks{-1, 2, 2, 3};
    for (int i = 0; i < 4; ++i) seed.c[i].beta = static_cast<double>(ks[i]);
    struct Node {
        Quadruple q;
        std::array<std::int64_t, 4> k;
        int created;
    };
    std::vector<Node> frontier{{seed, ks, -1}};
    std::size_t mismatches = 0, checked = 0;
    for (int d = 1; d <= 6; ++d) {
        std::vector<Node> next;
        for (const auto &n : frontier)
            for (int i = 0; i < 4; ++i) {
                if (i == n.created) continue;
                Node child{vieta_reflect(n.q, i), n.k, i};
                child.k[i] = 2 * (n.k[0] + n.k[1] + n.k[2] + n.k[3] - n.k[i]) - n.k[i];
                ++checked;
                if (child.q.c[i].beta != static_cast<double>(child.k[i])) ++mismatches;
                next.push_back(std::move(child));
            }
        frontier = std::move(next);
    }
    return {twice <= 1e-12 && invariance <= 1e-12 && mismatches == 0,
            fmt("%zu quadruples: double reflection %.3g, gramian drift %.3g (1e-12); %zu/%zu integer rows inexact; "
                "random quadruples drift/scale^2 %.3g",
                quads.size(), twice, invariance, mismatches, checked, scaled_drift)};
}

Outcome criterion7() {
    const std::array<double, 4> seed_k{-1, 2, 2, 3};
    const Quadruple seed = canonical_quadruple(seed_k);
    GenerationLimits limits;
    limits.max_depth = 6;
    const Gasket g = generate(seed, limits);
    double off_integer = 0;
    std::multiset<long> depth1;
    for (const auto &d : g.disks) {
        off_integer = std::max(off_integer, std::abs(d.vector.beta - std::round(d.vector.beta)));
        if (d.depth == 1) depth1.insert(std::lround(d.vector.beta));
    }
    const auto words = oracle::reflection_words(seed.c, 4);
    std::vector<CircleVector> all;
    std::string census;
    bool census_ok = true;
    for (int d = 0; d <= 4; ++d) {
        all.insert(all.end(), words[d].begin(), words[d].end());
        const auto ours = std::count_if(g.disks.begin(), g.disks.end(), [d](const GasketDisk &x) { return x.depth <= d; });
        const std::size_t theirs = oracle::count_distinct(all);
        census_ok = census_ok && static_cast<std::size_t>(ours) == theirs;
        census += fmt("%s%ld/%zu", d ? " " : "", static_cast<long>(ours), theirs);
    }
    const bool multiset_ok = depth1 == std::multiset<long>{3, 6, 6, 15};
    return {off_integer <= 1e-6 && multiset_ok && census_ok,
            fmt("%zu disks to depth 6, max integer offset %.3g; depth-1 {3,6,6,15} %s; cumulative counts vs oracle %s",
                g.disks.size(), off_integer, multiset_ok ? "ok" : "MISMATCH", census.c_str())};
}

Outcome criterion8() {
    double pair = 0, verify = 0, soddy = 0;
    for (int n = 2; n <= 6; ++n)
        for (bool outer : {false, true}) {
            std::vector<NVector> v;
            for (const auto &s : canonical_simplex_config(n, outer)) v.push_back(lift_n(s));
            double abs_sum = 0;
            std::vector<double> b;
            for (std::size_t i = 0; i < v.size(); ++i) {
                b.push_back(v[i].beta());
                abs_sum += std::abs(v[i].beta());
                for (std::size_t j = i + 1; j < v.size(); ++j) pair = std::max(pair, std::abs(inner_n(v[i], v[j]) - 1));
            }
            verify = std::max(verify, verify_generalized_n(v, n));
            soddy = std::max(soddy, std::abs(soddy_gosset_residual(b, n)) / (abs_sum * abs_sum));
        }
    const double k3 = std::abs(1 / canonical_simplex_config(3, false).back().radius - (2 + std::sqrt(6.0)));
    const double k2 = std::max(std::abs(1 / canonical_simplex_config(2, false).back().radius - (3 + 2 * kRoot3)),
                               std::abs(1 / canonical_simplex_config(2, true).back().radius - (3 - 2 * kRoot3)));
    return {pair <= 1e-9 && verify <= 1e-8 && soddy <= 1e-9 && k3 <= 1e-9 && k2 <= 1e-9,
            fmt("n=2..6: pair %.3g (1e-9), verify %.3g (1e-8), soddy/(sum|b|)^2 %.3g (1e-9); n=3 centre err %.3g, "
                "n=2 vs 3+-2sqrt3 %.3g",
                pair, verify, soddy, k3, k2)};
}

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t count(const std::string &s, const std::string &needle) {
    std::size_t n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

Outcome criterion9() {
    const fs::path fixtures = FIXTURE_DIR;
    const fs::path tmp = fs::temp_directory_path() / ("inversive_acceptance_" + std::to_string(std::random_device{}()));
    fs::create_directories(tmp);
    std::vector<std::string> problems;

    int roundtrips = 0;
    for (const char *name : {"equilateral_triple.json", "strip_triple.json", "three_disks.json"}) {
        const Run r = cli({"solve4", (fixtures / name).string()});
        if (r.code != 0) {
            problems.push_back(fmt("solve4 %s exit %d", name, r.code));
            continue;
        }
        const auto solved = nlohmann::json::parse(r.out);
        for (const auto &sol : solved["solutions"]) {
            auto doc = nlohmann::json::parse(slurp(fixtures / name));
            doc["disks"].push_back(sol["disk"]);
            std::ofstream(tmp / "rt.json") << doc.dump();
            const int code = cli({"verify", (tmp / "rt.json").string()}).code;
            if (code != 0) problems.push_back(fmt("round trip %s exit %d", name, code));
            ++roundtrips;
        }
    }

    for (int depth = 0; depth <= 4; ++depth) {
        const std::string csv = (tmp / "g.csv").string(), svg = (tmp / "g.svg").string();
        const Run r = cli({"--json", "gasket", "--seed", "-1,2,2,3", "--depth", std::to_string(depth), "--csv", csv,
                           "--svg", svg});
        const auto disks = nlohmann::json::parse(r.out)["disk_count"].get<std::size_t>();
        const std::size_t rows = count(slurp(csv), "\n") - 1, circles = count(slurp(svg), "<circle ");
        if (rows != disks || circles != disks)
            problems.push_back(fmt("depth %d: %zu disks, %zu csv rows, %zu circles", depth, disks, rows, circles));
    }

    const std::vector<std::pair<int, std::vector<std::string>>> codes{
        {0, {"verify", (fixtures / "quad_m1_2_2_3.json").string()}},
        {1, {"soddy", "--dim", "3", "--", "1", "1", "1", "1", "1"}},
        {2, {"verify", (fixtures / "three_disks.json").string()}},
        {2, {"verify", (fixtures / "invalid_json.json").string()}},
        {2, {"verify", (fixtures / "nan.json").string()}},
        {2, {"solve4", (fixtures / "zero_radius.json").string()}},
        {3, {"verify", (fixtures / "repeated_disk.json").string()}},
        {4, {"solve4", (fixtures / "nontangent_triple.json").string()}},
        {5, {"solve4", (fixtures / "degenerate_triple.json").string()}},
        {6, {"gasket", "--seed", "1,1,-1"}},
        {7, {"project", "0", "0", "1", "0"}},
    };
    for (const auto &[want, args] : codes) {
        const int got = cli(args).code;
        if (got != want) problems.push_back(fmt("%s: exit %d, want %d", args[0].c_str(), got, want));
    }

    const std::vector<std::vector<std::string>> reruns{
        {"--json", "verify", (fixtures / "quad_m1_2_2_3.json").string()},
        {"solve4", (fixtures / "equilateral_triple.json").string()},
        {"gasket", "--seed", "-1,2,2,3", "--depth", "3", "--csv", (tmp / "a.csv").string()},
    };
    for (const auto &args : reruns) {
        const Run a = cli(args);
        const std::string file_a = fs::exists(tmp / "a.csv") ? slurp(tmp / "a.csv") : "";
        const Run b = cli(args);
        const std::string file_b = fs::exists(tmp / "a.csv") ? slurp(tmp / "a.csv") : "";
        if (a.out != b.out || file_a != file_b) problems.push_back(args[0] + " rerun differs");
    }
    fs::remove_all(tmp);

    std::string detail = fmt("%d round trips, 5 gasket depths, %zu exit codes, %zu reruns", roundtrips, codes.size(),
                             reruns.size());
    for (const auto &p : problems) detail += "; " + p;
    return {problems.empty(), detail};
}

const std::map<int, std::pair<const char *, std::function<Outcome()>>> kCriteria{
    {1, {"inner product matches the law of cosines", criterion1}},
    {2, {"lifted vectors are unit spacelike to 1e-12", criterion2}},
    {3, {"generalized identity on random quadruples", criterion3}},
    {4, {"Descartes Gramian, f^2 = 4I, inverse = f/4", criterion4}},
    {5, {"fourth disk of the equilateral triple", criterion5}},
    {6, {"Vieta reflection", criterion6}},
    {7, {"gasket integrality and census", criterion7}},
    {8, {"Soddy-Gosset in dimensions 2..6", criterion8}},
    {9, {"command-line contract", criterion9}},
};

}  // namespace

int main(int argc, char **argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
    if (selected.empty())
        for (const auto &[id, _] : kCriteria) selected.push_back(id);

    int failed = 0;
    for (int id : selected) {
        const auto it = kCriteria.find(id);
        if (it == kCriteria.end()) {
            std::fprintf(stderr, "unknown criterion %d\n", id);
            return 64;
        }
        Outcome o;
        try {
            o = it->second.second();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", id, it->second.first, o.detail.c_str());
    }
    return failed;
}
