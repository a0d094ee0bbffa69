// ratcat -- exact rational Catalan combinatorics from the command line.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratcat/assoc.hpp"
#include "ratcat/dyck.hpp"
#include "ratcat/ncpart.hpp"
#include "ratcat/numbers.hpp"
#include "ratcat/render.hpp"
#include "ratcat/scomplex.hpp"
#include "ratcat/verify.hpp"

using nlohmann::json;
using namespace ratcat;

namespace {

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

json diagonal_list(const std::vector<Diagonal>& ds) {
    json out = json::array();
    for (const Diagonal& d : ds) out.push_back({d.u, d.v});
    return out;
}

json partition_blocks(const SetPartition& p) {
    json out = json::array();
    for (const auto& b : p.blocks()) out.push_back(b);
    return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

int cmd_count(long a, long b, const std::string& kind, long i, const std::string& rspec) {
    CoprimePair p(a, b);
    BigInt value;
    if (kind == "catalan") {
        value = rational_catalan(p);
    } else if (kind == "derived") {
        value = derived_catalan(p);
    } else if (kind == "narayana") {
        value = narayana(p, i);
    } else if (kind == "kirkman") {
        value = kirkman(p, i);
    } else {
        std::vector<long> r;
        std::stringstream ss(rspec);
        std::string tok;
        while (std::getline(ss, tok, ',')) r.push_back(std::stol(tok));
        value = kreweras(p, RunTypeVector(p, r));
    }
    std::cout << value.str() << "\n";
    return 0;
}

int cmd_enumerate(long a, long b, const std::string& kind, const std::string& out_path) {
    CoprimePair p(a, b);
    if (kind != "paths" && a >= b)
        throw std::invalid_argument("enumerate: derived objects require a < b");
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    for_each_path(p, [&](const DyckPath& d) {
        json j;
        j["path"] = d.word();
        j["lambda"] = to_partition(d);
        if (kind == "facets") j["facet"] = diagonal_list(facet_diagonals(d));
        if (kind == "homogeneous") j["homogeneous"] = partition_blocks(homogeneous(d));
        if (kind == "inhomogeneous") j["inhomogeneous"] = partition_blocks(inhomogeneous(d));
        os << j.dump() << "\n";
    });
    return 0;
}

int cmd_verify(long max_sum, const std::string& only, long jobs, unsigned long long budget) {
    if (!only.empty()) {
        auto names = verify_check_names();
        if (std::find(names.begin(), names.end(), only) == names.end())
            throw CLI::ValidationError("--only", "unknown check '" + only + "'");
    }
    std::vector<CoprimePair> pairs;
    for (long s = 3; s <= max_sum; ++s)
        for (long a = 1; 2 * a < s; ++a)
            if (std::gcd(a, s - a) == 1) pairs.emplace_back(a, s - a);

    VerifyOptions opt;
    opt.only = only;
    opt.budget = budget;
    std::vector<std::string> lines(pairs.size());
    std::atomic<bool> any_fail{false};
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            auto t0 = std::chrono::steady_clock::now();
            std::vector<CheckResult> results = run_pair_checks(pairs[i], opt);
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            json j;
            j["pair"] = {pairs[i].a(), pairs[i].b()};
            j["ms"] = ms;
            j["checks"] = json::array();
            for (const CheckResult& r : results) {
                j["checks"].push_back({{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
                if (is_hard_failure(r)) any_fail = true;
            }
            lines[i] = j.dump();
        }
    };
    long n_threads = std::max(1L, jobs);
    std::vector<std::thread> threads;
    for (long t = 1; t < n_threads; ++t) threads.emplace_back(work);
    work();
    for (auto& t : threads) t.join();
    for (const std::string& l : lines) std::cout << l << "\n";
    return any_fail ? 1 : 0;
}

int cmd_csp(long a, long b) {
    CoprimePair p(a, b);
    CspReport rep = csp_check(p);
    json j;
    j["pair"] = {a, b};
    j["m"] = a + b - 1;
    j["fuss"] = rep.fuss;
    j["ok"] = rep.ok;
    j["rows"] = json::array();
    for (const auto& row : rep.rows) {
        json r;
        r["d"] = row.d;
        r["fixed"] = big_to_json(row.fixed_points);
        r["eval"] = row.evaluation ? big_to_json(*row.evaluation) : json();
        r["ok"] = row.ok;
        j["rows"].push_back(r);
    }
    std::cout << j.dump() << "\n";
    return rep.fuss && !rep.ok ? 1 : 0;
}

int cmd_collapse(long a, long b, unsigned long long budget) {
    CoprimePair p(a, b);
    CollapseConjectureResult res = check_collapse_conjecture(p, budget);
    json j;
    j["pair"] = {a, b};
    j["status"] = res.verdict == ConjectureVerdict::verified    ? "verified"
                  : res.verdict == ConjectureVerdict::refuted   ? "refuted"
                                                                : "inconclusive";
    j["nodes"] = res.search.nodes_visited;
    json witness = json::array();
    for (const auto& [facet, free] : res.witness)
        witness.push_back({diagonal_list(facet), diagonal_list(free)});
    j["witness"] = res.verdict == ConjectureVerdict::verified ? witness : json();
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_alexander(long a, long b) {
    CoprimePair p(a, b);
    AlexanderReport rep = check_alexander_duality(p);
    json j;
    j["pair"] = {a, b};
    j["dual"] = {b - a, b};
    j["vertex_partition"] = rep.vertex_partition_ok;
    j["pairing"] = rep.pairing_ok;
    j["betti"] = rep.betti;
    j["betti_dual"] = rep.betti_dual;
    j["ok"] = rep.ok();
    std::cout << j.dump() << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_render(long a, long b, const std::string& kind, const std::string& word,
               const std::string& lasers, const std::string& partition,
               const std::string& format, const std::string& out_path) {
    CoprimePair p(a, b);
    DyckPath d = validate(p, word);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    if (format == "json") {
        json j;
        j["pair"] = {a, b};
        j["path"] = d.word();
        if (kind == "dyck") {
            LaserChoice choice = lasers == "all"       ? LaserChoice::all
                                 : lasers == "valleys" ? LaserChoice::valleys
                                                       : LaserChoice::none;
            json ls = json::array();
            if (choice != LaserChoice::none) {
                PathStatistics st = statistics(d);
                for (const Point& s :
                     choice == LaserChoice::all ? st.north_bottoms : st.valleys) {
                    Laser l = fire_laser(d, s);
                    ls.push_back({{"source", {s.x, s.y}},
                                  {"end_x", fixed6(l.end_x_num.convert_to<long long>(), a)},
                                  {"end_height", l.end_height},
                                  {"q", {l.hit_step_right_end.x, l.hit_step_right_end.y}}});
                }
            }
            j["lasers"] = ls;
        } else if (kind == "dissection") {
            j["facet"] = diagonal_list(facet_diagonals(d));
        } else {
            SetPartition sp = partition == "inhomogeneous" ? inhomogeneous(d) : homogeneous(d);
            j["blocks"] = partition_blocks(sp);
        }
        os << j.dump() << "\n";
        return 0;
    }
    if (kind == "dyck") {
        LaserChoice choice = lasers == "all"       ? LaserChoice::all
                             : lasers == "valleys" ? LaserChoice::valleys
                                                   : LaserChoice::none;
        os << svg_dyck(d, choice);
    } else if (kind == "dissection") {
        os << svg_dissection(d);
    } else {
        SetPartition sp = partition == "inhomogeneous" ? inhomogeneous(d) : homogeneous(d);
        os << svg_chords(sp);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational Catalan combinatorics toolkit"};
    app.require_subcommand(1);

    long a = 0, b = 0, i = 1, max_sum = 0, jobs = 1;
    unsigned long long budget = 10'000'000;
    std::string kind, rspec, only, out_path, word;
    std::string lasers = "none", partition = "homogeneous", format = "svg";

    auto* count = app.add_subcommand("count", "print an exact count");
    count->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"catalan", "derived", "narayana", "kreweras", "kirkman"}));
    count->add_option("--a", a)->required();
    count->add_option("--b", b)->required();
    count->add_option("--i", i, "index for narayana/kirkman");
    count->add_option("--r", rspec, "comma-separated run-type vector for kreweras");

    auto* enumerate = app.add_subcommand("enumerate", "emit one JSON line per path");
    enumerate->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"paths", "facets", "homogeneous", "inhomogeneous"}));
    enumerate->add_option("--a", a)->required();
    enumerate->add_option("--b", b)->required();
    enumerate->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run the verification suite over coprime pairs");
    verify->add_option("--max-sum", max_sum)->required()->check(CLI::Range(3L, 1000L));
    verify->add_option("--only", only, "run a single named check");
    verify->add_option("--jobs", jobs)->check(CLI::Range(1L, 256L));
    verify->add_option("--budget", budget, "node budget for collapse searches");

    auto* csp = app.add_subcommand("csp", "cyclic sieving report for one pair");
    csp->add_option("--a", a)->required();
    csp->add_option("--b", b)->required();

    auto* collapse = app.add_subcommand("collapse", "collapse-conjecture probe for one pair");
    collapse->add_option("--a", a)->required();
    collapse->add_option("--b", b)->required();
    collapse->add_option("--budget", budget);

    auto* alexander = app.add_subcommand("alexander", "Alexander duality report for one pair");
    alexander->add_option("--a", a)->required();
    alexander->add_option("--b", b)->required();

    auto* render = app.add_subcommand("render", "draw a path, dissection, or chord diagram");
    render->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"dyck", "dissection", "chords"}));
    render->add_option("--a", a)->required();
    render->add_option("--b", b)->required();
    render->add_option("--path", word)->required();
    render->add_option("--lasers", lasers)->check(CLI::IsMember({"none", "valleys", "all"}));
    render->add_option("--partition", partition)
        ->check(CLI::IsMember({"homogeneous", "inhomogeneous"}));
    render->add_option("--format", format)->check(CLI::IsMember({"svg", "json"}));
    render->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(a, b, kind, i, rspec);
        if (enumerate->parsed()) return cmd_enumerate(a, b, kind, out_path);
        if (verify->parsed()) return cmd_verify(max_sum, only, jobs, budget);
        if (csp->parsed()) return cmd_csp(a, b);
        if (collapse->parsed()) return cmd_collapse(a, b, budget);
        if (alexander->parsed()) return cmd_alexander(a, b);
        if (render->parsed()) return cmd_render(a, b, kind, word, lasers, partition, format, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
