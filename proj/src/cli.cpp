#include "p3turan/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "p3turan/certificate.hpp"
#include "p3turan/flags.hpp"
#include "p3turan/search.hpp"
#include "p3turan/turan.hpp"

namespace p3turan {
namespace {

int default_workers() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

// write the finished report to --out when given, otherwise to the stream
bool deliver(const std::string& text, const std::string& path,
             std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    f.flush();
    if (!f) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

// K<k>: complete graph, P<e>: path with e edges, C<k>: cycle on k vertices
Graph parse_graph_name(const std::string& name) {
    auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("unrecognized graph name: " + name +
                                     " (expected K<k>, P<edges> or C<k>)");
    };
    if (name.size() < 2) throw bad();
    long v = 0;
    for (size_t i = 1; i < name.size(); i++) {
        if (name[i] < '0' || name[i] > '9') throw bad();
        v = v * 10 + (name[i] - '0');
        if (v > 32) throw bad();
    }
    switch (name[0]) {
        case 'K':
            if (v < 1) throw bad();
            return complete_graph((int)v);
        case 'P':
            if (v < 1) throw bad();
            return path_graph((int)v + 1);
        case 'C':
            if (v < 3) throw bad();
            return cycle_graph((int)v);
        default:
            throw bad();
    }
}

std::string expand_text() {
    const FlagIdentification& id = identify_flags();
    std::ostringstream os;
    os << "flag expansions over the pinned F0..F10 basis\n";
    const std::array<RF, 11>* vecs[3] = {&id.p1, &id.p2, &id.p3};
    for (int j = 0; j < 3; j++)
        for (int i = 0; i < 11; i++)
            os << "P" << j + 1 << "[F" << i << "] = " << rf_str((*vecs[j])[i])
               << "\n";
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  (unsigned long long)fnv1a(flag_fixture_render()));
    os << "fixture = fnv1a:" << buf << "\n";
    return os.str();
}

std::string int_line(const Int& v) { return v.get_str() + "\n"; }

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact verification toolkit for path counts in clique-free graphs"};
    app.require_subcommand(1);

    long rmin = 4, rmax = 1000, conv_r = 4, nmin = 40, nmax = 2000;
    long tr_r = 0, tr_n = 0;
    int n = 0, t = 0, q = 0, from = 0, to = 0;
    int workers = default_workers();
    bool no_timing = false, exhaustive = false;
    std::string out_path, format, target_name, forbid_name, witness_path;
    std::vector<long> parts;

    CLI::App* certify = app.add_subcommand("certify", "scan the certificate over an integer range and prove the ray bounds");
    certify->add_option("--rmin", rmin, "first clique bound r")->capture_default_str();
    certify->add_option("--rmax", rmax, "last clique bound r")->capture_default_str();
    certify->add_option("--workers", workers, "threads for the integer scan");
    certify->add_option("--out", out_path, "write the report here instead of stdout");
    certify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json"}))->default_val("json");
    certify->add_flag("--no-timing", no_timing, "omit the timing field");

    CLI::App* expand = app.add_subcommand("expand", "print the three squared-flag expansions over F0..F10");
    expand->add_option("--out", out_path, "write the listing here instead of stdout");

    CLI::App* count_turan = app.add_subcommand("count-turan", "paths of length three in the balanced r-partite graph");
    count_turan->add_option("--r", tr_r, "number of parts")->required();
    count_turan->add_option("--n", tr_n, "number of vertices")->required();
    count_turan->add_option("--out", out_path, "write the count here instead of stdout");

    CLI::App* multipartite = app.add_subcommand("multipartite", "paths of length three in a complete multipartite graph");
    multipartite->add_option("--parts", parts, "part sizes, comma separated")
        ->required()->delimiter(',');
    multipartite->add_option("--out", out_path, "write the count here instead of stdout");

    CLI::App* delta = app.add_subcommand("delta", "count change when one vertex moves between parts");
    delta->add_option("--parts", parts, "part sizes, comma separated")
        ->required()->delimiter(',');
    delta->add_option("--from", from, "index of the source part")->required();
    delta->add_option("--to", to, "index of the destination part")->required();
    delta->add_option("--out", out_path, "write the difference here instead of stdout");

    CLI::App* search = app.add_subcommand("search", "exact maximum of target-subgraph counts over forbidden-free graphs");
    search->add_option("--n", n, "number of vertices")->required();
    search->add_option("--target", target_name, "counted graph, e.g. P3")->required();
    search->add_option("--forbid", forbid_name, "forbidden graph, e.g. K5")->required();
    search->add_flag("--exhaustive", exhaustive, "sweep all labelled graphs instead of augmenting");
    search->add_option("--workers", workers, "threads for the sweep");
    search->add_option("--out", out_path, "write the report here instead of stdout");
    search->add_option("--witnesses", witness_path, "also dump witnesses, one graph6 line each");
    search->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json"}))->default_val("json");
    search->add_flag("--no-timing", no_timing, "omit the timing field");

    CLI::App* zykov = app.add_subcommand("zykov", "exact maximum of K_t counts over K_q-free graphs");
    zykov->add_option("--n", n, "number of vertices")->required();
    zykov->add_option("--t", t, "counted clique size")->required();
    zykov->add_option("--q", q, "forbidden clique size")->required();
    zykov->add_option("--out", out_path, "write the report here instead of stdout");
    zykov->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json"}))->default_val("json");
    zykov->add_flag("--no-timing", no_timing, "omit the timing field");

    CLI::App* convergence = app.add_subcommand("convergence", "CSV of the Turán path density against its limit");
    convergence->add_option("--r", conv_r, "number of parts")->capture_default_str();
    convergence->add_option("--nmin", nmin, "first n")->capture_default_str();
    convergence->add_option("--nmax", nmax, "last n")->capture_default_str();
    convergence->add_option("--out", out_path, "write the CSV here instead of stdout");
    convergence->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"csv"}))->default_val("csv");

    std::vector<const char*> argv;
    argv.push_back("p3turan");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (certify->parsed()) {
            if (rmin < 4 || rmax < rmin)
                throw std::invalid_argument("need 4 <= rmin <= rmax");
            if (workers < 1) throw std::invalid_argument("workers must be positive");
            CertificateReport rep = verify_certificate(rmin, rmax, workers);
            if (!deliver(report_json(rep, !no_timing), out_path, out, err)) return 1;
            return rep.verdicts_ok ? 0 : 2;
        }
        if (expand->parsed()) {
            return deliver(expand_text(), out_path, out, err) ? 0 : 1;
        }
        if (count_turan->parsed()) {
            if (tr_r < 1 || tr_n < 0)
                throw std::invalid_argument("need r >= 1 and n >= 0");
            TuranSpec spec{(int)tr_r, (int)tr_n};
            return deliver(int_line(multipartite_p3(turan_parts(spec))),
                           out_path, out, err) ? 0 : 1;
        }
        if (multipartite->parsed()) {
            for (long s : parts)
                if (s < 0) throw std::invalid_argument("part sizes must be nonnegative");
            return deliver(int_line(multipartite_p3(parts)), out_path, out, err)
                       ? 0 : 1;
        }
        if (delta->parsed()) {
            for (long s : parts)
                if (s < 0) throw std::invalid_argument("part sizes must be nonnegative");
            if (from < 0 || to < 0 || from >= (int)parts.size() ||
                to >= (int)parts.size() || from == to)
                throw std::invalid_argument("part indices out of range");
            return deliver(int_line(delta_p3(parts, from, to)), out_path, out, err)
                       ? 0 : 1;
        }
        if (search->parsed()) {
            if (workers < 1) throw std::invalid_argument("workers must be positive");
            SearchProblem p;
            p.n = n;
            p.target = parse_graph_name(target_name);
            p.forbidden = parse_graph_name(forbid_name);
            p.mode = exhaustive ? SearchMode::Exhaustive : SearchMode::Augmentation;
            p.workers = workers;
            SearchResult res = solve(p);
            if (!deliver(search_json(res, !no_timing), out_path, out, err)) return 1;
            if (!witness_path.empty()) {
                std::string lines;
                for (const std::string& w : res.witnesses) lines += w + "\n";
                if (!deliver(lines, witness_path, out, err)) return 1;
            }
            return 0;
        }
        if (zykov->parsed()) {
            SearchResult res = solve_zykov(n, t, q);
            return deliver(search_json(res, !no_timing), out_path, out, err)
                       ? 0 : 1;
        }
        if (convergence->parsed()) {
            if (conv_r < 1 || nmin < 4 || nmax < nmin)
                throw std::invalid_argument("need r >= 1 and 4 <= nmin <= nmax");
            return deliver(convergence_csv(conv_r, nmin, nmax), out_path, out, err)
                       ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "verdict failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace p3turan
