// oddom: command-line front end for the weak odd domination toolkit.
//
// Exit codes: 0 success / valid certificate, 1 invalid certificate,
// 2 input error, 3 enumeration cap exceeded, 4 internal error.

#include <oddom/fixtures.hpp>
#include <oddom/perfect_code.hpp>
#include <oddom/report.hpp>
#include <oddom/search.hpp>
#include <oddom/solvers.hpp>
#include <oddom/wod.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using oddom::report::json;

enum ExitCode
{
    exit_ok = 0,
    exit_negative = 1,
    exit_input = 2,
    exit_cap = 3,
    exit_internal = 4,
};

class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InternalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string first_line(std::istream & in)
{
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (! line.empty())
            return line;
    }
    return {};
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

oddom::Graph parse(const std::string & text)
{
    try {
        return oddom::parse_graph6(text);
    }
    catch (const oddom::Graph6Error & e) {
        throw InputError(e.what());
    }
}

struct GraphSource
{
    std::string graph6;
    std::string file;
    std::string named;
    std::vector<int> gpq;

    void attach(CLI::App & app)
    {
        auto * g = app.add_option("--graph", graph6, "graph6 string");
        auto * f = app.add_option("--file", file, "file whose first non-empty line is a graph6 string");
        auto * n = app.add_option("--named", named, "named graph: petersen, kN, cN, pN, starN, qD");
        auto * c = app.add_option("--gpq", gpq, "complete multipartite G_{p,q} as p,q")->delimiter(',')->expected(2);
        g->excludes(f)->excludes(n)->excludes(c);
        f->excludes(n)->excludes(c);
        n->excludes(c);
    }

    oddom::Graph load() const
    {
        if (! graph6.empty())
            return parse(trim(graph6));
        if (! file.empty()) {
            std::istringstream in(read_file(file));
            return parse(first_line(in));
        }
        if (! named.empty()) {
            try {
                return oddom::fixtures::named(named);
            }
            catch (const std::invalid_argument & e) {
                throw InputError(e.what());
            }
        }
        if (! gpq.empty()) {
            try {
                return oddom::complete_multipartite(gpq.at(0), gpq.at(1));
            }
            catch (const std::invalid_argument & e) {
                throw InputError(e.what());
            }
        }
        return parse(first_line(std::cin));
    }
};

struct Common
{
    int cap = oddom::default_enumeration_cap;
    unsigned threads = 1;
    bool no_timing = false;

    void attach(CLI::App & app, bool with_timing = true)
    {
        app.add_option("--cap", cap, "largest order accepted by the exact searches")->check(CLI::Range(1, oddom::max_order));
        app.add_option("--threads", threads, "worker threads (0 = all cores); output does not depend on it");
        if (with_timing)
            app.add_flag("--no-timing", no_timing, "omit timing fields for byte-exact output");
    }

    oddom::SolverOptions options() const { return {cap, threads}; }
};

json envelope(const std::string & command, const oddom::Graph & g)
{
    return {
        {"version", oddom::report::tool_version},
        {"command", command},
        {"graph6", oddom::write_graph6(g)},
        {"n", g.order()},
    };
}

void emit(const json & j)
{
    std::cout << j.dump() << '\n';
}

oddom::ExtremalResult checked(const oddom::Graph & g, oddom::ExtremalResult r)
{
    if (! oddom::verify_extremal(g, r))
        throw InternalError(std::string("witness for ") + oddom::to_string(r.quantity) + " failed re-verification");
    return r;
}

struct ComputeCommand
{
    GraphSource source;
    Common common;
    bool kappa = false;
    bool kappa_prime = false;
    bool kappa_q = false;
    bool bounds = false;
    bool all = false;

    void attach(CLI::App & app)
    {
        source.attach(app);
        common.attach(app);
        app.add_flag("--kappa", kappa, "maximum WOD set size");
        app.add_flag("--kappa-prime", kappa_prime, "minimum non-WOD set size");
        app.add_flag("--kappa-q", kappa_q, "max(kappa, n - kappa')");
        app.add_flag("--bounds", bounds, "degree bounds on kappa and kappa'");
        app.add_flag("--all", all, "everything above (the default)");
    }

    int run()
    {
        const auto start = std::chrono::steady_clock::now();
        const auto g = source.load();
        if (g.order() < 1)
            throw InputError("graph has no vertices");
        if (all || ! (kappa || kappa_prime || kappa_q || bounds))
            kappa = kappa_prime = kappa_q = bounds = true;

        const auto options = common.options();
        json results = json::object();
        std::optional<oddom::ExtremalResult> k, kp;
        if (kappa || kappa_q)
            k = checked(g, oddom::kappa(g, options));
        if (kappa_prime || kappa_q)
            kp = checked(g, oddom::kappa_prime(g, options));
        if (kappa)
            results["kappa"] = oddom::report::extremal_json(g, *k);
        if (kappa_prime)
            results["kappa_prime"] = oddom::report::extremal_json(g, *kp);
        if (kappa_q) {
            oddom::ExtremalResult q{oddom::Quantity::kappa_q,
                                    std::max(k->value, g.order() - kp->value),
                                    k->witness,
                                    kp->witness,
                                    {std::max(k->bounds.lower, g.order() - kp->bounds.upper),
                                     std::max(k->bounds.upper, g.order() - kp->bounds.lower)}};
            q.kappa = k->value;
            q.kappa_prime = kp->value;
            results["kappa_q"] = oddom::report::extremal_json(g, checked(g, q));
        }
        if (bounds)
            results["bounds"] = {{"kappa", oddom::report::bounds_json(oddom::kappa_bounds(g))},
                                 {"kappa_prime", oddom::report::bounds_json(oddom::kappa_prime_bounds(g))}};
        if (! source.gpq.empty()) {
            const auto cf = oddom::gpq_closed_form(source.gpq[0], source.gpq[1]);
            results["closed_form"] = {{"kappa", cf.kappa}, {"kappa_prime", cf.kappa_prime}};
        }

        auto out = envelope("compute", g);
        out["results"] = results;
        if (! common.no_timing)
            out["timing_ms"] =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(out);
        return exit_ok;
    }
};

struct CertifyCommand
{
    GraphSource source;
    std::vector<int> set;

    void attach(CLI::App & app)
    {
        source.attach(app);
        app.add_option("--set", set, "vertex set B as comma-separated indices")->delimiter(',');
    }

    int run()
    {
        const auto g = source.load();
        oddom::VertexSet b;
        try {
            b = oddom::VertexSet::of(g.order(), set);
        }
        catch (const std::invalid_argument & e) {
            throw InputError(e.what());
        }
        const auto cert = oddom::certify(g, b);
        if (! oddom::verify_certificate(g, b, cert))
            throw InternalError("certificate failed re-verification");
        emit(oddom::report::certificate_json(b, cert));
        return exit_ok;
    }
};

struct VerifyCommand
{
    GraphSource source;
    std::string certificate;
    std::string certificate_file;

    void attach(CLI::App & app)
    {
        source.attach(app);
        auto * c = app.add_option("--certificate", certificate, "certificate JSON text");
        auto * f = app.add_option("--certificate-file", certificate_file, "file holding the certificate JSON");
        c->excludes(f);
    }

    int run()
    {
        const auto g = source.load();
        std::string text = certificate;
        if (! certificate_file.empty())
            text = read_file(certificate_file);
        if (text.empty())
            throw InputError("no certificate given (use --certificate or --certificate-file)");

        json doc;
        try {
            doc = json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw InputError(std::string("malformed certificate JSON: ") + e.what());
        }
        oddom::report::CertificateDocument parsed;
        try {
            parsed = oddom::report::read_certificate(doc, g.order());
        }
        catch (const oddom::report::FormatError & e) {
            throw InputError(std::string("bad certificate: ") + e.what());
        }

        const bool wod = parsed.certificate.kind == oddom::CertificateKind::wod;
        if (oddom::verify_certificate(g, parsed.set, parsed.certificate)) {
            std::cerr << (wod ? "valid WOD certificate\n" : "valid NON_WOD certificate\n");
            return exit_ok;
        }
        std::cerr << "invalid " << (wod ? "WOD" : "NON_WOD") << " certificate: ";
        const auto & b = parsed.set;
        const auto & w = parsed.certificate.witness;
        if (wod)
            std::cerr << (w.intersects(b) ? "witness intersects the set" : "some member of the set has an even "
                                                                             "number of neighbours in the witness");
        else if (! w.is_subset_of(b))
            std::cerr << "witness is not contained in the set";
        else if (w.size() % 2 == 0)
            std::cerr << "witness has even size";
        else
            std::cerr << "a vertex outside the set has an odd number of neighbours in the witness";
        std::cerr << '\n';
        return exit_negative;
    }
};

struct PerfectCodeCommand
{
    GraphSource source;
    Common common;

    void attach(CLI::App & app)
    {
        source.attach(app);
        common.attach(app, false);
    }

    int run()
    {
        const auto g = source.load();
        const auto code = oddom::find_perfect_code(g, common.options());
        if (code && ! oddom::is_perfect_code(g, code->code))
            throw InternalError("perfect code failed re-verification");
        auto out = envelope("perfect-code", g);
        out["results"] = {{"perfect_code", oddom::report::perfect_code_json(code)}};
        emit(out);
        return exit_ok;
    }
};

struct GenerateCommand
{
    int p = 0, q = 0, r = 0, n = 0;
    std::uint64_t seed = 0;
    std::string graph6, name;

    CLI::App * gpq = nullptr;
    CLI::App * power = nullptr;
    CLI::App * complement = nullptr;
    CLI::App * random = nullptr;
    CLI::App * named = nullptr;
    CLI::App * cubic = nullptr;

    void attach(CLI::App & app)
    {
        app.require_subcommand(1);
        gpq = app.add_subcommand("gpq", "complete q-partite graph with parts of size p");
        gpq->add_option("p", p)->required();
        gpq->add_option("q", q)->required();
        power = app.add_subcommand("power", "disjoint union of r copies of a graph");
        power->add_option("graph6", graph6)->required();
        power->add_option("r", r)->required();
        complement = app.add_subcommand("complement", "complement of a graph");
        complement->add_option("graph6", graph6)->required();
        random = app.add_subcommand("random", "G(n, 1/2) from a seed");
        random->add_option("n", n)->required()->check(CLI::Range(0, oddom::max_order));
        random->add_option("seed", seed)->required();
        named = app.add_subcommand("named", "named fixture graph");
        named->add_option("name", name)->required();
        cubic = app.add_subcommand("cubic", "all cubic graphs of order n in {4, 6, 8, 10}");
        cubic->add_option("n", n)->required();
    }

    int run()
    {
        try {
            if (gpq->parsed())
                std::cout << oddom::write_graph6(oddom::complete_multipartite(p, q)) << '\n';
            else if (power->parsed())
                std::cout << oddom::write_graph6(oddom::power(parse(graph6), r)) << '\n';
            else if (complement->parsed())
                std::cout << oddom::write_graph6(oddom::complement(parse(graph6))) << '\n';
            else if (random->parsed())
                std::cout << oddom::write_graph6(oddom::random_graph(n, seed)) << '\n';
            else if (named->parsed())
                std::cout << oddom::write_graph6(oddom::fixtures::named(name)) << '\n';
            else if (cubic->parsed())
                for (const auto & g : oddom::fixtures::cubic_graphs(n))
                    std::cout << oddom::write_graph6(g) << '\n';
        }
        catch (const std::invalid_argument & e) {
            throw InputError(e.what());
        }
        return exit_ok;
    }
};

struct SearchCommand
{
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double threshold = 0.811;
    Common common;

    void attach(CLI::App & app)
    {
        app.add_option("--n", n, "order of the sampled graphs")->required()->check(CLI::Range(1, oddom::max_order));
        app.add_option("--trials", trials, "number of graphs to sample")->required();
        app.add_option("--seed", seed, "base seed")->required();
        app.add_option("--threshold", threshold, "report the fraction of trials with kappa_q < threshold * n");
        common.attach(app);
    }

    int run()
    {
        const auto reports = oddom::sample_and_measure(n, trials, seed, common.options());
        for (const auto & r : reports)
            std::cout << oddom::report::trial_json(r, ! common.no_timing).dump() << '\n';
        std::cout << oddom::report::summary_json(oddom::summarise(reports, threshold)).dump() << '\n';
        return exit_ok;
    }
};

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact weak odd domination toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", oddom::report::tool_version);

    ComputeCommand compute;
    CertifyCommand certify;
    VerifyCommand verify;
    PerfectCodeCommand perfect;
    GenerateCommand generate;
    SearchCommand search;

    auto * compute_app = app.add_subcommand("compute", "exact kappa, kappa', kappa_Q and bounds as JSON");
    compute.attach(*compute_app);
    auto * certify_app = app.add_subcommand("certify", "WOD or non-WOD certificate for a vertex set");
    certify.attach(*certify_app);
    auto * verify_app = app.add_subcommand("verify", "check a WOD / non-WOD certificate");
    verify.attach(*verify_app);
    auto * perfect_app = app.add_subcommand("perfect-code", "smallest perfect code, or null");
    perfect.attach(*perfect_app);
    auto * generate_app = app.add_subcommand("generate", "print graph6 for a graph family");
    generate.attach(*generate_app);
    auto * search_app = app.add_subcommand("search", "sample random graphs and measure kappa_Q (JSON lines)");
    search.attach(*search_app);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (compute_app->parsed())
            return compute.run();
        if (certify_app->parsed())
            return certify.run();
        if (verify_app->parsed())
            return verify.run();
        if (perfect_app->parsed())
            return perfect.run();
        if (generate_app->parsed())
            return generate.run();
        if (search_app->parsed())
            return search.run();
    }
    catch (const InputError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const oddom::CapExceeded & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_cap;
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_internal;
}
