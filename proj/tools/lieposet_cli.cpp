// Command-line frontend: classification reports, index results, contact
// certificates, exhaustive enumeration catalogs, the theorem-verification
// harness, and DOT export.
//
// Exit codes: 0 success; 1 invalid input or failed verification; 2 internal
// inconsistency (a certificate contradicted the graph criterion).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lieposet/dot.hpp"
#include "lieposet/json_io.hpp"

namespace {

using namespace lieposet;

struct Options {
    int samples = 8;
    int detSamples = 16;
    std::uint64_t seed = 0;
    std::uint32_t prime = kDefaultPrime;
    std::string output;
    std::string format;
    int jobs = 1;
};

SignedPoset read_poset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GroundSetViolation("cannot open input file " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return poset_from_json_text(text);
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw GroundSetViolation("cannot open output file " + o.output);
    out << text;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string report_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "family: " << family_char(r.family) << "\n"
       << "n: " << r.n << "\n"
       << "relations: " << r.relations.size() << "\n"
       << "dim: " << r.dim << "\n"
       << "index: " << r.index.oracle << "\n";
    if (r.eta) os << "eta: " << *r.eta << "\n";
    os << "frobenius: " << yesno(r.frobenius) << "\n";
    if (r.contact) {
        os << "contact: " << yesno(r.contact->verdict == ContactVerdict::Contact) << "\n"
           << "method: " << method_string(r.contact->method) << "\n";
        if (r.contact->determinant)
            os << "determinant: " << scalar_string(*r.contact->determinant) << "\n";
    } else {
        os << "contact: not decided (height > 1)\n";
    }
    return os.str();
}

ClassifyOptions classify_options(const Options& o) {
    ClassifyOptions c;
    c.samples = o.samples;
    c.det_samples = o.detSamples;
    c.prime = o.prime;
    c.seed = o.seed;
    return c;
}

int run_analyze(const Options& o, const std::string& input) {
    auto rep = classify(read_poset(input), classify_options(o));
    emit(o, o.format == "text" ? report_text(rep) : report_json(rep).dump(2) + "\n");
    return 0;
}

int run_index(const Options& o, const std::string& input) {
    auto res = index_oracle(read_poset(input), o.samples, o.seed, o.prime);
    if (o.format == "text") {
        std::ostringstream os;
        os << "dim: " << res.dim << "\n"
           << "index: " << res.oracle << "\n";
        if (res.combinatorial) os << "combinatorial: " << *res.combinatorial << "\n";
        if (res.m_rank) os << "mRank: " << *res.m_rank << "\n";
        emit(o, os.str());
    } else {
        emit(o, index_json(res).dump(2) + "\n");
    }
    return 0;
}

int run_contact(const Options& o, const std::string& input) {
    auto cert = classify_contact(read_poset(input), o.detSamples, o.seed, o.prime);
    if (o.format == "text") {
        std::ostringstream os;
        os << "verdict: " << verdict_string(cert.verdict) << "\n"
           << "method: " << method_string(cert.method) << "\n";
        if (cert.determinant) os << "determinant: " << scalar_string(*cert.determinant) << "\n";
        emit(o, os.str());
    } else {
        emit(o, certificate_json(cert).dump(2) + "\n");
    }
    return 0;
}

int run_export_dot(const Options& o, const std::string& input, const std::string& graph) {
    auto p = read_poset(input);
    emit(o, graph == "hasse" ? hasse_dot(p) : relation_graph_dot(build_relation_graph(p)));
    return 0;
}

// One report line per valid candidate, in candidate-encoding order, plus a
// final summary line. Sampling seeds are derived per candidate so the output
// is independent of --jobs.
int run_enumerate(const Options& o, Family family, int n) {
    const std::uint64_t total = candidate_count(family, n);
    const int workers = std::max(1, o.jobs);
    std::vector<std::vector<std::string>> lines(workers);
    std::vector<std::uint64_t> valid(workers, 0);

    auto work = [&](int w) {
        const std::uint64_t lo = total * w / workers;
        const std::uint64_t hi = total * (w + 1) / workers;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            auto p = candidate_poset(family, n, idx);
            if (!p) continue;
            ++valid[w];
            ClassifyOptions c = classify_options(o);
            c.seed = mix_seed(o.seed, idx);
            auto rep = classify(*p, c);
            rep.options.seed = o.seed;
            Json j = report_json(rep);
            j["candidate"] = idx;
            lines[w].push_back(j.dump());
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    std::ostringstream os;
    std::uint64_t validTotal = 0;
    for (int w = 0; w < workers; ++w) {
        validTotal += valid[w];
        for (const auto& line : lines[w]) os << line << "\n";
    }
    Json summary;
    summary["family"] = std::string(1, family_char(family));
    summary["n"] = n;
    summary["candidates"] = total;
    summary["valid"] = validTotal;
    summary["seed"] = o.seed;
    summary["samples"] = o.samples;
    summary["detSamples"] = o.detSamples;
    summary["prime"] = o.prime;
    os << summary.dump() << "\n";
    emit(o, os.str());
    return 0;
}

int run_verify(const Options& o, Family family, int n) {
    auto s = verify_theorems(family, n, o.samples, o.seed, o.prime, o.jobs);
    emit(o, summary_json(s, /*includeWallTime=*/true).dump(2) + "\n");
    return s.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace lieposet;

    CLI::App app{"Lie poset algebras of types B, C and D: exact index, Frobenius and"
                 " contact classification"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    app.add_option("--samples", opts.samples, "random functionals per rank estimate")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--det-samples", opts.detSamples, "determinant samples for refutation")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opts.seed, "base seed for all sampling")
        ->capture_default_str()
        ->envname("LIEPOSET_SEED");
    app.add_option("--prime", opts.prime, "odd prime modulus (< 2^31) for the sample field")
        ->capture_default_str()
        ->envname("LIEPOSET_PRIME");
    app.add_option("-o,--output", opts.output, "write output to this file instead of stdout");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "jsonl", "dot", "text"}));
    app.add_option("--jobs", opts.jobs, "worker threads for enumerate/verify")
        ->check(CLI::PositiveNumber);

    std::string input, familyName = "C", graphKind = "relation";
    int n = 1;

    auto* analyze = app.add_subcommand("analyze", "full classification report for one poset");
    analyze->add_option("file", input, "poset JSON file")->required();

    auto* index = app.add_subcommand("index", "index result for one poset");
    index->add_option("file", input, "poset JSON file")->required();

    auto* contact = app.add_subcommand("contact", "contact certificate for one poset");
    contact->add_option("file", input, "poset JSON file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "JSONL catalog of all height-one posets");
    enumerate->add_option("--family", familyName, "poset family")
        ->check(CLI::IsMember({"B", "C", "D"}))
        ->required();
    enumerate->add_option("--n", n, "ground set half-size")->required()->check(CLI::Range(1, 5));

    auto* verify = app.add_subcommand("verify", "run the theorem checks over all candidates");
    verify->add_option("--family", familyName, "poset family")
        ->check(CLI::IsMember({"B", "C", "D"}))
        ->required();
    verify->add_option("--n", n, "ground set half-size")->required()->check(CLI::Range(1, 5));

    auto* exportDot = app.add_subcommand("export-dot", "DOT text for a poset's graphs");
    exportDot->add_option("file", input, "poset JSON file")->required();
    exportDot->add_option("--graph", graphKind, "which graph to render")
        ->check(CLI::IsMember({"hasse", "relation"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (!is_prime(opts.prime) || opts.prime < 3)
            throw GroundSetViolation("--prime must be an odd prime, got " +
                                     std::to_string(opts.prime));
        if (*analyze) return run_analyze(opts, input);
        if (*index) return run_index(opts, input);
        if (*contact) return run_contact(opts, input);
        if (*enumerate) return run_enumerate(opts, family_from_string(familyName), n);
        if (*verify) return run_verify(opts, family_from_string(familyName), n);
        if (*exportDot) return run_export_dot(opts, input, graphKind);
    } catch (const InconsistencyError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
