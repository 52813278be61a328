#pragma once

// Exhaustive enumeration of height-one type-B/C/D posets at small n, and the
// theorem-verification harness built on top of it.
//
// Candidate encoding: one base-3 digit per unordered pair {i,j}, i < j, in
// lexicographic order (0 none, 1 solid, 2 dashed), most significant first;
// for type C this is followed by n loop bits (bit i-1 for vertex i). The
// candidate index enumerates 3^(n choose 2) * 2^n (C) or 3^(n choose 2)
// (B/D) assignments. Validity is decided by the transitive-closure height
// test, never by the forbidden-pattern scan.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "lieposet/invariants.hpp"

namespace lieposet {

inline std::uint64_t candidate_count(Family f, int n) {
    std::uint64_t pairs = 1;
    for (int k = 0; k < n * (n - 1) / 2; ++k) pairs *= 3;
    return f == Family::C ? pairs << n : pairs;
}

// Decodes a candidate index into generators and keeps the poset iff its
// closure has height <= 1.
inline std::optional<SignedPoset> candidate_poset(Family f, int n, std::uint64_t idx) {
    std::uint64_t loopBits = 0;
    if (f == Family::C) {
        loopBits = idx & ((std::uint64_t(1) << n) - 1);
        idx >>= n;
    }
    const int npairs = n * (n - 1) / 2;
    std::vector<int> digit(npairs, 0);
    for (int k = npairs - 1; k >= 0; --k) {
        digit[k] = static_cast<int>(idx % 3);
        idx /= 3;
    }

    std::vector<Relation> gens;
    int k = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++k) {
            if (digit[k] == 1) gens.emplace_back(-j, i);        // solid: -j < i, -i < j
            else if (digit[k] == 2) gens.emplace_back(-j, -i);  // dashed: -j < -i, i < j
        }
    for (int i = 1; i <= n; ++i)
        if (loopBits >> (i - 1) & 1) gens.emplace_back(-i, i);

    // Cheap height prefilter on bitmasks: index negatives as 0..n-1 and
    // positives as n..2n-1, close, and reject if any element has both an
    // incoming and an outgoing relation.
    std::vector<std::uint64_t> adj(2 * n, 0);
    auto ix = [n](int v) { return v < 0 ? v + n : v + n - 1; };
    for (const auto& [x, y] : gens) {
        adj[ix(x)] |= std::uint64_t(1) << ix(y);
        if (x != -y) adj[ix(-y)] |= std::uint64_t(1) << ix(-x);
    }
    for (int kk = 0; kk < 2 * n; ++kk)
        for (int i = 0; i < 2 * n; ++i)
            if (adj[i] >> kk & 1) adj[i] |= adj[kk];
    std::uint64_t inMask = 0, outMask = 0;
    for (int i = 0; i < 2 * n; ++i) {
        inMask |= adj[i];
        if (adj[i]) outMask |= std::uint64_t(1) << i;
    }
    if (inMask & outMask) return std::nullopt;

    return SignedPoset::from_generators(f, n, gens);
}

inline void for_each_height_one(
    Family f, int n, const std::function<void(const SignedPoset&, std::uint64_t)>& visit) {
    const std::uint64_t total = candidate_count(f, n);
    for (std::uint64_t idx = 0; idx < total; ++idx)
        if (auto p = candidate_poset(f, n, idx)) visit(*p, idx);
}

inline std::vector<std::pair<SignedPoset, std::uint64_t>> generate_height_one(Family f, int n) {
    std::vector<std::pair<SignedPoset, std::uint64_t>> out;
    for_each_height_one(f, n, [&](const SignedPoset& p, std::uint64_t idx) {
        out.emplace_back(p, idx);
    });
    return out;
}

struct VerificationSummary {
    Family family = Family::C;
    int n = 0;
    std::uint64_t candidate_count = 0;
    std::uint64_t valid_count = 0;
    std::uint64_t checks_run = 0;
    std::vector<std::string> failures;
    double wall_time_seconds = 0.0;
};

namespace detail {

struct CandidateChecks {
    std::uint64_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

inline void run_candidate_checks(const SignedPoset& p, std::uint64_t idx, int samples,
                                 std::uint64_t seed, std::uint32_t prime, CandidateChecks& out) {
    const std::string tag = std::string(1, family_char(p.family())) + std::to_string(p.n()) +
                            " candidate " + std::to_string(idx) + ": ";
    // n = 5 runs the index cross-checks only; the full suite is capped at 4.
    const bool full = p.n() <= 4;
    auto g = build_relation_graph(p);
    auto cen = census(g);

    // No forbidden adjacency pattern occurs in a valid height-one graph.
    out.expect(forbidden_patterns(g).empty(), tag + "forbidden pattern present");

    // Index formula vs rank identity vs generic-rank oracle.
    const int ic = index_combinatorial(p);
    auto res = index_oracle(p, samples, mix_seed(seed, idx), prime);
    out.expect(res.combinatorial && *res.combinatorial == ic, tag + "combinatorial mismatch");
    out.expect(res.oracle == ic, tag + "index formula " + std::to_string(ic) +
                                     " != oracle " + std::to_string(res.oracle));
    out.expect(res.m_rank && res.dim - 2 * *res.m_rank == ic,
               tag + "index formula disagrees with dim - 2 rank(M)");
    out.expect((res.dim - res.oracle) % 2 == 0, tag + "oracle parity violation");

    // Separable connected posets obey |E| - |V| + 2.
    if (p.separable() && cen.component_count() == 1)
        out.expect(ic == g.edge_count() - g.vertex_count() + 2,
                   tag + "separable index formula mismatch");

    // Frobenius iff every component is a single odd cycle.
    auto frob = is_frobenius(p);
    out.expect(frob.index_zero == frob.graph_criterion, tag + "Frobenius criterion mismatch");

    if (!full) return;

    // Contact: graph criterion vs determinant certificate (odd dims).
    if (res.dim % 2 == 1) {
        int treeCount = 0;
        bool restSingleOdd = true;
        for (const auto& c : cen.components) {
            if (c.is_tree) ++treeCount;
            else if (!c.is_single_odd_cycle) restSingleOdd = false;
        }
        const bool predicted = treeCount == 1 && restSingleOdd;
        try {
            auto cert = classify_contact(p, 16, mix_seed(seed, idx ^ 0x5eedULL), prime);
            out.expect((cert.verdict == ContactVerdict::Contact) == predicted,
                       tag + "contact verdict disagrees with graph criterion");
        } catch (const Error& e) {
            out.expect(false, tag + "contact classification raised " + e.kind());
        }
    }

    // Rewrites preserve rank(M) on connected non-separable inputs. Graphs
    // whose cycles are all even first shed even-cycle edges (the
    // deletion-based reduction), then the dashed rewrites run on the tree.
    if (cen.component_count() == 1 && g.solid_count() + g.loop_count() > 0) {
        const std::size_t mRank = rank(m_matrix<Rational>(g));
        RelationGraph cur = g;
        if (!cen.components[0].has_odd_cycle) {
            while (cur.edge_count() > cur.vertex_count() - 1) {
                try {
                    RelationGraph next = delete_even_cycle_edge(cur);
                    out.expect(rank(m_matrix<Rational>(next)) == mRank,
                               tag + "delete_even_cycle_edge changed rank(M)");
                    out.expect(next.edge_count() == cur.edge_count() - 1,
                               tag + "delete_even_cycle_edge did not drop one edge");
                    cur = next;
                } catch (const NoEvenCycle&) {
                    out.expect(false, tag + "bipartite cyclic graph lost its even cycle");
                    break;
                }
            }
        }
        auto trace = eliminate_dashed_trace(cur);
        bool ranksOk = true;
        for (const auto& step : trace)
            ranksOk = ranksOk && rank(m_matrix<Rational>(step)) == mRank;
        const RelationGraph& last = trace.back();
        out.expect(ranksOk, tag + "eliminate_dashed changed rank(M)");
        out.expect(last.dashed_count() == 0 && last.edge_count() == cur.edge_count() &&
                       last.vertex_count() == cur.vertex_count(),
                   tag + "eliminate_dashed changed the graph profile");
    }

    // Type equivalences at small n.
    if (p.n() <= 3) {
        bool hasLoop = false;
        for (int i = 1; i <= p.n(); ++i) hasLoop = hasLoop || p.related(-i, i);
        if (p.family() == Family::C && !hasLoop) {
            auto d = SignedPoset::from_generators(Family::D, p.n(), p.relations());
            auto dres = index_oracle(d, samples, mix_seed(seed, idx ^ 0xdULL), prime);
            out.expect(dres.dim == res.dim, tag + "type-D twin dimension mismatch");
            out.expect(dres.oracle == res.oracle, tag + "type-D twin index mismatch");
        }
        if (p.family() == Family::B) {
            for (const auto& [x, y] : p.relations())
                out.expect(x != 0 && y != 0, tag + "type-B poset relates 0");
            auto c = SignedPoset::from_generators(Family::C, p.n(), p.relations());
            auto cres = index_oracle(c, samples, mix_seed(seed, idx ^ 0xcULL), prime);
            out.expect(cres.dim == res.dim, tag + "type-C reduct dimension mismatch");
            out.expect(cres.oracle == res.oracle, tag + "type-C reduct index mismatch");
        }
    }
}

}  // namespace detail

// Runs every check on every valid candidate; failures are data, not
// exceptions. Deterministic for fixed (family, n, samples, seed, prime)
// regardless of the worker count.
inline VerificationSummary verify_theorems(Family f, int n, int samples, std::uint64_t seed,
                                           std::uint32_t prime = kDefaultPrime, int jobs = 1) {
    const auto start = std::chrono::steady_clock::now();
    VerificationSummary s;
    s.family = f;
    s.n = n;
    s.candidate_count = candidate_count(f, n);

    const int workers = std::max(1, jobs);
    std::vector<std::uint64_t> valid(workers, 0);
    std::vector<detail::CandidateChecks> results(workers);
    auto work = [&](int w) {
        const std::uint64_t lo = s.candidate_count * w / workers;
        const std::uint64_t hi = s.candidate_count * (w + 1) / workers;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            auto p = candidate_poset(f, n, idx);
            if (!p) continue;
            ++valid[w];
            detail::run_candidate_checks(*p, idx, samples, seed, prime, results[w]);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (int w = 0; w < workers; ++w) {
        s.valid_count += valid[w];
        s.checks_run += results[w].checks;
        s.failures.insert(s.failures.end(), results[w].failures.begin(),
                          results[w].failures.end());
    }
    s.wall_time_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start).count();
    return s;
}

}  // namespace lieposet
