#pragma once

// Index computation and classification. Three independent routes to the
// index meet here:
//   - the combinatorial formula |E| - |V| + 2*eta over the relation graph,
//   - the rank identity dim - 2*rank(M(P)) for height-one posets,
//   - the generic-rank oracle dim - max rank of phi(C) over sampled
//     functionals (plus the deterministic all-ones functional, which is
//     exact in height one).
// Frobenius means index 0; contact is decided by the one-tree graph
// criterion and certified through the Salgado determinant.

#include <optional>
#include <vector>

#include "lieposet/algebra.hpp"
#include "lieposet/errors.hpp"
#include "lieposet/rng.hpp"

namespace lieposet {

struct ClassifyOptions {
    int samples = 8;
    int det_samples = 16;
    std::uint32_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
};

struct IndexResult {
    int dim = 0;
    std::optional<int> combinatorial;  // height <= 1 only
    std::optional<int> m_rank;         // rank of M(P), height <= 1 only
    int oracle = 0;
    int samples = 0;
    std::uint32_t prime = kDefaultPrime;
};

inline int index_combinatorial(const SignedPoset& p) {
    if (p.height() > 1)
        throw HeightError("combinatorial index formula requires height <= 1");
    auto g = build_relation_graph(p);
    return g.edge_count() - g.vertex_count() + 2 * census(g).eta;
}

inline IndexResult index_oracle(const SignedPoset& p, int samples, std::uint64_t seed,
                                std::uint32_t prime = kDefaultPrime) {
    const auto b = basis(p);
    const StructureTable table(b);
    const int dim = table.dim();
    const Fp one = Fp::raw(1, prime);

    std::size_t maxRank = rank(commutator_matrix(table, std::vector<Fp>(dim, one)));
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<Fp> phi(dim, one);
        for (auto& v : phi) v = Fp::raw(static_cast<std::uint32_t>(rng.below(prime)), prime);
        maxRank = std::max(maxRank, rank(commutator_matrix(table, phi)));
    }

    IndexResult r;
    r.dim = dim;
    r.oracle = dim - static_cast<int>(maxRank);
    r.samples = samples;
    r.prime = prime;
    if (p.height() <= 1) {
        r.combinatorial = index_combinatorial(p);
        r.m_rank = static_cast<int>(rank(m_matrix<Rational>(build_relation_graph(p))));
    }
    return r;
}

struct FrobeniusCheck {
    bool index_zero;       // index == 0 via the combinatorial formula
    bool graph_criterion;  // every component is a single odd cycle
};

inline FrobeniusCheck is_frobenius(const SignedPoset& p) {
    const int idx = index_combinatorial(p);
    auto cen = census(build_relation_graph(p));
    bool allSingleOdd = true;
    for (const auto& c : cen.components) allSingleOdd = allSingleOdd && c.is_single_odd_cycle;
    return {idx == 0, allSingleOdd};
}

enum class ContactVerdict { Contact, NotContact, NotApplicableEvenDim };

struct ContactCertificate {
    enum class Method { ExplicitForm, RandomSample, GraphCriterion };

    ContactVerdict verdict = ContactVerdict::NotContact;
    std::optional<Functional<Rational>> form;
    std::optional<Rational> determinant;
    Method method = Method::GraphCriterion;
};

// Explicit contact form for a poset whose relation graph is a tree on more
// than one vertex: the dual of D_{p0} for the smallest degree-one vertex p0
// plus the dual of every edge element.
inline Functional<Rational> contact_form(const SignedPoset& p) {
    auto g = build_relation_graph(p);
    auto cen = census(g);
    if (g.vertex_count() <= 1)
        throw TrivialGraph("contact_form requires more than one vertex");
    if (cen.component_count() != 1 || !cen.components[0].is_tree)
        throw NotTree("contact_form requires a connected tree relation graph");

    int p0 = 0;
    for (int v : g.vertices())
        if (g.degree(v) == 1) {
            p0 = v;
            break;
        }
    Functional<Rational> f;
    f.assignment[BasisElement::diag(p0)] = 1;
    for (const auto& e : basis(p).elements)
        if (e.is_edge_element()) f.assignment[e] = 1;
    return f;
}

// Graph criterion first, then an independent certificate: an explicit form
// with nonzero exact determinant for the contact side, and even dimension,
// index != 1, or an all-zero determinant sample for the other. Disagreement
// between criterion and certificate is an InconsistencyError.
inline ContactCertificate classify_contact(const SignedPoset& p, int detSamples,
                                           std::uint64_t seed,
                                           std::uint32_t prime = kDefaultPrime) {
    if (p.height() > 1) throw HeightError("contact classification requires height <= 1");

    auto g = build_relation_graph(p);
    auto cen = census(g);
    int treeCount = 0;
    bool restSingleOdd = true;
    const ComponentInfo* tree = nullptr;
    for (const auto& c : cen.components) {
        if (c.is_tree) {
            ++treeCount;
            tree = &c;
        } else if (!c.is_single_odd_cycle) {
            restSingleOdd = false;
        }
    }
    const bool criterion = treeCount == 1 && restSingleOdd;

    const auto b = basis(p);
    const StructureTable table(b);
    const int dim = table.dim();
    const int index = index_combinatorial(p);
    Rng rng(seed);

    if (criterion) {
        if (dim % 2 == 0 || index != 1)
            throw InconsistencyError("one-tree criterion holds but dim/index disagree");
        // p0: smallest degree-one vertex of the tree component, or its only
        // vertex when the tree is a single point.
        int p0 = tree->vertices.front();
        for (int v : tree->vertices)
            if (g.degree(v) == 1) {
                p0 = v;
                break;
            }
        auto inTree = [&](const BasisElement& e) {
            return std::binary_search(tree->vertices.begin(), tree->vertices.end(),
                                      e.edge().first);
        };
        Functional<Rational> f;
        f.assignment[BasisElement::diag(p0)] = 1;
        for (const auto& e : b.elements)
            if (e.is_edge_element()) f.assignment[e] = 1;

        Rational det = determinant(extended_matrix(table, f.aligned(b, Rational(0))));
        for (int attempt = 0; det == 0 && attempt < detSamples; ++attempt) {
            // The all-ones assignment on the Frobenius components is already
            // regular; retries with random nonzero values are a safety net.
            for (const auto& e : b.elements)
                if (e.is_edge_element() && !inTree(e))
                    f.assignment[e] = Rational(1 + static_cast<long long>(rng.below(1 << 20)));
            det = determinant(extended_matrix(table, f.aligned(b, Rational(0))));
        }
        if (det == 0)
            throw InconsistencyError("one-tree criterion holds but no explicit form certifies");
        ContactCertificate cert;
        cert.verdict = ContactVerdict::Contact;
        cert.form = std::move(f);
        cert.determinant = det;
        cert.method = ContactCertificate::Method::ExplicitForm;
        return cert;
    }

    ContactCertificate cert;
    cert.verdict = ContactVerdict::NotContact;
    if (dim % 2 == 0 || index != 1) {
        cert.method = ContactCertificate::Method::GraphCriterion;
        return cert;
    }
    // Odd dimension and index 1 without the one-tree shape cannot happen for
    // valid posets; refute by sampling so a bug cannot pass silently.
    const Fp zero = Fp::raw(0, prime);
    for (int s = 0; s < detSamples; ++s) {
        std::vector<Fp> phi(dim, zero);
        for (auto& v : phi) v = Fp::raw(static_cast<std::uint32_t>(rng.below(prime)), prime);
        if (!determinant(extended_matrix(table, phi)).is_zero())
            throw InconsistencyError(
                "Salgado determinant is nonzero but the graph criterion predicts non-contact");
    }
    cert.method = ContactCertificate::Method::RandomSample;
    return cert;
}

// Brute-force search for signs c in {-1,1}^k with sum c_j rows_j = target.
inline std::optional<std::vector<int>> find_sign_combination(
    const std::vector<std::vector<long long>>& rows, const std::vector<long long>& target) {
    const std::size_t k = rows.size();
    if (k > 20)
        throw TooManyRows("sign search limited to 20 rows, got " + std::to_string(k));
    const std::size_t width = target.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        bool ok = true;
        for (std::size_t c = 0; c < width && ok; ++c) {
            long long acc = 0;
            for (std::size_t j = 0; j < k; ++j)
                acc += ((mask >> j) & 1 ? -1 : 1) * rows[j][c];
            ok = acc == target[c];
        }
        if (ok) {
            std::vector<int> signs(k);
            for (std::size_t j = 0; j < k; ++j) signs[j] = (mask >> j) & 1 ? -1 : 1;
            return signs;
        }
    }
    return std::nullopt;
}

struct ClassificationReport {
    Family family = Family::C;
    int n = 0;
    std::vector<Relation> relations;
    int dim = 0;
    std::optional<int> eta;
    IndexResult index;
    bool frobenius = false;
    std::optional<ContactCertificate> contact;
    ClassifyOptions options;
};

inline ClassificationReport classify(const SignedPoset& p, const ClassifyOptions& opts) {
    ClassificationReport rep;
    rep.family = p.family();
    rep.n = p.n();
    rep.relations = p.relations();
    rep.options = opts;
    rep.index = index_oracle(p, opts.samples, opts.seed, opts.prime);
    rep.dim = rep.index.dim;
    rep.frobenius = rep.index.oracle == 0;
    if (p.height() <= 1) {
        rep.eta = census(build_relation_graph(p)).eta;
        rep.contact = classify_contact(p, opts.det_samples, opts.seed, opts.prime);
    }
    return rep;
}

}  // namespace lieposet
