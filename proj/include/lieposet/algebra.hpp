#pragma once

// The Lie poset algebra attached to a signed poset: ordered basis, defining
// matrix realization, brackets (computed in the defining representation and
// decomposed over the basis), the commutator matrix, its contact extension,
// and the edge-by-vertex matrix M(G) of the relation graph.
//
// Basis elements, with 1 <= i, j <= n:
//   Diag(i)      D_i        = E_{-i,-i} - E_{i,i}
//   Dashed(i,j)  R_{i,j}    = E_{-j,-i} - E_{i,j}          (i < j)
//   SolidC(i,j)  Rpm_{i,j}  = E_{-i,j} + E_{-j,i}          (i < j, type C)
//   SolidD(i,j)             = E_{-i,j} - E_{-j,i}          (j < i, types B/D)
//   Loop(i)      E_{-i,i}                                   (type C only)
//
// Basis order: Diag ascending, Dashed lexicographic, Loop ascending, then
// solid elements lexicographic by their underlying vertex pair.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "lieposet/errors.hpp"
#include "lieposet/exactla.hpp"
#include "lieposet/poset.hpp"
#include "lieposet/relgraph.hpp"

namespace lieposet {

struct BasisElement {
    enum class Kind { Diag, Dashed, SolidC, SolidD, Loop };

    Kind kind = Kind::Diag;
    int i = 0;
    int j = 0;

    static BasisElement diag(int i) { return {Kind::Diag, i, 0}; }
    static BasisElement dashed(int i, int j) { return {Kind::Dashed, i, j}; }   // i < j
    static BasisElement solid_c(int i, int j) { return {Kind::SolidC, i, j}; }  // i < j
    static BasisElement solid_d(int i, int j) { return {Kind::SolidD, i, j}; }  // j < i
    static BasisElement loop(int i) { return {Kind::Loop, i, 0}; }

    bool is_edge_element() const { return kind != Kind::Diag; }

    // Vertex pair of the relation-graph edge this element represents.
    std::pair<int, int> edge() const {
        return {std::min(i, j == 0 ? i : j), std::max(i, j)};
    }

    std::string name() const {
        switch (kind) {
            case Kind::Diag: return "D_" + std::to_string(i);
            case Kind::Dashed: return "R_" + std::to_string(i) + "_" + std::to_string(j);
            case Kind::SolidC:
                return "Rpm_" + std::to_string(i) + "_" + std::to_string(j);
            case Kind::SolidD:
                return "Rpm_" + std::to_string(j) + "_" + std::to_string(i);
            default: return "E_" + std::to_string(i);
        }
    }

    friend bool operator==(const BasisElement& a, const BasisElement& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const BasisElement& a, const BasisElement& b) {
        return std::tuple(a.kind, a.i, a.j) < std::tuple(b.kind, b.i, b.j);
    }
};

struct AlgebraBasis {
    Family family = Family::C;
    int n = 0;
    std::vector<BasisElement> elements;

    int dim() const { return static_cast<int>(elements.size()); }

    int index_of(const BasisElement& e) const {
        for (int k = 0; k < dim(); ++k)
            if (elements[k] == e) return k;
        return -1;
    }
};

inline AlgebraBasis basis(const SignedPoset& p) {
    const Family f = p.family();
    AlgebraBasis b{f, p.n(), {}};
    for (int i = 1; i <= p.n(); ++i) b.elements.push_back(BasisElement::diag(i));

    std::vector<BasisElement> dashed, loops, solid;
    std::set<std::pair<int, int>> seenDashed, seenSolid;
    for (const auto& [x, y] : p.relations()) {
        if (x == 0 || y == 0)
            throw ZeroRelation("no basis is defined for a type-B poset relating 0");
        if (x == -y) {
            // -i < i: a basis element only in type C; ignored in types B/D
            // where the matrix form forbids the (-i,i) entry.
            if (f == Family::C) loops.push_back(BasisElement::loop(y));
        } else if (x < 0 && y > 0) {
            int lo = std::min(-x, y), hi = std::max(-x, y);
            if (seenSolid.insert({lo, hi}).second)
                solid.push_back(f == Family::C ? BasisElement::solid_c(lo, hi)
                                               : BasisElement::solid_d(hi, lo));
        } else {
            int lo = x < 0 ? -y : x, hi = x < 0 ? -x : y;
            if (seenDashed.insert({lo, hi}).second)
                dashed.push_back(BasisElement::dashed(lo, hi));
        }
    }
    auto byEdge = [](const BasisElement& a, const BasisElement& b) { return a.edge() < b.edge(); };
    std::sort(dashed.begin(), dashed.end(), byEdge);
    std::sort(loops.begin(), loops.end(), byEdge);
    std::sort(solid.begin(), solid.end(), byEdge);
    b.elements.insert(b.elements.end(), dashed.begin(), dashed.end());
    b.elements.insert(b.elements.end(), loops.begin(), loops.end());
    b.elements.insert(b.elements.end(), solid.begin(), solid.end());
    return b;
}

namespace detail {

struct SupportEntry {
    int row, col, val;
};

inline int matrix_size(Family f, int n) { return f == Family::B ? 2 * n + 1 : 2 * n; }

// Row/column index of a signed label in the defining representation.
inline int label_index(Family f, int n, int x) {
    if (f == Family::B) return x + n;
    return x < 0 ? x + n : x + n - 1;
}

inline std::array<SupportEntry, 2> support(const BasisElement& e, Family f, int n,
                                           int* count) {
    auto ix = [&](int x) { return label_index(f, n, x); };
    std::array<SupportEntry, 2> s{};
    switch (e.kind) {
        case BasisElement::Kind::Diag:
            s[0] = {ix(-e.i), ix(-e.i), 1};
            s[1] = {ix(e.i), ix(e.i), -1};
            *count = 2;
            break;
        case BasisElement::Kind::Dashed:
            s[0] = {ix(-e.j), ix(-e.i), 1};
            s[1] = {ix(e.i), ix(e.j), -1};
            *count = 2;
            break;
        case BasisElement::Kind::SolidC:
            s[0] = {ix(-e.i), ix(e.j), 1};
            s[1] = {ix(-e.j), ix(e.i), 1};
            *count = 2;
            break;
        case BasisElement::Kind::SolidD:
            s[0] = {ix(-e.i), ix(e.j), 1};
            s[1] = {ix(-e.j), ix(e.i), -1};
            *count = 2;
            break;
        default:  // Loop
            s[0] = {ix(-e.i), ix(e.i), 1};
            *count = 1;
            break;
    }
    return s;
}

using SparseMatrix = std::map<std::pair<int, int>, long long>;

inline SparseMatrix sparse_bracket(const BasisElement& a, const BasisElement& b, Family f,
                                   int n) {
    int ca = 0, cb = 0;
    auto sa = support(a, f, n, &ca);
    auto sb = support(b, f, n, &cb);
    SparseMatrix m;
    for (int s = 0; s < ca; ++s)
        for (int t = 0; t < cb; ++t) {
            if (sa[s].col == sb[t].row)
                m[{sa[s].row, sb[t].col}] += static_cast<long long>(sa[s].val) * sb[t].val;
            if (sb[t].col == sa[s].row)
                m[{sb[t].row, sa[s].col}] -= static_cast<long long>(sb[t].val) * sa[s].val;
        }
    return m;
}

// Expresses a sparse matrix over the basis; the leading support cell of each
// element carries coefficient +1 and the supports of distinct elements are
// disjoint. A nonzero residue means the matrix left the algebra.
inline std::vector<std::pair<int, int>> decompose(SparseMatrix m, const AlgebraBasis& basis,
                                                  const std::string& context) {
    std::vector<std::pair<int, int>> coeffs;
    for (int k = 0; k < basis.dim(); ++k) {
        int cnt = 0;
        auto sup = support(basis.elements[k], basis.family, basis.n, &cnt);
        auto it = m.find({sup[0].row, sup[0].col});
        if (it == m.end() || it->second == 0) continue;
        long long c = it->second / sup[0].val;
        coeffs.emplace_back(k, static_cast<int>(c));
        for (int s = 0; s < cnt; ++s) m[{sup[s].row, sup[s].col}] -= c * sup[s].val;
    }
    for (const auto& [pos, v] : m)
        if (v != 0)
            throw ClosureViolation(context + " leaves the basis span at entry (" +
                                   std::to_string(pos.first) + "," + std::to_string(pos.second) +
                                   ")");
    return coeffs;
}

}  // namespace detail

template <class K = Rational>
Matrix<K> realize(const BasisElement& e, Family f, int n) {
    const int size = detail::matrix_size(f, n);
    Matrix<K> m(size, size);
    int cnt = 0;
    auto sup = detail::support(e, f, n, &cnt);
    for (int s = 0; s < cnt; ++s) m(sup[s].row, sup[s].col) = K(sup[s].val);
    return m;
}

// [a, b] as a dense coefficient vector over the basis.
inline std::vector<long long> bracket(const BasisElement& a, const BasisElement& b,
                                      const AlgebraBasis& basis) {
    auto sparse = detail::sparse_bracket(a, b, basis.family, basis.n);
    auto coeffs = detail::decompose(std::move(sparse), basis,
                                    "[" + a.name() + "," + b.name() + "]");
    std::vector<long long> out(basis.dim(), 0);
    for (const auto& [k, c] : coeffs) out[k] = c;
    return out;
}

// All pairwise brackets, stored sparsely. Antisymmetric by construction;
// construction fails loudly if any bracket leaves the span of the basis.
class StructureTable {
public:
    explicit StructureTable(const AlgebraBasis& basis)
        : dim_(basis.dim()), entries_(static_cast<std::size_t>(dim_) * dim_) {
        for (int a = 0; a < dim_; ++a)
            for (int b = a + 1; b < dim_; ++b) {
                auto sparse =
                    detail::sparse_bracket(basis.elements[a], basis.elements[b], basis.family,
                                           basis.n);
                auto coeffs = detail::decompose(
                    std::move(sparse), basis,
                    "[" + basis.elements[a].name() + "," + basis.elements[b].name() + "]");
                entries_[at(a, b)] = coeffs;
                for (auto& [k, c] : coeffs) c = -c;
                entries_[at(b, a)] = std::move(coeffs);
            }
    }

    int dim() const { return dim_; }

    // Sparse coefficients of [E_a, E_b] over the basis.
    const std::vector<std::pair<int, int>>& entry(int a, int b) const {
        return entries_[at(a, b)];
    }

private:
    std::size_t at(int a, int b) const {
        return static_cast<std::size_t>(a) * dim_ + b;
    }

    int dim_;
    std::vector<std::vector<std::pair<int, int>>> entries_;
};

inline StructureTable structure_table(const AlgebraBasis& basis) { return StructureTable(basis); }

inline bool satisfies_jacobi(const StructureTable& t) {
    const int d = t.dim();
    std::vector<long long> acc(d);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            for (int c = b + 1; c < d; ++c) {
                std::fill(acc.begin(), acc.end(), 0);
                // [[a,b],c] + [[b,c],a] + [[c,a],b]
                const std::array<std::array<int, 3>, 3> cyc = {{{a, b, c}, {b, c, a}, {c, a, b}}};
                for (const auto& [x, y, z] : cyc)
                    for (const auto& [e, coeff] : t.entry(x, y))
                        for (const auto& [f, inner] : t.entry(e, z))
                            acc[f] += static_cast<long long>(coeff) * inner;
                for (long long v : acc)
                    if (v != 0) return false;
            }
    return true;
}

// phi([E_a, E_b]) over the ordered basis; skew-symmetric.
template <class K>
Matrix<K> commutator_matrix(const StructureTable& t, const std::vector<K>& phi) {
    const int d = t.dim();
    const K zero = d > 0 ? scalar_traits<K>::zero(phi.at(0)) : K();
    Matrix<K> m(d, d, zero);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            K acc = zero;
            for (const auto& [e, c] : t.entry(a, b))
                acc += scalar_traits<K>::from_int(c, zero) * phi[e];
            m(a, b) = acc;
            m(b, a) = zero - acc;
        }
    return m;
}

template <class K>
Matrix<K> commutator_matrix(const AlgebraBasis& basis, const std::vector<K>& phi) {
    return commutator_matrix(StructureTable(basis), phi);
}

// Salgado's extension: first row (0, phi(E_1), ..., phi(E_dim)), first
// column its negation, lower-right block the commutator matrix.
template <class K>
Matrix<K> extended_matrix(const StructureTable& t, const std::vector<K>& phi) {
    const int d = t.dim();
    if (d % 2 == 0)
        throw EvenDimension("extended matrix requires odd dimension, got " + std::to_string(d));
    const K zero = scalar_traits<K>::zero(phi.at(0));
    Matrix<K> m(d + 1, d + 1, zero);
    for (int k = 0; k < d; ++k) {
        m(0, k + 1) = phi[k];
        m(k + 1, 0) = zero - phi[k];
    }
    auto c = commutator_matrix(t, phi);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) m(a + 1, b + 1) = c(a, b);
    return m;
}

// |E| x |V| matrix of the relation graph: row x_i - x_j per dashed edge,
// -2 x_i per loop, -x_i - x_j per solid edge. Rows follow the basis order
// (dashed, loops, solid), columns the sorted vertex labels.
template <class K = Rational>
Matrix<K> m_matrix(const RelationGraph& g) {
    const auto vs = g.vertices();
    auto col = [&](int v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::vector<std::array<int, 3>> rows;  // (a, b, kindTag); tag 0 dashed, 1 loop, 2 solid
    for (const auto& [p, k] : g.edges()) {
        if (k == EdgeKind::Dashed) rows.push_back({p.first, p.second, 0});
        else if (p.first == p.second) rows.push_back({p.first, p.second, 1});
        else rows.push_back({p.first, p.second, 2});
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a[2] < b[2]; });

    Matrix<K> m(rows.size(), vs.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto [a, b, tag] = rows[r];
        if (tag == 0) {
            m(r, col(a)) = K(1);
            m(r, col(b)) = K(-1);
        } else if (tag == 1) {
            m(r, col(a)) = K(-2);
        } else {
            m(r, col(a)) = K(-1);
            m(r, col(b)) = K(-1);
        }
    }
    return m;
}

// Total assignment basis element -> scalar; unspecified elements are 0.
template <class K>
struct Functional {
    std::map<BasisElement, K> assignment;

    std::vector<K> aligned(const AlgebraBasis& basis, const K& zeroWitness) const {
        std::vector<K> out(basis.dim(), scalar_traits<K>::zero(zeroWitness));
        for (const auto& [e, v] : assignment) {
            int k = basis.index_of(e);
            if (k >= 0) out[k] = v;
        }
        return out;
    }
};

}  // namespace lieposet
