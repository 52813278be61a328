#pragma once

// Exact dense linear algebra over arbitrary-precision rationals and a
// configurable prime field. Rank and determinant are computed by
// fraction-free (Bareiss) elimination over the rationals and by ordinary
// Gaussian elimination over the prime field. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "lieposet/errors.hpp"

namespace lieposet {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

// Residue class modulo an odd prime p < 2^31. The modulus travels with the
// value; mixing moduli is a programming error.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t value, std::uint32_t p) : p_(p) {
        std::int64_t m = value % static_cast<std::int64_t>(p);
        if (m < 0) m += p;
        v_ = static_cast<std::uint32_t>(m);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t s = std::uint64_t(a.v_) + b.v_;
        if (s >= a.p_) s -= a.p_;
        return raw(static_cast<std::uint32_t>(s), a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t s = std::uint64_t(a.v_) + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return raw(static_cast<std::uint32_t>(s), a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        return raw(static_cast<std::uint32_t>((std::uint64_t(a.v_) * b.v_) % a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        assert(v_ != 0);
        // Fermat: v^(p-2) mod p.
        std::uint64_t base = v_, acc = 1, e = p_ - 2;
        while (e) {
            if (e & 1) acc = (acc * base) % p_;
            base = (base * base) % p_;
            e >>= 1;
        }
        return raw(static_cast<std::uint32_t>(acc), p_);
    }

    static Fp raw(std::uint32_t v, std::uint32_t p) {
        Fp f;
        f.v_ = v;
        f.p_ = p;
        return f;
    }

private:
    std::uint32_t v_;
    std::uint32_t p_;
};

constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

template <class K>
struct scalar_traits {
    static K zero(const K&) { return K(0); }
    static K one(const K&) { return K(1); }
    static K from_int(long long c, const K&) { return K(c); }
    static bool is_zero(const K& x) { return x == 0; }
};

template <>
struct scalar_traits<Fp> {
    // The modulus is carried by a witness value.
    static Fp zero(const Fp& w) { return Fp::raw(0, w.modulus()); }
    static Fp one(const Fp& w) { return Fp::raw(1, w.modulus()); }
    static Fp from_int(long long c, const Fp& w) { return Fp(c, w.modulus()); }
    static bool is_zero(const Fp& x) { return x.is_zero(); }
};

// Dense row-major matrix over an exact scalar type. Immutable in spirit:
// operations return new matrices; rank/determinant work on copies.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const K& fill = K())
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const K& one = K(1)) {
        Matrix m(n, n, scalar_traits<K>::zero(one));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        const K zero = (a.rows_ && a.cols_) ? scalar_traits<K>::zero(a(0, 0)) : K();
        Matrix c(a.rows_, b.cols_, zero);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (scalar_traits<K>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] = c.e_[i] - b.e_[i];
        return c;
    }

    bool is_zero() const {
        for (const K& x : e_)
            if (!scalar_traits<K>::is_zero(x)) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    // Plain-text grid, for debugging.
    std::string to_text() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ' ';
                os << (*this)(i, j);
            }
            os << '\n';
        }
        return os.str();
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> e_;
};

namespace detail {

// Fraction-free elimination; returns (rank, det-of-leading-square-part).
// Skipped columns keep the previous pivot, so every intermediate entry is a
// minor of the input and stays integral for integral input.
inline std::pair<std::size_t, Rational> bareiss(Matrix<Rational> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
#ifndef NDEBUG
    bool integral_input = true;
    for (std::size_t i = 0; i < rows && integral_input; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!is_integral(m(i, j))) {
                integral_input = false;
                break;
            }
#endif
    std::size_t r = 0;
    Rational prev = 1;
    int sign = 1;
    bool skipped = false;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, col) == 0) ++pivot;
        if (pivot == rows) {
            skipped = true;
            continue;
        }
        if (pivot != r) {
            m.swap_rows(pivot, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m(i, j) = (m(r, col) * m(i, j) - m(i, col) * m(r, j)) / prev;
                // Every intermediate is a minor of the input, hence integral
                // for integral input.
                assert(!integral_input || is_integral(m(i, j)));
            }
            m(i, col) = 0;
        }
        prev = m(r, col);
        ++r;
    }
    Rational det = (skipped || r < rows) ? Rational(0) : prev * sign;
    return {r, det};
}

template <class K>
std::pair<std::size_t, K> gauss(Matrix<K> m, const K& witness) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    K det = scalar_traits<K>::one(witness);
    bool skipped = false;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && scalar_traits<K>::is_zero(m(pivot, col))) ++pivot;
        if (pivot == rows) {
            skipped = true;
            continue;
        }
        if (pivot != r) {
            m.swap_rows(pivot, r);
            det = -det;
        }
        det *= m(r, col);
        K inv = scalar_traits<K>::one(witness) / m(r, col);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (scalar_traits<K>::is_zero(m(i, col))) continue;
            K f = m(i, col) * inv;
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    if (skipped || r < rows) det = scalar_traits<K>::zero(witness);
    return {r, det};
}

template <class K>
K field_witness(const Matrix<K>& m) {
    if constexpr (std::is_same_v<K, Fp>) {
        assert(m.rows() > 0 && m.cols() > 0);
        return m(0, 0);
    } else {
        (void)m;
        return K(1);
    }
}

}  // namespace detail

template <class K>
std::size_t rank(const Matrix<K>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if constexpr (std::is_same_v<K, Rational>) {
        return detail::bareiss(m).first;
    } else {
        return detail::gauss(m, detail::field_witness(m)).first;
    }
}

template <class K>
K determinant(const Matrix<K>& m) {
    if (m.rows() != m.cols())
        throw NonSquare("determinant of " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + " matrix");
    if constexpr (std::is_same_v<K, Rational>) {
        if (m.rows() == 0) return Rational(1);
        return detail::bareiss(m).second;
    } else {
        assert(m.rows() > 0);
        return detail::gauss(m, detail::field_witness(m)).second;
    }
}

}  // namespace lieposet
