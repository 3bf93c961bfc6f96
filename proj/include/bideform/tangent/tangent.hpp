#pragma once

/**
 * @file tangent.hpp
 * @brief The relation map of a presentation, its exact differential, and the
 * dimensions of the Zariski tangent space, Z^1, B^1 and H^1 with adjoint
 * coefficients in sl(n).
 *
 * Ambient coordinates: generator g, entry (a, b) of its matrix sits in
 * column n^2 * g + n * a + b. Rows: one determinant row per generator, then
 * n^2 rows per relator (entry (i, j) of lhs - rhs in row n^2 * r + n * i + j
 * after the determinant block).
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bideform/bianchi/presentation.hpp"
#include "bideform/linalg/elimination.hpp"
#include "bideform/linalg/matrix.hpp"

namespace bideform {

template <class F>
struct RelationResiduals {
    std::vector<F> det;              ///< det(A_g) - 1 per generator
    std::vector<Matrix<F>> relator;  ///< lhs - rhs per relator

    bool all_zero() const {
        for (const auto& x : det)
            if (!ScalarTraits<F>::is_zero(x)) return false;
        for (const auto& m : relator)
            for (const auto& x : m.data())
                if (!ScalarTraits<F>::is_zero(x)) return false;
        return true;
    }
};

namespace detail {

template <class F>
void require_arity(const Presentation& p, const std::vector<Matrix<F>>& images) {
    if (images.size() != p.arity())
        throw std::invalid_argument("arity mismatch: " + std::to_string(images.size()) + " images for " +
                                    std::to_string(p.arity()) + " generators");
    for (const auto& m : images)
        if (!m.is_square() || m.rows() != images.front().rows())
            throw std::invalid_argument("images must be square matrices of one size");
}

// Adds sign * d(word)[X] into rows row0.. of jac.
template <class F>
void add_word_differential(Matrix<F>& jac, std::size_t row0, const Word& w, int sign, WordEvaluator<F>& ev,
                           std::size_t n) {
    const auto& L = w.letters();
    const std::size_t len = L.size();
    std::vector<Matrix<F>> pre(len + 1), suf(len + 1);
    pre[0] = Matrix<F>::identity(n);
    for (std::size_t p = 0; p < len; ++p) pre[p + 1] = pre[p] * ev.letter(L[p]);
    suf[len] = Matrix<F>::identity(n);
    for (std::size_t p = len; p-- > 0;) suf[p] = ev.letter(L[p]) * suf[p + 1];
    const std::size_t nn = n * n;
    for (std::size_t p = 0; p < len; ++p) {
        // e = +1: P_p X S_{p+1};  e = -1: -P_{p+1} X S_p.
        const bool inv = L[p].exp < 0;
        const Matrix<F>& P = inv ? pre[p + 1] : pre[p];
        const Matrix<F>& S = inv ? suf[p] : suf[p + 1];
        const bool negative = (sign < 0) != inv;
        const std::size_t col0 = nn * L[p].gen;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < n; ++a) {
                const F& pia = P(i, a);
                if (ScalarTraits<F>::is_zero(pia)) continue;
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t j = 0; j < n; ++j) {
                        const F& sbj = S(b, j);
                        if (ScalarTraits<F>::is_zero(sbj)) continue;
                        F& cell = jac(row0 + n * i + j, col0 + n * a + b);
                        if (negative) cell -= pia * sbj;
                        else cell += pia * sbj;
                    }
            }
    }
}

}  // namespace detail

/// Per-generator det - 1 and per-relator lhs - rhs.
template <class F>
RelationResiduals<F> relation_residuals(const Presentation& p, const std::vector<Matrix<F>>& images) {
    detail::require_arity(p, images);
    RelationResiduals<F> out;
    for (const auto& m : images) out.det.push_back(determinant_cofactor(m) - F(1));
    WordEvaluator<F> ev(images);
    for (const auto& rel : p.relators) out.relator.push_back(ev(rel.lhs) - ev(rel.rhs));
    return out;
}

template <class F>
RelationResiduals<F> relation_residuals(const Representation<F>& r) {
    return relation_residuals(r.presentation, r.images);
}

/// Differential of the relation map at images, without checking that the
/// point lies on the variety. Shape (m + n^2 k) x (n^2 m).
template <class F>
Matrix<F> relation_jacobian(const Presentation& p, const std::vector<Matrix<F>>& images) {
    detail::require_arity(p, images);
    const std::size_t m = images.size(), n = images.front().rows(), nn = n * n;
    Matrix<F> jac(m + nn * p.relators.size(), nn * m);
    for (std::size_t g = 0; g < m; ++g) {
        // d det(A)[X] = tr(adj(A) X) = sum_ab adj(A)_ba X_ab.
        Matrix<F> adj = adjugate(images[g]);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) jac(g, nn * g + n * a + b) = adj(b, a);
    }
    WordEvaluator<F> ev(images);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        const std::size_t row0 = m + nn * r;
        detail::add_word_differential(jac, row0, p.relators[r].lhs, +1, ev, n);
        detail::add_word_differential(jac, row0, p.relators[r].rhs, -1, ev, n);
    }
    return jac;
}

/// Exact differential at a point of the representation variety.
template <class F>
Matrix<F> jacobian(const Presentation& p, const std::vector<Matrix<F>>& images) {
    if (!relation_residuals(p, images).all_zero())
        throw std::domain_error("jacobian: the input does not satisfy the relations");
    return relation_jacobian(p, images);
}

template <class F>
Matrix<F> jacobian(const Representation<F>& r) {
    return jacobian(r.presentation, r.images);
}

/// dim Z^1(G, sl(n)) from the Fox-calculus cocycle equations
/// sum over letters of +-Ad(prefix) X_g = 0, one block per relator.
template <class F>
std::size_t cocycle_space_dim(const Presentation& p, const std::vector<Matrix<F>>& images) {
    detail::require_arity(p, images);
    const std::size_t m = images.size(), n = images.front().rows(), nn = n * n;
    Matrix<F> sys(nn * p.relators.size() + m, nn * m);
    WordEvaluator<F> ev(images);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        const Word w = p.relators[r].full();
        Matrix<F> pre = Matrix<F>::identity(n), pre_inv = Matrix<F>::identity(n);
        for (const auto& l : w.letters()) {
            const Letter inv_letter{l.gen, -l.exp};
            if (l.exp < 0) {
                // The Fox derivative of g^-1 is -g^-1, so the prefix includes it.
                pre = pre * ev.letter(l);
                pre_inv = ev.letter(inv_letter) * pre_inv;
            }
            const F sgn = l.exp > 0 ? F(1) : F(-1);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t a = 0; a < n; ++a) {
                        if (ScalarTraits<F>::is_zero(pre(i, a))) continue;
                        const F pia = sgn * pre(i, a);
                        for (std::size_t b = 0; b < n; ++b)
                            if (!ScalarTraits<F>::is_zero(pre_inv(b, j)))
                                sys(nn * r + n * i + j, nn * l.gen + n * a + b) += pia * pre_inv(b, j);
                    }
            if (l.exp > 0) {
                pre = pre * ev.letter(l);
                pre_inv = ev.letter(inv_letter) * pre_inv;
            }
        }
    }
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t a = 0; a < n; ++a) sys(nn * p.relators.size() + g, nn * g + n * a + a) = F(1);
    return nn * m - rank(sys);
}

/// dim B^1 = dim sl(n) - dim of the centralizer of the images in sl(n).
template <class F>
std::size_t coboundary_dim(const std::vector<Matrix<F>>& images) {
    if (images.empty()) throw std::invalid_argument("coboundary_dim: no generators");
    const std::size_t n = images.front().rows(), nn = n * n;
    Matrix<F> sys(nn * images.size() + 1, nn);
    for (std::size_t g = 0; g < images.size(); ++g) {
        const Matrix<F>& A = images[g];
        // (A X - X A)_ij = sum_k A_ik X_kj - X_ik A_kj
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = nn * g + n * i + j;
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, n * k + j) += A(i, k);
                    sys(row, n * i + k) -= A(k, j);
                }
            }
    }
    for (std::size_t a = 0; a < n; ++a) sys(nn * images.size(), n * a + a) = F(1);
    const std::size_t centralizer = nn - rank(sys);
    return (nn - 1) - centralizer;
}

/// Burnside test: the unital algebra generated by the images is all of
/// M_n, checked on words of length <= max_length.
template <class F>
bool irreducibility_check(const std::vector<Matrix<F>>& images, unsigned max_length = 4) {
    if (images.empty()) throw std::invalid_argument("irreducibility_check: no generators");
    const std::size_t n = images.front().rows(), nn = n * n;
    IncrementalSpan<F> span(nn);
    std::vector<Matrix<F>> frontier{Matrix<F>::identity(n)};
    span.insert(frontier.front().data());
    for (unsigned len = 1; len <= max_length && span.rank() < nn && !frontier.empty(); ++len) {
        std::vector<Matrix<F>> next;
        for (const auto& w : frontier)
            for (const auto& g : images) {
                Matrix<F> prod = w * g;
                if (span.insert(prod.data())) next.push_back(std::move(prod));
                if (span.rank() == nn) return true;
            }
        frontier = std::move(next);
    }
    return span.rank() == nn;
}

struct TangentReport {
    int d = 0;
    std::size_t ambient_dim = 0;
    std::size_t jacobian_rows = 0;
    std::size_t jacobian_rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t cocycle_dim = 0;  ///< Fox-calculus route, should equal kernel_dim
    std::size_t b1_dim = 0;
    long h1_dim = 0;
    bool irreducible = false;
};

struct TangentOptions {
    unsigned burnside_length = 4;
    bool cocycle_cross_check = true;
};

template <class F>
TangentReport tangent_report(const Representation<F>& r, const TangentOptions& opt = {}) {
    r.check_shape();
    TangentReport rep;
    rep.d = r.presentation.d;
    Matrix<F> jac = jacobian(r);
    rep.ambient_dim = jac.cols();
    rep.jacobian_rows = jac.rows();
    rep.jacobian_rank = rank(jac);
    rep.kernel_dim = rep.ambient_dim - rep.jacobian_rank;
    if (opt.cocycle_cross_check) rep.cocycle_dim = cocycle_space_dim(r.presentation, r.images);
    rep.b1_dim = coboundary_dim(r.images);
    rep.h1_dim = static_cast<long>(rep.kernel_dim) - static_cast<long>(rep.b1_dim);
    rep.irreducible = irreducibility_check(r.images, opt.burnside_length);
    return rep;
}

/// Runs job(i) for i in [0, count) on at most `workers` threads.
template <class Job>
void parallel_for(std::size_t count, std::size_t workers, Job job) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace bideform
