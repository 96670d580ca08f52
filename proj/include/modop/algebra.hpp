#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace modop {

/// Default absolute tolerance for positivity decisions (eigenvalue solvers
/// return +-eps noise at zero).
inline constexpr double kPositivityTol = 1e-9;

/**
 * A finite direct sum of full complex matrix algebras M_{n_1} + ... + M_{n_k},
 * the finite-scale stand-in for a C*-algebra of compact operators. Two
 * algebras are equal iff their block dimension lists are equal.
 */
struct CStarAlgebra {
    std::vector<int> block_dims;

    int num_blocks() const { return static_cast<int>(block_dims.size()); }
    int linear_dimension() const {
        int d = 0;
        for (int n : block_dims) d += n * n;
        return d;
    }
    friend bool operator==(const CStarAlgebra&, const CStarAlgebra&) = default;
};

inline CStarAlgebra make_algebra(std::vector<int> block_dims) {
    if (block_dims.empty()) throw EmptyAlgebra("algebra needs at least one block");
    for (int n : block_dims)
        if (n < 1) throw InvalidDim("block dimension must be >= 1, got " + std::to_string(n));
    return CStarAlgebra{std::move(block_dims)};
}

/// Element of a CStarAlgebra: one n_i x n_i complex matrix per block.
struct AlgebraElement {
    CStarAlgebra algebra;
    std::vector<Mat> blocks;
};

inline AlgebraElement make_element(CStarAlgebra a, std::vector<Mat> blocks) {
    if (static_cast<int>(blocks.size()) != a.num_blocks())
        throw ShapeMismatch("element needs one block per algebra block");
    for (int i = 0; i < a.num_blocks(); ++i)
        if (blocks[i].rows() != a.block_dims[i] || blocks[i].cols() != a.block_dims[i])
            throw ShapeMismatch("block " + std::to_string(i) + " has wrong shape");
    return AlgebraElement{std::move(a), std::move(blocks)};
}

inline AlgebraElement zero_element(const CStarAlgebra& a) {
    std::vector<Mat> blocks;
    blocks.reserve(a.block_dims.size());
    for (int n : a.block_dims) blocks.push_back(zeros(n, n));
    return AlgebraElement{a, std::move(blocks)};
}

inline AlgebraElement identity_element(const CStarAlgebra& a) {
    std::vector<Mat> blocks;
    blocks.reserve(a.block_dims.size());
    for (int n : a.block_dims) blocks.push_back(eye(n));
    return AlgebraElement{a, std::move(blocks)};
}

namespace detail {
inline void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.algebra == b.algebra))
        throw AlgebraMismatch("elements live in different algebras");
}
} // namespace detail

inline AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
    detail::require_same_algebra(a, b);
    std::vector<Mat> blocks;
    blocks.reserve(a.blocks.size());
    for (size_t i = 0; i < a.blocks.size(); ++i) blocks.push_back(a.blocks[i] * b.blocks[i]);
    return AlgebraElement{a.algebra, std::move(blocks)};
}

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    detail::require_same_algebra(a, b);
    std::vector<Mat> blocks;
    blocks.reserve(a.blocks.size());
    for (size_t i = 0; i < a.blocks.size(); ++i) blocks.push_back(a.blocks[i] + b.blocks[i]);
    return AlgebraElement{a.algebra, std::move(blocks)};
}

inline AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
    detail::require_same_algebra(a, b);
    std::vector<Mat> blocks;
    blocks.reserve(a.blocks.size());
    for (size_t i = 0; i < a.blocks.size(); ++i) blocks.push_back(a.blocks[i] - b.blocks[i]);
    return AlgebraElement{a.algebra, std::move(blocks)};
}

inline AlgebraElement scale(Complex c, const AlgebraElement& a) {
    std::vector<Mat> blocks;
    blocks.reserve(a.blocks.size());
    for (const Mat& m : a.blocks) blocks.push_back(c * m);
    return AlgebraElement{a.algebra, std::move(blocks)};
}

/// Involution: entrywise conjugate transpose per block. Exact (no rounding).
inline AlgebraElement star(const AlgebraElement& a) {
    std::vector<Mat> blocks;
    blocks.reserve(a.blocks.size());
    for (const Mat& m : a.blocks) blocks.push_back(m.adjoint());
    return AlgebraElement{a.algebra, std::move(blocks)};
}

/// C*-norm of the direct sum: max over blocks of the largest singular value.
inline double norm(const AlgebraElement& a) {
    double n = 0.0;
    for (const Mat& m : a.blocks) n = std::max(n, spectral_norm(m));
    return n;
}

inline Complex trace(const AlgebraElement& a) {
    Complex t = 0.0;
    for (const Mat& m : a.blocks) t += m.trace();
    return t;
}

/// Positivity: every block Hermitian within tol and all eigenvalues >= -tol.
inline bool is_positive(const AlgebraElement& a, double tol = kPositivityTol) {
    for (const Mat& m : a.blocks) {
        if (m.rows() == 0) continue;
        if (spectral_norm(Mat(m - m.adjoint())) > tol) return false;
        if (min_eigenvalue(m) < -tol) return false;
    }
    return true;
}

/// Rank-one projection e with e_{11} = 1 in the chosen block, zero elsewhere.
inline AlgebraElement minimal_projection(const CStarAlgebra& a, int block_index) {
    if (block_index < 0 || block_index >= a.num_blocks())
        throw BlockOutOfRange("block index " + std::to_string(block_index) + " out of range");
    AlgebraElement e = zero_element(a);
    e.blocks[block_index](0, 0) = 1.0;
    return e;
}

} // namespace modop
