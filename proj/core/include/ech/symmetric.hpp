#pragma once

#include <vector>

#include "ech/rational.hpp"

namespace ech {

// Elementary symmetric polynomial E_l of the points; E_0 = 1.
ComplexQ elementary_symmetric(const std::vector<ComplexQ>& points, int ell);

// Cached elementary-symmetric data over a fixed point set: E_l, the
// one-point-removed E_{l,i}, the two-point-removed E_{l,(i,j)}, and the
// Vandermonde products Delta, Delta_i.
class SymmetricFunctionContext {
public:
    explicit SymmetricFunctionContext(std::vector<ComplexQ> points);

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<ComplexQ>& points() const { return points_; }

    const ComplexQ& e(int ell) const;                 // E_l(p_1..p_n)
    ComplexQ e_skip(int ell, int i) const;            // E_l with p_i omitted (1-based i)
    ComplexQ e_skip2(int ell, int i, int j) const;    // E_l with p_i, p_j omitted
    const ComplexQ& vandermonde() const { return delta_; }          // prod_{i<j}(p_i - p_j)
    ComplexQ vandermonde_skip(int i) const;           // same with p_i omitted

private:
    std::vector<ComplexQ> points_;
    std::vector<ComplexQ> e_;  // E_0 .. E_n
    ComplexQ delta_;
};

// Exact determinant by fraction-normalizing Gaussian elimination.
ComplexQ determinant(std::vector<std::vector<ComplexQ>> m);

// Basis of the right nullspace of an r x c exact matrix.
std::vector<std::vector<ComplexQ>> nullspace_basis(std::vector<std::vector<ComplexQ>> m);

}  // namespace ech
