#pragma once

#include "ech/symmetric.hpp"
#include "ech/zero_set.hpp"

namespace ech {

// Determinant with Vandermonde rows 1, p, ..., p^{n-2} and last row E_{l,i},
// checked by exact elimination against the closed form
//   0 for 0 <= l <= n-2,   (-1)^{C(n-1,2)} Delta for l = n-1.
struct DetPrepResult {
    ComplexQ det;
    ComplexQ expected;
    bool match = false;
};
DetPrepResult det_prep_check(const std::vector<ComplexQ>& points, int ell);

// Determinant of the bordered Vandermonde with top row E_{l,i} alpha_i and
// descending power rows below, for leading coefficients on the order-1 zero
// locus. Compares (-1)^n det/Delta with the closed case form and records
// which row orientation the closed form matches.
struct DetReductionResult {
    ComplexQ det;            // top-row-alpha orientation (descending powers below)
    ComplexQ det_ascending;  // ascending-powers orientation with the alpha row last
    ComplexQ expected;       // case value of (-1)^n det / Delta
    bool match = false;
    bool orientations_consistent = false;  // det == (-1)^{C(n,2)} det_ascending
};
DetReductionResult det_reduction_check(const std::vector<ComplexQ>& points,
                                       const std::vector<ComplexQ>& alphas, int ell);

// Row reduction of the block matrix (A_1 ... A_m) whose blocks stack the
// all-ones row over the rows (q_k - p_j)^{-l}. Runs the n-2 elimination
// steps, recording the matrix after every step; after the final sign
// normalization each block equals the corresponding derivative matrix.
struct RowReduceResult {
    // trace[j] is the full (n-2) x (n*m) matrix after step j+1.
    std::vector<std::vector<std::vector<ComplexQ>>> trace;
    std::vector<std::vector<ComplexQ>> final_matrix;  // (n-2) x (n*m), sign-normalized
    bool matches_derivative_blocks = false;
};
RowReduceResult row_reduce_appendix(const CoverConfig<ComplexQ>& cfg, int m);

// Block matrix A of the raw pole equations (before reduction).
std::vector<std::vector<ComplexQ>> model_block_matrix(const CoverConfig<ComplexQ>& cfg, int m);

// Expected row forms after each reduction step, used as the independent
// oracle for the trace.
std::vector<std::vector<ComplexQ>> row_reduce_step_oracle(const CoverConfig<ComplexQ>& cfg, int m,
                                                          int step);

// (A alpha = 0) <=> (sum_l B_l v_l = 0) on the given data, both sides
// computed independently and order by order in w.
bool nullspace_equivalence_check(const CoverConfig<ComplexQ>& cfg,
                                 const AsymptoticData<ComplexQ>& asym, int m);

}  // namespace ech
