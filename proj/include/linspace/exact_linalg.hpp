#pragma once

// Exact linear algebra over arbitrary-precision integers and rationals:
// incidence and Gram matrices, two independent determinant routes, rank,
// positive definiteness, and the lambda-design generalization.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "linspace/incidence.hpp"

namespace linspace {

/// Dense row-major matrix of big integers.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
    ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    ExactMatrix transpose() const;
    bool symmetric() const;

    /// Leading k x k block.
    ExactMatrix leading(std::size_t k) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

/// n x m, entry (z, l) = 1 iff z lies on l. Row z is the indicator vector of
/// the lines through z.
ExactMatrix incidence_matrix(const LinearSpace& ls);
ExactMatrix incidence_matrix(const IncidenceStructure& structure);

/// M M^T. Throws InvariantViolation unless every off-diagonal entry is 1.
ExactMatrix gram_matrix(const LinearSpace& ls);

/// prod_j (k_j - lambda) * (1 + lambda * sum_j 1/(k_j - lambda)).
/// Throws ValidationError(DegreeNotAboveLambda) when some k_j <= lambda.
mpq_class gram_det_closed_form(std::span<const std::size_t> degrees, std::size_t lambda);

/// Bareiss single-step fraction-free elimination with row pivoting.
/// Throws std::invalid_argument for a non-square matrix.
mpz_class det_fraction_free(const ExactMatrix& mat);

/// Rank by fraction-free elimination with full pivoting.
std::size_t rank(const ExactMatrix& mat);

/// The leading principal minors d_1, ..., d_n, read off the pivots of
/// fraction-free elimination without pivoting. Elimination stops at the
/// first zero minor, so the result may be shorter than n.
std::vector<mpz_class> leading_principal_minors(const ExactMatrix& mat);

/// Sylvester's criterion. Throws std::invalid_argument for a non-square or
/// non-symmetric matrix.
bool positive_definite(const ExactMatrix& mat);

struct GramReport {
    mpq_class det_closed_form;
    mpz_class det_elimination;
    std::size_t rank = 0;
    bool positive_definite = false;
    std::size_t lambda = 1;
};

/// Both determinant routes plus rank and definiteness of M M^T. Throws
/// InvariantViolation if the two determinants disagree or the matrix is not
/// positive definite of full rank.
GramReport gram_report(const LinearSpace& ls);

/// A structure in which every pair of points lies on exactly lambda lines and
/// every point lies on more than lambda lines.
struct LambdaDesign {
    IncidenceStructure structure;  // normalized
    std::size_t lambda = 1;
    std::vector<std::size_t> degrees;
    std::vector<std::size_t> sizes;
    ExactMatrix gram;
    GramReport report;
    std::size_t incidence_rank = 0;

    bool lines_at_least_points() const noexcept { return structure.lines.size() >= structure.point_count; }
};

/// Checks the lambda-design hypotheses and certifies m >= n through the rank
/// of the incidence matrix. Throws ValidationError (PairCoverageNotLambda,
/// DegreeNotAboveLambda, PointOutOfRange, RepeatedPoint) on bad input, and
/// std::invalid_argument for lambda == 0.
LambdaDesign ryser_validate(const IncidenceStructure& raw, std::size_t lambda);

}  // namespace linspace
