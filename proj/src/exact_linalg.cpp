#include "linspace/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace linspace {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ExactMatrix: ragged initializer");
        for (long v : row) entries_.emplace_back(v);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

bool ExactMatrix::symmetric() const {
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) return false;
        }
    }
    return true;
}

ExactMatrix ExactMatrix::leading(std::size_t k) const {
    if (k > rows_ || k > cols_) throw std::out_of_range("ExactMatrix::leading: block larger than matrix");
    ExactMatrix out(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) out(r, c) = (*this)(r, c);
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const mpz_class& lhs = a(r, k);
            if (lhs == 0) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
        }
    }
    return out;
}

ExactMatrix incidence_matrix(const IncidenceStructure& structure) {
    ExactMatrix out(structure.point_count, structure.lines.size());
    for (LineIndex l = 0; l < structure.lines.size(); ++l) {
        for (PointIndex z : structure.lines[l]) out(z, l) = 1;
    }
    return out;
}

ExactMatrix incidence_matrix(const LinearSpace& ls) { return incidence_matrix(ls.structure()); }

ExactMatrix gram_matrix(const LinearSpace& ls) {
    const ExactMatrix m = incidence_matrix(ls);
    ExactMatrix gram = m * m.transpose();
    for (std::size_t r = 0; r < gram.rows(); ++r) {
        for (std::size_t c = 0; c < gram.cols(); ++c) {
            if (r != c && gram(r, c) != 1) {
                throw InvariantViolation("gram matrix: points " + std::to_string(r) + " and " + std::to_string(c) +
                                         " share " + gram(r, c).get_str() + " lines");
            }
        }
    }
    return gram;
}

mpq_class gram_det_closed_form(std::span<const std::size_t> degrees, std::size_t lambda) {
    mpz_class product = 1;
    mpq_class reciprocal_sum = 0;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
        if (degrees[j] <= lambda) {
            throw ValidationError({.kind = ValidationErrorKind::DegreeNotAboveLambda, .x = j});
        }
        const mpz_class excess(static_cast<unsigned long>(degrees[j] - lambda));
        product *= excess;
        reciprocal_sum += mpq_class(1, excess);
    }
    mpq_class det = mpq_class(product) * (1 + mpq_class(static_cast<unsigned long>(lambda)) * reciprocal_sum);
    det.canonicalize();
    return det;
}

mpz_class det_fraction_free(const ExactMatrix& mat) {
    if (!mat.square()) throw std::invalid_argument("det_fraction_free: matrix is not square");
    const std::size_t n = mat.rows();
    ExactMatrix a = mat;
    mpz_class previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;  // exact division
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return n == 0 ? mpz_class(1) : mpz_class(sign * a(n - 1, n - 1));
}

std::size_t rank(const ExactMatrix& mat) {
    ExactMatrix a = mat;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    // Column swaps do not change the rank, so they are not recorded.
    mpz_class previous = 1;
    std::size_t r = 0;
    for (; r < std::min(rows, cols); ++r) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = r; i < rows && pr == rows; ++i) {
            for (std::size_t j = r; j < cols; ++j) {
                if (a(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        }
        if (pr == rows) break;
        if (pr != r) {
            for (std::size_t c = 0; c < cols; ++c) std::swap(a(r, c), a(pr, c));
        }
        if (pc != r) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, r), a(i, pc));
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = r + 1; j < cols; ++j) {
                a(i, j) = (a(i, j) * a(r, r) - a(i, r) * a(r, j)) / previous;
            }
            a(i, r) = 0;
        }
        previous = a(r, r);
    }
    return r;
}

std::vector<mpz_class> leading_principal_minors(const ExactMatrix& mat) {
    if (!mat.square()) throw std::invalid_argument("leading_principal_minors: matrix is not square");
    const std::size_t n = mat.rows();
    ExactMatrix a = mat;
    std::vector<mpz_class> minors;
    mpz_class previous = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // Without row exchanges the k-th Bareiss pivot is the (k+1)-th leading minor.
        minors.push_back(a(k, k));
        if (a(k, k) == 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return minors;
}

bool positive_definite(const ExactMatrix& mat) {
    if (!mat.square()) throw std::invalid_argument("positive_definite: matrix is not square");
    if (!mat.symmetric()) throw std::invalid_argument("positive_definite: matrix is not symmetric");
    const auto minors = leading_principal_minors(mat);
    if (minors.size() != mat.rows()) return false;
    return std::all_of(minors.begin(), minors.end(), [](const mpz_class& d) { return d > 0; });
}

namespace {

GramReport report_for(const ExactMatrix& gram, std::span<const std::size_t> degrees, std::size_t lambda) {
    GramReport r;
    r.lambda = lambda;
    r.det_closed_form = gram_det_closed_form(degrees, lambda);
    r.det_elimination = det_fraction_free(gram);
    r.rank = rank(gram);
    r.positive_definite = positive_definite(gram);
    ensure(r.det_closed_form == mpq_class(r.det_elimination),
           "gram determinant: closed form " + r.det_closed_form.get_str() + " != elimination " +
               r.det_elimination.get_str());
    ensure(r.positive_definite, "gram matrix is not positive definite");
    ensure(r.rank == gram.rows(), "gram matrix is rank deficient");
    return r;
}

}  // namespace

GramReport gram_report(const LinearSpace& ls) { return report_for(gram_matrix(ls), ls.degrees(), 1); }

LambdaDesign ryser_validate(const IncidenceStructure& raw, std::size_t lambda) {
    using K = ValidationErrorKind;
    if (lambda == 0) throw std::invalid_argument("ryser_validate: lambda must be at least 1");
    const std::size_t n = raw.point_count;
    for (LineIndex l = 0; l < raw.lines.size(); ++l) {
        std::vector<std::uint8_t> seen(n, 0);
        for (PointIndex z : raw.lines[l]) {
            if (z >= n) throw ValidationError({.kind = K::PointOutOfRange, .x = z, .line = l});
            if (seen[z]++) throw ValidationError({.kind = K::RepeatedPoint, .x = z, .line = l});
        }
    }

    LambdaDesign d;
    d.lambda = lambda;
    d.structure = normalize(raw);
    for (auto& line : d.structure.lines) std::sort(line.begin(), line.end());

    const ExactMatrix incidence = incidence_matrix(d.structure);
    d.gram = incidence * incidence.transpose();
    for (PointIndex x = 0; x < n; ++x) {
        for (PointIndex y = x + 1; y < n; ++y) {
            if (d.gram(x, y) != static_cast<unsigned long>(lambda)) {
                throw ValidationError(
                    {.kind = K::PairCoverageNotLambda, .x = x, .y = y, .count = d.gram(x, y).get_ui()});
            }
        }
    }
    d.degrees.resize(n);
    for (PointIndex z = 0; z < n; ++z) {
        d.degrees[z] = d.gram(z, z).get_ui();
        if (d.degrees[z] <= lambda) throw ValidationError({.kind = K::DegreeNotAboveLambda, .x = z});
    }
    for (const auto& line : d.structure.lines) d.sizes.push_back(line.size());

    d.report = report_for(d.gram, d.degrees, lambda);
    d.incidence_rank = rank(incidence);
    ensure(d.incidence_rank == n, "lambda design: incidence matrix has rank below n");
    ensure(d.lines_at_least_points(), "lambda design: fewer lines than points");
    return d;
}

}  // namespace linspace
