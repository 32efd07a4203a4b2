#include "padfeas/intlinalg.hpp"

#include <algorithm>
#include <utility>

namespace padfeas {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    Mat m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != m.cols) throw std::invalid_argument("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    Mat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& xv = x.at(i, k);
            if (xv == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

Int det(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: square matrix required");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    Mat w = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && w.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign < 0 ? Int(-w.at(n - 1, n - 1)) : w.at(n - 1, n - 1);
}

namespace {

// In-place unimodular 2x2 row transform putting gcd at (r, col) and 0 at
// (i, col): [row_r; row_i] <- [[s, t], [-b/g, a/g]] * [row_r; row_i],
// where (g, s, t) = ext_gcd(a, b). The block has determinant +1.
void rows_gcd_step(Mat& h, Mat& u, std::size_t r, std::size_t i, std::size_t col) {
    Int a = h.at(r, col), b = h.at(i, col);
    // Plain elimination when the pivot already divides the entry: ext_gcd
    // coefficients may otherwise swap the rows (e.g. a = b gives (0, 1)),
    // which can oscillate against the column pass instead of converging.
    if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        Int q = b / a;
        for (Mat* m : {&h, &u})
            for (std::size_t j = 0; j < m->cols; ++j) m->at(i, j) -= q * m->at(r, j);
        return;
    }
    ExtGcd e = ext_gcd(a, b);
    Int ag, bg;
    mpz_divexact(ag.get_mpz_t(), a.get_mpz_t(), e.g.get_mpz_t());
    mpz_divexact(bg.get_mpz_t(), b.get_mpz_t(), e.g.get_mpz_t());
    for (Mat* m : {&h, &u}) {
        for (std::size_t j = 0; j < m->cols; ++j) {
            Int top = e.a * m->at(r, j) + e.b * m->at(i, j);
            Int bot = -bg * m->at(r, j) + ag * m->at(i, j);
            m->at(r, j) = top;
            m->at(i, j) = bot;
        }
    }
}

// Column analogue acting on (row, c) / (row, j), updating v on the right.
void cols_gcd_step(Mat& s, Mat& v, std::size_t c, std::size_t j, std::size_t row) {
    Int a = s.at(row, c), b = s.at(row, j);
    if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        Int q = b / a;
        for (Mat* m : {&s, &v})
            for (std::size_t i = 0; i < m->rows; ++i) m->at(i, j) -= q * m->at(i, c);
        return;
    }
    ExtGcd e = ext_gcd(a, b);
    Int ag, bg;
    mpz_divexact(ag.get_mpz_t(), a.get_mpz_t(), e.g.get_mpz_t());
    mpz_divexact(bg.get_mpz_t(), b.get_mpz_t(), e.g.get_mpz_t());
    for (Mat* m : {&s, &v}) {
        for (std::size_t i = 0; i < m->rows; ++i) {
            Int left = e.a * m->at(i, c) + e.b * m->at(i, j);
            Int right = -bg * m->at(i, c) + ag * m->at(i, j);
            m->at(i, c) = left;
            m->at(i, j) = right;
        }
    }
}

void swap_rows(Mat& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(Mat& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void negate_row(Mat& m, std::size_t i) {
    for (std::size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

HermiteFactorization hermite_normal_form(const Mat& m) {
    HermiteFactorization f{Mat::identity(m.rows), m};
    Mat& h = f.h;
    Mat& u = f.u;
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols && r < m.rows; ++j) {
        std::size_t nz = r;
        while (nz < m.rows && h.at(nz, j) == 0) ++nz;
        if (nz == m.rows) continue;  // no pivot in this column
        swap_rows(h, r, nz);
        swap_rows(u, r, nz);
        for (std::size_t i = r + 1; i < m.rows; ++i)
            if (h.at(i, j) != 0) rows_gcd_step(h, u, r, i, j);
        if (h.at(r, j) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(r, j).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t c = 0; c < m.cols; ++c) h.at(i, c) -= q * h.at(r, c);
            for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(r, c);
        }
        ++r;
    }
    return f;
}

SmithFactorization smith_normal_form(const Mat& m) {
    SmithFactorization f{Mat::identity(m.rows), m, Mat::identity(m.cols)};
    Mat& s = f.s;
    Mat& u = f.u;
    Mat& v = f.v;
    std::size_t bound = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < bound; ++t) {
        // Find a pivot in the trailing submatrix.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m.rows && !found; ++i)
            for (std::size_t j = t; j < m.cols && !found; ++j)
                if (s.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;  // all remaining entries zero
        swap_rows(s, t, pi);
        swap_rows(u, t, pi);
        swap_cols(s, t, pj);
        swap_cols(v, t, pj);

        for (unsigned long guard = 0;; ++guard) {
            if (guard > 1000000) throw std::runtime_error("smith_normal_form: no convergence");
            // Clear column t, then row t; column clearing can be undone by
            // row clearing (and vice versa), so iterate. Each pass either
            // finishes or strictly shrinks |s_tt|, so this terminates.
            for (std::size_t i = t + 1; i < m.rows; ++i)
                if (s.at(i, t) != 0) rows_gcd_step(s, u, t, i, t);
            bool row_clear = true;
            for (std::size_t j = t + 1; j < m.cols; ++j)
                if (s.at(t, j) != 0) {
                    cols_gcd_step(s, v, t, j, t);
                    row_clear = false;
                }
            bool col_clear = true;
            for (std::size_t i = t + 1; i < m.rows; ++i)
                if (s.at(i, t) != 0) col_clear = false;
            if (!col_clear || !row_clear) continue;

            // Divisibility sweep: s_tt must divide the whole submatrix.
            bool fixed_up = false;
            for (std::size_t i = t + 1; i < m.rows && !fixed_up; ++i)
                for (std::size_t j = t + 1; j < m.cols && !fixed_up; ++j)
                    if (!mpz_divisible_p(s.at(i, j).get_mpz_t(), s.at(t, t).get_mpz_t())) {
                        // Add the offending row into row t, then re-clear.
                        for (std::size_t c = 0; c < m.cols; ++c) s.at(t, c) += s.at(i, c);
                        for (std::size_t c = 0; c < u.cols; ++c) u.at(t, c) += u.at(i, c);
                        fixed_up = true;
                    }
            if (!fixed_up) break;
        }
        if (s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    }
    return f;
}

std::vector<Int> monomial_substitution(const std::vector<Int>& x, const Mat& m,
                                       const PadicContext& ctx) {
    if (x.size() != m.rows)
        throw std::invalid_argument("monomial_substitution: point/matrix size mismatch");
    std::vector<Int> y(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        Int acc = 1;
        for (std::size_t i = 0; i < m.rows; ++i) {
            const Int& e = m.at(i, j);
            if (e == 0) continue;
            acc = ctx.reduce(acc * mod_pow(ctx.reduce(x[i]), e, ctx.modulus));
        }
        y[j] = ctx.reduce(acc);
    }
    return y;
}

}  // namespace padfeas
