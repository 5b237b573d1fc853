#include "hvloop/linalg.hpp"

#include <map>
#include <stdexcept>

namespace hvloop {

namespace {

using SparseRow = std::map<size_t, GaussianRational>;

// lcm of the denominators of every component of the row (re and im parts).
mpz_class row_denominator_lcm(const std::vector<GaussianRational>& row) {
    mpz_class l = 1;
    for (const auto& v : row) {
        mpz_class g;
        mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), v.re().get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), g.get_mpz_t(), v.im().get_den().get_mpz_t());
    }
    return l;
}

// gcd of the numerators of every component; rows entering here are Gaussian
// integers, so this is the integer content.  Returns 1 for the zero row.
mpz_class row_content(const std::vector<GaussianRational>& row) {
    mpz_class g = 0;
    for (const auto& v : row) {
        mpz_class t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), v.re().get_num().get_mpz_t());
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), v.im().get_num().get_mpz_t());
        if (g == 1) return g;
    }
    return g == 0 ? mpz_class(1) : g;
}

void scale_row(std::vector<GaussianRational>& row, const GaussianRational& s) {
    for (auto& v : row) v *= s;
}

// row_i := p*row_i - m*row_r on columns >= from, then strip integer content.
// Returns the content divisor so the caller can mirror it on the op-tracking
// row.  All divisions are exact.
mpz_class combine_rows(std::vector<GaussianRational>& row_i, const std::vector<GaussianRational>& row_r,
                       const GaussianRational& p, const GaussianRational& m, size_t from) {
    for (size_t c = from; c < row_i.size(); ++c) {
        row_i[c] = p * row_i[c] - m * row_r[c];
    }
    mpz_class g = row_content(row_i);
    if (g != 1) {
        GaussianRational inv(Rational(1, g));
        scale_row(row_i, inv);
    }
    return g;
}

void combine_sparse(SparseRow& e_i, const SparseRow& e_r, const GaussianRational& p, const GaussianRational& m,
                    const mpz_class& content) {
    for (auto& [idx, v] : e_i) v *= p;
    for (const auto& [idx, v] : e_r) {
        auto it = e_i.find(idx);
        if (it == e_i.end()) {
            e_i.emplace(idx, -(m * v));
        } else {
            it->second -= m * v;
        }
    }
    if (content != 1) {
        GaussianRational inv(Rational(1, content));
        for (auto& [idx, v] : e_i) v *= inv;
    }
}

struct Echelon {
    std::vector<std::vector<GaussianRational>> rows;  // scaled [M | b?]
    std::vector<SparseRow> ops;                       // rows[i] == ops[i] * original [M | b?]
    std::vector<size_t> pivot_rows;                   // in pivot order
    std::vector<size_t> pivot_cols;                   // parallel to pivot_rows
    std::vector<bool> is_pivot;
};

// Forward pass over the first `cols` columns (the optional rhs column is
// carried along but never pivoted on).  track_ops enables the certificate
// bookkeeping.
Echelon forward_eliminate(std::vector<std::vector<GaussianRational>> rows, size_t cols, bool track_ops) {
    Echelon e;
    size_t n = rows.size();
    e.ops.resize(track_ops ? n : 0);
    e.is_pivot.assign(n, false);
    for (size_t i = 0; i < n; ++i) {
        mpz_class l = row_denominator_lcm(rows[i]);
        if (l != 1) scale_row(rows[i], GaussianRational(Rational(l)));
        if (track_ops) e.ops[i][i] = GaussianRational(Rational(l));
    }
    for (size_t c = 0; c < cols; ++c) {
        size_t pivot = n;
        for (size_t r = 0; r < n; ++r) {
            if (!e.is_pivot[r] && !rows[r][c].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) continue;
        e.is_pivot[pivot] = true;
        e.pivot_rows.push_back(pivot);
        e.pivot_cols.push_back(c);
        const GaussianRational p = rows[pivot][c];
        for (size_t i = 0; i < n; ++i) {
            if (e.is_pivot[i] || rows[i][c].is_zero()) continue;
            GaussianRational m = rows[i][c];
            mpz_class g = combine_rows(rows[i], rows[pivot], p, m, c);
            if (track_ops) combine_sparse(e.ops[i], e.ops[pivot], p, m, g);
        }
    }
    e.rows = std::move(rows);
    return e;
}

}  // namespace

LinearSolveResult rank_and_solve(const Matrix& m, const std::vector<GaussianRational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("rank_and_solve: rhs length does not match row count");
    const size_t n = m.rows();
    const size_t k = m.cols();
    std::vector<std::vector<GaussianRational>> rows(n, std::vector<GaussianRational>(k + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) rows[i][j] = m.at(i, j);
        rows[i][k] = b[i];
    }
    Echelon e = forward_eliminate(std::move(rows), k, /*track_ops=*/true);

    LinearSolveResult out;
    out.rank = e.pivot_rows.size();

    // A non-pivot row is zero in every matrix column; a nonzero rhs there is
    // an exact inconsistency certificate.
    for (size_t i = 0; i < n; ++i) {
        if (e.is_pivot[i] || e.rows[i][k].is_zero()) continue;
        out.status = SolveStatus::infeasible;
        std::vector<GaussianRational> witness(n);
        for (const auto& [idx, v] : e.ops[i]) witness[idx] = v;
        out.infeasibility_witness = std::move(witness);
        return out;
    }

    // Feasible: back-substitute the particular solution (free columns 0).
    std::vector<GaussianRational> x(k);
    for (size_t t = e.pivot_rows.size(); t-- > 0;) {
        size_t r = e.pivot_rows[t];
        size_t c = e.pivot_cols[t];
        GaussianRational acc = e.rows[r][k];
        for (size_t j = c + 1; j < k; ++j) {
            if (!e.rows[r][j].is_zero() && !x[j].is_zero()) acc -= e.rows[r][j] * x[j];
        }
        x[c] = acc / e.rows[r][c];
    }
    out.solution = std::move(x);

    // Kernel basis: one vector per free column, normalized so the first
    // nonzero entry is 1.
    std::vector<bool> is_pivot_col(k, false);
    for (size_t c : e.pivot_cols) is_pivot_col[c] = true;
    for (size_t fc = 0; fc < k; ++fc) {
        if (is_pivot_col[fc]) continue;
        std::vector<GaussianRational> v(k);
        v[fc] = GaussianRational(1);
        for (size_t t = e.pivot_rows.size(); t-- > 0;) {
            size_t r = e.pivot_rows[t];
            size_t c = e.pivot_cols[t];
            if (c > fc) continue;  // columns beyond fc keep their zero/unit values
            GaussianRational acc;
            for (size_t j = c + 1; j < k; ++j) {
                if (!e.rows[r][j].is_zero() && !v[j].is_zero()) acc += e.rows[r][j] * v[j];
            }
            v[c] = -acc / e.rows[r][c];
        }
        for (const auto& entry : v) {
            if (!entry.is_zero()) {
                GaussianRational inv = entry.inverse();
                for (auto& w : v) w *= inv;
                break;
            }
        }
        out.kernel_basis.push_back(std::move(v));
    }

    out.status = out.rank == k ? SolveStatus::unique : SolveStatus::underdetermined;
    return out;
}

size_t exact_rank(const Matrix& m) {
    const size_t n = m.rows();
    const size_t k = m.cols();
    std::vector<std::vector<GaussianRational>> rows(n, std::vector<GaussianRational>(k));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) rows[i][j] = m.at(i, j);
    }
    return forward_eliminate(std::move(rows), k, /*track_ops=*/false).pivot_rows.size();
}

std::vector<GaussianRational> matvec(const Matrix& m, const std::vector<GaussianRational>& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("matvec: vector length does not match column count");
    std::vector<GaussianRational> out(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        GaussianRational acc;
        for (size_t j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_zero() && !x[j].is_zero()) acc += m.at(i, j) * x[j];
        }
        out[i] = acc;
    }
    return out;
}

}  // namespace hvloop
