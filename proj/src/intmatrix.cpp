#include "ckgraph/intmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace ckgraph {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw error("IntMatrix: ragged initializer");
        for (long x : r)
            a_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const mpz_class& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw error("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& x = at(r, k);
            if (x == 0)
                continue;
            for (int c = 0; c < o.cols_; ++c)
                p.at(r, c) += x * o.at(k, c);
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw error("IntMatrix: dimension mismatch in sum");
    IntMatrix s(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        s.a_[i] = a_[i] + o.a_[i];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator-() const {
    IntMatrix n(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        n.a_[i] = -a_[i];
    return n;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_)
        throw error("IntMatrix: hstack row mismatch");
    IntMatrix h(rows_, cols_ + o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            h.at(r, c) = at(r, c);
        for (int c = 0; c < o.cols_; ++c)
            h.at(r, cols_ + c) = o.at(r, c);
    }
    return h;
}

std::vector<mpz_class> IntMatrix::col(int c) const {
    std::vector<mpz_class> v(rows_);
    for (int r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

IntMatrix IntMatrix::with_col_appended(const std::vector<mpz_class>& v) const {
    if (static_cast<int>(v.size()) != rows_)
        throw error("IntMatrix: appended column has wrong length");
    IntMatrix h(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c)
            h.at(r, c) = at(r, c);
        h.at(r, cols_) = v[r];
    }
    return h;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < cols_; ++c)
            os << (c ? "," : "") << at(r, c).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<mpz_class> SmithDecomposition::diagonal() const {
    int n = std::min(s.rows(), s.cols());
    std::vector<mpz_class> d(n);
    for (int i = 0; i < n; ++i)
        d[i] = s.at(i, i);
    return d;
}

int SmithDecomposition::rank() const {
    int r = 0;
    for (const auto& d : diagonal())
        if (d != 0)
            ++r;
    return r;
}

std::string FgAbelianGroup::str() const {
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

namespace {

struct SnfWork {
    IntMatrix u, s, v;

    void row_swap(int i, int j) {
        for (int c = 0; c < s.cols(); ++c)
            std::swap(s.at(i, c), s.at(j, c));
        for (int c = 0; c < u.cols(); ++c)
            std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < s.rows(); ++r)
            std::swap(s.at(r, i), s.at(r, j));
        for (int r = 0; r < v.rows(); ++r)
            std::swap(v.at(r, i), v.at(r, j));
    }
    // row i -= q * row j
    void row_sub(int i, int j, const mpz_class& q) {
        if (q == 0)
            return;
        for (int c = 0; c < s.cols(); ++c)
            s.at(i, c) -= q * s.at(j, c);
        for (int c = 0; c < u.cols(); ++c)
            u.at(i, c) -= q * u.at(j, c);
    }
    // col i -= q * col j
    void col_sub(int i, int j, const mpz_class& q) {
        if (q == 0)
            return;
        for (int r = 0; r < s.rows(); ++r)
            s.at(r, i) -= q * s.at(r, j);
        for (int r = 0; r < v.rows(); ++r)
            v.at(r, i) -= q * v.at(r, j);
    }
    void row_negate(int i) {
        for (int c = 0; c < s.cols(); ++c)
            s.at(i, c) = -s.at(i, c);
        for (int c = 0; c < u.cols(); ++c)
            u.at(i, c) = -u.at(i, c);
    }
    void row_add(int i, int j) { row_sub(i, j, mpz_class(-1)); }
};

// Smallest nonzero |entry| in s[t.., t..], ties by lowest (row, col).
bool find_pivot(const IntMatrix& s, int t, int& pr, int& pc) {
    bool found = false;
    mpz_class best;
    for (int r = t; r < s.rows(); ++r)
        for (int c = t; c < s.cols(); ++c) {
            const mpz_class& x = s.at(r, c);
            if (x == 0)
                continue;
            mpz_class ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pr = r;
                pc = c;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith(const IntMatrix& m) {
    SnfWork w{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    int nmin = std::min(m.rows(), m.cols());

    for (int t = 0; t < nmin; ++t) {
        int pr = 0, pc = 0;
        if (!find_pivot(w.s, t, pr, pc))
            break;
        w.row_swap(t, pr);
        w.col_swap(t, pc);

        for (;;) {
            bool dirty = false;
            for (int r = t + 1; r < w.s.rows(); ++r) {
                if (w.s.at(r, t) == 0)
                    continue;
                mpz_class q = w.s.at(r, t) / w.s.at(t, t); // truncated division
                w.row_sub(r, t, q);
                if (w.s.at(r, t) != 0)
                    dirty = true;
            }
            for (int c = t + 1; c < w.s.cols(); ++c) {
                if (w.s.at(t, c) == 0)
                    continue;
                mpz_class q = w.s.at(t, c) / w.s.at(t, t);
                w.col_sub(c, t, q);
                if (w.s.at(t, c) != 0)
                    dirty = true;
            }
            if (dirty) {
                // A smaller remainder appeared; re-pivot and repeat.
                if (find_pivot(w.s, t, pr, pc)) {
                    w.row_swap(t, pr);
                    w.col_swap(t, pc);
                }
                continue;
            }
            // Row and column of the pivot are clear. Enforce divisibility of
            // the remaining block by the pivot.
            bool fixed = false;
            for (int r = t + 1; r < w.s.rows() && !fixed; ++r)
                for (int c = t + 1; c < w.s.cols() && !fixed; ++c)
                    if (w.s.at(r, c) % w.s.at(t, t) != 0) {
                        w.row_add(t, r);
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
        if (w.s.at(t, t) < 0)
            w.row_negate(t);
    }
    return {w.u, w.s, w.v};
}

int rank(const IntMatrix& m) { return smith(m).rank(); }

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithDecomposition d = smith(m);
    int r = d.rank();
    IntMatrix k(m.cols(), m.cols() - r);
    for (int j = r; j < m.cols(); ++j)
        for (int i = 0; i < m.cols(); ++i)
            k.at(i, j - r) = d.v.at(i, j);
    return k;
}

FgAbelianGroup cokernel_group(const IntMatrix& m) {
    SmithDecomposition d = smith(m);
    FgAbelianGroup g;
    int nmin = std::min(m.rows(), m.cols());
    int r = 0;
    for (int i = 0; i < nmin; ++i) {
        const mpz_class& di = d.s.at(i, i);
        if (di == 0)
            continue;
        ++r;
        if (di >= 2)
            g.torsion.push_back(di);
    }
    g.free_rank = m.rows() - r;
    return g;
}

mpz_class det_abs(const IntMatrix& m) {
    if (!m.is_square())
        throw error("det_abs: matrix not square");
    mpz_class p = 1;
    for (const auto& d : smith(m).diagonal())
        p *= d;
    return p;
}

bool is_unimodular(const IntMatrix& m) { return m.is_square() && det_abs(m) == 1; }

std::optional<std::vector<mpz_class>> solve(const IntMatrix& m, const std::vector<mpz_class>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw error("solve: dimension mismatch");
    SmithDecomposition d = smith(m);
    // Mx = b  <=>  S y = U b, x = V y.
    std::vector<mpz_class> ub(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.rows(); ++c)
            ub[r] += d.u.at(r, c) * b[c];
    int nmin = std::min(m.rows(), m.cols());
    std::vector<mpz_class> y(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        const mpz_class di = i < nmin ? d.s.at(i, i) : mpz_class(0);
        if (di == 0) {
            if (ub[i] != 0)
                return std::nullopt;
        } else {
            if (ub[i] % di != 0)
                return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    std::vector<mpz_class> x(m.cols());
    for (int r = 0; r < m.cols(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            x[r] += d.v.at(r, c) * y[c];
    return x;
}

std::optional<IntMatrix> solve_matrix(const IntMatrix& m, const IntMatrix& b) {
    if (m.rows() != b.rows())
        throw error("solve_matrix: dimension mismatch");
    IntMatrix x(m.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        auto sol = solve(m, b.col(c));
        if (!sol)
            return std::nullopt;
        for (int r = 0; r < m.cols(); ++r)
            x.at(r, c) = (*sol)[r];
    }
    return x;
}

bool induced_coker_iso(const IntMatrix& q, const IntMatrix& m, const IntMatrix& n) {
    if (q.cols() != m.rows() || q.rows() != n.rows())
        throw error("induced_coker_iso: dimension mismatch");
    // Well-definedness: Q maps colspan(M) into colspan(N).
    if (!solve_matrix(n, q * m))
        throw precondition_error("induced_coker_iso: Q·colspan(M) not contained in colspan(N)");
    // Surjective iff [Q | N] spans Z^b modulo nothing, i.e. trivial cokernel.
    if (!cokernel_group(q.hstack(n)).is_trivial())
        return false;
    // Injective iff every (x;z) with Qx = Nz has x in colspan(M).
    IntMatrix k = kernel_basis(q.hstack(-n));
    IntMatrix xpart(q.cols(), k.cols());
    for (int r = 0; r < q.cols(); ++r)
        for (int c = 0; c < k.cols(); ++c)
            xpart.at(r, c) = k.at(r, c);
    return solve_matrix(m, xpart).has_value();
}

bool induced_ker_iso(const IntMatrix& q, const IntMatrix& m, const IntMatrix& n) {
    if (q.cols() != m.cols() || q.rows() != n.cols())
        throw error("induced_ker_iso: dimension mismatch");
    IntMatrix km = kernel_basis(m);
    IntMatrix kn = kernel_basis(n);
    IntMatrix qkm = q * km;
    if (!(n * qkm).is_zero())
        throw precondition_error("induced_ker_iso: Q does not map ker M into ker N");
    auto r = solve_matrix(kn, qkm);
    if (!r)
        return false;
    return r->is_square() && (r->rows() == 0 || is_unimodular(*r));
}

} // namespace ckgraph
