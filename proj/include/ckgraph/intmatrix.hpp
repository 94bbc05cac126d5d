#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ckgraph/errors.hpp"

namespace ckgraph {

/// Dense matrix over ℤ with arbitrary-precision entries. Empty matrices
/// (0 rows or 0 columns) are legal and show up naturally (a sink vertex
/// contributes no regular column).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0)
            throw error("IntMatrix: negative dimension");
    }
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const mpz_class& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /// [this | o] side by side; row counts must match.
    IntMatrix hstack(const IntMatrix& o) const;

    std::vector<mpz_class> col(int c) const;
    IntMatrix with_col_appended(const std::vector<mpz_class>& v) const;

    IntMatrix* clone() const { return new IntMatrix(*this); }

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> a_;
};

/// S = U · M · V with U, V unimodular and S diagonal, d₁ | d₂ | …, dᵢ ≥ 0.
struct SmithDecomposition {
    IntMatrix u, s, v;

    /// Diagonal entries, including trailing zeros up to min(rows, cols).
    std::vector<mpz_class> diagonal() const;
    int rank() const;
};

/// Canonical form of a finitely generated abelian group:
/// ℤ^free_rank ⊕ ℤ/d₁ ⊕ … with dᵢ ≥ 2 and dᵢ | dᵢ₊₁.
struct FgAbelianGroup {
    int free_rank = 0;
    std::vector<mpz_class> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
    std::string str() const;
};

/// Smith normal form. Deterministic: pivots are chosen by smallest nonzero
/// absolute value, ties broken by lowest (row, col) index.
SmithDecomposition smith(const IntMatrix& m);

int rank(const IntMatrix& m);

/// Columns form a ℤ-basis of {x : Mx = 0}. #columns = cols − rank.
IntMatrix kernel_basis(const IntMatrix& m);

/// Invariant factors of ℤ^rows / column-span(M).
FgAbelianGroup cokernel_group(const IntMatrix& m);

/// |det M| for square M, via the diagonal of the Smith form.
mpz_class det_abs(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Some x with Mx = b over ℤ, or nullopt if no integer solution exists.
std::optional<std::vector<mpz_class>> solve(const IntMatrix& m, const std::vector<mpz_class>& b);

/// X with M·X = B, or nullopt. Columns are solved independently.
std::optional<IntMatrix> solve_matrix(const IntMatrix& m, const IntMatrix& b);

/// Is the map ℤ^a/im M → ℤ^b/im N induced by Q (b×a) bijective?
/// Throws precondition_error if Q·colspan(M) ⊄ colspan(N) (not well defined).
bool induced_coker_iso(const IntMatrix& q, const IntMatrix& m, const IntMatrix& n);

/// Is the restriction of Q (b×a) to ker M → ker N bijective? (M has a
/// columns, N has b columns.) Throws precondition_error if Q does not map
/// ker M into ker N.
bool induced_ker_iso(const IntMatrix& q, const IntMatrix& m, const IntMatrix& n);

} // namespace ckgraph
