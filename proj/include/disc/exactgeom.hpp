#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "disc/circuits.hpp"
#include "disc/errors.hpp"
#include "disc/numeric.hpp"

namespace disc
{

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntegerVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

/// Row echelon form produced by fraction-free (Bareiss) elimination.
/// Entry (i, j) of row i below the diagonal block is the determinant of a
/// (rank x rank) minor, so no fractions ever appear.
struct EchelonForm
{
    IntegerMatrix matrix;
    Eigen::Index rank = 0;
    int swap_sign = 1;
    std::vector<Eigen::Index> pivot_cols;
};

EchelonForm bareiss_echelon(IntegerMatrix m);

/// Scales each row by the lcm of its denominators. Row spaces and ranks are unchanged.
template <typename Derived>
IntegerMatrix clear_denominators(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    IntegerMatrix out(m.rows(), m.cols());
    if constexpr (std::is_same_v<Scalar, Integer>) {
        out = m;
    } else {
        static_assert(std::is_same_v<Scalar, Rational>, "Integer or Rational matrices only");
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Integer scale = 1;
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                scale = lcm(scale, Integer(denominator(m(i, j))));
            }
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                out(i, j) = Integer(numerator(m(i, j))) * (scale / Integer(denominator(m(i, j))));
            }
        }
    }
    return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m)
{
    return bareiss_echelon(clear_denominators(m)).rank;
}

/// Exact determinant of a square matrix.
template <typename Derived>
Rational determinant(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() != m.cols()) {
        throw PreconditionError("determinant: matrix is not square");
    }
    if (m.rows() == 0) {
        return Rational(1);
    }
    using Scalar = typename Derived::Scalar;
    Rational row_scale = 1;
    if constexpr (std::is_same_v<Scalar, Rational>) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Integer scale = 1;
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                scale = lcm(scale, Integer(denominator(m(i, j))));
            }
            row_scale *= Rational(scale);
        }
    }
    const EchelonForm e = bareiss_echelon(clear_denominators(m));
    if (e.rank < m.rows()) {
        return Rational(0);
    }
    const Eigen::Index last = m.rows() - 1;
    return Rational(e.matrix(last, last)) * e.swap_sign / row_scale;
}

/// True iff v lies in the row space of basis_rows.
template <typename DerivedV, typename DerivedB>
bool in_span(const Eigen::MatrixBase<DerivedV>& v, const Eigen::MatrixBase<DerivedB>& basis_rows)
{
    if (v.size() != basis_rows.cols()) {
        throw PreconditionError("in_span: vector length does not match basis width");
    }
    using Scalar = typename DerivedB::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> stacked(basis_rows.rows() + 1,
                                                                  basis_rows.cols());
    stacked.topRows(basis_rows.rows()) = basis_rows;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        stacked(basis_rows.rows(), j) = Scalar(v(j));
    }
    return rank(stacked) == rank(basis_rows);
}

/// Columns form a basis of { x : rows * x = 0 } made of primitive integer vectors.
IntegerMatrix integer_kernel(const IntegerMatrix& rows);

/// Divides v by the gcd of its entries and fixes the sign of the first nonzero entry.
void make_primitive(Eigen::Ref<IntegerVector> v);

/// The input data from which all of B(n, k) is derived. Row i of normals is the
/// normal of base hyperplane H_i in R^k.
struct ArrangementSpec
{
    int n = 0;
    int k = 0;
    RationalMatrix normals;
    std::uint64_t seed = 0;

    friend bool operator==(const ArrangementSpec& a, const ArrangementSpec& b)
    {
        return a.n == b.n && a.k == b.k && a.seed == b.seed && a.normals == b.normals;
    }
};

/// Every k x k minor of an n x k matrix is nonzero.
bool is_generic(const RationalMatrix& normals);

/// Throws PreconditionError unless the spec is well-formed and generic.
void require_generic(const ArrangementSpec& spec);

inline constexpr int kMaxResampleRounds = 1000;
inline constexpr std::int64_t kNormalEntryBound = 10000;

/// Deterministic in (n, k, seed): integer entries uniform in [-10^4, 10^4], rows
/// resampled until every k x k minor is nonzero.
RationalMatrix generate_generic_normals(int n, int k, std::uint64_t seed);

inline ArrangementSpec make_arrangement_spec(int n, int k, std::uint64_t seed)
{
    return ArrangementSpec{n, k, generate_generic_normals(n, k, seed), seed};
}

struct DiscriminantalNormal
{
    Circuit circuit;
    RationalVector vector;  // length n, nonzero exactly on circuit
};

/// Normal of D_I in translate space: Laplace expansion of det[A_I | alpha_I] along
/// the alpha column.
DiscriminantalNormal discriminantal_normal(const ArrangementSpec& spec, Circuit circuit);

}  // namespace disc
