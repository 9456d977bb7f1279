#include "disc/exactgeom.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "disc/rng.hpp"

namespace disc
{

EchelonForm bareiss_echelon(IntegerMatrix m)
{
    EchelonForm out;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    Integer previous = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = r;
        while (pivot < rows && m(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != r) {
            m.row(pivot).swap(m.row(r));
            out.swap_sign = -out.swap_sign;
        }
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                // Exact: the numerator is a minor of the original matrix times previous.
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / previous;
            }
            m(i, c) = 0;
        }
        previous = m(r, c);
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.matrix = std::move(m);
    return out;
}

void make_primitive(Eigen::Ref<IntegerVector> v)
{
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        g = gcd(g, Integer(abs(v(i))));
    }
    if (g == 0) {
        return;
    }
    Eigen::Index lead = 0;
    while (v(lead) == 0) {
        ++lead;
    }
    if (v(lead) < 0) {
        g = -g;
    }
    if (g != 1) {
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            v(i) /= g;
        }
    }
}

IntegerMatrix integer_kernel(const IntegerMatrix& rows)
{
    const Eigen::Index cols = rows.cols();
    const EchelonForm e = bareiss_echelon(rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (const auto c : e.pivot_cols) {
        is_pivot[static_cast<std::size_t>(c)] = true;
    }
    IntegerMatrix kernel(cols, cols - e.rank);
    Eigen::Index out_col = 0;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) {
            continue;
        }
        RationalVector x = RationalVector::Constant(cols, Rational(0));
        x(free) = 1;
        for (Eigen::Index i = e.rank - 1; i >= 0; --i) {
            const Eigen::Index pc = e.pivot_cols[static_cast<std::size_t>(i)];
            Rational acc = 0;
            for (Eigen::Index j = pc + 1; j < cols; ++j) {
                acc += Rational(e.matrix(i, j)) * x(j);
            }
            x(pc) = -acc / Rational(e.matrix(i, pc));
        }
        kernel.col(out_col) = clear_denominators(x.transpose()).transpose();
        make_primitive(kernel.col(out_col));
        ++out_col;
    }
    return kernel;
}

namespace
{

// Calls fn(rows) for every k-subset of {0, ..., n-1} containing `required` (or any, if -1).
template <typename Fn>
bool all_row_subsets(int n, int k, int required, Fn&& fn)
{
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    if (k == 0) {
        return fn(pick);
    }
    while (true) {
        if (required < 0 || std::find(pick.begin(), pick.end(), required) != pick.end()) {
            if (!fn(pick)) {
                return false;
            }
        }
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) {
            --i;
        }
        if (i < 0) {
            return true;
        }
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

bool minor_nonzero(const RationalMatrix& normals, const std::vector<int>& rows)
{
    RationalMatrix sub(static_cast<Eigen::Index>(rows.size()), normals.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        sub.row(static_cast<Eigen::Index>(i)) = normals.row(rows[i]);
    }
    return determinant(sub) != 0;
}

}  // namespace

bool is_generic(const RationalMatrix& normals)
{
    const auto n = static_cast<int>(normals.rows());
    const auto k = static_cast<int>(normals.cols());
    if (k > n) {
        return false;
    }
    return all_row_subsets(n, k, -1, [&](const std::vector<int>& rows) {
        return minor_nonzero(normals, rows);
    });
}

void require_generic(const ArrangementSpec& spec)
{
    if (spec.k < 1 || spec.n < spec.k + 1) {
        throw PreconditionError("arrangement requires n >= k+1 >= 2 (got n=" +
                                std::to_string(spec.n) + ", k=" + std::to_string(spec.k) + ")");
    }
    if (spec.normals.rows() != spec.n || spec.normals.cols() != spec.k) {
        throw PreconditionError("normals must be an n x k matrix");
    }
    if (!is_generic(spec.normals)) {
        throw PreconditionError("normals are not in general position (a k x k minor vanishes)");
    }
}

RationalMatrix generate_generic_normals(int n, int k, std::uint64_t seed)
{
    if (k < 1 || n < k + 1) {
        throw PreconditionError("generate_generic_normals requires n >= k+1 >= 2");
    }
    SplitMix64 rng(seed);
    RationalMatrix normals(n, k);
    int rounds = 0;
    for (int row = 0; row < n; ++row) {
        while (true) {
            for (int j = 0; j < k; ++j) {
                normals(row, j) = Rational(rng.in_range(-kNormalEntryBound, kNormalEntryBound));
            }
            // Only minors touching the new row can have become zero.
            const bool ok = row + 1 < k ||
                            all_row_subsets(row + 1, k, row, [&](const std::vector<int>& rows) {
                                return minor_nonzero(normals, rows);
                            });
            if (ok) {
                break;
            }
            if (++rounds >= kMaxResampleRounds) {
                throw PreconditionError("generate_generic_normals: no generic matrix after " +
                                        std::to_string(kMaxResampleRounds) + " resampling rounds");
            }
        }
    }
    return normals;
}

DiscriminantalNormal discriminantal_normal(const ArrangementSpec& spec, Circuit circuit)
{
    if (circuit.size() != spec.k + 1) {
        throw PreconditionError("circuit size must be k+1 = " + std::to_string(spec.k + 1));
    }
    if (spec.normals.rows() != spec.n || spec.normals.cols() != spec.k) {
        throw PreconditionError("normals must be an n x k matrix");
    }
    const std::vector<int> members = circuit.members();
    if (members.back() >= spec.n) {
        throw PreconditionError("circuit " + to_label(circuit) + " is not a subset of [n]");
    }
    DiscriminantalNormal out{circuit, RationalVector::Constant(spec.n, Rational(0))};
    RationalMatrix minor(spec.k, spec.k);
    for (int j = 0; j <= spec.k; ++j) {
        Eigen::Index r = 0;
        for (int i = 0; i <= spec.k; ++i) {
            if (i != j) {
                minor.row(r++) = spec.normals.row(members[static_cast<std::size_t>(i)]);
            }
        }
        const Rational d = determinant(minor);
        if (d == 0) {
            throw PreconditionError("spec is not generic: a k x k minor inside circuit " +
                                    to_label(circuit) + " vanishes");
        }
        // 0-based j here; the 1-based sign (-1)^{j+k+1} becomes (-1)^{j+k}.
        out.vector(members[static_cast<std::size_t>(j)]) = ((j + spec.k) % 2 == 0) ? d : Rational(-d);
    }
    return out;
}

}  // namespace disc
