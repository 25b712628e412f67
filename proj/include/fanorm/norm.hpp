#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fanorm/group.hpp"
#include "fanorm/rng.hpp"

namespace fanorm {

/// A complex-valued function on a finite group, indexed by element.
struct GroupFunction {
    GroupPtr group;
    Eigen::VectorXcd values;

    /// True when every value is exactly 0 or 1.
    bool is_indicator() const;
    /// Support as a sorted element list (indicator or not).
    std::vector<int> support() const;
};

GroupFunction delta_function(GroupPtr g, int at);
GroupFunction constant_function(GroupPtr g, std::complex<double> value);
GroupFunction indicator_function(GroupPtr g, std::span<const int> subset);
/// Independent complex-gaussian values at every element.
GroupFunction random_function(GroupPtr g, Rng& rng);

enum class NormMethod { trace_norm, character_oracle };

/// Result of a norm evaluation with its singular-value evidence. On finite
/// groups the computed value is simultaneously the A(G)-, B(G)- and cb-norm;
/// `cb_identified` records that identification.
struct NormReport {
    double value = 0.0;
    std::vector<double> singular_values;  // descending
    NormMethod method = NormMethod::trace_norm;
    std::string group_label;
    double residual = 0.0;  // largest SVD reconstruction error (trace_norm only)
    bool cb_identified = true;
};

/// The n x n group pattern matrix K[x][y] = u(x * y^{-1}).
Eigen::MatrixXcd group_matrix(const GroupFunction& u);

inline constexpr double kDefaultSvdTol = 1e-12;

/// Norm via the trace norm of the group pattern matrix:
/// value = (1/n) * sum of singular values. Throws NumericError if the SVD
/// reconstruction residual exceeds svd_tol.
NormReport a_norm(const GroupFunction& u, double svd_tol = kDefaultSvdTol);

/// Singular-value sum only, no residual certificate. Used by search loops;
/// final results are always re-certified through a_norm.
double a_norm_value(const GroupFunction& u);

inline constexpr int kMaxOracleOrder = 4096;

/// Invariant-factor decomposition of an abelian group: internal direct
/// product of cyclic subgroups with orders d_1 >= d_2 >= ... (each dividing
/// the previous), plus per-element coordinates.
struct CyclicDecomposition {
    std::vector<int> generators;
    std::vector<int> orders;
    std::vector<std::vector<int>> coords;  // coords[x][i] in [0, orders[i])
};

CyclicDecomposition decompose_abelian(GroupPtr g);

/// Character-sum route, independent of the SVD: value =
/// (1/n) * sum over all characters chi of |sum_g u(g) chi(g)|.
/// Requires an abelian group of order <= 4096.
NormReport a_norm_abelian_oracle(const GroupFunction& u);

/// Composition with the quotient projection: (u o pi)(x) = u(pi(x)).
/// An exact isometry for the norms above.
GroupFunction pullback_function(const Quotient& q, const GroupFunction& u);

/// u restricted to H, carried by H's own reindexed group.
GroupFunction restrict_to_subgroup(const GroupFunction& u, const Subgroup& h);

/// a_norm when feasible (order <= 512), otherwise the abelian oracle.
/// The two routes agree to 1e-10 wherever both apply.
double norm_auto(const GroupFunction& u);

}  // namespace fanorm
