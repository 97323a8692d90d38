#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cauchykit/genfun.hpp"
#include "cauchykit/matrix.hpp"
#include "cauchykit/partition.hpp"
#include "cauchykit/schur.hpp"

namespace cauchykit {

enum class EvalMode { ExactTruncated, Analytic };
enum class Verdict { ExactMatch, WithinTolerance, Fail };

std::string to_string(EvalMode m);
std::string to_string(Verdict v);

/// Evaluation setup: the two point vectors and the mode parameters.
/// Entries must be pairwise distinct within a and within x.
struct EvalConfig {
    PointVector a;
    PointVector x;
    EvalMode mode = EvalMode::ExactTruncated;
    int order = 0;      // ExactTruncated: truncation degree m
    double tol = 1e-10; // Analytic: residual tolerance
    int k_max = 40;     // Analytic: cap on the staircase bound

    static EvalConfig exact_truncated(PointVector a, PointVector x, int order);
    static EvalConfig analytic(PointVector a, PointVector x, double tol, int k_max);

    int n() const { return static_cast<int>(a.size()); }
    void validate() const;
};

/// One summand of the partition sum, kept when term logging is requested.
struct TermLog {
    Partition lambda;
    std::vector<int> expo; // staircase exponents
    Rational g;            // G_lambda
    Rational c;            // C_lambda
    Rational s_a;
    Rational s_x;
    Rational term;         // (G/C) * s_a * s_x
};

struct ResidualStep {
    int k_cap;
    double residual;
};

struct IdentityReport {
    EvalMode mode = EvalMode::ExactTruncated;
    int order = 0;
    long partition_count = 0;
    // exact mode values
    std::optional<Rational> lhs_exact, rhs_exact, residual_exact;
    // analytic mode values
    std::optional<double> lhs_value, rhs_value, residual_value;
    Verdict verdict = Verdict::Fail;
    std::vector<TermLog> terms;        // present only when requested
    std::vector<ResidualStep> trace;   // analytic mode residual history
};

/// Collocation matrix of g truncated to its degree-m Taylor polynomial:
/// entry (i,j) = sum_{k<=m} c_k (a_j x_i)^k, exact.
MatrixQ collocation_matrix_truncated(const GenFun& g, const EvalConfig& cfg, int m);

/// det of the truncated collocation matrix over the two Vandermondes.
Rational rhs_truncated(const GenFun& g, const EvalConfig& cfg, int m);

/// Partition sum over enumerate(n, k_cap): (G/C) * s(a) * s(x), exact.
Rational lhs_partial(const GenFun& g, const EvalConfig& cfg, int k_cap,
                     std::vector<TermLog>* term_log = nullptr, int threads = 1);

/// Both sides at truncation degree m. Equality is a theorem here, so the
/// verdict is ExactMatch or Fail, never a tolerance.
IdentityReport verify_truncated(const GenFun& g, const EvalConfig& cfg, int m,
                                bool log_terms = false, int threads = 1);

/// Convergence demonstration: floating RHS from analytic entries, partial
/// sums on the LHS until the residual drops below cfg.tol or k_max is hit.
IdentityReport verify_analytic(const GenFun& g, const EvalConfig& cfg, bool log_terms = false);

/// (det(1/(1-a_j x_i)) / (V_x V_a), prod 1/(1-a_j x_i)); the pair is equal.
std::pair<Rational, Rational> cauchy_product_check(const PointVector& a, const PointVector& x);

/// (vandermonde(x^2), vandermonde(x) * prod_{i<j}(x_i + x_j)); the pair is equal.
std::pair<Rational, Rational> vandermonde_square_check(const PointVector& x);

/// g = x^mu_1 + ... + x^mu_n picks out a single Schur term: compares
/// rhs_truncated(mu_1) with s_lambda(a) s_lambda(x), lambda_l = mu_l - n + l.
IdentityReport single_schur_check(const std::vector<int>& mu, const EvalConfig& cfg);

enum class AuditExample { GeomSq, GeomSqNeg, Exp, Sinh, Sin, Log };

std::string to_string(AuditExample id);
std::optional<AuditExample> audit_example_from_string(std::string_view name);
GenFun audit_genfun(AuditExample id);

/// Coefficient comparison for one partition: the closed form printed in the
/// source example versus the derivative product the engine actually uses.
struct AuditRecord {
    AuditExample example;
    Partition lambda;
    Rational claimed;
    Rational computed;
    bool match;
};

/// Mismatches are reported, never reconciled; the engine side is always the
/// derivative-computed G_lambda.
std::vector<AuditRecord> audit_example(AuditExample id, int n,
                                       const std::vector<Partition>& lambda_set);

/// True iff both sides are exactly unchanged under each supplied index
/// permutation applied to a, the same applied to x, and the swap a <-> x.
bool symmetry_check(const GenFun& g, const EvalConfig& cfg,
                    const std::vector<std::vector<int>>& permutations);

} // namespace cauchykit
