#include "cauchykit/identity.hpp"

#include <algorithm>
#include <cmath>
#include <future>

#include "cauchykit/errors.hpp"

namespace cauchykit {

std::string to_string(EvalMode m) {
    return m == EvalMode::ExactTruncated ? "exact" : "analytic";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ExactMatch: return "ExactMatch";
        case Verdict::WithinTolerance: return "WithinTolerance";
        default: return "Fail";
    }
}

EvalConfig EvalConfig::exact_truncated(PointVector a, PointVector x, int order) {
    EvalConfig cfg;
    cfg.a = std::move(a);
    cfg.x = std::move(x);
    cfg.mode = EvalMode::ExactTruncated;
    cfg.order = order;
    cfg.validate();
    return cfg;
}

EvalConfig EvalConfig::analytic(PointVector a, PointVector x, double tol, int k_max) {
    EvalConfig cfg;
    cfg.a = std::move(a);
    cfg.x = std::move(x);
    cfg.mode = EvalMode::Analytic;
    cfg.tol = tol;
    cfg.k_max = k_max;
    cfg.validate();
    return cfg;
}

void EvalConfig::validate() const {
    if (a.empty() || a.size() != x.size())
        throw InvalidConfig("a and x must have the same positive length");
    require_distinct(a);
    require_distinct(x);
    if (mode == EvalMode::ExactTruncated) {
        if (order < 0) throw InvalidConfig("truncation order must be nonnegative");
    } else {
        if (!(tol > 0)) throw InvalidConfig("tolerance must be positive");
        if (k_max < n() - 1) throw InvalidConfig("k_max admits no partitions at this n");
    }
}

MatrixQ collocation_matrix_truncated(const GenFun& g, const EvalConfig& cfg, int m) {
    cfg.validate();
    if (m < 0) throw InvalidConfig("truncation order must be nonnegative");
    const int n = cfg.n();
    SeriesTrunc s = g.series(m);
    MatrixQ mat(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational t = cfg.a[static_cast<std::size_t>(j)] * cfg.x[static_cast<std::size_t>(i)];
            Rational acc(0);
            for (int k = m; k >= 0; --k) acc = acc * t + s.at(k);
            mat.at(i, j) = acc;
        }
    }
    return mat;
}

Rational rhs_truncated(const GenFun& g, const EvalConfig& cfg, int m) {
    MatrixQ mat = collocation_matrix_truncated(g, cfg, m);
    return det_exact(mat) / (vandermonde(cfg.x) * vandermonde(cfg.a));
}

namespace {

struct TermValue {
    Rational value;
    TermLog log;
};

TermValue eval_term(const GenFun& g, const EvalConfig& cfg, const Partition& lam, bool want_log) {
    const int n = cfg.n();
    TermValue out;
    Rational G = g_lambda(g, lam, n);
    Rational C = c_lambda(lam, n);
    if (G.is_zero() && !want_log) {
        out.value = Rational(0);
        return out;
    }
    Rational sa = bialternant(lam, cfg.a);
    Rational sx = bialternant(lam, cfg.x);
    out.value = G * sa * sx / C;
    if (want_log)
        out.log = TermLog{lam, staircase(lam, n), G, C, sa, sx, out.value};
    return out;
}

Rational sum_terms(const GenFun& g, const EvalConfig& cfg, const std::vector<Partition>& lams,
                   std::vector<TermLog>* term_log, int threads) {
    const bool want_log = term_log != nullptr;
    if (threads > 1 && lams.size() > 1) {
        // Contiguous chunks keep the canonical order in the concatenated logs,
        // and exact accumulation makes the grouping irrelevant to the value.
        std::size_t nchunk = std::min<std::size_t>(static_cast<std::size_t>(threads), lams.size());
        std::vector<std::future<std::pair<Rational, std::vector<TermLog>>>> futs;
        for (std::size_t c = 0; c < nchunk; ++c) {
            std::size_t lo = lams.size() * c / nchunk;
            std::size_t hi = lams.size() * (c + 1) / nchunk;
            futs.push_back(std::async(std::launch::async, [&, lo, hi] {
                Rational s(0);
                std::vector<TermLog> logs;
                for (std::size_t i = lo; i < hi; ++i) {
                    TermValue tv = eval_term(g, cfg, lams[i], want_log);
                    s += tv.value;
                    if (want_log) logs.push_back(std::move(tv.log));
                }
                return std::make_pair(std::move(s), std::move(logs));
            }));
        }
        Rational total(0);
        for (auto& f : futs) {
            auto [s, logs] = f.get();
            total += s;
            if (want_log)
                term_log->insert(term_log->end(), std::make_move_iterator(logs.begin()),
                                 std::make_move_iterator(logs.end()));
        }
        return total;
    }
    Rational total(0);
    for (const Partition& lam : lams) {
        TermValue tv = eval_term(g, cfg, lam, want_log);
        total += tv.value;
        if (want_log) term_log->push_back(std::move(tv.log));
    }
    return total;
}

} // namespace

Rational lhs_partial(const GenFun& g, const EvalConfig& cfg, int k_cap,
                     std::vector<TermLog>* term_log, int threads) {
    cfg.validate();
    std::vector<Partition> lams = enumerate(cfg.n(), k_cap);
    return sum_terms(g, cfg, lams, term_log, threads);
}

IdentityReport verify_truncated(const GenFun& g, const EvalConfig& cfg, int m, bool log_terms,
                                int threads) {
    cfg.validate();
    IdentityReport rep;
    rep.mode = EvalMode::ExactTruncated;
    rep.order = m;

    std::vector<Partition> lams = enumerate(cfg.n(), m);
    rep.partition_count = static_cast<long>(lams.size());
    std::vector<TermLog> logs;
    Rational lhs = sum_terms(g, cfg, lams, log_terms ? &logs : nullptr, threads);
    Rational rhs = rhs_truncated(g, cfg, m);

    rep.lhs_exact = lhs;
    rep.rhs_exact = rhs;
    rep.residual_exact = lhs - rhs;
    rep.verdict = rep.residual_exact->is_zero() ? Verdict::ExactMatch : Verdict::Fail;
    rep.terms = std::move(logs);
    return rep;
}

IdentityReport verify_analytic(const GenFun& g, const EvalConfig& cfg, bool log_terms) {
    cfg.validate();
    if (cfg.mode != EvalMode::Analytic) throw InvalidConfig("verify_analytic needs an analytic config");
    if (!g.analytic_evaluable()) throw UnsupportedAnalyticEval();

    const int n = cfg.n();
    Rational a_max(0);
    for (const Rational& ai : cfg.a) {
        Rational m = ai.abs();
        if (m > a_max) a_max = m;
    }
    Radius rad = g.radius();
    if (rad.finite && a_max.sign() > 0) {
        // convergence needs every x_k inside (-R/a_max, R/a_max); vacuous at a_max = 0
        for (const Rational& xk : cfg.x)
            if (!(xk.abs() * a_max < rad.value)) throw OutsideRadius();
    }

    Rational eps = Rational::from_double(cfg.tol);
    Rational entry_eps = eps / Rational(1024);
    std::vector<std::vector<double>> entries(static_cast<std::size_t>(n),
                                             std::vector<double>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                g.eval_analytic(cfg.a[static_cast<std::size_t>(j)] * cfg.x[static_cast<std::size_t>(i)],
                                entry_eps)
                    .to_double();
    double rhs = det_float(entries) / (vandermonde(cfg.x) * vandermonde(cfg.a)).to_double();

    IdentityReport rep;
    rep.mode = EvalMode::Analytic;
    rep.rhs_value = rhs;

    // Partition terms bucketed by their largest staircase exponent, so each
    // k_cap level extends the previous exact partial sum.
    std::vector<Partition> all = enumerate(n, cfg.k_max);
    std::vector<std::vector<Partition>> level(static_cast<std::size_t>(cfg.k_max) + 1);
    for (Partition& lam : all) {
        int lv = lam.part(0) + n - 1;
        level[static_cast<std::size_t>(lv)].push_back(std::move(lam));
    }

    Rational lhs(0);
    long count = 0;
    std::vector<TermLog> logs;
    rep.verdict = Verdict::Fail;
    for (int k_cap = n - 1; k_cap <= cfg.k_max; ++k_cap) {
        lhs += sum_terms(g, cfg, level[static_cast<std::size_t>(k_cap)],
                         log_terms ? &logs : nullptr, 1);
        count += static_cast<long>(level[static_cast<std::size_t>(k_cap)].size());
        double residual = std::fabs(lhs.to_double() - rhs);
        rep.trace.push_back({k_cap, residual});
        rep.order = k_cap;
        if (residual <= cfg.tol) {
            rep.verdict = Verdict::WithinTolerance;
            break;
        }
    }
    rep.partition_count = count;
    rep.lhs_value = lhs.to_double();
    rep.residual_value = rep.trace.empty() ? 0.0 : rep.trace.back().residual;
    rep.terms = std::move(logs);
    return rep;
}

std::pair<Rational, Rational> cauchy_product_check(const PointVector& a, const PointVector& x) {
    if (a.empty() || a.size() != x.size())
        throw InvalidConfig("a and x must have the same positive length");
    require_distinct(a);
    require_distinct(x);
    const int n = static_cast<int>(a.size());

    MatrixQ mat(n);
    Rational prod(1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational t = Rational(1) - a[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(i)];
            if (t.is_zero()) throw SingularEntry();
            mat.at(i, j) = Rational(1) / t;
            prod *= mat.at(i, j);
        }
    }
    Rational det_side = det_exact(mat) / (vandermonde(x) * vandermonde(a));
    return {det_side, prod};
}

std::pair<Rational, Rational> vandermonde_square_check(const PointVector& x) {
    require_distinct(x);
    PointVector sq;
    sq.reserve(x.size());
    for (const Rational& xi : x) sq.push_back(xi * xi);
    Rational lhs = vandermonde(sq);
    Rational prod(1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) prod *= x[i] + x[j];
    return {lhs, vandermonde(x) * prod};
}

IdentityReport single_schur_check(const std::vector<int>& mu, const EvalConfig& cfg) {
    cfg.validate();
    const int n = cfg.n();
    if (static_cast<int>(mu.size()) != n) throw InvalidConfig("mu must have exactly n entries");
    for (std::size_t l = 0; l < mu.size(); ++l) {
        if (mu[l] < 0) throw NotStrictlyDecreasing();
        if (l > 0 && mu[l] >= mu[l - 1]) throw NotStrictlyDecreasing();
    }

    std::vector<Rational> coeffs(static_cast<std::size_t>(mu[0]) + 1, Rational(0));
    for (int e : mu) coeffs[static_cast<std::size_t>(e)] = Rational(1);
    GenFun g = GenFun::polynomial(std::move(coeffs));

    std::vector<int> parts(mu.size());
    for (int l = 0; l < n; ++l) parts[static_cast<std::size_t>(l)] = mu[static_cast<std::size_t>(l)] - n + 1 + l;
    Partition lam{std::move(parts)};

    IdentityReport rep;
    rep.mode = EvalMode::ExactTruncated;
    rep.order = mu[0];
    rep.partition_count = 1;
    rep.lhs_exact = bialternant(lam, cfg.a) * bialternant(lam, cfg.x);
    rep.rhs_exact = rhs_truncated(g, cfg, mu[0]);
    rep.residual_exact = *rep.lhs_exact - *rep.rhs_exact;
    rep.verdict = rep.residual_exact->is_zero() ? Verdict::ExactMatch : Verdict::Fail;
    return rep;
}

std::string to_string(AuditExample id) {
    switch (id) {
        case AuditExample::GeomSq: return "geomsq";
        case AuditExample::GeomSqNeg: return "geomsqneg";
        case AuditExample::Exp: return "exp";
        case AuditExample::Sinh: return "sinh";
        case AuditExample::Sin: return "sin";
        default: return "log";
    }
}

std::optional<AuditExample> audit_example_from_string(std::string_view name) {
    if (name == "geomsq") return AuditExample::GeomSq;
    if (name == "geomsqneg") return AuditExample::GeomSqNeg;
    if (name == "exp") return AuditExample::Exp;
    if (name == "sinh") return AuditExample::Sinh;
    if (name == "sin") return AuditExample::Sin;
    if (name == "log") return AuditExample::Log;
    return std::nullopt;
}

GenFun audit_genfun(AuditExample id) {
    switch (id) {
        case AuditExample::GeomSq: return GenFun::catalog(Catalog::GeomSq);
        case AuditExample::GeomSqNeg: return GenFun::catalog(Catalog::GeomSqNeg);
        case AuditExample::Exp: return GenFun::catalog(Catalog::Exp);
        case AuditExample::Sinh: return GenFun::catalog(Catalog::Sinh);
        case AuditExample::Sin: return GenFun::catalog(Catalog::Sin);
        default: return GenFun::catalog(Catalog::Log1m);
    }
}

namespace {

Rational quarter_power_sign(long numerator_twice) {
    // (-1)^(numerator_twice/4); the exponent is an integer on the relevant
    // parity class, which callers guarantee.
    if (numerator_twice % 4 != 0)
        throw InvalidConfig("sign exponent is not an integer");
    long e = numerator_twice / 4;
    return ((e % 2) + 2) % 2 == 0 ? Rational(1) : Rational(-1);
}

Rational claimed_coefficient(AuditExample id, const Partition& lam, int n) {
    const long w = lam.weight();
    const long nn = static_cast<long>(n);
    switch (id) {
        case AuditExample::Exp:
            return Rational(1);
        case AuditExample::GeomSq:
            return parity_class(lam, n) == ParityClass::Even ? c_lambda(lam, n) : Rational(0);
        case AuditExample::GeomSqNeg:
            if (parity_class(lam, n) != ParityClass::Even) return Rational(0);
            return quarter_power_sign(2 * w - nn * (nn - 1)) * c_lambda(lam, n);
        case AuditExample::Sinh:
            return parity_class(lam, n) == ParityClass::Odd ? Rational(1) : Rational(0);
        case AuditExample::Sin:
            if (parity_class(lam, n) != ParityClass::Odd) return Rational(0);
            return quarter_power_sign(2 * w + nn * (nn + 1));
        default: // Log
            return c_lambda(lam, n) / p_lambda(lam);
    }
}

} // namespace

std::vector<AuditRecord> audit_example(AuditExample id, int n,
                                       const std::vector<Partition>& lambda_set) {
    GenFun g = audit_genfun(id);
    std::vector<AuditRecord> out;
    out.reserve(lambda_set.size());
    for (const Partition& lam : lambda_set) {
        Rational computed = g_lambda(g, lam, n);
        Rational claimed = claimed_coefficient(id, lam, n);
        out.push_back({id, lam, claimed, computed, claimed == computed});
    }
    return out;
}

namespace {

PointVector apply_perm(const PointVector& v, const std::vector<int>& perm) {
    if (perm.size() != v.size()) throw InvalidConfig("permutation length mismatch");
    std::vector<bool> seen(v.size(), false);
    PointVector out(v.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        int p = perm[i];
        if (p < 0 || p >= static_cast<int>(v.size()) || seen[static_cast<std::size_t>(p)])
            throw InvalidConfig("not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
        out[i] = v[static_cast<std::size_t>(p)];
    }
    return out;
}

} // namespace

bool symmetry_check(const GenFun& g, const EvalConfig& cfg,
                    const std::vector<std::vector<int>>& permutations) {
    cfg.validate();
    const int m = cfg.order;
    Rational base_rhs = rhs_truncated(g, cfg, m);
    Rational base_lhs = lhs_partial(g, cfg, m);

    auto matches = [&](EvalConfig variant) {
        return rhs_truncated(g, variant, m) == base_rhs && lhs_partial(g, variant, m) == base_lhs;
    };

    for (const auto& perm : permutations) {
        EvalConfig pa = cfg;
        pa.a = apply_perm(cfg.a, perm);
        if (!matches(pa)) return false;
        EvalConfig px = cfg;
        px.x = apply_perm(cfg.x, perm);
        if (!matches(px)) return false;
    }
    // a <-> x: the collocation build transposes, the determinant is unchanged.
    EvalConfig swapped = cfg;
    std::swap(swapped.a, swapped.x);
    return matches(swapped);
}

} // namespace cauchykit
