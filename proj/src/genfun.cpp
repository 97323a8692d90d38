#include "cauchykit/genfun.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "cauchykit/errors.hpp"
#include "genfun_internal.hpp"

namespace cauchykit {

std::string to_string(Parity p) {
    switch (p) {
        case Parity::Even: return "Even";
        case Parity::Odd: return "Odd";
        default: return "None";
    }
}

std::string Radius::str() const {
    std::string s = finite ? value.str() : "inf";
    if (!exact) s = ">=" + s;
    return s;
}

namespace {

Rational catalog_coeff(Catalog id, int k) {
    switch (id) {
        case Catalog::Geometric:
            return Rational(1);
        case Catalog::GeomSq:
            return k % 2 == 0 ? Rational(1) : Rational(0);
        case Catalog::GeomSqNeg:
            if (k % 2 != 0) return Rational(0);
            return (k / 2) % 2 == 0 ? Rational(1) : Rational(-1);
        case Catalog::Exp:
            return Rational(1) / factorial(static_cast<unsigned long>(k));
        case Catalog::Sinh:
            return k % 2 == 1 ? Rational(1) / factorial(static_cast<unsigned long>(k)) : Rational(0);
        case Catalog::Sin:
            if (k % 2 == 0) return Rational(0);
            return (((k - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1)) / factorial(static_cast<unsigned long>(k));
        case Catalog::Log1m:
            return k == 0 ? Rational(0) : Rational(-1, k);
    }
    return Rational(0);
}

struct CatalogTraits {
    const char* spelling;
    Parity parity;
    bool entire;
};

CatalogTraits catalog_traits(Catalog id) {
    switch (id) {
        case Catalog::Geometric: return {"1/(1-x)", Parity::None, false};
        case Catalog::GeomSq: return {"1/(1-x^2)", Parity::Even, false};
        case Catalog::GeomSqNeg: return {"1/(1+x^2)", Parity::Even, false};
        case Catalog::Exp: return {"exp(x)", Parity::None, true};
        case Catalog::Sinh: return {"sinh(x)", Parity::Odd, true};
        case Catalog::Sin: return {"sin(x)", Parity::Odd, true};
        case Catalog::Log1m: return {"ln(1-x)", Parity::None, false};
    }
    return {"", Parity::None, false};
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::optional<Catalog> recognize_catalog(std::string_view text) {
    static const std::map<std::string, Catalog> table = {
        {"1/(1-x)", Catalog::Geometric}, {"1/(1-x^2)", Catalog::GeomSq},
        {"1/(1+x^2)", Catalog::GeomSqNeg}, {"exp(x)", Catalog::Exp},
        {"sinh(x)", Catalog::Sinh}, {"sin(x)", Catalog::Sin},
        {"ln(1-x)", Catalog::Log1m},
    };
    auto it = table.find(strip_spaces(text));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

Parity poly_parity(const std::vector<Rational>& coeffs) {
    bool even_ok = true, odd_ok = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        if (k % 2 == 0) odd_ok = false;
        else even_ok = false;
    }
    if (even_ok) return Parity::Even;
    if (odd_ok) return Parity::Odd;
    return Parity::None;
}

Rational horner(const std::vector<Rational>& coeffs, const Rational& z) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Partial sums of an entire catalog series whose coefficients satisfy
// |c_k| <= 1/k!. Tail after N terms: |z|^(N+1)/(N+1)! * (N+2)/(N+2-|z|).
Rational entire_partial_sum(Catalog id, const Rational& z, const Rational& eps) {
    Rational az = z.abs();
    Rational sum = catalog_coeff(id, 0);
    Rational zpow(1);
    Rational fact(1);
    int k = 0;
    for (;;) {
        ++k;
        zpow *= z;
        fact *= Rational(k);
        sum += catalog_coeff(id, k) * zpow;
        Rational nk2(k + 2);
        if (az < nk2) {
            Rational bound = az.pow(static_cast<unsigned long>(k + 1)) / (fact * Rational(k + 1)) * nk2 / (nk2 - az);
            if (bound <= eps) return sum;
        }
    }
}

Rational log1m_partial_sum(const Rational& z, const Rational& eps) {
    Rational az = z.abs();
    Rational sum(0);
    Rational zpow(1);
    int k = 0;
    for (;;) {
        ++k;
        zpow *= z;
        sum -= zpow / Rational(k);
        Rational bound = az.pow(static_cast<unsigned long>(k + 1)) / (Rational(k + 1) * (Rational(1) - az));
        if (bound <= eps) return sum;
    }
}

Rational catalog_eval(Catalog id, const Rational& z, const Rational& eps) {
    if (!catalog_traits(id).entire && !(z.abs() < Rational(1))) throw OutsideRadius();
    switch (id) {
        case Catalog::Geometric: return Rational(1) / (Rational(1) - z);
        case Catalog::GeomSq: return Rational(1) / (Rational(1) - z * z);
        case Catalog::GeomSqNeg: return Rational(1) / (Rational(1) + z * z);
        case Catalog::Log1m: return log1m_partial_sum(z, eps);
        default: return entire_partial_sum(id, z, eps);
    }
}

} // namespace

GenFun GenFun::catalog(Catalog id) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Catalog;
    impl->cat = id;
    CatalogTraits t = catalog_traits(id);
    impl->source = t.spelling;
    impl->parity = t.parity;
    impl->radius = t.entire ? Radius::infinite() : Radius::exact_of(Rational(1));
    return GenFun(std::move(impl));
}

GenFun GenFun::polynomial(std::vector<Rational> coeffs) {
    if (coeffs.empty()) coeffs.emplace_back(0);
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::Poly;
    impl->poly = std::move(coeffs);
    impl->parity = poly_parity(impl->poly);
    impl->radius = Radius::infinite();

    std::string s;
    for (std::size_t k = 0; k < impl->poly.size(); ++k) {
        if (impl->poly[k].is_zero() && impl->poly.size() > 1) continue;
        if (!s.empty()) s += "+";
        s += impl->poly[k].str();
        if (k >= 1) s += "*x^" + std::to_string(k);
    }
    impl->source = s.empty() ? "0" : s;
    return GenFun(std::move(impl));
}

GenFun GenFun::parse(std::string_view text) {
    if (auto id = recognize_catalog(text)) return catalog(*id);

    ast::NodePtr root = ast::parse_text(text);
    ast::series_of(root, 0); // surfaces composition and zero-division errors eagerly

    auto impl = std::make_shared<Impl>();
    impl->source = std::string(text);
    if (auto poly = ast::poly_of(root)) {
        impl->kind = Impl::Kind::Poly;
        impl->poly = std::move(*poly);
        if (impl->poly.empty()) impl->poly.emplace_back(0);
        impl->parity = poly_parity(impl->poly);
        impl->radius = Radius::infinite();
    } else {
        impl->kind = Impl::Kind::Ast;
        impl->root = root;
        impl->parity = ast::structural_parity(root);
        impl->radius = ast::radius_of(root);
    }
    return GenFun(std::move(impl));
}

Rational GenFun::coeff(int k) const {
    if (k < 0) throw std::invalid_argument("coefficient index must be nonnegative");
    switch (impl_->kind) {
        case Impl::Kind::Catalog:
            return catalog_coeff(impl_->cat, k);
        case Impl::Kind::Poly:
            return k < static_cast<int>(impl_->poly.size()) ? impl_->poly[static_cast<std::size_t>(k)]
                                                            : Rational(0);
        case Impl::Kind::Ast: {
            std::lock_guard<std::mutex> lock(impl_->mu);
            if (static_cast<int>(impl_->memo.size()) <= k) {
                int order = std::max({k, 2 * static_cast<int>(impl_->memo.size()), 8});
                impl_->memo = ast::series_of(impl_->root, order).coeffs;
            }
            return impl_->memo[static_cast<std::size_t>(k)];
        }
    }
    return Rational(0);
}

Rational GenFun::deriv0(int k) const {
    return factorial(static_cast<unsigned long>(k)) * coeff(k);
}

SeriesTrunc GenFun::series(int order) const {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = coeff(k);
    return SeriesTrunc(std::move(c));
}

Radius GenFun::radius() const { return impl_->radius; }

Parity GenFun::parity() const { return impl_->parity; }

Parity GenFun::parity_detected(int order) const {
    return poly_parity(series(order).coeffs);
}

bool GenFun::analytic_evaluable() const { return impl_->kind != Impl::Kind::Ast; }

Rational GenFun::eval_analytic(const Rational& z, const Rational& eps) const {
    if (!(eps > Rational(0))) throw std::invalid_argument("eps must be positive");
    switch (impl_->kind) {
        case Impl::Kind::Poly:
            return horner(impl_->poly, z);
        case Impl::Kind::Catalog:
            return catalog_eval(impl_->cat, z, eps);
        default:
            throw UnsupportedAnalyticEval();
    }
}

const std::string& GenFun::source() const { return impl_->source; }

Rational g_lambda(const GenFun& g, const Partition& lambda, int n) {
    Rational prod(1);
    for (int k : staircase(lambda, n)) {
        Rational d = g.deriv0(k);
        if (d.is_zero()) return Rational(0);
        prod *= d;
    }
    return prod;
}

} // namespace cauchykit
