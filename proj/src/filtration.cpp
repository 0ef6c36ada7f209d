#include "toric/filtration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

std::vector<std::size_t> support(const Fan& fan, const ToricDivisor& d) {
    if (d.size() != fan.ray_count()) throw std::invalid_argument("divisor length does not match the ray count");
    if (!d.is_effective()) throw std::invalid_argument("divisor is not effective");
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d.coefficients[i].sign() > 0) s.push_back(i);
    if (s.empty()) throw std::invalid_argument("divisor has empty effective support");
    return s;
}

}  // namespace

BetaEstimate beta_estimate_lattice(const Fan& fan, const ToricDivisor& d, unsigned long dilation) {
    require_q_fano(fan);
    if (dilation == 0) throw std::invalid_argument("dilation must be positive");
    if (!d.is_integral()) throw std::invalid_argument("divisor must have integer coefficients");
    const auto supp = support(fan, d);

    const Integer big_n = dilation;
    ToricDivisor nk = anticanonical_divisor(fan);
    for (auto& c : nk.coefficients) c = Rational(big_n);
    const Polytope p = divisor_polytope(fan, nk);

    std::vector<Integer> coeff;
    for (auto i : supp) coeff.push_back(d.coefficients[i].numerator());

    Integer total = 0, count = 0, m, q;
    for_each_lattice_point(p, [&](const LatticeVector& u) {
        ++count;
        for (std::size_t k = 0; k < supp.size(); ++k) {
            mpz_fdiv_q(q.get_mpz_t(), Integer(dot(u, fan.ray(supp[k])) + big_n).get_mpz_t(), coeff[k].get_mpz_t());
            if (k == 0 || q < m) m = q;
        }
        total += m;
    });

    BetaEstimate est;
    est.dilation = dilation;
    est.section_count = count;
    est.estimate = Rational(total, big_n * count);
    return est;
}

Rational beta_exact_general(const Fan& fan, const ToricDivisor& d) {
    require_q_fano(fan);
    const auto supp = support(fan, d);
    const std::size_t n = fan.dim();
    const Polytope p = divisor_polytope(fan, anticanonical_divisor(fan));

    // Term i is l_i(u) = (<u, v_i> + 1) / c_i. Its cell is where
    // l_j - l_i >= 0 for every other j in the support; shared walls have
    // measure zero.
    Rational integral;
    for (auto i : supp) {
        const Rational inv_ci = Rational(1) / d.coefficients[i];
        Polytope cell = p;
        for (auto j : supp) {
            if (j == i) continue;
            const Rational inv_cj = Rational(1) / d.coefficients[j];
            RationalVector normal(n);
            for (std::size_t k = 0; k < n; ++k)
                normal[k] = Rational(fan.ray(j)[k]) * inv_cj - Rational(fan.ray(i)[k]) * inv_ci;
            Rational offset = inv_ci - inv_cj;
            // Rescale to a primitive integer normal.
            LatticeVector lattice_normal = primitive_direction(normal);
            std::size_t k = 0;
            while (normal[k].is_zero()) ++k;
            Rational scale = Rational(lattice_normal[k]) / normal[k];
            cell = cell.intersected(Halfspace{lattice_normal, offset * scale});
        }
        AffineFunction term{to_rational(fan.ray(i)) * inv_ci, inv_ci};
        integral += integrate_affine(cell, term);
    }
    return integral / volume(p);
}

Rational filtration_slice_volume(const Fan& fan, std::size_t ray, const Rational& t) {
    require_q_fano(fan);
    if (ray >= fan.ray_count()) throw std::out_of_range("ray index " + std::to_string(ray) + " out of range");
    if (t.sign() < 0) throw std::invalid_argument("slice parameter t must be nonnegative");
    const Polytope p = divisor_polytope(fan, anticanonical_divisor(fan));
    const Polytope slice = p.intersected(Halfspace{fan.ray(ray), t - Rational(1)});
    return normalized_volume(slice);
}

std::vector<Rational> newton_cotes_weights(std::size_t m) {
    if (m == 0) return {Rational(1)};
    Matrix vandermonde(m + 1, m + 1);
    RationalVector moments(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        moments[j] = Rational(1) / Rational(static_cast<long long>(j + 1));
        for (std::size_t k = 0; k <= m; ++k) {
            Rational node(Integer(static_cast<unsigned long>(k)), Integer(static_cast<unsigned long>(m)));
            Rational pw = 1;
            for (std::size_t e = 0; e < j; ++e) pw *= node;
            vandermonde(j, k) = pw;
        }
    }
    auto w = solve_exact(vandermonde, moments);
    return std::vector<Rational>(w->begin(), w->end());
}

Rational beta_from_slice_volumes(const Fan& fan, std::size_t ray) {
    require_q_fano(fan);
    if (ray >= fan.ray_count()) throw std::out_of_range("ray index " + std::to_string(ray) + " out of range");
    const std::size_t n = fan.dim();
    const Polytope p = divisor_polytope(fan, anticanonical_divisor(fan));

    // The slice volume is a polynomial of degree <= n in t between
    // consecutive values of <w, v_i> + 1 over the vertices w.
    std::set<Rational> breaks;
    for (const auto& w : p.vertices()) breaks.insert(dot(w, fan.ray(ray)) + Rational(1));
    const auto weights = newton_cotes_weights(n);

    Rational integral;
    for (auto it = breaks.begin(); std::next(it) != breaks.end(); ++it) {
        const Rational a = *it, b = *std::next(it);
        const Rational h = (b - a) / Rational(static_cast<long long>(n));
        Rational piece;
        for (std::size_t k = 0; k <= n; ++k)
            piece += weights[k] * filtration_slice_volume(fan, ray, a + h * Rational(static_cast<long long>(k)));
        integral += piece * (b - a);
    }
    return integral / normalized_volume(p);
}

std::vector<SweepRow> beta_sweep(const Fan& fan, std::size_t ray, unsigned long max_dilation) {
    if (ray >= fan.ray_count()) throw std::out_of_range("ray index " + std::to_string(ray) + " out of range");
    const ToricDivisor d = ToricDivisor::prime(fan.ray_count(), ray);
    const Rational exact = beta_exact_general(fan, d);
    std::vector<SweepRow> rows;
    for (unsigned long big_n = 1; big_n <= max_dilation; ++big_n) {
        auto est = beta_estimate_lattice(fan, d, big_n);
        rows.push_back({big_n, est.section_count, est.estimate, exact, (est.estimate - exact).abs()});
    }
    return rows;
}

}  // namespace toric
