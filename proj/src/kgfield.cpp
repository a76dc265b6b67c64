#include "stq/kgfield.hpp"

#include <cmath>

namespace stq {
namespace fock {

SpMat FieldOperator::matrix() const
{
    SpMat m(static_cast<int>(rep->dim()), static_cast<int>(rep->dim()));
    for (const LadderTerm& t : terms) {
        const int slot = t.op / 2;
        const SpMat& e = (t.op % 2 == 0) ? rep->lower(slot) : rep->raise(slot);
        m += t.coeff * e;
    }
    return m;
}

const SpMat& PairCache::elementary(int op) const
{
    const int slot = op / 2;
    return (op % 2 == 0) ? rep_->lower(slot) : rep_->raise(slot);
}

const SpMat& PairCache::product(int op_a, int op_b)
{
    const auto key = std::make_pair(op_a, op_b);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, SpMat(elementary(op_a) * elementary(op_b))).first;
    return it->second;
}

SpMat operator_product(const FieldOperator& a, const FieldOperator& b, PairCache& cache)
{
    ProductAccumulator acc;
    acc.add(a, b, cplx{1.0, 0.0});
    return acc.materialize(cache);
}

SpMat operator_commutator(const FieldOperator& a, const FieldOperator& b, PairCache& cache)
{
    return operator_product(a, b, cache) - operator_product(b, a, cache);
}

SpMat operator_anticommutator(const FieldOperator& a, const FieldOperator& b, PairCache& cache)
{
    return SpMat(operator_product(a, b, cache) + operator_product(b, a, cache));
}

void ProductAccumulator::add(const FieldOperator& a, const FieldOperator& b, cplx weight)
{
    for (const LadderTerm& ta : a.terms)
        for (const LadderTerm& tb : b.terms)
            coeff_[{ta.op, tb.op}] += weight * ta.coeff * tb.coeff;
}

SpMat ProductAccumulator::materialize(PairCache& cache) const
{
    SpMat out;
    bool first = true;
    for (const auto& [key, c] : coeff_) {
        const SpMat& p = cache.product(key.first, key.second);
        if (first) {
            out = SpMat(c * p);
            first = false;
        } else {
            out += c * p;
        }
    }
    return out;
}

cplx kg_mode_function(const ModeLattice& modes, std::size_t k, const std::array<double, 4>& x)
{
    const Mode& m = modes.modes[k];
    double phase = 0.0;
    for (int nu = 0; nu < 4; ++nu) phase += m.p_lower[static_cast<std::size_t>(nu)] * x[static_cast<std::size_t>(nu)];
    return std::exp(-iunit * phase) / std::sqrt(2.0 * m.w * modes.volume());
}

namespace {

int a_lower(std::size_t k) { return 2 * static_cast<int>(2 * k); }
int a_raise(std::size_t k) { return a_lower(k) + 1; }
int b_lower(std::size_t k) { return 2 * static_cast<int>(2 * k + 1); }
int b_raise(std::size_t k) { return b_lower(k) + 1; }

}  // namespace

FieldOperator kg_phi(const ModeLattice& modes, const FockRep& rep, const std::array<double, 4>& x)
{
    FieldOperator f;
    f.rep = &rep;
    for (std::size_t k = 0; k < modes.count(); ++k) {
        const cplx u = kg_mode_function(modes, k, x);
        f.terms.push_back(LadderTerm{a_lower(k), u});
        f.terms.push_back(LadderTerm{b_raise(k), std::conj(u)});
    }
    return f;
}

FieldOperator kg_phi_dag(const ModeLattice& modes, const FockRep& rep, const std::array<double, 4>& x)
{
    FieldOperator f;
    f.rep = &rep;
    for (std::size_t k = 0; k < modes.count(); ++k) {
        const cplx u = kg_mode_function(modes, k, x);
        f.terms.push_back(LadderTerm{a_raise(k), std::conj(u)});
        f.terms.push_back(LadderTerm{b_lower(k), u});
    }
    return f;
}

FieldOperator kg_dphi(const ModeLattice& modes, const FockRep& rep, const std::array<double, 4>& x, int nu)
{
    FieldOperator f;
    f.rep = &rep;
    for (std::size_t k = 0; k < modes.count(); ++k) {
        const cplx u = kg_mode_function(modes, k, x);
        const double p = modes.modes[k].p_lower[static_cast<std::size_t>(nu)];
        f.terms.push_back(LadderTerm{a_lower(k), -iunit * p * u});
        f.terms.push_back(LadderTerm{b_raise(k), iunit * p * std::conj(u)});
    }
    return f;
}

FieldOperator kg_dphi_dag(const ModeLattice& modes, const FockRep& rep, const std::array<double, 4>& x, int nu)
{
    FieldOperator f;
    f.rep = &rep;
    for (std::size_t k = 0; k < modes.count(); ++k) {
        const cplx u = kg_mode_function(modes, k, x);
        const double p = modes.modes[k].p_lower[static_cast<std::size_t>(nu)];
        f.terms.push_back(LadderTerm{a_raise(k), iunit * p * std::conj(u)});
        f.terms.push_back(LadderTerm{b_lower(k), -iunit * p * u});
    }
    return f;
}

SpMat kg_h_modesum(const ModeLattice& modes, const FockRep& rep, int nu)
{
    SpMat h(static_cast<int>(rep.dim()), static_cast<int>(rep.dim()));
    for (std::size_t k = 0; k < modes.count(); ++k) {
        const double p = modes.modes[k].p_lower[static_cast<std::size_t>(nu)];
        h += p * SpMat(rep.number(2 * static_cast<int>(k)) + rep.number(2 * static_cast<int>(k) + 1) + rep.id());
    }
    return h;
}

SpMat kg_h_integral(const ModeLattice& modes, const FockRep& rep)
{
    const int mu = modes.axis;
    const LatticeSpec surf = modes.surface_lattice();
    double cell = 1.0;
    for (int a = 0; a < surf.rank(); ++a) cell *= surf.axes[static_cast<std::size_t>(a)].spacing();

    PairCache cache(rep);
    ProductAccumulator acc;
    const double m2 = modes.mass * modes.mass;
    const double gmm = metric(mu);

    for (std::size_t s = 0; s < surf.sites(); ++s) {
        std::array<double, 4> x{};
        const std::vector<int> idx = surf.unflatten(s);
        for (int a = 0; a < surf.rank(); ++a)
            x[static_cast<std::size_t>(surf.axes[static_cast<std::size_t>(a)].coord)] =
                surf.coordinate(a, idx[static_cast<std::size_t>(a)]);

        const FieldOperator pim = kg_pi(modes, rep, x, mu);
        const FieldOperator dphi_mu = kg_dphi(modes, rep, x, mu);
        const FieldOperator pim_dag = kg_dphi(modes, rep, x, mu);   // pi_mu^+ = d_mu phi
        const FieldOperator dphid_mu = kg_dphi_dag(modes, rep, x, mu);

        acc.add(pim, dphi_mu, cell);
        acc.add(pim_dag, dphid_mu, cell);

        // -g_mumu Gamma, Gamma = sum_nu g^{nunu} d_nu phi^+ d_nu phi - m^2 phi^+ phi
        for (int nu = 0; nu < 4; ++nu)
            acc.add(kg_dphi_dag(modes, rep, x, nu), kg_dphi(modes, rep, x, nu), -gmm * metric(nu) * cell);
        acc.add(kg_phi_dag(modes, rep, x), kg_phi(modes, rep, x), gmm * m2 * cell);
    }
    return acc.materialize(cache);
}

ResidualReport kg_hamiltonian_report(const ModeLattice& modes, const FockRep& rep)
{
    ResidualReport rep_out;
    rep_out.scenario = "kg-hamiltonian";

    const SpMat hmode = kg_h_modesum(modes, rep, modes.axis);
    double zero_point = 0.0;
    for (const Mode& m : modes.modes) zero_point += m.w;

    // diagonal inspection: the mode sum is diagonal by construction
    std::vector<double> diag(rep.dim(), 0.0);
    double max_offdiag = 0.0;
    for (int k = 0; k < hmode.outerSize(); ++k)
        for (SpMat::InnerIterator it(hmode, k); it; ++it) {
            if (it.row() == it.col())
                diag[static_cast<std::size_t>(it.row())] = it.value().real();
            else
                max_offdiag = std::max(max_offdiag, std::abs(it.value()));
        }
    double min_diag = diag[0];
    bool all_above = true;
    for (double d : diag) {
        min_diag = std::min(min_diag, d);
        if (d < zero_point) all_above = false;
    }

    rep_out.require("mode_sum_diagonal", max_offdiag, 0.0, "frequency-weighted number operator is diagonal");
    rep_out.require("min_eigenvalue_is_zero_point", std::abs(min_diag - zero_point), 0.0,
                    "lowest eigenvalue equals the summed zero-point frequencies");
    rep_out.require("spectrum_bounded_below", all_above ? 0.0 : 1.0, 0.0,
                    "generalized Hamiltonian is positive for the Bose field");
    rep_out.note("zero_point", zero_point, "sum of admitted frequencies");

    // hypersurface-integral construction vs mode sum, identity offset allowed
    const SpMat hint = kg_h_integral(modes, rep);
    const SpMat proj = rep.protected_projector(2);
    // measure the offset on the vacuum diagonal entry
    const cplx c0 = hint.coeff(0, 0) - hmode.coeff(0, 0);
    SpMat shifted = hmode;
    SpMat ident = rep.id();
    shifted += c0 * ident;
    const double dev = projected_max_abs_diff(hint, shifted, proj);
    rep_out.require("integral_vs_mode_sum", dev, 1e-10,
                    "hypersurface energy-momentum integral reproduces the ladder form");
    rep_out.note("identity_offset", c0.real(), "recorded c-number between the two constructions");
    return rep_out;
}

ResidualReport kg_equal_surface_commutators(const ModeLattice& modes, const FockRep& rep,
                                            const std::array<double, 4>& x, const std::array<double, 4>& y)
{
    const int mu = modes.axis;
    if (x[static_cast<std::size_t>(mu)] != y[static_cast<std::size_t>(mu)])
        throw std::invalid_argument("kg_equal_surface_commutators: points must share the x^mu coordinate");

    PairCache cache(rep);
    ResidualReport out;
    out.scenario = "kg-commutators";

    std::array<double, 4> dx{};
    for (int nu = 0; nu < 4; ++nu) dx[static_cast<std::size_t>(nu)] = x[static_cast<std::size_t>(nu)] - y[static_cast<std::size_t>(nu)];
    const cplx delta = modes.lattice_delta(dx);

    const SpMat proj = rep.protected_projector(2);
    SpMat ident = rep.id();

    const SpMat c_phi_pi = operator_commutator(kg_phi(modes, rep, x), kg_pi(modes, rep, y, mu), cache);
    const SpMat want = SpMat((iunit * delta) * ident);
    out.require("phi_pi_commutator", projected_max_abs_diff(c_phi_pi, want, proj), 1e-12,
                "equal-surface canonical commutator equals i times the hypersurface delta");

    const SpMat c_phi_phi = operator_commutator(kg_phi(modes, rep, x), kg_phi(modes, rep, y), cache);
    out.require("phi_phi_commutator", max_abs(c_phi_phi), 1e-13, "like-field commutator vanishes");

    const SpMat c_phi_phidag =
        operator_commutator(kg_phi(modes, rep, x), kg_phi_dag(modes, rep, y), cache);
    out.note("phi_phidag_max", projected_max_abs_diff(c_phi_phidag, SpMat(ident * cplx{0.0, 0.0}), proj),
             "charged-pair commutator, finite mode sum");
    return out;
}

ResidualReport kg_heisenberg_residual(const ModeLattice& modes, const FockRep& rep,
                                      const std::array<double, 4>& x, int nu)
{
    PairCache cache(rep);
    ResidualReport out;
    out.scenario = "kg-heisenberg";

    const SpMat h = kg_h_modesum(modes, rep, nu);
    const SpMat phi = kg_phi(modes, rep, x).matrix();
    const SpMat dphi = kg_dphi(modes, rep, x, nu).matrix();
    const SpMat comm = SpMat(h * phi) - SpMat(phi * h);
    const SpMat resid = SpMat(dphi - SpMat(iunit * comm));
    out.require("field_equation", max_abs(resid), 1e-11,
                "d_nu phi = i [H_nu, phi] at the operator level");

    const int mu = modes.axis;
    const SpMat pi = kg_pi(modes, rep, x, mu).matrix();
    // d_nu pi_mu analytically: second derivative of phi^+
    FieldOperator dpi;
    dpi.rep = &rep;
    for (std::size_t k = 0; k < modes.count(); ++k) {
        const cplx u = kg_mode_function(modes, k, x);
        const double pmu = modes.modes[k].p_lower[static_cast<std::size_t>(mu)];
        const double pnu = modes.modes[k].p_lower[static_cast<std::size_t>(nu)];
        dpi.terms.push_back(LadderTerm{2 * static_cast<int>(2 * k) + 1, iunit * pmu * iunit * pnu * std::conj(u)});
        dpi.terms.push_back(LadderTerm{2 * static_cast<int>(2 * k + 1), (-iunit * pmu) * (-iunit * pnu) * u});
    }
    const SpMat comm2 = SpMat(h * pi) - SpMat(pi * h);
    const SpMat resid2 = SpMat(dpi.matrix() - SpMat(iunit * comm2));
    out.require("conjugate_equation", max_abs(resid2), 1e-11,
                "d_nu pi_mu = i [H_nu, pi_mu] at the operator level");
    return out;
}

}  // namespace fock
}  // namespace stq
