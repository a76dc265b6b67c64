#include "stq/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace stq {
namespace fock {

namespace {

std::size_t ipow(std::size_t b, int e)
{
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

FockRep::FockRep(Statistics stats, int slots, int nmax)
    : stats_(stats), slots_(slots), nmax_(stats == Statistics::fermion ? 1 : nmax)
{
    if (slots <= 0) throw std::invalid_argument("FockRep: need at least one slot");
    dim_ = ipow(static_cast<std::size_t>(nmax_) + 1, slots_);
    if (dim_ > 200000) throw std::invalid_argument("FockRep: truncated dimension exceeds the desk-scale budget");

    lower_.resize(static_cast<std::size_t>(slots_));
    raise_.resize(static_cast<std::size_t>(slots_));

    const std::size_t base = static_cast<std::size_t>(nmax_) + 1;
    for (int k = 0; k < slots_; ++k) {
        std::vector<Eigen::Triplet<cplx>> tl, tr;
        const std::size_t stride = ipow(base, slots_ - 1 - k);
        for (std::size_t s = 0; s < dim_; ++s) {
            const int n = static_cast<int>((s / stride) % base);
            if (n == 0) continue;
            const std::size_t target = s - stride;   // one quantum removed from slot k
            if (stats_ == Statistics::boson) {
                const double amp = std::sqrt(static_cast<double>(n));
                tl.emplace_back(static_cast<int>(target), static_cast<int>(s), cplx{amp, 0.0});
                tr.emplace_back(static_cast<int>(s), static_cast<int>(target), cplx{amp, 0.0});
            } else {
                // Jordan-Wigner sign: parity of occupied slots before k
                int parity = 0;
                for (int j = 0; j < k; ++j)
                    parity += static_cast<int>((s / ipow(base, slots_ - 1 - j)) % base);
                const double sign = (parity % 2 == 0) ? 1.0 : -1.0;
                tl.emplace_back(static_cast<int>(target), static_cast<int>(s), cplx{sign, 0.0});
                tr.emplace_back(static_cast<int>(s), static_cast<int>(target), cplx{sign, 0.0});
            }
        }
        SpMat l(static_cast<int>(dim_), static_cast<int>(dim_));
        SpMat r(static_cast<int>(dim_), static_cast<int>(dim_));
        l.setFromTriplets(tl.begin(), tl.end());
        r.setFromTriplets(tr.begin(), tr.end());
        lower_[static_cast<std::size_t>(k)] = std::move(l);
        raise_[static_cast<std::size_t>(k)] = std::move(r);
    }
}

SpMat FockRep::id() const
{
    SpMat m(static_cast<int>(dim_), static_cast<int>(dim_));
    m.setIdentity();
    return m;
}

int FockRep::occupancy(std::size_t state, int slot) const
{
    const std::size_t base = static_cast<std::size_t>(nmax_) + 1;
    return static_cast<int>((state / ipow(base, slots_ - 1 - slot)) % base);
}

SpMat FockRep::protected_projector(int margin) const
{
    std::vector<Eigen::Triplet<cplx>> t;
    const int cap = stats_ == Statistics::fermion ? 1 : nmax_ - margin;
    for (std::size_t s = 0; s < dim_; ++s) {
        bool ok = true;
        for (int k = 0; k < slots_ && ok; ++k) ok = occupancy(s, k) <= cap;
        if (ok) t.emplace_back(static_cast<int>(s), static_cast<int>(s), cplx{1.0, 0.0});
    }
    SpMat m(static_cast<int>(dim_), static_cast<int>(dim_));
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

double max_abs(const SpMat& m)
{
    double worst = 0.0;
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMat::InnerIterator it(m, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
    return worst;
}

double projected_max_abs_diff(const SpMat& a, const SpMat& b, const SpMat& proj)
{
    SpMat d = proj * (a - b) * proj;
    d.prune([](int, int, const cplx& v) { return std::abs(v) > 0.0; });
    return max_abs(d);
}

}  // namespace fock
}  // namespace stq
