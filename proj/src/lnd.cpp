#include "horoflex/lnd.hpp"

#include <algorithm>

#include "horoflex/linsolve.hpp"

namespace horoflex {

namespace {

void insert_term(GradedElement& e, const IntVec& w, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = e.terms.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) e.terms.erase(it);
    }
}

}  // namespace

GradedElement graded_element(const AffineSemigroup& s,
                             const std::vector<std::pair<IntVec, Rat>>& terms) {
    GradedElement e;
    for (const auto& [w, c] : terms) {
        if (!s.member(w)) fail(Errc::NotWellDefined, "weight outside the semigroup");
        insert_term(e, w, c);
    }
    return e;
}

GradedElement symbol(const AffineSemigroup& s, const IntVec& weight, const Rat& coeff) {
    return graded_element(s, {{weight, coeff}});
}

GradedElement add(const GradedElement& a, const GradedElement& b) {
    GradedElement e = a;
    for (const auto& [w, c] : b.terms) insert_term(e, w, c);
    return e;
}

GradedElement mul(const GradedElement& a, const GradedElement& b) {
    GradedElement e;
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) insert_term(e, add(wa, wb), ca * cb);
    return e;
}

GradedElement scale(const GradedElement& a, const Rat& c) {
    GradedElement e;
    for (const auto& [w, cc] : a.terms) insert_term(e, w, cc * c);
    return e;
}

HomogeneousDerivation make_derivation(const HoroVariety& h, const LndRoot& root,
                                      const Rat& scale) {
    if (!is_demazure_root(h.sigma(), root.root.e, root.root.distinguished_ray_index))
        fail(Errc::NotWellDefined, "degree is not a Demazure root of sigma");
    const AffineSemigroup& s = h.semigroup();
    for (const auto& chk : root.shift_checks) {
        if (chk.shifted != add(chk.ideal_gen, root.root.e) || !s.member(chk.shifted))
            fail(Errc::NotWellDefined, "shift check does not replay");
    }
    return HomogeneousDerivation{root.root.e, root.root.distinguished_ray_index, scale};
}

GradedElement apply(const HoroVariety& h, const HomogeneousDerivation& d, const GradedElement& x) {
    const IntVec& v = h.sigma().pointed_rays()[d.ray_index];
    const AffineSemigroup& s = h.semigroup();
    GradedElement out;
    for (const auto& [w, c] : x.terms) {
        Int pairing = dot(w, v);
        if (pairing == 0) continue;
        IntVec shifted = add(w, d.degree);
        if (!s.member(shifted))
            fail(Errc::NotWellDefined, "derivation leaves the semigroup algebra");
        insert_term(out, shifted, c * d.scale * Rat(pairing));
    }
    return out;
}

long nilpotency_order(const HoroVariety& h, const HomogeneousDerivation& d, const IntVec& weight) {
    GradedElement x = symbol(h.semigroup(), weight);
    long k = 0;
    while (!x.is_zero()) {
        x = apply(h, d, x);
        ++k;
        if (k > 100000) fail(Errc::Inconsistent, "derivation not nilpotent on symbol");
    }
    return k;
}

GradedElement exp_action(const HoroVariety& h, const HomogeneousDerivation& d, const Rat& s,
                         const GradedElement& x) {
    GradedElement sum = x;
    GradedElement power = x;
    Rat factor = 1;
    for (long i = 1; !power.is_zero(); ++i) {
        power = apply(h, d, power);
        factor *= s / Rat(i);
        sum = add(sum, scale(power, factor));
        if (i > 100000) fail(Errc::Inconsistent, "exponential did not terminate");
    }
    return sum;
}

std::vector<std::size_t> hull_vertices(const IntMat& points) {
    std::vector<std::size_t> verts;
    for (std::size_t i = 0; i < points.size(); ++i) {
        // i is a vertex iff points[i] is not a convex combination of the rest
        IntMat others;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i && points[j] != points[i]) others.push_back(points[j]);
        if (others.empty()) {
            verts.push_back(i);
            continue;
        }
        std::size_t m = points[i].size();
        RatMat A(m + 1, RatVec(others.size(), Rat(0)));
        RatVec b(m + 1, Rat(0));
        for (std::size_t k = 0; k < others.size(); ++k) {
            for (std::size_t t = 0; t < m; ++t) A[t][k] = Rat(others[k][t]);
            A[m][k] = 1;
        }
        for (std::size_t t = 0; t < m; ++t) b[t] = Rat(points[i][t]);
        b[m] = 1;
        if (!lp_feasible(A, b).feasible) verts.push_back(i);
    }
    return verts;
}

bool vertex_component_check(const HoroVariety& h,
                            const std::vector<HomogeneousDerivation>& components, int trials,
                            unsigned seed) {
    if (components.empty()) return true;
    const AffineSemigroup& s = h.semigroup();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(0, 2);

    std::vector<GradedElement> samples;
    for (int t = 0; t < trials; ++t) {
        IntVec w = zero_vec(s.rank());
        for (const auto& g : s.gens()) w = add(w, scaled(g, Int(coeff(rng))));
        samples.push_back(symbol(s, w));
    }

    auto apply_sum = [&](const GradedElement& x) {
        GradedElement out;
        for (const auto& d : components) out = add(out, apply(h, d, x));
        return out;
    };
    auto nilpotent_under = [&](auto&& op, const GradedElement& x0) {
        GradedElement x = x0;
        for (long k = 0; k < 5000 && !x.is_zero(); ++k) x = op(x);
        return x.is_zero();
    };
    for (const auto& x : samples)
        if (!nilpotent_under(apply_sum, x))
            fail(Errc::NotWellDefined, "component sum is not locally nilpotent on samples");

    IntMat degrees;
    for (const auto& d : components) degrees.push_back(d.degree);
    for (auto vi : hull_vertices(degrees)) {
        const auto& d = components[vi];
        auto apply_one = [&](const GradedElement& x) { return apply(h, d, x); };
        for (const auto& x : samples)
            if (!nilpotent_under(apply_one, x)) return false;
    }
    return true;
}

}  // namespace horoflex
