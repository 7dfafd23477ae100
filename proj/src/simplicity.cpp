#include <sstream>

#include "yoneda/algebra.hpp"
#include "yoneda/rng.hpp"

namespace yoneda {

std::string simplicity_name(SimplicityVerdict::Kind k) {
    switch (k) {
        case SimplicityVerdict::Kind::Simple: return "Simple";
        case SimplicityVerdict::Kind::NotSimple: return "NotSimple";
        case SimplicityVerdict::Kind::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

// p^dim if it fits below cap, else -1
long long pow_within(std::int64_t p, int dim, long long cap) {
    long long v = 1;
    for (int i = 0; i < dim; ++i) {
        if (v > cap / p) return -1;
        v *= p;
    }
    return v;
}

// 0 < dim(span) < dim V, i.e. v generates a proper nonzero submodule
bool is_witness(const ModulePtr& v, const Vec& x) {
    if (is_zero_vec(x)) return false;
    int d = generated_submodule(v, {x}).dim();
    return d > 0 && d < v->dim;
}

// Spin one representative per scalar line (first nonzero coordinate normalized to 1);
// scalar multiples generate the same submodule, so this covers every nonzero vector.
SimplicityVerdict exhaustive_spin(const ModulePtr& v, std::int64_t p) {
    const int d = v->dim;
    SimplicityVerdict out;
    long long spins = 0;
    for (int lead = 0; lead < d; ++lead) {
        int tail = d - lead - 1;
        std::vector<std::int64_t> digits(tail, 0);
        while (true) {
            Vec x(d, Scalar(0));
            x[lead] = 1;
            for (int t = 0; t < tail; ++t) x[lead + 1 + t] = Scalar((long long)digits[t]);
            ++spins;
            if (is_witness(v, x)) {
                out.kind = SimplicityVerdict::Kind::NotSimple;
                out.witness = x;
                out.spins = spins;
                std::ostringstream cert;
                cert << "exhaustive spin over F_" << p << " stopped after " << spins
                     << " representatives: witness generates a proper nonzero submodule";
                out.certificate = cert.str();
                return out;
            }
            int t = tail - 1;
            while (t >= 0 && digits[t] == p - 1) digits[t--] = 0;
            if (t < 0) break;
            ++digits[t];
        }
    }
    out.kind = SimplicityVerdict::Kind::Simple;
    out.spins = spins;
    std::ostringstream cert;
    cert << "exhaustive spin over F_" << p << ": all " << spins
         << " scalar-line representatives (covering every nonzero vector) generate the module";
    out.certificate = cert.str();
    return out;
}

std::vector<Vec> gather_probes(const ModulePtr& v, const SimplicityBudget& budget) {
    const Field& k = v->field();
    Rng rng(budget.seed);
    std::vector<Vec> probes;
    for (int i = 0; i < v->dim; ++i) {
        Vec e(v->dim, Scalar(0));
        e[i] = 1;
        probes.push_back(std::move(e));
    }
    for (int i = 0; i < budget.random_probes; ++i) probes.push_back(rng.vector(k, v->dim));
    // kernels of singular sampled action elements often cut out genuine submodules
    for (int i = 0; i < budget.singular_samples; ++i) {
        Vec elem = rng.vector(k, v->algebra->dim);
        Matrix m = v->act(elem);
        Subspace ker = kernel(k, m);
        if (ker.dim() == 0 || ker.dim() == v->dim) continue;
        for (int r = 0; r < ker.dim(); ++r) probes.push_back(ker.basis.row(r));
    }
    return probes;
}

// Reduce a rational module mod p; requires every denominator in sight to be coprime
// to p (checked by the caller through denominator scanning).
ModulePtr reduce_mod_p(const ModulePtr& v, std::int64_t p) {
    FieldSpec fs = FieldSpec::prime_field(p);
    Field fp(fs);
    const Algebra& a = *v->algebra;
    std::vector<Scalar> structure(a.structure.size());
    for (std::size_t t = 0; t < a.structure.size(); ++t) structure[t] = fp.canon(a.structure[t]);
    Vec unit(a.unit.size());
    for (std::size_t t = 0; t < a.unit.size(); ++t) unit[t] = fp.canon(a.unit[t]);
    AlgebraPtr ap = make_algebra(fs, a.dim, std::move(structure), std::move(unit));
    std::vector<Matrix> action(v->action.size());
    for (std::size_t i = 0; i < v->action.size(); ++i) {
        action[i] = Matrix(v->dim, v->dim);
        for (std::size_t t = 0; t < v->action[i].a.size(); ++t)
            action[i].a[t] = fp.canon(v->action[i].a[t]);
    }
    return make_module(ap, v->dim, std::move(action));
}

bool prime_divides_some_denominator(const ModulePtr& v, std::int64_t p) {
    auto bad = [&](const Scalar& x) { return denominator(x) % p == 0; };
    for (const auto& x : v->algebra->structure)
        if (bad(x)) return true;
    for (const auto& x : v->algebra->unit)
        if (bad(x)) return true;
    for (const auto& m : v->action)
        for (const auto& x : m.a)
            if (bad(x)) return true;
    return false;
}

} // namespace

SimplicityVerdict is_simple(const ModulePtr& v, const SimplicityBudget& budget) {
    require_input(budget.max_exhaustive >= 1, "is_simple: enumeration budget must be positive");
    require_input(budget.random_probes >= 0 && budget.singular_samples >= 0,
                  "is_simple: negative probe count");

    SimplicityVerdict out;
    if (v->dim == 0) {
        out.kind = SimplicityVerdict::Kind::NotSimple;
        out.certificate = "zero module (simplicity requires dim >= 1)";
        return out;
    }

    const Field& k = v->field();
    if (k.is_prime_field()) {
        std::int64_t p = k.characteristic();
        if (pow_within(p, v->dim, budget.max_exhaustive) > 0) return exhaustive_spin(v, p);
        for (const Vec& x : gather_probes(v, budget)) {
            if (is_witness(v, x)) {
                out.kind = SimplicityVerdict::Kind::NotSimple;
                out.witness = x;
                out.certificate = "probe generates a proper nonzero submodule";
                return out;
            }
        }
        out.kind = SimplicityVerdict::Kind::Unknown;
        out.certificate = "enumeration budget exceeded (p^dim too large) and no probe found a proper submodule";
        return out;
    }

    // rationals: probes first, then a mod-p certificate
    for (const Vec& x : gather_probes(v, budget)) {
        if (is_witness(v, x)) {
            out.kind = SimplicityVerdict::Kind::NotSimple;
            out.witness = x;
            out.certificate = "probe generates a proper nonzero submodule";
            return out;
        }
    }

    int attempts = 0;
    for (std::int64_t p = 2; p <= budget.prime_search_limit && attempts < budget.reduction_attempts;
         ++p) {
        if (!is_prime(p)) continue;
        if (pow_within(p, v->dim, budget.max_exhaustive) < 0) continue;
        if (prime_divides_some_denominator(v, p)) continue;
        ++attempts;
        ModulePtr red = reduce_mod_p(v, p);
        SimplicityVerdict rv = exhaustive_spin(red, p);
        if (rv.kind == SimplicityVerdict::Kind::Simple) {
            // a proper nonzero Q-submodule would saturate to a proper nonzero mod-p
            // submodule (the action is p-integral), so the reduction being simple
            // certifies simplicity over Q
            out.kind = SimplicityVerdict::Kind::Simple;
            out.spins = rv.spins;
            out.reduction_prime = p;
            std::ostringstream cert;
            cert << "certified by reduction mod " << p << ": " << rv.certificate;
            out.certificate = cert.str();
            return out;
        }
    }
    out.kind = SimplicityVerdict::Kind::Unknown;
    out.certificate = attempts == 0
        ? "no usable reduction prime in search range and no probe found a proper submodule"
        : "reductions tried were not simple and no probe found a proper submodule";
    return out;
}

} // namespace yoneda
