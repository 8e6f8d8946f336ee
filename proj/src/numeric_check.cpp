#include "curvesym/numeric_check.hpp"

#include <cmath>
#include <random>

namespace curvesym {

namespace {

double eval_poly(const Poly& p, double t) {
    double acc = 0;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
        acc = acc * t + to_double(*it);
    return acc;
}

struct DoubleSym {
    std::vector<std::vector<double>> q;
    std::vector<double> t;
    double pa, pb, pc, pd;  // Moebius coefficients
};

DoubleSym lower_to_double(const VerifiedSymmetry& sym) {
    Rational w(Int(1), Int("1000000000000000"));  // 1e-15
    DoubleSym d;
    size_t n = sym.Q.size();
    d.q.assign(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) d.q[i][j] = to_double(sym.Q[i][j].enclose(w).mid());
    for (size_t i = 0; i < n; ++i) d.t.push_back(to_double(sym.t[i].enclose(w).mid()));
    d.pa = to_double(sym.phi.a.enclose(w).mid());
    d.pb = to_double(sym.phi.b.enclose(w).mid());
    d.pc = to_double(sym.phi.c.enclose(w).mid());
    d.pd = to_double(sym.phi.d.enclose(w).mid());
    return d;
}

double residual(const CurveSpec& curve, const DoubleSym& d, int samples) {
    std::mt19937 rng(0xb5u);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    size_t n = curve.components().size();
    double worst = 0;
    int done = 0;
    while (done < samples) {
        double t = dist(rng);
        double phid = d.pc * t + d.pd;
        if (std::fabs(phid) < 1e-6) continue;
        double pt = (d.pa * t + d.pb) / phid;
        bool pole = false;
        std::vector<double> x(n), fx(n), xphi(n);
        for (size_t i = 0; i < n; ++i) {
            double den_t = eval_poly(curve.component(i).den(), t);
            double den_p = eval_poly(curve.component(i).den(), pt);
            if (std::fabs(den_t) < 1e-6 || std::fabs(den_p) < 1e-6) {
                pole = true;
                break;
            }
            x[i] = eval_poly(curve.component(i).num(), t) / den_t;
            xphi[i] = eval_poly(curve.component(i).num(), pt) / den_p;
        }
        if (pole) continue;
        ++done;
        for (size_t i = 0; i < n; ++i) {
            fx[i] = d.t[i];
            for (size_t j = 0; j < n; ++j) fx[i] += d.q[i][j] * x[j];
        }
        double err = 0;
        for (size_t i = 0; i < n; ++i) err = std::max(err, std::fabs(fx[i] - xphi[i]));
        worst = std::max(worst, err);
    }
    return worst;
}

}  // namespace

double verify_numeric(const CurveSpec& curve, const VerifiedSymmetry& sym, int samples) {
    if (samples <= 0) return 0.0;
    return residual(curve, lower_to_double(sym), samples);
}

double verify_numeric_perturbed(const CurveSpec& curve, const VerifiedSymmetry& sym, int samples,
                                double epsilon) {
    if (samples <= 0) return 0.0;
    DoubleSym d = lower_to_double(sym);
    d.q[0][0] += epsilon;
    return residual(curve, d, samples);
}

}  // namespace curvesym
