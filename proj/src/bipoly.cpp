#include "qabtors/bipoly.hpp"

#include <stdexcept>

namespace qabtors {

void BiPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

long BiPoly::deg_t() const {
    long d = -1;
    for (const auto& p : c) d = std::max(d, p.degree());
    return d;
}

UniPoly BiPoly::eval_y(const Rational& y0) const {
    UniPoly acc;
    for (size_t j = c.size(); j-- > 0;) acc = acc * y0 + c[j];
    return acc;
}

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = r.c[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
}

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    size_t k = xs.size();
    if (k == 0) return UniPoly();
    // Newton divided differences
    std::vector<Rational> dd = ys;
    for (size_t level = 1; level < k; ++level) {
        for (size_t i = k - 1; i >= level; --i) {
            Rational den = xs[i] - xs[i - level];
            if (den == 0) throw std::invalid_argument("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / den;
        }
    }
    // expand the Newton form from the top coefficient down
    UniPoly acc = UniPoly::constant(dd[k - 1]);
    for (size_t i = k - 1; i-- > 0;) {
        acc = acc * (UniPoly::x() - UniPoly::constant(xs[i])) + UniPoly::constant(dd[i]);
    }
    return acc;
}

UniPoly eliminate_t(const UniPoly& m, const BiPoly& B) {
    if (m.degree() < 1) throw std::invalid_argument("eliminate_t: m must have degree >= 1");
    if (B.is_zero()) return UniPoly();
    long d = m.degree();
    long e = B.deg_t();
    long D = B.deg_y();
    if (e < 0) return UniPoly();
    // y-degree of the Sylvester determinant is at most d * D
    size_t npts = static_cast<size_t>(d * D + 1);
    std::vector<Rational> xs, ys;
    xs.reserve(npts);
    ys.reserve(npts);
    Rational lm = m.leading();
    long next = 0;
    while (xs.size() < npts) {
        Rational y0(next);
        next = (next > 0) ? -next : -next + 1;  // 0, 1, -1, 2, -2, ...
        UniPoly spec = B.eval_y(y0);
        Rational val;
        if (spec.is_zero()) {
            val = 0;
        } else {
            val = resultant(m, spec);
            // degree-drop correction so values match the formal determinant
            for (long i = spec.degree(); i < e; ++i) val *= lm;
        }
        xs.push_back(y0);
        ys.push_back(val);
    }
    return interpolate(xs, ys);
}

}  // namespace qabtors
