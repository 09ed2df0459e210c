#include "clq/ratfct.hpp"

namespace clq {

Poly Poly::constant(int nvars, const BigInt& c) {
    Poly p(nvars);
    p.add(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Poly Poly::variable(int nvars, int j) {
    if (j < 1 || j > nvars) throw Error("Poly::variable: index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(j - 1)] = 1;
    Poly p(nvars);
    p.add(e, 1);
    return p;
}

Poly Poly::interval(int nvars, int x, int y) {
    Poly p(nvars);
    for (int j = x; j < y; ++j) p += variable(nvars, j);
    return p;
}

void Poly::add(const Exponents& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != nvars_) throw Error("Poly: exponent vector of the wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.nvars_ != nvars_) throw Error("Poly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.nvars_ != nvars_) throw Error("Poly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw Error("Poly: variable count mismatch");
    Poly r(a.nvars_);
    Poly::Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add(e, ca * cb);
        }
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw Error("Poly::pow: negative exponent");
    Poly r = constant(nvars_, 1), b = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw Error("Poly::substitute: wrong number of images");
    const int n = images.empty() ? 0 : images.front().nvars();
    Poly r(n);
    for (const auto& [e, c] : terms_) {
        Poly t = constant(n, c);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) t = t * images[k].pow(e[k]);
        r += t;
    }
    return r;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += "u" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        const BigInt a = abs(c);
        std::string term = mono.empty() ? a.str() : (a == 1 ? mono : a.str() + "*" + mono);
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

RatFct::RatFct(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("RatFct: zero denominator");
    if (num_.nvars() != den_.nvars()) throw Error("RatFct: arity mismatch");
}

RatFct RatFct::inverse() const {
    if (is_zero()) throw Error("RatFct: inverse of zero");
    return RatFct(den_, num_);
}

RatFct operator+(const RatFct& a, const RatFct& b) {
    if (a.den_ == b.den_) return RatFct(a.num_ + b.num_, a.den_);
    return RatFct(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFct operator-(const RatFct& a, const RatFct& b) { return a + (-1) * b; }

RatFct operator*(const RatFct& a, const RatFct& b) { return RatFct(a.num_ * b.num_, a.den_ * b.den_); }

RatFct operator*(const BigInt& c, const RatFct& a) { return RatFct(Poly::constant(a.arity(), c) * a.num_, a.den_); }

bool RatFct::operator==(const RatFct& o) const {
    if (arity() != o.arity()) return false;
    return num_ * o.den_ == o.num_ * den_;
}

std::string to_string(const RatFct& f) {
    if (f.is_zero() || f.den() == Poly::constant(f.arity(), 1)) return to_string(f.num());
    return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

RatFct ratfct_compose(const RatFct& f, int i, const RatFct& g) {
    const int n = f.arity(), m = g.arity();
    if (i < 1 || i > n) throw Error("ratfct_compose: index out of range");
    const int total = n + m - 1;
    std::vector<Poly> outer, inner;
    for (int j = 1; j <= n; ++j) {
        if (j < i)
            outer.push_back(Poly::variable(total, j));
        else if (j == i)
            outer.push_back(Poly::interval(total, i, i + m));
        else
            outer.push_back(Poly::variable(total, j + m - 1));
    }
    for (int j = 1; j <= m; ++j) inner.push_back(Poly::variable(total, j + i - 1));
    return RatFct(f.num().substitute(outer) * g.num().substitute(inner),
                  f.den().substitute(outer) * g.den().substitute(inner));
}

void IntervalProduct::multiply(int x, int y, std::int64_t e) {
    if (x < 1 || x >= y || y > arity_ + 1) throw Error("IntervalProduct: interval out of range");
    if (e == 0) return;
    auto [it, inserted] = exps_.try_emplace({x, y}, e);
    if (!inserted) {
        it->second += e;
        if (it->second == 0) exps_.erase(it);
    }
}

IntervalProduct IntervalProduct::inverse() const {
    IntervalProduct r(arity_);
    for (const auto& [k, e] : exps_) r.exps_[k] = -e;
    return r;
}

IntervalProduct operator*(const IntervalProduct& a, const IntervalProduct& b) {
    if (a.arity_ != b.arity_) throw Error("IntervalProduct: arity mismatch");
    IntervalProduct r = a;
    for (const auto& [k, e] : b.exps_) r.multiply(k.first, k.second, e);
    return r;
}

RatFct IntervalProduct::expand() const {
    Poly num = Poly::constant(arity_, 1), den = num;
    for (const auto& [k, e] : exps_) {
        const Poly lin = Poly::interval(arity_, k.first, k.second);
        if (e > 0)
            num = num * lin.pow(static_cast<int>(e));
        else
            den = den * lin.pow(static_cast<int>(-e));
    }
    return RatFct(std::move(num), std::move(den));
}

namespace {

std::string factor_name(int x, int y) {
    std::string s;
    for (int j = x; j < y; ++j) s += (j > x ? "+u" : "u") + std::to_string(j);
    return y - x > 1 ? "(" + s + ")" : s;
}

std::string factors(const std::vector<std::pair<std::pair<int, int>, std::int64_t>>& list) {
    std::string s;
    for (const auto& [k, e] : list) {
        if (!s.empty()) s += "*";
        s += factor_name(k.first, k.second);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace

std::string to_string(const IntervalProduct& f) {
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> num, den;
    for (const auto& [k, e] : f.exponents()) (e > 0 ? num : den).push_back({k, e > 0 ? e : -e});
    std::string s = num.empty() ? "1" : factors(num);
    if (!den.empty()) s += den.size() > 1 ? " / (" + factors(den) + ")" : " / " + factors(den);
    return s;
}

IntervalProduct interval_compose(const IntervalProduct& f, int i, const IntervalProduct& g) {
    const int n = f.arity(), m = g.arity();
    if (i < 1 || i > n) throw Error("interval_compose: index out of range");
    auto shift = [&](int v) { return v <= i ? v : v + m - 1; };
    IntervalProduct r(n + m - 1);
    for (const auto& [k, e] : f.exponents()) r.multiply(shift(k.first), shift(k.second), e);
    for (const auto& [k, e] : g.exponents()) r.multiply(k.first + i - 1, k.second + i - 1, e);
    return r;
}

FracMap::FracMap(MagmaPtr magma, std::function<std::int64_t(Elem)> theta)
    : magma_(std::move(magma)), theta_(std::move(theta)) {
    if (!check_rank_function(*magma_, theta_)) throw Error("FracMap: theta is not a rank function");
}

FracMap FracMap::identity() {
    return FracMap(Magma::integers(), [](Elem x) { return static_cast<std::int64_t>(x); });
}

IntervalProduct FracMap::operator()(const Clique& p) const {
    IntervalProduct r(p.arity());
    for (const auto& la : p.arcs()) r.multiply(la.arc.x, la.arc.y, theta_(la.label));
    return r;
}

RatFct FracMap::operator()(const LinComb& f) const {
    const auto n = homogeneous_arity(f);
    if (!n) return RatFct::zero(1);
    RatFct r = RatFct::zero(*n);
    for (const auto& [p, c] : f.terms()) {
        if (denominator(c) != 1) throw Error("FracMap: non-integer coefficient");
        r = r + numerator(c) * (*this)(p).expand();
    }
    return r;
}

Clique star(const Clique& p, const Clique& q) {
    if (p.arity() != q.arity()) throw Error("star: arity mismatch");
    if (!p.magma()->same_as(*q.magma())) throw Error("star: magma mismatch");
    const auto& m = *p.magma();
    std::vector<LabeledArc> arcs;
    for (int x = 1; x <= p.arity(); ++x)
        for (int y = x + 1; y <= p.arity() + 1; ++y)
            if (const Elem c = m.op(p.at(x, y), q.at(x, y)); c != kUnit) arcs.push_back({{x, y}, c});
    return Clique(p.magma(), p.arity(), std::move(arcs));
}

Clique random_integer_clique(std::mt19937_64& rng, int arity, int lo, int hi) {
    std::uniform_int_distribution<int> label(lo, hi);
    std::vector<LabeledArc> arcs;
    if (arity > 1)
        for (int x = 1; x <= arity; ++x)
            for (int y = x + 1; y <= arity + 1; ++y)
                if (const int l = label(rng); l != 0) arcs.push_back({{x, y}, l});
    return Clique(Magma::integers(), arity, std::move(arcs));
}

FracCheckReport check_frac_morphism(std::uint64_t seed, int samples, int max_arity, bool expanded) {
    const FracMap f = FracMap::identity();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> arity(1, max_arity);
    FracCheckReport rep;
    for (int s = 0; s < samples; ++s) {
        const Clique p = random_integer_clique(rng, arity(rng), -2, 2);
        const Clique q = random_integer_clique(rng, arity(rng), -2, 2);
        const int i = std::uniform_int_distribution<int>(1, p.arity())(rng);
        ++rep.checked;
        const IntervalProduct lhs = f(compose(p, i, q));
        bool good = lhs == interval_compose(f(p), i, f(q));
        if (good && expanded) good = lhs.expand() == ratfct_compose(f(p).expand(), i, f(q).expand());
        if (!good) rep.counterexamples.push_back(to_string(p) + " o" + std::to_string(i) + " " + to_string(q));
    }
    return rep;
}

FracCheckReport check_star_and_inverse(std::uint64_t seed, int samples, int max_arity) {
    const FracMap f = FracMap::identity();
    const MagmaPtr z = Magma::integers();
    const MagmaMorphism eta{z, z, [](Elem x) { return -x; }};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> arity(1, max_arity);
    FracCheckReport rep;
    for (int s = 0; s < samples; ++s) {
        const int n = arity(rng);
        const Clique p = random_integer_clique(rng, n, -2, 2), q = random_integer_clique(rng, n, -2, 2);
        ++rep.checked;
        if (!(f(p).expand() * f(q).expand() == f(star(p, q)).expand()))
            rep.counterexamples.push_back("star: " + to_string(p) + " , " + to_string(q));
        if (!(f(p).expand().inverse() == f(relabel(p, eta)).expand()))
            rep.counterexamples.push_back("inverse: " + to_string(p));
    }
    return rep;
}

}  // namespace clq
