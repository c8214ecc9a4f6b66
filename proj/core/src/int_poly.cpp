#include "dyndeg/int_poly.hpp"

#include <algorithm>
#include <sstream>

namespace dyndeg {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(int k, Int c) {
    if (c == 0) return zero();
    std::vector<Int> v(static_cast<size_t>(k) + 1, Int(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Int& IntPoly::leading() const {
    return c_.empty() ? kZero : c_.back();
}

const Int& IntPoly::constant() const {
    return c_.empty() ? kZero : c_.front();
}

bool IntPoly::is_palindromic() const {
    const size_t n = c_.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (c_[i] != c_[n - 1 - i]) return false;
    return true;
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(c_);
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& q) const {
    std::vector<Int> v(std::max(c_.size(), q.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) v[i] += q.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& q) const {
    std::vector<Int> v(std::max(c_.size(), q.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) v[i] -= q.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& q) const {
    if (is_zero() || q.is_zero()) return zero();
    std::vector<Int> v(c_.size() + q.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < q.c_.size(); ++j)
            v[i + j] += c_[i] * q.c_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& s) const {
    if (s == 0) return zero();
    std::vector<Int> v(c_);
    for (auto& x : v) x *= s;
    return IntPoly(std::move(v));
}

std::strong_ordering IntPoly::operator<=>(const IntPoly& q) const {
    if (degree() != q.degree())
        return degree() <=> q.degree();
    for (size_t i = 0; i < c_.size(); ++i) {
        int s = mpz_cmp(c_[i].get_mpz_t(), q.c_[i].get_mpz_t());
        if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Int> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::reciprocal() const {
    std::vector<Int> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::reflect() const {
    std::vector<Int> v(c_);
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::scale_arg(const Rat& s) const {
    if (is_zero()) return zero();
    const Int num = s.get_num();
    const Int den = s.get_den();
    const int d = degree();
    std::vector<Int> v(c_.size());
    Int np = 1, dp = 1;
    // v_k = a_k * num^k * den^(d-k)
    std::vector<Int> numpow(c_.size()), denpow(c_.size());
    for (int k = 0; k <= d; ++k) {
        numpow[static_cast<size_t>(k)] = np;
        denpow[static_cast<size_t>(k)] = dp;
        np *= num;
        dp *= den;
    }
    for (int k = 0; k <= d; ++k)
        v[static_cast<size_t>(k)] =
            c_[static_cast<size_t>(k)] * numpow[static_cast<size_t>(k)] * denpow[static_cast<size_t>(d - k)];
    return IntPoly(std::move(v));
}

Int IntPoly::eval(const Int& t) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& t) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + Rat(*it);
    return acc;
}

int IntPoly::sign_at(const Rat& t) const {
    // sign of den^deg * p(t), same as sign of p(t)
    if (is_zero()) return 0;
    Int acc = 0;
    const Int& num = t.get_num();
    const Int& den = t.get_den();
    Int dp = 1;
    std::vector<Int> denpow(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) {
        denpow[k] = dp;
        dp *= den;
    }
    const size_t d = c_.size() - 1;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * num + c_[k] * denpow[d - k];
    return sgn(acc);
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return zero();
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> v(c_);
    for (auto& x : v) x /= g;
    return IntPoly(std::move(v));
}

bool IntPoly::try_divide(const IntPoly& q, IntPoly* quot) const {
    if (q.is_zero()) return false;
    if (is_zero()) {
        if (quot) *quot = zero();
        return true;
    }
    if (degree() < q.degree()) return false;
    // long division over Q, exactness checked as we go
    std::vector<Rat> rem(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) rem[i] = Rat(c_[i]);
    const Rat lc = Rat(q.leading());
    const int dq = q.degree();
    std::vector<Rat> qu(static_cast<size_t>(degree() - dq) + 1);
    for (int k = degree() - dq; k >= 0; --k) {
        Rat f = rem[static_cast<size_t>(k + dq)] / lc;
        qu[static_cast<size_t>(k)] = f;
        if (f != 0)
            for (int j = 0; j <= dq; ++j)
                rem[static_cast<size_t>(k + j)] -= f * Rat(q.coeff(j));
    }
    for (int j = 0; j < dq; ++j)
        if (rem[static_cast<size_t>(j)] != 0) return false;
    if (quot) {
        std::vector<Int> v(qu.size());
        for (size_t i = 0; i < qu.size(); ++i) {
            qu[i].canonicalize();
            if (qu[i].get_den() != 1) return false;
            v[i] = qu[i].get_num();
        }
        *quot = IntPoly(std::move(v));
    } else {
        for (const auto& f : qu) {
            Rat g = f;
            g.canonicalize();
            if (g.get_den() != 1) return false;
        }
    }
    return true;
}

IntPoly IntPoly::divide_exact(const IntPoly& q) const {
    IntPoly out;
    if (!try_divide(q, &out)) throw DivisionNotExact();
    return out;
}

Int IntPoly::height() const {
    Int h = 0;
    for (const auto& x : c_) {
        Int a = abs(x);
        if (a > h) h = a;
    }
    return h;
}

Rat IntPoly::cauchy_bound() const {
    if (is_zero()) return Rat(1);
    Int h = 0;
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
        Int a = abs(c_[i]);
        if (a > h) h = a;
    }
    Rat b = Rat(1) + Rat(h) / Rat(abs(leading()));
    return b;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& a = coeff(k);
        if (a == 0) continue;
        Int aa = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (k == 0 || aa != 1) os << aa.get_str();
        if (k > 0) {
            if (aa != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

// primitive pseudo-remainder sequence gcd
IntPoly gcd_prs(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        int delta = a.degree() - b.degree();
        Int lb = b.leading();
        Int mult = 1;
        for (int i = 0; i <= delta; ++i) mult *= lb;
        IntPoly r = a * mult;
        // in-place long division discarding quotient
        std::vector<Int> rc(r.coeffs());
        const int db = b.degree();
        for (int k = static_cast<int>(rc.size()) - 1 - db; k >= 0; --k) {
            Int f = rc[static_cast<size_t>(k + db)] / lb; // exact by construction
            if (f != 0)
                for (int j = 0; j <= db; ++j)
                    rc[static_cast<size_t>(k + j)] -= f * b.coeff(j);
        }
        rc.resize(static_cast<size_t>(db));
        IntPoly rem = IntPoly(std::move(rc)).primitive_part();
        a = std::move(b);
        b = std::move(rem);
    }
    return a.primitive_part();
}

} // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    return gcd_prs(a, b);
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return IntPoly::one();
    IntPoly f = p.primitive_part();
    IntPoly g = poly_gcd(f, f.derivative());
    return f.divide_exact(g).primitive_part();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    // Yun's algorithm on the primitive part
    IntPoly f = p.primitive_part();
    IntPoly d = f.derivative();
    IntPoly a = poly_gcd(f, d);
    IntPoly b = f.divide_exact(a);
    IntPoly c = d.divide_exact(a);
    int i = 1;
    while (b.degree() > 0) {
        IntPoly z = c - b.derivative();
        IntPoly g = poly_gcd(b, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b.divide_exact(g);
        c = z.divide_exact(g);
        ++i;
    }
    return out;
}

} // namespace dyndeg
