#include "anosov/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace anosov {

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Int IntPoly::operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::monomial(int k, Int coeff) {
    std::vector<Int> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(coeff);
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& a = c[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int m = abs_int(a);
        if (m != 1 || k == 0) os << m.str();
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) v[i] -= b.c[i];
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> v(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    }
    return IntPoly(std::move(v));
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> rem = a.c;
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int num = rem[static_cast<std::size_t>(k + b.degree())];
        if (num % b.leading() != 0) return std::nullopt;
        Int q = num / b.leading();
        quot[static_cast<std::size_t>(k)] = q;
        if (q != 0)
            for (std::size_t i = 0; i < b.c.size(); ++i)
                rem[static_cast<std::size_t>(k) + i] -= q * b.c[i];
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() <= 0) return IntPoly();
    std::vector<Int> v(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i) v[i - 1] = p.c[i] * Int(i);
    return IntPoly(std::move(v));
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& x : p.c) g = gcd_int(g, x);
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Int> v(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) v[i] = p.c[i] / g;
    return IntPoly(std::move(v));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in Z.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const Int& lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        Int la = a.leading();
        for (auto& x : a.c) x *= lb;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            a.c[static_cast<std::size_t>(shift) + i] -= la * b.c[i];
        a.trim();
    }
    return a;
}

} // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() <= 0) return out;
    IntPoly a = primitive_part(p);
    IntPoly g = poly_gcd(a, derivative(a));
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    IntPoly w = *exact_divide(a, g);
    IntPoly y = *exact_divide(derivative(a), g);
    int i = 1;
    IntPoly z = y - derivative(w);
    while (!w.is_zero() && w.degree() > 0) {
        IntPoly f = poly_gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, i);
        if (f.degree() == 0) f = IntPoly::constant(f.is_zero() ? Int(1) : f.c[0]);
        w = *exact_divide(w, f);
        y = *exact_divide(z, f);
        z = y - derivative(w);
        ++i;
    }
    return out;
}

IntPoly reversed(const IntPoly& p) {
    std::vector<Int> v(p.c.rbegin(), p.c.rend());
    return IntPoly(std::move(v));
}

bool is_reciprocal_up_to_sign(const IntPoly& p) {
    IntPoly r = reversed(p);
    if (r == p) return true;
    for (auto& x : r.c) x = -x;
    return r == p;
}

int euler_phi(int k) {
    int result = k, n = k;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic(int k) {
    if (k < 1) throw std::domain_error("cyclotomic index must be >= 1");
    // x^k - 1 = prod_{d | k} Phi_d; divide the proper divisors out.
    std::vector<Int> xk(static_cast<std::size_t>(k) + 1);
    xk[0] = -1;
    xk.back() = 1;
    IntPoly p{std::move(xk)};
    for (int d = 1; d < k; ++d)
        if (k % d == 0) p = *exact_divide(p, cyclotomic(d));
    return p;
}

std::vector<int> cyclotomic_factor_orders(const IntPoly& p) {
    std::vector<int> orders;
    if (p.degree() <= 0) return orders;
    const int n = p.degree();
    for (int k = 1; euler_phi(k) <= n; ++k)
        if (exact_divide(p, cyclotomic(k))) orders.push_back(k);
    return orders;
}

bool all_roots_of_unity(const IntPoly& p) {
    if (p.is_zero()) return false;
    IntPoly q = primitive_part(p);
    if (q.degree() == 0) return true;
    const int n = q.degree();
    for (int k = 1; euler_phi(k) <= n; ++k) {
        IntPoly phi = cyclotomic(k);
        while (true) {
            auto d = exact_divide(q, phi);
            if (!d) break;
            q = *d;
            if (q.degree() == 0) return true;
        }
    }
    return q.degree() == 0;
}

IntPoly charpoly(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("charpoly of non-square matrix");
    const std::size_t n = a.rows();
    // Faddeev-LeVerrier; the division by k at each step is exact over Z.
    std::vector<Int> coeff(n + 1);
    coeff[n] = 1;
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        Int ck = -m.trace();
        if (ck % Int(k) != 0) throw std::logic_error("Faddeev-LeVerrier division not exact");
        ck /= Int(k);
        coeff[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) += ck;
    }
    return IntPoly(std::move(coeff));
}

std::complex<double> eval_complex(const IntPoly& p, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * z + to_double(*it);
    return acc;
}

} // namespace anosov
