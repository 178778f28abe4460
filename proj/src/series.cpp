#include "seplie/series.hpp"

#include <algorithm>
#include <sstream>

namespace seplie {

SeriesZ::SeriesZ(int trunc) : trunc_(trunc)
{
    if (trunc < 0)
        throw Error("series truncation order must be >= 0");
}

SeriesZ SeriesZ::constant(const Int& c, int trunc)
{
    SeriesZ s(trunc);
    s.set_coeff(0, c);
    return s;
}

SeriesZ SeriesZ::monomial(const Int& c, int exp, int trunc)
{
    SeriesZ s(trunc);
    if (exp <= trunc)
        s.set_coeff(exp, c);
    return s;
}

Int SeriesZ::coeff(int n) const
{
    if (n < 0)
        return 0;
    if (n > trunc_)
        throw HorizonExceeded("series coefficient " + std::to_string(n) +
                              " beyond truncation order " + std::to_string(trunc_));
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void SeriesZ::set_coeff(int n, const Int& c)
{
    if (n < 0 || n > trunc_)
        throw HorizonExceeded("series coefficient index out of range");
    if (c == 0)
        coeffs_.erase(n);
    else
        coeffs_[n] = c;
}

SeriesZ SeriesZ::truncated(int t) const
{
    SeriesZ s(std::min(t, trunc_));
    for (const auto& [n, c] : coeffs_)
        if (n <= s.trunc_)
            s.coeffs_[n] = c;
    return s;
}

SeriesZ SeriesZ::operator+(const SeriesZ& o) const
{
    SeriesZ s(std::min(trunc_, o.trunc_));
    for (const auto& [n, c] : coeffs_)
        if (n <= s.trunc_)
            s.coeffs_[n] = c;
    for (const auto& [n, c] : o.coeffs_) {
        if (n > s.trunc_)
            continue;
        Int v = s.coeff(n) + c;
        s.set_coeff(n, v);
    }
    return s;
}

SeriesZ SeriesZ::operator-() const
{
    SeriesZ s(trunc_);
    for (const auto& [n, c] : coeffs_)
        s.coeffs_[n] = -c;
    return s;
}

SeriesZ SeriesZ::operator-(const SeriesZ& o) const
{
    return *this + (-o);
}

SeriesZ SeriesZ::operator*(const SeriesZ& o) const
{
    SeriesZ s(std::min(trunc_, o.trunc_));
    for (const auto& [n, c] : coeffs_) {
        if (n > s.trunc_)
            break;
        for (const auto& [m, d] : o.coeffs_) {
            if (n + m > s.trunc_)
                break;
            Int v = s.coeff(n + m) + c * d;
            s.set_coeff(n + m, v);
        }
    }
    return s;
}

SeriesZ SeriesZ::inverse() const
{
    Int c0 = coeff(0);
    if (c0 != 1 && c0 != -1)
        throw NotInvertible("series has constant term " + c0.get_str() +
                            ", need +1 or -1 for an integer inverse");
    SeriesZ g(trunc_);
    g.set_coeff(0, c0);
    // c0 = 1/c0, so g_n = -c0 * sum_{k=1..n} f_k g_{n-k}
    for (int n = 1; n <= trunc_; ++n) {
        Int acc = 0;
        for (const auto& [k, fk] : coeffs_) {
            if (k == 0)
                continue;
            if (k > n)
                break;
            acc += fk * g.coeff(n - k);
        }
        g.set_coeff(n, -c0 * acc);
    }
    return g;
}

bool SeriesZ::operator==(const SeriesZ& o) const
{
    return trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
}

bool equal_through(const SeriesZ& a, const SeriesZ& b, int n)
{
    if (n > a.trunc() || n > b.trunc())
        throw HorizonExceeded("comparing series coefficients beyond a truncation order");
    for (int k = 0; k <= n; ++k)
        if (a.coeff(k) != b.coeff(k))
            return false;
    return true;
}

std::string SeriesZ::str() const
{
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= trunc_; ++n) {
        Int c = coeff(n);
        if (c == 0 && !(n == 0 && coeffs_.empty()))
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str();
        if (n >= 1)
            os << " z";
        if (n >= 2)
            os << "^" << n;
    }
    if (first)
        os << "0";
    os << " (trunc " << trunc_ << ")";
    return os.str();
}

std::string SeriesZ::machine() const
{
    std::ostringstream os;
    for (int n = 0; n <= trunc_; ++n) {
        if (n)
            os << ' ';
        os << coeff(n).get_str();
    }
    return os.str();
}

void GradedDims::set(int n, long r)
{
    if (r < 0)
        throw Error("negative rank in graded dimensions");
    if (r > 0 && n <= 0)
        throw Error("graded dimensions must be connected (rank in dimension <= 0)");
    if (r == 0)
        ranks.erase(n);
    else
        ranks[n] = r;
}

SeriesZ GradedDims::series() const
{
    SeriesZ s(horizon);
    for (const auto& [n, r] : ranks)
        if (n <= horizon)
            s.set_coeff(n, r);
    return s;
}

std::string GradedDims::str() const
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [n, r] : ranks) {
        if (n > horizon)
            continue;
        if (!first)
            os << ", ";
        first = false;
        os << n << ":" << r;
    }
    os << "} (horizon " << horizon << ")";
    return os.str();
}

bool equal_dims_through(const GradedDims& a, const GradedDims& b, int n)
{
    if (n > a.horizon || n > b.horizon)
        throw HorizonExceeded("comparing graded dimensions beyond a horizon");
    for (int k = 1; k <= n; ++k)
        if (a.rank(k) != b.rank(k))
            return false;
    return true;
}

SeriesZ series_inverse(const SeriesZ& f)
{
    return f.inverse();
}

namespace {

// (1 + z^n)^l truncated
SeriesZ binom_plus(int n, long l, int trunc)
{
    SeriesZ s(trunc);
    Int c;
    for (int k = 0; (long)k <= l && k * n <= trunc; ++k) {
        mpz_bin_uiui(c.get_mpz_t(), (unsigned long)l, (unsigned long)k);
        s.set_coeff(k * n, c);
    }
    return s;
}

// (1 - z^n)^{-l} truncated
SeriesZ binom_minus_inv(int n, long l, int trunc)
{
    if (l == 0)
        return SeriesZ::one(trunc);
    SeriesZ s(trunc);
    Int c;
    for (int k = 0; k * n <= trunc; ++k) {
        mpz_bin_uiui(c.get_mpz_t(), (unsigned long)(l - 1 + k), (unsigned long)k);
        s.set_coeff(k * n, c);
    }
    return s;
}

}  // namespace

SeriesZ pbw_series(const GradedDims& dims)
{
    int trunc = dims.horizon;
    SeriesZ s = SeriesZ::one(trunc);
    for (const auto& [n, l] : dims.ranks) {
        if (n > trunc)
            break;
        if (n <= 0)
            throw Error("pbw_series requires connected dimensions");
        s *= (n % 2 != 0) ? binom_plus(n, l, trunc) : binom_minus_inv(n, l, trunc);
    }
    return s;
}

SeriesZ tensor_series(const GradedDims& gen_dims)
{
    int trunc = gen_dims.horizon;
    SeriesZ f = SeriesZ::one(trunc);
    for (const auto& [n, r] : gen_dims.ranks) {
        if (n > trunc)
            break;
        if (n <= 0)
            throw Error("tensor_series requires connected dimensions");
        f -= SeriesZ::monomial(r, n, trunc);
    }
    return f.inverse();
}

GradedDims free_lie_dims(const GradedDims& gen_dims)
{
    int trunc = gen_dims.horizon;
    SeriesZ target = tensor_series(gen_dims);
    SeriesZ prod = SeriesZ::one(trunc);
    GradedDims out;
    out.horizon = trunc;
    for (int n = 1; n <= trunc; ++n) {
        Int l = target.coeff(n) - prod.coeff(n);
        if (l < 0)
            throw Error("free Lie dimension solver hit a negative rank at dimension " +
                        std::to_string(n));
        if (!l.fits_slong_p())
            throw Error("free Lie rank overflow at dimension " + std::to_string(n));
        long ln = l.get_si();
        if (ln > 0) {
            out.set(n, ln);
            prod *= (n % 2 != 0) ? binom_plus(n, ln, trunc) : binom_minus_inv(n, ln, trunc);
        }
    }
    return out;
}

SeriesZ free_product_inverse(const std::vector<SeriesZ>& inv_list)
{
    if (inv_list.empty())
        throw Error("free_product_inverse needs at least one factor");
    int trunc = inv_list[0].trunc();
    for (const auto& f : inv_list)
        trunc = std::min(trunc, f.trunc());
    SeriesZ s(trunc);
    for (const auto& f : inv_list) {
        if (f.coeff(0) != 1)
            throw Error("free_product_inverse factors need constant term 1");
        s += f.truncated(trunc);
    }
    s -= SeriesZ::constant((long)inv_list.size() - 1, trunc);
    return s;
}

ProdSpheresPolys prod_spheres_polys(const std::vector<int>& sphere_dims, int trunc)
{
    const int r = (int)sphere_dims.size();
    if (r < 2)
        throw Error("need at least two spheres");
    for (int n : sphere_dims)
        if (n < 2)
            throw Error("sphere dimensions must be >= 2");

    ProdSpheresPolys out;
    // coefficients of x^i in prod (1 - z^{n-1} x)
    out.A.assign(r + 1, SeriesZ(trunc));
    out.A[0] = SeriesZ::one(trunc);
    for (int j = 0; j < r; ++j) {
        SeriesZ zn = SeriesZ::monomial(1, sphere_dims[j] - 1, trunc);
        for (int i = std::min(j + 1, r); i >= 1; --i)
            out.A[i] = out.A[i] - zn * out.A[i - 1];
    }
    out.A_sum = SeriesZ(trunc);
    for (int i = 0; i <= r; ++i)
        out.A_sum += out.A[i];
    for (int k = 2; k <= r; ++k) {
        SeriesZ tail(trunc);
        for (int i = k + 1; i <= r; ++i)
            tail += out.A[i];
        // (-z)^{k-1} * tail
        SeriesZ mz = SeriesZ::monomial((k % 2 == 0) ? Int(-1) : Int(1), k - 1, trunc);
        out.B.emplace(k, mz * tail);
    }
    return out;
}

SeriesZ anick_rhs(int k, const std::vector<int>& sphere_dims, const SeriesZ& prev_inverse)
{
    if (k < 2)
        throw Error("anick_rhs needs k >= 2");
    int trunc = prev_inverse.trunc();
    ProdSpheresPolys p = prod_spheres_polys(sphere_dims, trunc);
    SeriesZ mz = SeriesZ::monomial((k % 2 == 0) ? Int(-1) : Int(1), k - 1, trunc);
    SeriesZ z = SeriesZ::monomial(1, 1, trunc);
    return p.A_sum + mz * p.A[k] - z * (prev_inverse - p.A_sum);
}

}  // namespace seplie
