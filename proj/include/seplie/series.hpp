#ifndef SEPLIE_SERIES_HPP
#define SEPLIE_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "seplie/rational.hpp"

namespace seplie {

/*
 * Truncated power series / polynomial over Z. Coefficients are stored only
 * for exponents <= trunc(); asking beyond the truncation order throws, it is
 * never silently zero. Binary operations propagate the minimum truncation
 * order of their inputs.
 */
class SeriesZ {
public:
    explicit SeriesZ(int trunc);

    static SeriesZ constant(const Int& c, int trunc);
    static SeriesZ one(int trunc) { return constant(1, trunc); }
    static SeriesZ monomial(const Int& c, int exp, int trunc);

    int trunc() const { return trunc_; }
    Int coeff(int n) const;
    void set_coeff(int n, const Int& c);

    SeriesZ truncated(int t) const;

    SeriesZ operator+(const SeriesZ& o) const;
    SeriesZ operator-(const SeriesZ& o) const;
    SeriesZ operator*(const SeriesZ& o) const;
    SeriesZ operator-() const;
    SeriesZ& operator+=(const SeriesZ& o) { return *this = *this + o; }
    SeriesZ& operator-=(const SeriesZ& o) { return *this = *this - o; }
    SeriesZ& operator*=(const SeriesZ& o) { return *this = *this * o; }

    // multiplicative inverse; requires constant term +1 or -1
    SeriesZ inverse() const;

    bool is_zero() const { return coeffs_.empty(); }
    bool operator==(const SeriesZ& o) const;
    bool operator!=(const SeriesZ& o) const { return !(*this == o); }

    // "c0 + c1 z + c2 z^2 + ... (trunc N)"
    std::string str() const;
    // whitespace-separated coefficients for exponents 0..trunc
    std::string machine() const;

private:
    std::map<int, Int> coeffs_;  // nonzero only
    int trunc_;
};

bool equal_through(const SeriesZ& a, const SeriesZ& b, int n);

/*
 * Dimension-indexed ranks of a connected graded vector space of finite type.
 * ranks[n] is trusted only for n <= horizon.
 */
struct GradedDims {
    std::map<int, long> ranks;  // dim -> rank > 0
    int horizon = 0;

    long rank(int n) const
    {
        auto it = ranks.find(n);
        return it == ranks.end() ? 0 : it->second;
    }
    void set(int n, long r);
    bool operator==(const GradedDims& o) const { return ranks == o.ranks && horizon == o.horizon; }

    // Hilbert series sum rank(n) z^n, truncated at horizon
    SeriesZ series() const;
    std::string str() const;
};

bool equal_dims_through(const GradedDims& a, const GradedDims& b, int n);

// inverse Hilbert series helpers --------------------------------------------

SeriesZ series_inverse(const SeriesZ& f);

// Hilbert series of the universal envelope of a graded Lie algebra with the
// given dimension ranks: prod over odd n of (1+z^n)^{l_n} times prod over
// even n of (1-z^n)^{-l_n}, truncated at dims.horizon.
SeriesZ pbw_series(const GradedDims& dims);

// Hilbert series of the tensor algebra on generators with the given ranks,
// i.e. 1/(1 - V(z)).
SeriesZ tensor_series(const GradedDims& gen_dims);

// Graded dimensions of the free graded Lie algebra on generators gen_dims,
// recovered dimension by dimension from pbw_series(result) = tensor_series(gen_dims).
GradedDims free_lie_dims(const GradedDims& gen_dims);

// inverse Hilbert series of a free product of augmented algebras:
// sum of the factor inverses minus (s-1)
SeriesZ free_product_inverse(const std::vector<SeriesZ>& inv_list);

/*
 * The polynomials attached to a product of spheres S^{n_1} x ... x S^{n_r}:
 * A_i(z) is the coefficient of x^i in prod (1 - z^{n_i - 1} x), A = sum A_i,
 * and B_k = (-z)^{k-1} sum_{i=k+1..r} A_i for 2 <= k <= r (B_r = 0).
 */
struct ProdSpheresPolys {
    std::vector<SeriesZ> A;      // A[0..r]
    SeriesZ A_sum;               // also prod (1 - z^{n_i-1})
    std::map<int, SeriesZ> B;    // k -> B_k, 2 <= k <= r

    ProdSpheresPolys() : A_sum(0) {}
};

ProdSpheresPolys prod_spheres_polys(const std::vector<int>& sphere_dims, int trunc);

// One step of the loop-space Euler-characteristic recursion after a free cell
// attachment: A + (-z)^{k-1} A_k - z (prev_inverse - A).
SeriesZ anick_rhs(int k, const std::vector<int>& sphere_dims, const SeriesZ& prev_inverse);

}  // namespace seplie

#endif
