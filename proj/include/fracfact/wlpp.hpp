#ifndef FRACFACT_WLPP_HPP
#define FRACFACT_WLPP_HPP

#include <string>
#include <vector>

#include "fracfact/wlp.hpp"

namespace fracfact {

/// Word-length pattern polynomial: exact integer coefficients, index i is
/// the coefficient of u^i. P_d has constant term 1; the even-chain
/// polynomial Q_m has constant term 0.
class WlpPolynomial {
public:
    WlpPolynomial() : coeffs_{0} {}
    explicit WlpPolynomial(std::vector<BigInt> coeffs);
    static WlpPolynomial one();

    /// 1 + a_1 u + ... + a_k u^k.
    static WlpPolynomial from_wlp(const WordLengthPattern& w);
    /// Inverse of from_wlp; pads with zeros up to length k and checks the
    /// constant term is 1 and nothing extends past degree k.
    WordLengthPattern to_wlp(int k) const;

    int degree() const;
    const BigInt& coeff(int i) const;  // 0 beyond the stored range
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    WlpPolynomial operator+(const WlpPolynomial& o) const;
    WlpPolynomial operator-(const WlpPolynomial& o) const;
    WlpPolynomial operator*(const WlpPolynomial& o) const;

    /// "1+16u^3+39u^4+..." in ascending powers, zero terms omitted.
    std::string to_string() const;

    friend bool operator==(const WlpPolynomial& a, const WlpPolynomial& b);

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

/// (1+u)^r.
WlpPolynomial binomial_poly(int r);

/// Word-length pattern polynomial P_m of the saturated resolution-IV design
/// O_m, from the recurrence a_{2r+2} = [C(l,2r+1) - (l-2r) a_{2r}]/(2r+2)
/// with l = 2^{m-1} and a_2 = 0, all odd coefficients zero. Every division
/// must be exact; a remainder aborts with std::logic_error. Memoized per m.
WlpPolynomial saturated_wlpp(int m);

/// Effect-length pattern polynomial Q_m of the even alias chains of O_m:
/// Q_m = [sum_i C(2^{m-1}, 2i) u^{2i} - P_m] / (2^{m-1} - 1). Memoized.
WlpPolynomial even_chain_poly(int m);

/// P_d for d = O_m u e with e in E_m, |e| = r and P_e the pattern
/// polynomial of e:  P_d = (1+u)^r Q_m + P_e (P_m - Q_m).
/// A negative coefficient in the result means the (P_e, r) pair does not
/// describe a subset of E_m and raises std::invalid_argument.
WlpPolynomial compose_wlpp(int m, const WlpPolynomial& p_e, int r);

}  // namespace fracfact

#endif
