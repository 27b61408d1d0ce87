#include "fracfact/wlpp.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fracfact {

namespace {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt num = 1;
    for (long long i = 1; i <= k; ++i) {
        num *= n - k + i;
        num /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return num;
}

BigInt exact_div(const BigInt& num, long long den, const char* what) {
    if (num % den != 0)
        throw std::logic_error(std::string("non-exact division in ") + what +
                               ": " + num.str() + " / " + std::to_string(den));
    return num / den;
}

std::mutex memo_mutex;
std::map<int, WlpPolynomial> saturated_memo;
std::map<int, WlpPolynomial> even_chain_memo;

}  // namespace

WlpPolynomial::WlpPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
    trim();
}

WlpPolynomial WlpPolynomial::one() { return WlpPolynomial({BigInt(1)}); }

void WlpPolynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

WlpPolynomial WlpPolynomial::from_wlp(const WordLengthPattern& w) {
    std::vector<BigInt> c;
    c.reserve(w.k() + 1);
    c.push_back(1);
    for (const auto& a : w.counts()) c.push_back(a);
    return WlpPolynomial(std::move(c));
}

WordLengthPattern WlpPolynomial::to_wlp(int k) const {
    if (coeff(0) != 1)
        throw std::invalid_argument("a word-length pattern polynomial has constant term 1");
    if (degree() > k)
        throw std::invalid_argument("polynomial degree exceeds the number of factors");
    std::vector<BigInt> counts(k, 0);
    for (int i = 1; i <= degree(); ++i) counts[i - 1] = coeff(i);
    return WordLengthPattern(std::move(counts));
}

int WlpPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

const BigInt& WlpPolynomial::coeff(int i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

WlpPolynomial WlpPolynomial::operator+(const WlpPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return WlpPolynomial(std::move(out));
}

WlpPolynomial WlpPolynomial::operator-(const WlpPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return WlpPolynomial(std::move(out));
}

WlpPolynomial WlpPolynomial::operator*(const WlpPolynomial& o) const {
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            if (o.coeffs_[j] != 0) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return WlpPolynomial(std::move(out));
}

std::string WlpPolynomial::to_string() const {
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? "-" : "+";
        else if (c < 0) out += "-";
        const BigInt mag = abs(c);
        if (i == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str();
            out += "u";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

bool operator==(const WlpPolynomial& a, const WlpPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
}

WlpPolynomial binomial_poly(int r) {
    if (r < 0) throw std::invalid_argument("negative exponent");
    std::vector<BigInt> c(r + 1);
    c[0] = 1;
    for (int i = 1; i <= r; ++i) c[i] = c[i - 1] * (r - i + 1) / i;
    return WlpPolynomial(std::move(c));
}

WlpPolynomial saturated_wlpp(int m) {
    if (m < 3) throw std::invalid_argument("the saturated resolution-IV design needs m >= 3");
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = saturated_memo.find(m); it != saturated_memo.end()) return it->second;
    }
    const long long l = 1LL << (m - 1);
    std::vector<BigInt> a(l + 1, 0);
    a[0] = 1;
    // a_2 = 0 (resolution IV), odd coefficients stay 0
    for (long long r = 1; 2 * r + 2 <= l; ++r)
        a[2 * r + 2] =
            exact_div(binomial(l, 2 * r + 1) - (l - 2 * r) * a[2 * r], 2 * r + 2,
                      "the saturated word-length recurrence");
    WlpPolynomial p{std::move(a)};
    std::lock_guard lock(memo_mutex);
    saturated_memo.emplace(m, p);
    return p;
}

WlpPolynomial even_chain_poly(int m) {
    if (m < 3) throw std::invalid_argument("even alias chains need m >= 3");
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = even_chain_memo.find(m); it != even_chain_memo.end()) return it->second;
    }
    const long long l = 1LL << (m - 1);
    const WlpPolynomial p_m = saturated_wlpp(m);
    std::vector<BigInt> q(l + 1, 0);
    for (long long i = 0; 2 * i <= l; ++i) q[2 * i] = binomial(l, 2 * i);
    for (int i = 0; i <= static_cast<int>(l); ++i) {
        q[i] -= p_m.coeff(i);
        q[i] = exact_div(q[i], l - 1, "the even-chain polynomial");
        if (q[i] < 0) throw std::logic_error("negative even-chain coefficient");
    }
    WlpPolynomial poly{std::move(q)};
    std::lock_guard lock(memo_mutex);
    even_chain_memo.emplace(m, poly);
    return poly;
}

WlpPolynomial compose_wlpp(int m, const WlpPolynomial& p_e, int r) {
    if (r < 0 || r > (1 << (m - 1)) - 1)
        throw std::invalid_argument("r must be the size of a subset of E_m");
    if (p_e.coeff(0) != 1)
        throw std::invalid_argument("P_e must have constant term 1");
    if (p_e.degree() > r)
        throw std::invalid_argument("P_e has words longer than its number of columns");
    const WlpPolynomial p_m = saturated_wlpp(m);
    const WlpPolynomial q_m = even_chain_poly(m);
    WlpPolynomial p_d = binomial_poly(r) * q_m + p_e * (p_m - q_m);
    for (int i = 0; i <= p_d.degree(); ++i)
        if (p_d.coeff(i) < 0)
            throw std::invalid_argument(
                "composition produced a negative coefficient: P_e and r do not "
                "describe a subset of E_m");
    if (p_d.coeff(0) != 1) throw std::logic_error("composed polynomial lost its constant term");
    return p_d;
}

}  // namespace fracfact
