#include "frobstab/monomial.hpp"

#include <numeric>
#include <sstream>

#include "frobstab/errors.hpp"

namespace frobstab {

int ExponentVec::degree() const {
    return std::accumulate(k.begin(), k.end(), 0);
}

std::string ExponentVec::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) os << ',';
        os << k[i];
    }
    os << ')';
    return os.str();
}

std::vector<ExponentVec> cube_lex(int n, int bound) {
    if (n < 0 || bound < 0) throw usage_error("cube_lex: n and bound must be nonnegative");
    std::vector<ExponentVec> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // Odometer enumeration; the last coordinate moves fastest, which is
    // exactly lexicographic order on fixed-length vectors.
    while (true) {
        out.emplace_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound) {
            cur[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    if (n == 0) out.resize(1); // single empty vector
    return out;
}

namespace {

void compositions_rec(int pos, int n, int bound, int remaining,
                      std::vector<int>& cur, std::vector<ExponentVec>& out) {
    if (pos == n) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    int hi = std::min(bound, remaining);
    for (int v = 0; v <= hi; ++v) {
        cur[static_cast<std::size_t>(pos)] = v;
        compositions_rec(pos + 1, n, bound, remaining - v, cur, out);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
}

} // namespace

std::vector<ExponentVec> bounded_compositions(int n, int bound, int total) {
    if (n < 0 || bound < 0 || total < 0)
        throw usage_error("bounded_compositions: arguments must be nonnegative");
    std::vector<ExponentVec> out;
    if (total > n * bound) return out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    compositions_rec(0, n, bound, total, cur, out);
    return out;
}

Index monomial_index(const ExponentVec& K, std::uint32_t p) {
    Index idx = 0;
    for (int i = 0; i < K.size(); ++i) {
        int ki = K[i];
        if (ki < 0 || static_cast<std::uint32_t>(ki) >= p)
            throw usage_error("monomial_index: exponent out of range [0, p-1]");
        idx = idx * static_cast<Index>(p) + ki;
    }
    return idx;
}

std::vector<ExponentVec> alpha_basis(PrimeChar p, int n, int min_degree) {
    if (n < 1) throw usage_error("alpha_basis: n must be positive");
    if (min_degree < 0) throw usage_error("alpha_basis: min_degree must be nonnegative");
    std::vector<ExponentVec> out;
    for (auto& K : cube_lex(n, static_cast<int>(p.value()) - 1))
        if (K.degree() >= min_degree) out.push_back(std::move(K));
    return out;
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long acc = 1;
    for (long long i = 1; i <= k; ++i) {
        // acc * (n - k + i) always divisible by i at this point
        long long num = n - k + i;
        if (acc > 0 && num > 0 && acc > (std::numeric_limits<long long>::max)() / num)
            throw std::overflow_error("binomial: result exceeds 64 bits");
        acc = acc * num / i;
    }
    return acc;
}

long long checked_pow(long long base, int exp) {
    if (base < 0 || exp < 0) throw usage_error("checked_pow: arguments must be nonnegative");
    long long acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && acc > (std::numeric_limits<long long>::max)() / base)
            throw std::overflow_error("checked_pow: result exceeds 64 bits");
        acc *= base;
    }
    return acc;
}

} // namespace frobstab
