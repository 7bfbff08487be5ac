#include "orcycle/pattern.hpp"

#include <algorithm>
#include <cstdlib>

namespace orcycle {

CyclePattern::CyclePattern(std::string s) : s_(std::move(s)) {
    if (s_.size() < 3) throw Error(Errc::pattern_too_short, "pattern needs length >= 3");
    for (char c : s_)
        if (c != 'f' && c != 'b') throw Error(Errc::bad_pattern, "pattern alphabet is {f,b}");
}

int CyclePattern::forward_count() const {
    return static_cast<int>(std::count(s_.begin(), s_.end(), 'f'));
}

int cycle_type(const CyclePattern& p) {
    return std::abs(p.forward_count() - p.backward_count());
}

CyclePattern rotated(const CyclePattern& p, int r) {
    const int n = p.length();
    r = ((r % n) + n) % n;
    std::string s = p.str().substr(static_cast<std::size_t>(r)) +
                    p.str().substr(0, static_cast<std::size_t>(r));
    return CyclePattern(s);
}

CyclePattern reversed_traversal(const CyclePattern& p) {
    std::string s(p.str().rbegin(), p.str().rend());
    for (char& c : s) c = (c == 'f') ? 'b' : 'f';
    return CyclePattern(s);
}

int smallest_nondivisor(long long ell) {
    if (ell < 4) throw Error(Errc::bad_params, "need ell >= 4");
    int k = 3;
    while (ell % k == 0) ++k;
    if (!is_prime_power(k)) throw Error(Errc::bad_params, "smallest non-divisor not a prime power");
    return k;
}

bool is_prime_power(long long k) {
    if (k < 2) return false;
    long long p = 2;
    while (p * p <= k && k % p != 0) ++p;
    if (p * p > k) return true; // k prime
    while (k % p == 0) k /= p;
    return k == 1;
}

} // namespace orcycle
