#pragma once

#include <string>

#include "orcycle/graph.hpp"

namespace orcycle {

/// Orientation string of an arbitrarily oriented cycle: 'f' for an edge
/// traversed forwards, 'b' for one traversed backwards. Position i describes
/// the edge between cycle vertices i and i+1 (mod length).
class CyclePattern {
public:
    explicit CyclePattern(std::string s);

    const std::string& str() const { return s_; }
    int length() const { return static_cast<int>(s_.size()); }
    char at(int i) const { return s_[static_cast<std::size_t>(i)]; }

    int forward_count() const;
    int backward_count() const { return length() - forward_count(); }

private:
    std::string s_;
};

/// |#f - #b|, i.e. the cycle-type after normalizing the traversal direction.
int cycle_type(const CyclePattern& p);

/// Same cycle read starting r positions later.
CyclePattern rotated(const CyclePattern& p, int r);

/// Same cycle traversed in the opposite direction (string reversed, f and b
/// swapped).
CyclePattern reversed_traversal(const CyclePattern& p);

/// Least k >= 3 that does not divide ell; requires ell >= 4. The result is
/// always a prime power, which the function checks rather than assumes.
int smallest_nondivisor(long long ell);

bool is_prime_power(long long k);

} // namespace orcycle
