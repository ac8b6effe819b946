#pragma once

// Bernoulli numbers mod p (exact rational recurrence, the ground truth) and
// the Q-polynomial root scanner that is cross-checked against it.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "stickel/arith.hpp"

namespace stickel {

// Exact B_0..B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0. Grows on demand.
class BernoulliTable {
public:
    explicit BernoulliTable(std::size_t n = 0) { extend(n); }
    void extend(std::size_t n);
    std::size_t size() const { return b_.size(); }
    const mpq_class& operator[](std::size_t k) const { return b_[k]; }

private:
    std::vector<mpq_class> b_;
};

// B_k mod p; rejects odd k > 1, k = 0 and k = 0 mod p-1 (p | denominator).
u64 bernoulli_mod_p(u64 p, u64 k, const BernoulliTable& table);
u64 bernoulli_mod_p(u64 p, u64 k);

// k -> B_k mod p for even k in [2, p-3].
std::map<u64, u64> bernoulli_table_mod_p(u64 p, const BernoulliTable& table);
std::map<u64, u64> bernoulli_table_mod_p(u64 p);

struct RegularityVerdict {
    u64 p = 0;
    u64 v = 0;
    std::vector<u64> odd_roots;          // m in [1, (p-3)/2] with Q(v^(2m+1)) = 0
    std::vector<u64> all_roots;          // n in [2, p-2] with Q(v^n) = 0
    std::vector<u64> irregular_indices;  // even k in [2, p-3] with B_k = 0 (oracle)
    bool irregular = false;              // oracle verdict
    bool agreement = false;              // |odd_roots| == |irregular_indices|
};

RegularityVerdict q_root_scan(u64 p, u64 v, const BernoulliTable& table);
RegularityVerdict q_root_scan(u64 p, u64 v);

// Every odd prime in [3, pmax] with its smallest primitive root. jobs == 0
// leaves the OpenMP default; output order never depends on it.
std::vector<RegularityVerdict> scan_irregular(u64 pmax, int jobs = 0);

namespace reference {
std::vector<RegularityVerdict> scan_irregular(u64 pmax);
}  // namespace reference

struct BHalfCheck {
    u64 p = 0;
    u64 v = 0;
    u64 q_at_minus_one = 0;  // Q(-1) = Q(v^((p-1)/2)) mod p
    mpz_class s1;            // sum of v^-i over even i in [0, p-2]
    mpz_class s2;            // sum over odd i
    mpz_class V;             // -(s1 - s2)
    bool identities = false; // s1 + s2 = p(p-1)/2, p Q(-1) = V (1 + v), 0 < |V| < p(p-1)/2
    bool nonzero = false;
};

// Requires p = 3 mod 4.
BHalfCheck b_half_check(u64 p, u64 v);

}  // namespace stickel
