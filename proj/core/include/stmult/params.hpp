#pragma once

#include <string>

namespace stmult {

// The group data (n, p, r) with q = p^r. Every closed form in the library is
// parameterised by these three numbers; the derived predicate coxeter_ok()
// gates the results that need p larger than the Coxeter number n.
struct GroupParams {
    int n = 1;
    long long p = 2;
    int r = 1;
    long long q = 2; // p^r, computed and validated by the constructor

    GroupParams(int n, long long p, int r);

    bool coxeter_ok() const { return p > n; }

    // k modulo q-1, in [0, q-2]. Det^(q-1) is the trivial module, so every
    // determinant twist is reduced before any hypothesis is checked.
    long long det_reduce(long long k) const;

    // 1 + q + ... + q^(n-1)
    long long q_geom_sum() const;

    std::string describe() const; // "GL_n(q)" style tag for messages
};

bool is_prime(long long p);

} // namespace stmult
