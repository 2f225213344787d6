#include "stmult/params.hpp"

#include "stmult/bigint.hpp"
#include "stmult/errors.hpp"

#include <sstream>

namespace stmult {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

GroupParams::GroupParams(int n_, long long p_, int r_) : n(n_), p(p_), r(r_) {
    if (n < 1) throw PreconditionError("GroupParams requires n >= 1");
    if (!is_prime(p)) throw PreconditionError("GroupParams requires p prime");
    if (r < 1) throw PreconditionError("GroupParams requires r >= 1");
    q = checked_pow(p, r);
}

long long GroupParams::det_reduce(long long k) const {
    long long m = q - 1;
    long long red = k % m;
    return red < 0 ? red + m : red;
}

long long GroupParams::q_geom_sum() const {
    long long s = 0, pw = 1;
    for (int i = 0; i < n; ++i) {
        s = checked_add(s, pw);
        if (i + 1 < n) pw = checked_mul(pw, q);
    }
    return s;
}

std::string GroupParams::describe() const {
    std::ostringstream os;
    os << "GL_" << n << "(" << q << ")";
    return os.str();
}

} // namespace stmult
