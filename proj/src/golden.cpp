#include "ktree/golden.hpp"

#include "ktree/errors.hpp"

namespace ktree {

QuadReal GoldenParams::k_quad() const {
    if (!is_real())
        throw InvalidParams("golden parameters need a >= 1 and a^2+4b >= 0 (a=" +
                            std::to_string(a) + ", b=" + std::to_string(b) + ")");
    return QuadReal(BigInt(a), 1, discriminant(), 2);
}

KValue GoldenParams::k() const { return KValue::from_quad(k_quad()); }

}  // namespace ktree
