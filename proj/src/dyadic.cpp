#include "sft/dyadic.hpp"

#include "sft/errors.hpp"

namespace sft {

DyadicDist DyadicDist::pow2(std::int64_t n) {
    if (n < 0) throw PreconditionError("dyadic distance 2^-n needs n >= 0");
    return DyadicDist(n);
}

std::int64_t DyadicDist::exponent() const {
    if (is_zero()) throw PreconditionError("zero distance has no exponent");
    return exponent_;
}

bool DyadicDist::operator<(const DyadicDist& o) const {
    if (is_zero()) return !o.is_zero();
    if (o.is_zero()) return false;
    return exponent_ > o.exponent_; // larger exponent = smaller value
}

std::string DyadicDist::to_string() const {
    if (is_zero()) return "0";
    if (exponent_ == 0) return "1";
    return "2^-" + std::to_string(exponent_);
}

} // namespace sft
