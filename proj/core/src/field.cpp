#include "edgeres/field.hpp"

namespace edgeres {

bool is_prime_u32(std::uint32_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime_u32(p) || p >= (1u << 31))
        throw std::invalid_argument("FieldSpec: p must be prime and < 2^31, got " + std::to_string(p));
    return FieldSpec{p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    std::string body = s;
    if (s.rfind("p:", 0) == 0) body = s.substr(2);
    try {
        unsigned long v = std::stoul(body);
        return prime(static_cast<std::uint32_t>(v));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("FieldSpec: cannot parse field '" + s + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("FieldSpec: field out of range '" + s + "'");
    }
}

}  // namespace edgeres
