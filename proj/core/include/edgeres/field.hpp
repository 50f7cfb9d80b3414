#ifndef EDGERES_FIELD_HPP
#define EDGERES_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace edgeres {

// Coefficient field for homology and Betti computations: the rationals or a
// prime field GF(p).  p must be prime and < 2^31.
struct FieldSpec {
    std::uint32_t p = 0;  // 0 = rationals

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime(std::uint32_t p);

    bool is_rational() const { return p == 0; }

    std::string name() const { return p == 0 ? "q" : std::to_string(p); }

    // Accepts "q", "Q", a bare prime like "2", or "p:<prime>".
    static FieldSpec parse(const std::string& s);

    bool operator==(const FieldSpec& o) const { return p == o.p; }
    bool operator!=(const FieldSpec& o) const { return p != o.p; }
};

bool is_prime_u32(std::uint32_t v);

}  // namespace edgeres

#endif
