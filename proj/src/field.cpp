#include "lgb/field.hpp"

#include <charconv>

namespace lgb {

bool is_prime(std::uint64_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("field: " + std::to_string(p) + " is not a prime below 2^31");
    FieldSpec s;
    s.kind = Kind::Prime;
    s.p = p;
    return s;
}

FieldSpec FieldSpec::parse(const std::string& text)
{
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("gf:", 0) == 0) {
        const char* b = text.data() + 3;
        const char* e = text.data() + text.size();
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(b, e, p);
        if (ec == std::errc{} && ptr == e && b != e && p < (1ull << 31)) return prime(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("field: expected 'q' or 'gf:P', got '" + text + "'");
}

std::string FieldSpec::to_string() const
{
    return kind == Kind::Rationals ? "q" : "gf:" + std::to_string(p);
}

} // namespace lgb
