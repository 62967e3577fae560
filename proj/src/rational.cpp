#include "pdg/rational.hpp"

#include <stdexcept>

namespace pdg {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            long long p = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(p);
        }
        size_t used_p = 0, used_q = 0;
        long long p = std::stoll(text.substr(0, slash), &used_p);
        std::string qs = text.substr(slash + 1);
        long long q = std::stoll(qs, &used_q);
        if (used_p != slash || used_q != qs.size() || q == 0)
            throw std::invalid_argument(text);
        return Rational(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: '" + text + "'");
    }
}

} // namespace pdg
