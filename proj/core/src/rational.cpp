#include "marked/rational.hpp"

#include <stdexcept>

namespace marked {

Rational rational_from_string(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t");
    std::size_t end = s.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw std::invalid_argument("empty rational literal");
    std::string body = s.substr(begin, end - begin + 1);
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && i == 0);
        if (!ok) throw std::invalid_argument("malformed rational literal \"" + s + "\"");
    }
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    mpq_class q;
    try {
        q = mpq_class(body, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal \"" + s + "\"");
    }
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace marked
