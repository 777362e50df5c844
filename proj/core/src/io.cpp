#include "marked/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace marked {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " +
                                    what + " in \"" + s + "\"");
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }
};

// var ('^' exp)?  where var = 'x' digits
bool parse_var_power(Cursor& c, std::size_t& var, long& exp) {
    c.skip_ws();
    if (c.peek() != 'x') return false;
    ++c.pos;
    if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        c.fail("expected a variable index after 'x'");
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    var = static_cast<std::size_t>(std::stoul(c.s.substr(start, c.pos - start)));
    exp = 1;
    if (c.accept('^')) {
        exp = c.integer();
        if (exp < 0) c.fail("negative exponent");
    }
    return true;
}

Monomial parse_monomial_at(Cursor& c, std::size_t nvars) {
    std::vector<std::int32_t> e(nvars, 0);
    bool any = false;
    for (;;) {
        c.skip_ws();
        if (c.peek() == '1' && !any) {
            ++c.pos;
            any = true;
        } else {
            std::size_t var;
            long exp;
            if (!parse_var_power(c, var, exp)) {
                if (!any) c.fail("expected a monomial");
                break;
            }
            if (var >= nvars)
                c.fail("variable x" + std::to_string(var) + " outside the ambient ring (nvars=" +
                       std::to_string(nvars) + ")");
            e[var] += static_cast<std::int32_t>(exp);
            any = true;
        }
        if (!c.accept('*')) break;
    }
    return Monomial(std::move(e));
}

std::size_t scan_max_index(const std::string& text) {
    std::size_t max_index = 0;
    bool any = false;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
        std::size_t k = i + 1, v = 0;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
            v = v * 10 + static_cast<std::size_t>(text[k] - '0');
            ++k;
        }
        max_index = std::max(max_index, v);
        any = true;
    }
    return any ? max_index + 1 : 0;
}

}  // namespace

std::size_t infer_nvars(const std::string& text) { return scan_max_index(text); }

Monomial parse_monomial(const std::string& text, std::size_t nvars) {
    Cursor c{text};
    Monomial m = parse_monomial_at(c, nvars);
    if (!c.done()) c.fail("trailing input after the monomial");
    return m;
}

StronglyStableIdeal parse_ideal(const std::string& text, std::optional<std::size_t> nvars) {
    const std::size_t n = nvars ? *nvars : scan_max_index(text);
    if (n == 0) throw std::invalid_argument("cannot infer the variable count from \"" + text + "\"");
    std::vector<Monomial> gens;
    Cursor c{text};
    do {
        gens.push_back(parse_monomial_at(c, n));
    } while (c.accept(','));
    if (!c.done()) c.fail("trailing input after the generator list");
    return StronglyStableIdeal::from_generators(std::move(gens), n);
}

namespace {

// [sign] [coeff '*'] monomial | [sign] coeff
bool parse_term(Cursor& c, std::size_t nvars, Rational& coeff, Monomial& mono) {
    c.skip_ws();
    if (c.done()) return false;
    int sign = 1;
    if (c.accept('-'))
        sign = -1;
    else
        c.accept('+');
    c.skip_ws();
    coeff = sign;
    bool have_coeff = false;
    if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        long num = c.integer();
        long den = 1;
        if (c.accept('/')) {
            den = c.integer();
            if (den == 0) c.fail("zero denominator");
        }
        coeff = Rational(num, den) * sign;
        coeff.canonicalize();
        have_coeff = true;
    }
    c.skip_ws();
    if (have_coeff) {
        if (c.accept('*')) {
            mono = parse_monomial_at(c, nvars);
        } else {
            mono = Monomial(nvars);  // bare constant term
        }
    } else {
        mono = parse_monomial_at(c, nvars);
    }
    return true;
}

}  // namespace

XPoly parse_xpoly(const std::string& text, std::size_t nvars) {
    Cursor c{text};
    XPoly p;
    Rational coeff;
    Monomial mono(nvars);
    bool any = false;
    while (parse_term(c, nvars, coeff, mono)) {
        any = true;
        p.insert(mono, ParamPoly::constant(coeff));
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != '+' && c.peek() != '-') c.fail("expected '+' or '-' between terms");
    }
    if (!any) c.fail("expected a polynomial");
    return p;
}

MarkedSet parse_marked_set(std::istream& in, const StronglyStableIdeal& j, bool superminimal) {
    std::vector<MarkedPoly> polys;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected \"head = tail\"");
        Monomial head = parse_monomial(line.substr(0, eq), j.nvars());
        const std::string rhs = line.substr(eq + 1);
        XPoly tail;
        {
            Cursor probe{rhs};
            if (!(probe.accept('0') && probe.done())) tail = parse_xpoly(rhs, j.nvars());
        }
        polys.push_back(MarkedPoly{std::move(head), std::move(tail)});
    }
    return MarkedSet(j, std::move(polys), superminimal);
}

MarkedSet parse_marked_set(const std::string& text, const StronglyStableIdeal& j,
                           bool superminimal) {
    std::istringstream in(text);
    return parse_marked_set(in, j, superminimal);
}

std::string to_string(const StronglyStableIdeal& j) {
    std::string s;
    for (const auto& g : j.basis()) {
        if (!s.empty()) s += ", ";
        s += to_string(g);
    }
    return s;
}

std::string to_string(const MarkedSet& set) {
    std::string s;
    for (const auto& f : set.polys()) {
        s += to_string(f.head);
        s += " = ";
        s += f.tail.str(set.params().get());
        s += "\n";
    }
    return s;
}

}  // namespace marked
