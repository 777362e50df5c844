#include "marked/marked_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "marked/errors.hpp"

namespace marked {

XPoly MarkedPoly::poly() const {
    return XPoly::monomial(head) - tail;
}

MarkedSet::MarkedSet(StronglyStableIdeal ideal, std::vector<MarkedPoly> polys, bool superminimal,
                     std::shared_ptr<const ParamTable> params)
    : ideal_(std::move(ideal)),
      polys_(std::move(polys)),
      superminimal_(superminimal),
      params_(std::move(params)) {
    std::sort(polys_.begin(), polys_.end(),
              [](const MarkedPoly& a, const MarkedPoly& b) {
                  return CanonicalLess{}(a.head, b.head);
              });
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        if (!by_head_.emplace(polys_[i].head, i).second)
            throw std::invalid_argument("duplicate head " + to_string(polys_[i].head) +
                                        " in marked set");
    }
    const std::vector<Monomial> expected =
        superminimal_ ? superminimal_generators(ideal_) : ideal_.basis();
    if (polys_.size() != expected.size())
        throw std::invalid_argument("marked set heads do not cover the expected basis");
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (!(polys_[i].head == expected[i]))
            throw std::invalid_argument("marked set heads do not match the expected basis");
    for (const auto& f : polys_) {
        for (const auto& [m, c] : f.tail.terms()) {
            if (m.degree() != f.head.degree())
                throw std::invalid_argument("tail of " + to_string(f.head) +
                                            " is not homogeneous of the head degree");
            if (ideal_.contains(m))
                throw std::invalid_argument("tail monomial " + to_string(m) + " of " +
                                            to_string(f.head) + " lies in the ideal");
        }
    }
}

const MarkedPoly* MarkedSet::find(const Monomial& head) const {
    auto it = by_head_.find(head);
    return it == by_head_.end() ? nullptr : &polys_[it->second];
}

const MarkedPoly& MarkedSet::at(const Monomial& head) const {
    const MarkedPoly* p = find(head);
    if (!p) throw std::invalid_argument("no marked polynomial with head " + to_string(head));
    return *p;
}

MarkedSet MarkedSet::superminimal_subset() const {
    if (superminimal_) return *this;
    std::vector<MarkedPoly> subset;
    for (const auto& h : superminimal_generators(ideal_)) subset.push_back(at(h));
    return MarkedSet(ideal_, std::move(subset), /*superminimal=*/true, params_);
}

namespace {

MarkedSet build_generic(const StronglyStableIdeal& j, const std::vector<Monomial>& heads,
                        bool superminimal) {
    std::vector<Parameter> params;
    for (const auto& h : heads)
        for (const auto& g : complement(j, h.degree())) params.push_back(Parameter{h, g});
    auto table = std::make_shared<const ParamTable>(std::move(params));

    std::vector<MarkedPoly> polys;
    polys.reserve(heads.size());
    for (const auto& h : heads) {
        XPoly tail;
        for (const auto& g : complement(j, h.degree())) {
            auto idx = table->find(h, g);
            if (!idx) throw InternalError("parameter missing from its own table");
            tail.insert(g, ParamPoly::parameter(*idx));
        }
        polys.push_back(MarkedPoly{h, std::move(tail)});
    }
    return MarkedSet(j, std::move(polys), superminimal, std::move(table));
}

}  // namespace

MarkedSet generic_marked_set(const StronglyStableIdeal& j) {
    return build_generic(j, j.basis(), /*superminimal=*/false);
}

MarkedSet generic_superminimal_set(const StronglyStableIdeal& j) {
    if (!is_m_truncation(j))
        throw DomainError("the generic superminimal set needs an m-truncation ideal");
    return build_generic(j, superminimal_generators(j), /*superminimal=*/true);
}

MarkedSet specialize(const MarkedSet& set, const std::vector<Rational>& assignment) {
    if (!set.params())
        throw std::invalid_argument("specialize needs a set with a parameter table");
    if (assignment.size() != set.params()->size())
        throw std::invalid_argument("assignment size does not match the parameter count");
    std::vector<MarkedPoly> polys;
    polys.reserve(set.polys().size());
    for (const auto& f : set.polys()) {
        XPoly tail;
        for (const auto& [m, c] : f.tail.terms())
            tail.insert(m, ParamPoly::constant(c.eval(assignment)));
        polys.push_back(MarkedPoly{f.head, std::move(tail)});
    }
    return MarkedSet(set.ideal(), std::move(polys), set.superminimal());
}

MarkedSet specialize(const MarkedSet& set,
                     const std::map<std::pair<std::string, std::string>, Rational>& assignment) {
    if (!set.params())
        throw std::invalid_argument("specialize needs a set with a parameter table");
    const ParamTable& table = *set.params();
    if (assignment.size() != table.size())
        throw std::invalid_argument("assignment must cover every parameter exactly once");
    std::vector<Rational> point(table.size(), Rational(0));
    for (std::size_t i = 0; i < table.size(); ++i) {
        auto it = assignment.find(
            std::make_pair(to_string(table[i].head), to_string(table[i].tail)));
        if (it == assignment.end())
            throw std::invalid_argument("assignment missing parameter " + to_string(table[i]));
        point[i] = it->second;
    }
    return specialize(set, point);
}

}  // namespace marked
