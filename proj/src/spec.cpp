#include "ringlab/spec.hpp"

#include <fmt/format.h>

#include "ringlab/core.hpp"

namespace ringlab {
namespace spec {

namespace {
SpecPtr make(RingSpec::Node node) { return std::make_shared<const RingSpec>(RingSpec{std::move(node)}); }

void require_base(const SpecPtr& base) {
    if (!base) throw PreconditionError("ring spec is missing its base ring");
}
}  // namespace

SpecPtr zn(std::uint32_t n) {
    if (n < 1) throw PreconditionError("Z_n needs n >= 1");
    return make(spec_node::Zn{n});
}

SpecPtr product(std::vector<SpecPtr> parts) {
    std::vector<SpecPtr> flat;
    for (auto& p : parts) {
        require_base(p);
        if (auto* inner = std::get_if<spec_node::Product>(&p->node))
            flat.insert(flat.end(), inner->parts.begin(), inner->parts.end());
        else
            flat.push_back(std::move(p));
    }
    if (flat.empty()) throw PreconditionError("product of no rings");
    if (flat.size() == 1) return flat.front();
    return make(spec_node::Product{std::move(flat)});
}

SpecPtr matrix(std::uint32_t k, SpecPtr base) {
    require_base(base);
    if (k < 1) throw PreconditionError("matrix size must be at least 1");
    return make(spec_node::Matrix{k, std::move(base)});
}

SpecPtr triangular(std::uint32_t k, SpecPtr base) {
    require_base(base);
    if (k < 2) throw PreconditionError("triangular matrix size must be at least 2");
    return make(spec_node::Triangular{k, std::move(base)});
}

SpecPtr poly_mod(SpecPtr base, std::uint32_t n) {
    require_base(base);
    if (n < 1) throw PreconditionError("truncation degree must be at least 1");
    return make(spec_node::PolyMod{std::move(base), n});
}

SpecPtr trivial_ext(SpecPtr base) {
    require_base(base);
    return make(spec_node::TrivialExt{std::move(base)});
}

SpecPtr quotient(SpecPtr base, std::vector<std::uint32_t> generators) {
    require_base(base);
    return make(spec_node::Quotient{std::move(base), std::move(generators)});
}

SpecPtr corner(SpecPtr base, std::uint32_t e) {
    require_base(base);
    return make(spec_node::Corner{std::move(base), e});
}

SpecPtr opposite(SpecPtr base) {
    require_base(base);
    return make(spec_node::Opposite{std::move(base)});
}

SpecPtr ideal_ring(SpecPtr base, std::vector<std::uint32_t> generators) {
    require_base(base);
    return make(spec_node::IdealRing{std::move(base), std::move(generators)});
}

}  // namespace spec

namespace {

std::string int_list(const std::vector<std::uint32_t>& xs) {
    return fmt::format("{{{}}}", fmt::join(xs, ","));
}

struct Printer {
    std::string operator()(const spec_node::Zn& z) const { return fmt::format("Z{}", z.n); }
    std::string operator()(const spec_node::Product& p) const {
        std::string out;
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            if (i) out += 'x';
            out += to_string(*p.parts[i]);
        }
        return out;
    }
    std::string operator()(const spec_node::Matrix& m) const {
        return fmt::format("M{}({})", m.k, to_string(*m.base));
    }
    std::string operator()(const spec_node::Triangular& t) const {
        return fmt::format("T{}({})", t.k, to_string(*t.base));
    }
    std::string operator()(const spec_node::PolyMod& p) const {
        auto base = to_string(*p.base);
        if (std::holds_alternative<spec_node::Product>(p.base->node)) base = "(" + base + ")";
        return fmt::format("{}[x]/(x^{})", base, p.n);
    }
    std::string operator()(const spec_node::TrivialExt& t) const {
        return fmt::format("Triv({})", to_string(*t.base));
    }
    std::string operator()(const spec_node::Quotient& q) const {
        return fmt::format("Quot({},{})", to_string(*q.base), int_list(q.generators));
    }
    std::string operator()(const spec_node::Corner& c) const {
        return fmt::format("Corner({},{})", to_string(*c.base), c.e);
    }
    std::string operator()(const spec_node::Opposite& o) const {
        return fmt::format("Op({})", to_string(*o.base));
    }
    std::string operator()(const spec_node::IdealRing& i) const {
        return fmt::format("Ideal({},{})", to_string(*i.base), int_list(i.generators));
    }
};

}  // namespace

std::string to_string(const RingSpec& spec) { return std::visit(Printer{}, spec.node); }

bool operator==(const RingSpec& lhs, const RingSpec& rhs) { return to_string(lhs) == to_string(rhs); }

}  // namespace ringlab
