#include "ringlab/legend.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "ringlab/structure.hpp"

namespace ringlab {

namespace {

struct Labeler {
    const BuildOptions& options;

    using Labels = std::vector<std::string>;

    static std::string matrix_label(const Labels& base, std::uint32_t k, const std::vector<Element>& entries) {
        std::vector<std::string> rows;
        for (std::uint32_t i = 0; i < k; ++i) {
            std::vector<std::string> row;
            for (std::uint32_t j = 0; j < k; ++j) row.push_back(base[entries[std::size_t(i) * k + j].index]);
            rows.push_back(fmt::format("[{}]", fmt::join(row, ",")));
        }
        return fmt::format("[{}]", fmt::join(rows, ","));
    }

    Labels operator()(const spec_node::Zn& z) const {
        Labels out;
        for (std::uint32_t i = 0; i < z.n; ++i) out.push_back(std::to_string(i));
        return out;
    }
    Labels operator()(const spec_node::Product& p) const {
        std::vector<FiniteRing> parts;
        std::vector<Labels> labels;
        for (const auto& part : p.parts) {
            parts.push_back(build(*part, options));
            labels.push_back(element_legend(*part, options));
        }
        const FiniteRing ring = construct::product_ring(parts, options);
        Labels out;
        for (Index x = 0; x < ring.order(); ++x) {
            const auto comps = layout::product_components(parts, Element{x});
            std::vector<std::string> names;
            for (std::size_t i = 0; i < comps.size(); ++i) names.push_back(labels[i][comps[i].index]);
            out.push_back(fmt::format("({})", fmt::join(names, ", ")));
        }
        return out;
    }
    Labels operator()(const spec_node::Matrix& m) const {
        const FiniteRing base = build(*m.base, options);
        const auto labels = element_legend(*m.base, options);
        const FiniteRing ring = construct::matrix_ring(base, m.k, options);
        Labels out;
        for (Index x = 0; x < ring.order(); ++x)
            out.push_back(matrix_label(labels, m.k, layout::matrix_entries(base, m.k, Element{x})));
        return out;
    }
    Labels operator()(const spec_node::Triangular& t) const {
        const FiniteRing base = build(*t.base, options);
        const auto labels = element_legend(*t.base, options);
        const FiniteRing ring = construct::triangular_ring(base, t.k, options);
        Labels out;
        for (Index x = 0; x < ring.order(); ++x)
            out.push_back(matrix_label(labels, t.k, layout::triangular_entries(base, t.k, Element{x})));
        return out;
    }
    Labels operator()(const spec_node::PolyMod& p) const {
        const FiniteRing base = build(*p.base, options);
        const auto labels = element_legend(*p.base, options);
        const FiniteRing ring = construct::poly_mod_ring(base, p.n, options);
        Labels out;
        for (Index x = 0; x < ring.order(); ++x) {
            const auto coeffs = layout::poly_coefficients(base, p.n, Element{x});
            std::vector<std::string> terms;
            for (std::uint32_t i = 0; i < p.n; ++i) {
                const auto& c = labels[coeffs[i].index];
                terms.push_back(i == 0 ? c : i == 1 ? fmt::format("{}x", c) : fmt::format("{}x^{}", c, i));
            }
            out.push_back(fmt::format("{}", fmt::join(terms, " + ")));
        }
        return out;
    }
    Labels operator()(const spec_node::TrivialExt& t) const {
        const FiniteRing base = build(*t.base, options);
        const auto labels = element_legend(*t.base, options);
        const FiniteRing ring = construct::trivial_extension(base, options);
        Labels out;
        for (Index x = 0; x < ring.order(); ++x) {
            const auto [r, m] = layout::trivial_ext_parts(base, Element{x});
            out.push_back(fmt::format("({} | {})", labels[r.index], labels[m.index]));
        }
        return out;
    }
    Labels operator()(const spec_node::Quotient& q) const {
        const FiniteRing base = build(*q.base, options);
        const auto labels = element_legend(*q.base, options);
        std::vector<Element> gens;
        for (auto g : q.generators) gens.push_back(base.element(g));
        const auto top = construct::quotient(base, ideal_generated(base, gens), options);
        Labels out;
        for (auto rep : top.representatives) out.push_back(fmt::format("{} + I", labels[rep.index]));
        return out;
    }
    Labels operator()(const spec_node::Corner& c) const {
        const FiniteRing base = build(*c.base, options);
        return subset(element_legend(*c.base, options), construct::corner(base, base.element(c.e), options));
    }
    Labels operator()(const spec_node::Opposite& o) const { return element_legend(*o.base, options); }
    Labels operator()(const spec_node::IdealRing& i) const {
        const FiniteRing base = build(*i.base, options);
        std::vector<Element> gens;
        for (auto g : i.generators) gens.push_back(base.element(g));
        return subset(element_legend(*i.base, options), construct::ideal_ring(base, gens, options));
    }

    static Labels subset(const Labels& parent, const SubRing& sub) {
        Labels out;
        for (auto x : sub.embedding) out.push_back(parent[x.index]);
        return out;
    }
};

}  // namespace

std::vector<std::string> element_legend(const RingSpec& spec, const BuildOptions& options) {
    return std::visit(Labeler{options}, spec.node);
}

}  // namespace ringlab
