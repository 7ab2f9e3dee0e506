#include "ringlab/construct.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>

#include <fmt/format.h>

#include "ringlab/structure.hpp"

namespace ringlab {

BuildOptions BuildOptions::from_environment() {
    BuildOptions options;
    if (const char* raw = std::getenv("RINGLAB_MAX_ORDER")) {
        char* end = nullptr;
        const auto value = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || value == 0)
            throw PreconditionError(fmt::format("RINGLAB_MAX_ORDER must be a positive integer, got '{}'", raw));
        options.max_order = static_cast<std::size_t>(value);
    }
    return options;
}

Element SubRing::from_parent(Element x) const {
    if (!contains_parent(x))
        throw PreconditionError(fmt::format("element {} is not in the subring", x.index));
    return Element{static_cast<Index>(position[x.index])};
}

namespace {

constexpr std::size_t max_digits = 32;
using Digits = std::array<Index, max_digits>;

std::size_t checked_power(std::size_t base, std::size_t exponent, std::size_t cap,
                          const std::string& what) {
    std::size_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > cap / base)
            throw CapExceededError(fmt::format("{} exceeds the order cap {}", what, cap));
        result *= base;
    }
    if (result > cap) throw CapExceededError(fmt::format("{} exceeds the order cap {}", what, cap));
    return result;
}

void check_order(std::size_t order, const BuildOptions& options, const std::string& what) {
    if (order > options.max_order)
        throw CapExceededError(
            fmt::format("{} has order {} above the cap {}", what, order, options.max_order));
}

FiniteRing finish(FiniteRing ring, const BuildOptions& options) {
    const bool validate = ring.order() <= options.validate_cap || options.validate_above_cap;
    if (validate) {
        if (auto failure = validate_axioms(ring))
            throw InvalidRingError("constructed ring " + ring.spec() + " is invalid: " +
                                   failure->describe());
    }
    return ring;
}

bool has_top_level_product(const std::string& s) {
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        else if (c == 'x' && depth == 0) return true;
    }
    return false;
}

// Uniform mixed radix over `count` digits, most significant first.
void decode_uniform(Index x, Index radix, std::size_t count, Index* digits) {
    for (std::size_t i = count; i-- > 0;) {
        digits[i] = x % radix;
        x /= radix;
    }
}

Index encode_uniform(const Index* digits, Index radix, std::size_t count) {
    Index x = 0;
    for (std::size_t i = 0; i < count; ++i) x = x * radix + digits[i];
    return x;
}

class ZnBackend final : public RingBackend {
public:
    explicit ZnBackend(Index n) : n_(n) {}
    Index add(Index a, Index b) const override { return (a + b) % n_; }
    Index mul(Index a, Index b) const override {
        return static_cast<Index>((std::uint64_t(a) * b) % n_);
    }
    Index neg(Index a) const override { return a == 0 ? 0 : n_ - a; }

private:
    Index n_;
};

class ProductBackend final : public RingBackend {
public:
    explicit ProductBackend(std::vector<FiniteRing> parts) : parts_(std::move(parts)) {}

    Index add(Index a, Index b) const override {
        return combine(a, b, [](const FiniteRing& r, Element x, Element y) { return r.add(x, y); });
    }
    Index mul(Index a, Index b) const override {
        return combine(a, b, [](const FiniteRing& r, Element x, Element y) { return r.mul(x, y); });
    }
    Index neg(Index a) const override {
        return combine(a, a, [](const FiniteRing& r, Element x, Element) { return r.neg(x); });
    }

private:
    template <class Op>
    Index combine(Index a, Index b, Op op) const {
        Digits out{};
        for (std::size_t i = parts_.size(); i-- > 0;) {
            const auto radix = static_cast<Index>(parts_[i].order());
            out[i] = op(parts_[i], Element{a % radix}, Element{b % radix}).index;
            a /= radix;
            b /= radix;
        }
        Index x = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            x = x * static_cast<Index>(parts_[i].order()) + out[i];
        return x;
    }

    std::vector<FiniteRing> parts_;
};

// Full or upper triangular k x k matrices; stored entries row-major.
class MatrixBackend final : public RingBackend {
public:
    MatrixBackend(FiniteRing base, std::uint32_t k, bool triangular)
        : base_(std::move(base)), k_(k), triangular_(triangular) {
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = triangular ? i : 0; j < k; ++j) slots_.push_back(i * k + j);
        if (slots_.size() > max_digits || std::size_t(k) * k > max_digits)
            throw PreconditionError("matrix too large for the element encoding");
    }

    Index add(Index a, Index b) const override {
        Digits x{}, y{};
        unpack(a, x);
        unpack(b, y);
        for (auto s : slots_) x[s] = base_.add(Element{x[s]}, Element{y[s]}).index;
        return pack(x);
    }
    Index neg(Index a) const override {
        Digits x{};
        unpack(a, x);
        for (auto s : slots_) x[s] = base_.neg(Element{x[s]}).index;
        return pack(x);
    }
    Index mul(Index a, Index b) const override {
        Digits x{}, y{}, z{};
        unpack(a, x);
        unpack(b, y);
        for (std::uint32_t i = 0; i < k_; ++i) {
            for (std::uint32_t j = triangular_ ? i : 0; j < k_; ++j) {
                Element acc = base_.zero();
                const std::uint32_t lo = triangular_ ? i : 0;
                const std::uint32_t hi = triangular_ ? j : k_ - 1;
                for (std::uint32_t t = lo; t <= hi; ++t)
                    acc = base_.add(acc, base_.mul(Element{x[i * k_ + t]}, Element{y[t * k_ + j]}));
                z[i * k_ + j] = acc.index;
            }
        }
        return pack(z);
    }

private:
    void unpack(Index a, Digits& full) const {
        const auto zero = base_.zero().index;
        full.fill(zero);
        const auto radix = static_cast<Index>(base_.order());
        for (std::size_t i = slots_.size(); i-- > 0;) {
            full[slots_[i]] = a % radix;
            a /= radix;
        }
    }
    Index pack(const Digits& full) const {
        const auto radix = static_cast<Index>(base_.order());
        Index x = 0;
        for (auto s : slots_) x = x * radix + full[s];
        return x;
    }

    FiniteRing base_;
    std::uint32_t k_;
    bool triangular_;
    std::vector<std::uint32_t> slots_;
};

// base[X]/(X^n) as coefficient tuples (c0, ..., c(n-1)).
class PolyModBackend final : public RingBackend {
public:
    PolyModBackend(FiniteRing base, std::uint32_t n) : base_(std::move(base)), n_(n) {
        if (n > max_digits) throw PreconditionError("truncation degree too large for the encoding");
    }

    Index add(Index a, Index b) const override {
        Digits x{}, y{};
        unpack(a, x);
        unpack(b, y);
        for (std::uint32_t i = 0; i < n_; ++i) x[i] = base_.add(Element{x[i]}, Element{y[i]}).index;
        return pack(x);
    }
    Index neg(Index a) const override {
        Digits x{};
        unpack(a, x);
        for (std::uint32_t i = 0; i < n_; ++i) x[i] = base_.neg(Element{x[i]}).index;
        return pack(x);
    }
    Index mul(Index a, Index b) const override {
        Digits x{}, y{}, z{};
        unpack(a, x);
        unpack(b, y);
        for (std::uint32_t k = 0; k < n_; ++k) {
            Element acc = base_.zero();
            for (std::uint32_t i = 0; i <= k; ++i)
                acc = base_.add(acc, base_.mul(Element{x[i]}, Element{y[k - i]}));
            z[k] = acc.index;
        }
        return pack(z);
    }

private:
    void unpack(Index a, Digits& d) const {
        decode_uniform(a, static_cast<Index>(base_.order()), n_, d.data());
    }
    Index pack(const Digits& d) const {
        return encode_uniform(d.data(), static_cast<Index>(base_.order()), n_);
    }

    FiniteRing base_;
    std::uint32_t n_;
};

// (a, x)(b, y) = (ab, ay + xb) with the regular bimodule.
class TrivialExtBackend final : public RingBackend {
public:
    explicit TrivialExtBackend(FiniteRing base) : base_(std::move(base)), n_(Index(base_.order())) {}

    Index add(Index u, Index v) const override {
        return pack(base_.add(ring(u), ring(v)), base_.add(module(u), module(v)));
    }
    Index neg(Index u) const override { return pack(base_.neg(ring(u)), base_.neg(module(u))); }
    Index mul(Index u, Index v) const override {
        const Element a = ring(u), x = module(u), b = ring(v), y = module(v);
        return pack(base_.mul(a, b), base_.add(base_.mul(a, y), base_.mul(x, b)));
    }

private:
    Element ring(Index u) const { return Element{u / n_}; }
    Element module(Index u) const { return Element{u % n_}; }
    Index pack(Element a, Element x) const { return a.index * n_ + x.index; }

    FiniteRing base_;
    Index n_;
};

class OppositeBackend final : public RingBackend {
public:
    explicit OppositeBackend(FiniteRing base) : base_(std::move(base)) {}
    Index add(Index a, Index b) const override { return base_.add(Element{a}, Element{b}).index; }
    Index mul(Index a, Index b) const override { return base_.mul(Element{b}, Element{a}).index; }
    Index neg(Index a) const override { return base_.neg(Element{a}).index; }

private:
    FiniteRing base_;
};

class SubsetBackend final : public RingBackend {
public:
    SubsetBackend(FiniteRing parent, std::vector<Element> members, std::vector<std::int64_t> position)
        : parent_(std::move(parent)), members_(std::move(members)), position_(std::move(position)) {}

    Index add(Index a, Index b) const override { return lift(parent_.add(members_[a], members_[b])); }
    Index mul(Index a, Index b) const override { return lift(parent_.mul(members_[a], members_[b])); }
    Index neg(Index a) const override { return lift(parent_.neg(members_[a])); }

private:
    Index lift(Element x) const {
        const auto p = position_[x.index];
        if (p < 0) throw RingError("subset is not closed under the ring operations");
        return static_cast<Index>(p);
    }

    FiniteRing parent_;
    std::vector<Element> members_;
    std::vector<std::int64_t> position_;
};

class QuotientBackend final : public RingBackend {
public:
    QuotientBackend(FiniteRing parent, std::vector<Element> projection, std::vector<Element> reps)
        : parent_(std::move(parent)), projection_(std::move(projection)), reps_(std::move(reps)) {}

    Index add(Index a, Index b) const override {
        return projection_[parent_.add(reps_[a], reps_[b]).index].index;
    }
    Index mul(Index a, Index b) const override {
        return projection_[parent_.mul(reps_[a], reps_[b]).index].index;
    }
    Index neg(Index a) const override { return projection_[parent_.neg(reps_[a]).index].index; }

private:
    FiniteRing parent_;
    std::vector<Element> projection_;
    std::vector<Element> reps_;
};

std::string wrap(const char* head, const std::string& inner) {
    return fmt::format("{}({})", head, inner);
}

std::string int_list(const std::vector<Element>& xs) {
    std::vector<Index> raw;
    for (auto x : xs) raw.push_back(x.index);
    return fmt::format("{{{}}}", fmt::join(raw, ","));
}

}  // namespace

namespace construct {

FiniteRing zn_ring(std::uint32_t n, const BuildOptions& options) {
    if (n < 1) throw PreconditionError("Z_n needs n >= 1");
    check_order(n, options, fmt::format("Z{}", n));
    const Element one{n == 1 ? 0u : 1u};
    return finish(FiniteRing(n, std::make_shared<ZnBackend>(n), Element{0}, one, fmt::format("Z{}", n),
                             options.table_cap),
                  options);
}

FiniteRing product_ring(const std::vector<FiniteRing>& parts, const BuildOptions& options) {
    if (parts.empty()) throw PreconditionError("product of no rings");
    if (parts.size() > max_digits) throw PreconditionError("too many product factors");
    std::size_t order = 1;
    std::string name;
    for (const auto& p : parts) {
        if (order > options.max_order / p.order())
            throw CapExceededError(fmt::format("product exceeds the order cap {}", options.max_order));
        order *= p.order();
        if (!name.empty()) name += 'x';
        name += p.spec();
    }
    check_order(order, options, name);
    std::vector<Element> zero_digits, one_digits;
    bool unital = true;
    for (const auto& p : parts) {
        zero_digits.push_back(p.zero());
        if (p.unital()) one_digits.push_back(p.one());
        else unital = false;
    }
    const Element zero = layout::product_element(parts, zero_digits);
    std::optional<Element> one;
    if (unital) one = layout::product_element(parts, one_digits);
    return finish(FiniteRing(order, std::make_shared<ProductBackend>(parts), zero, one, name,
                             options.table_cap),
                  options);
}

FiniteRing matrix_ring(const FiniteRing& base, std::uint32_t k, const BuildOptions& options) {
    if (k < 1) throw PreconditionError("matrix size must be at least 1");
    const std::string name = fmt::format("M{}({})", k, base.spec());
    const auto order = checked_power(base.order(), std::size_t(k) * k, options.max_order, name);
    std::vector<Element> zeros(std::size_t(k) * k, base.zero());
    const Element zero = layout::matrix_element(base, k, zeros);
    std::optional<Element> one;
    if (base.unital()) {
        auto ident = zeros;
        for (std::uint32_t i = 0; i < k; ++i) ident[i * k + i] = base.one();
        one = layout::matrix_element(base, k, ident);
    }
    return finish(FiniteRing(order, std::make_shared<MatrixBackend>(base, k, false), zero, one, name,
                             options.table_cap),
                  options);
}

FiniteRing triangular_ring(const FiniteRing& base, std::uint32_t k, const BuildOptions& options) {
    if (k < 2) throw PreconditionError("triangular matrix size must be at least 2");
    const std::string name = fmt::format("T{}({})", k, base.spec());
    const auto order =
        checked_power(base.order(), std::size_t(k) * (k + 1) / 2, options.max_order, name);
    std::vector<Element> zeros(std::size_t(k) * k, base.zero());
    const Element zero = layout::triangular_element(base, k, zeros);
    std::optional<Element> one;
    if (base.unital()) {
        auto ident = zeros;
        for (std::uint32_t i = 0; i < k; ++i) ident[i * k + i] = base.one();
        one = layout::triangular_element(base, k, ident);
    }
    return finish(FiniteRing(order, std::make_shared<MatrixBackend>(base, k, true), zero, one, name,
                             options.table_cap),
                  options);
}

FiniteRing poly_mod_ring(const FiniteRing& base, std::uint32_t n, const BuildOptions& options) {
    if (n < 1) throw PreconditionError("truncation degree must be at least 1");
    auto base_name = base.spec();
    if (has_top_level_product(base_name)) base_name = "(" + base_name + ")";
    const std::string name = fmt::format("{}[x]/(x^{})", base_name, n);
    const auto order = checked_power(base.order(), n, options.max_order, name);
    std::vector<Element> coeffs(n, base.zero());
    const Element zero = layout::poly_element(base, n, coeffs);
    std::optional<Element> one;
    if (base.unital()) {
        coeffs[0] = base.one();
        one = layout::poly_element(base, n, coeffs);
    }
    return finish(FiniteRing(order, std::make_shared<PolyModBackend>(base, n), zero, one, name,
                             options.table_cap),
                  options);
}

FiniteRing trivial_extension(const FiniteRing& base, const BuildOptions& options) {
    const std::string name = wrap("Triv", base.spec());
    const auto order = checked_power(base.order(), 2, options.max_order, name);
    const Element zero = layout::trivial_ext_element(base, base.zero(), base.zero());
    std::optional<Element> one;
    if (base.unital()) one = layout::trivial_ext_element(base, base.one(), base.zero());
    return finish(FiniteRing(order, std::make_shared<TrivialExtBackend>(base), zero, one, name,
                             options.table_cap),
                  options);
}

FiniteRing opposite(const FiniteRing& ring, const BuildOptions& options) {
    return finish(FiniteRing(ring.order(), std::make_shared<OppositeBackend>(ring), ring.zero(),
                             ring.maybe_one(), wrap("Op", ring.spec()), options.table_cap),
                  options);
}

SubRing subring(const FiniteRing& ring, std::vector<Element> members, std::optional<Element> one,
                std::string spec, const BuildOptions& options) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<std::int64_t> position(ring.order(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) position[members[i].index] = std::int64_t(i);
    if (position[ring.zero().index] < 0) throw PreconditionError("subring must contain zero");
    if (one && position[one->index] < 0) throw PreconditionError("subring identity is not a member");
    const Element zero{static_cast<Index>(position[ring.zero().index])};
    std::optional<Element> sub_one;
    if (one) sub_one = Element{static_cast<Index>(position[one->index])};
    auto backend = std::make_shared<SubsetBackend>(ring, members, position);
    FiniteRing sub(members.size(), std::move(backend), zero, sub_one, std::move(spec), options.table_cap);
    return SubRing{finish(std::move(sub), options), std::move(members), std::move(position)};
}

SubRing corner(const FiniteRing& ring, Element e, const BuildOptions& options) {
    ring.element(e.index);
    if (!ring.is_idempotent(e))
        throw PreconditionError(fmt::format("corner element {} is not idempotent", e.index));
    std::vector<bool> seen(ring.order(), false);
    std::vector<Element> members;
    for (Index r = 0; r < ring.order(); ++r) {
        const Element x = ring.mul(e, Element{r}, e);
        if (!seen[x.index]) {
            seen[x.index] = true;
            members.push_back(x);
        }
    }
    return subring(ring, std::move(members), e, fmt::format("Corner({},{})", ring.spec(), e.index),
                   options);
}

SubRing ideal_ring(const FiniteRing& ring, const std::vector<Element>& gens, const BuildOptions& options) {
    auto ideal = ideal_generated(ring, gens);
    const auto& members = ideal.members.members();
    // An ideal is unital only if it contains an identity of its own.
    std::optional<Element> one;
    for (auto candidate : members) {
        bool identity = true;
        for (auto y : members) {
            if (ring.mul(candidate, y) != y || ring.mul(y, candidate) != y) {
                identity = false;
                break;
            }
        }
        if (identity) {
            one = candidate;
            break;
        }
    }
    return subring(ring, members, one, fmt::format("Ideal({},{})", ring.spec(), int_list(gens)),
                   options);
}

QuotientRing quotient(const FiniteRing& ring, const Ideal& ideal, const BuildOptions& options) {
    if (!ideal.ring.same_as(ring) && !ideal.ring.tables_equal(ring))
        throw PreconditionError("ideal belongs to a different ring");
    constexpr Index unassigned = std::numeric_limits<Index>::max();
    std::vector<Index> coset(ring.order(), unassigned);
    std::vector<Element> reps;
    // Scanning in index order makes each coset's first member its minimum.
    for (Index x = 0; x < ring.order(); ++x) {
        if (coset[x] != unassigned) continue;
        const auto id = static_cast<Index>(reps.size());
        reps.push_back(Element{x});
        for (auto i : ideal.members) coset[ring.add(Element{x}, i).index] = id;
    }
    std::vector<Element> projection(ring.order());
    for (Index x = 0; x < ring.order(); ++x) projection[x] = Element{coset[x]};
    const Element zero = projection[ring.zero().index];
    std::optional<Element> one;
    if (ring.unital()) one = projection[ring.one().index];
    auto name = fmt::format("Quot({},{})", ring.spec(), int_list(ideal.generators));
    auto backend = std::make_shared<QuotientBackend>(ring, projection, reps);
    FiniteRing top(reps.size(), std::move(backend), zero, one, std::move(name), options.table_cap);
    return QuotientRing{finish(std::move(top), options), std::move(projection), std::move(reps)};
}

}  // namespace construct

namespace {

struct Builder {
    const BuildOptions& options;

    std::vector<Element> elements_of(const FiniteRing& ring, const std::vector<std::uint32_t>& raw) const {
        std::vector<Element> out;
        for (auto i : raw) {
            if (i >= ring.order())
                throw PreconditionError(fmt::format("generator {} is outside {} (order {})", i,
                                                    ring.spec(), ring.order()));
            out.push_back(Element{i});
        }
        return out;
    }

    FiniteRing operator()(const spec_node::Zn& z) const { return construct::zn_ring(z.n, options); }
    FiniteRing operator()(const spec_node::Product& p) const {
        std::vector<FiniteRing> parts;
        for (const auto& part : p.parts) parts.push_back(build(*part, options));
        return construct::product_ring(parts, options);
    }
    FiniteRing operator()(const spec_node::Matrix& m) const {
        return construct::matrix_ring(build(*m.base, options), m.k, options);
    }
    FiniteRing operator()(const spec_node::Triangular& t) const {
        return construct::triangular_ring(build(*t.base, options), t.k, options);
    }
    FiniteRing operator()(const spec_node::PolyMod& p) const {
        return construct::poly_mod_ring(build(*p.base, options), p.n, options);
    }
    FiniteRing operator()(const spec_node::TrivialExt& t) const {
        return construct::trivial_extension(build(*t.base, options), options);
    }
    FiniteRing operator()(const spec_node::Quotient& q) const {
        auto base = build(*q.base, options);
        auto gens = elements_of(base, q.generators);
        return construct::quotient(base, ideal_generated(base, gens), options).ring;
    }
    FiniteRing operator()(const spec_node::Corner& c) const {
        auto base = build(*c.base, options);
        return construct::corner(base, base.element(c.e), options).ring;
    }
    FiniteRing operator()(const spec_node::Opposite& o) const {
        return construct::opposite(build(*o.base, options), options);
    }
    FiniteRing operator()(const spec_node::IdealRing& i) const {
        auto base = build(*i.base, options);
        return construct::ideal_ring(base, elements_of(base, i.generators), options).ring;
    }
};

}  // namespace

FiniteRing build(const RingSpec& spec, const BuildOptions& options) {
    return std::visit(Builder{options}, spec.node);
}

namespace layout {

std::vector<Element> product_components(const std::vector<FiniteRing>& parts, Element x) {
    std::vector<Element> out(parts.size());
    Index rest = x.index;
    for (std::size_t i = parts.size(); i-- > 0;) {
        const auto radix = static_cast<Index>(parts[i].order());
        out[i] = Element{rest % radix};
        rest /= radix;
    }
    return out;
}

Element product_element(const std::vector<FiniteRing>& parts, std::span<const Element> components) {
    if (components.size() != parts.size()) throw PreconditionError("wrong number of components");
    Index x = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        x = x * static_cast<Index>(parts[i].order()) + parts[i].element(components[i].index).index;
    return Element{x};
}

std::vector<Element> matrix_entries(const FiniteRing& base, std::uint32_t k, Element x) {
    std::vector<Index> digits(std::size_t(k) * k);
    decode_uniform(x.index, static_cast<Index>(base.order()), digits.size(), digits.data());
    std::vector<Element> out;
    for (auto d : digits) out.push_back(Element{d});
    return out;
}

Element matrix_element(const FiniteRing& base, std::uint32_t k, std::span<const Element> entries) {
    if (entries.size() != std::size_t(k) * k) throw PreconditionError("wrong number of matrix entries");
    std::vector<Index> digits;
    for (auto e : entries) digits.push_back(base.element(e.index).index);
    return Element{encode_uniform(digits.data(), static_cast<Index>(base.order()), digits.size())};
}

std::vector<Element> triangular_entries(const FiniteRing& base, std::uint32_t k, Element x) {
    const std::size_t stored = std::size_t(k) * (k + 1) / 2;
    std::vector<Index> digits(stored);
    decode_uniform(x.index, static_cast<Index>(base.order()), stored, digits.data());
    std::vector<Element> out(std::size_t(k) * k, base.zero());
    std::size_t s = 0;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = i; j < k; ++j) out[i * k + j] = Element{digits[s++]};
    return out;
}

Element triangular_element(const FiniteRing& base, std::uint32_t k, std::span<const Element> entries) {
    if (entries.size() != std::size_t(k) * k) throw PreconditionError("wrong number of matrix entries");
    std::vector<Index> digits;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = i; j < k; ++j) digits.push_back(base.element(entries[i * k + j].index).index);
    return Element{encode_uniform(digits.data(), static_cast<Index>(base.order()), digits.size())};
}

std::vector<Element> poly_coefficients(const FiniteRing& base, std::uint32_t n, Element x) {
    std::vector<Index> digits(n);
    decode_uniform(x.index, static_cast<Index>(base.order()), n, digits.data());
    std::vector<Element> out;
    for (auto d : digits) out.push_back(Element{d});
    return out;
}

Element poly_element(const FiniteRing& base, std::uint32_t n, std::span<const Element> coeffs) {
    if (coeffs.size() != n) throw PreconditionError("wrong number of coefficients");
    std::vector<Index> digits;
    for (auto c : coeffs) digits.push_back(base.element(c.index).index);
    return Element{encode_uniform(digits.data(), static_cast<Index>(base.order()), n)};
}

std::pair<Element, Element> trivial_ext_parts(const FiniteRing& base, Element x) {
    const auto n = static_cast<Index>(base.order());
    return {Element{x.index / n}, Element{x.index % n}};
}

Element trivial_ext_element(const FiniteRing& base, Element ring_part, Element module_part) {
    const auto n = static_cast<Index>(base.order());
    return Element{base.element(ring_part.index).index * n + base.element(module_part.index).index};
}

}  // namespace layout

}  // namespace ringlab
