#include "ringlab/report.hpp"

#include <fmt/format.h>

namespace ringlab {

namespace {

nlohmann::ordered_json tri_json(Tri t) {
    if (t == Tri::NotApplicable) return nullptr;
    return t == Tri::True;
}

template <class T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    return *v;
}

std::string opt_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "n/a"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Column values after spec, in header order.
std::vector<std::string> columns(const ClassificationReport& r) {
    if (r.error) return {"error: " + *r.error};
    std::vector<std::string> out{std::to_string(r.order)};
    for (auto p : all_properties) out.emplace_back(to_string(r.get(p)));
    out.push_back(std::to_string(r.idempotents));
    out.push_back(std::to_string(r.nilpotents));
    out.push_back(opt_text(r.units));
    out.push_back(opt_text(r.radical));
    out.push_back(std::to_string(r.bounded_index));
    return out;
}

}  // namespace

nlohmann::ordered_json to_json(const ClassificationReport& report, bool with_timings) {
    nlohmann::ordered_json j;
    j["spec"] = report.spec;
    if (report.error) {
        j["error"] = *report.error;
        return j;
    }
    j["order"] = report.order;
    auto& props = j["properties"] = nlohmann::ordered_json::object();
    for (const auto& [p, value] : report.properties) props[property_key(p)] = tri_json(value);
    j["counts"] = {
        {"id", report.idempotents},       {"nil", report.nilpotents}, {"unit", opt_json(report.units)},
        {"center", report.center},        {"radical", opt_json(report.radical)},
    };
    j["bounded_index"] = report.bounded_index;
    auto& timings = j["timings"] = nlohmann::ordered_json::object();
    if (with_timings)
        for (const auto& [name, seconds] : report.timings) timings[name] = seconds;
    return j;
}

std::string render_text(const ClassificationReport& report, bool with_timings) {
    if (report.error) return fmt::format("spec: {}\nerror: {}\n", report.spec, *report.error);
    std::string out = fmt::format("spec: {}\norder: {}\nunital: {}\n", report.spec, report.order,
                                  report.unital ? "true" : "false");
    for (const auto& [p, value] : report.properties) {
        out += fmt::format("{}: {}", property_key(p), to_string(value));
        for (const auto& [q, a] : report.counterexamples)
            if (q == p) out += fmt::format(" (counterexample: element {})", a.index);
        out += '\n';
    }
    out += fmt::format("idempotents: {}\nnilpotents: {}\nunits: {}\ncenter: {}\nradical: {}\nbounded_index: {}\n",
                       report.idempotents, report.nilpotents, opt_text(report.units), report.center,
                       opt_text(report.radical), report.bounded_index);
    if (with_timings)
        for (const auto& [name, seconds] : report.timings) out += fmt::format("time {}: {:.6f}s\n", name, seconds);
    return out;
}

std::string csv_row(const ClassificationReport& report) {
    std::string out = csv_field(report.spec);
    for (const auto& c : columns(report)) out += "," + csv_field(c);
    return out;
}

std::string render_csv(const std::vector<ClassificationReport>& reports) {
    std::string out = std::string(csv_header) + "\n";
    for (const auto& r : reports) out += csv_row(r) + "\n";
    return out;
}

std::string render_table(const std::vector<ClassificationReport>& reports) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    {
        std::string h = csv_header;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= h.size(); ++i)
            if (i == h.size() || h[i] == ',') {
                header.push_back(h.substr(start, i - start));
                start = i + 1;
            }
    }
    rows.push_back(header);
    for (const auto& r : reports) {
        std::vector<std::string> row{r.spec};
        for (auto& c : columns(r)) row.push_back(std::move(c));
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += i + 1 == row.size() ? row[i] : fmt::format("{:<{}}", row[i], width[i]);
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace ringlab
