#include "fsseq/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fsseq/errors.hpp"

namespace fsseq {

namespace {

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

long parse_long(const std::string& s, long line, const std::string& field) {
    if (!is_integer_text(s)) throw ParseError(line, "field '" + field + "': expected integer, got '" + s + "'");
    try {
        return std::stol(s);
    } catch (const std::exception&) {
        throw ParseError(line, "field '" + field + "': integer out of range: '" + s + "'");
    }
}

Int parse_int(const std::string& s, long line, const std::string& field) {
    if (!is_integer_text(s)) throw ParseError(line, "field '" + field + "': expected integer, got '" + s + "'");
    return Int(s);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

/// key=value fields after the record tag, with an exact required set.
std::map<std::string, std::string> parse_fields(const std::vector<std::string>& toks, long line,
                                                const std::vector<std::string>& required) {
    std::map<std::string, std::string> out;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        auto eq = toks[i].find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError(line, "expected key=value, got '" + toks[i] + "'");
        std::string key = toks[i].substr(0, eq);
        if (!out.emplace(key, toks[i].substr(eq + 1)).second)
            throw ParseError(line, "duplicate field '" + key + "'");
    }
    for (const auto& r : required)
        if (!out.count(r)) throw ParseError(line, "missing field '" + r + "'");
    if (out.size() != required.size()) throw ParseError(line, "unexpected extra field");
    return out;
}

}  // namespace

Rat parse_rational(const std::string& text, long line) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-')
        throw ParseError(line, "expected rational 'num/den', got '" + text + "'");
    if (Int(den) == 0) throw ParseError(line, "zero denominator in '" + text + "'");
    Rat q{Int(num), Int(den)};
    q.canonicalize();
    return q;
}

std::string format_rational(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ComplexDocument parse_document(const std::string& text) {
    ComplexDocument doc;
    bool saw_band = false;
    std::set<std::string> gen_ids;
    std::map<std::string, std::size_t> cap_index;
    std::istringstream is(text);
    std::string raw;
    long line = 0;
    while (std::getline(is, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        std::vector<std::string> toks = split_ws(raw);
        if (toks.empty()) continue;
        const std::string& tag = toks[0];
        if (tag == "band_r") {
            if (toks.size() != 2) throw ParseError(line, "band_r takes one rational value");
            if (saw_band) throw ParseError(line, "duplicate band_r record");
            doc.band_r = parse_rational(toks[1], line);
            saw_band = true;
        } else if (tag == "generator") {
            auto f = parse_fields(toks, line, {"id", "sf", "cs"});
            if (!gen_ids.insert(f["id"]).second)
                throw DuplicateId(line, "duplicate generator id '" + f["id"] + "'");
            doc.generators.push_back(
                {f["id"], parse_long(f["sf"], line, "sf"), parse_rational(f["cs"], line)});
        } else if (tag == "boundary") {
            auto f = parse_fields(toks, line, {"from", "to", "coeff"});
            doc.boundary.push_back({f["from"], f["to"], parse_int(f["coeff"], line, "coeff")});
        } else if (tag == "cap") {
            auto f = parse_fields(toks, line, {"name", "nu_exp", "mu_exp"});
            if (cap_index.count(f["name"]))
                throw DuplicateId(line, "duplicate cap name '" + f["name"] + "'");
            cap_index[f["name"]] = doc.caps.size();
            doc.caps.push_back({f["name"], parse_long(f["nu_exp"], line, "nu_exp"),
                                parse_long(f["mu_exp"], line, "mu_exp")});
        } else if (tag == "capentry") {
            auto f = parse_fields(toks, line, {"cap", "from", "to", "coeff"});
            auto it = cap_index.find(f["cap"]);
            if (it == cap_index.end())
                throw ParseError(line, "capentry for undeclared cap '" + f["cap"] + "'");
            doc.caps[it->second].entries.push_back(
                {f["from"], f["to"], parse_int(f["coeff"], line, "coeff")});
        } else {
            throw ParseError(line, "unknown record '" + tag + "'");
        }
    }
    if (!saw_band) throw ParseError(line, "missing band_r record");
    return doc;
}

ComplexDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

FilteredComplex ComplexDocument::to_complex() const { return build().first; }

std::pair<FilteredComplex, std::vector<std::pair<std::string, CapOperator>>>
ComplexDocument::build() const {
    std::vector<std::string> issues;
    FilteredComplex c = [&] {
        try {
            return FilteredComplex(band_r, generators, boundary);
        } catch (const InvalidComplex& e) {
            throw ValidationError(e.what());
        }
    }();
    ValidationReport cr = c.validate();
    issues.insert(issues.end(), cr.issues.begin(), cr.issues.end());

    std::vector<std::pair<std::string, CapOperator>> ops;
    for (const auto& dc : caps) {
        CapOperator op(CohClass{dc.nu_exp, dc.mu_exp}, dc.entries);
        if (cr.ok()) {
            ValidationReport ur = validate_cap(op, c);
            for (const auto& issue : ur.issues)
                issues.push_back("cap '" + dc.name + "': " + issue);
        }
        ops.emplace_back(dc.name, std::move(op));
    }
    if (!issues.empty()) {
        std::string msg;
        for (const auto& issue : issues) msg += (msg.empty() ? "" : "; ") + issue;
        throw ValidationError(msg);
    }
    return {std::move(c), std::move(ops)};
}

const DocCap* ComplexDocument::find_cap(const std::string& name) const {
    for (const auto& c : caps)
        if (c.name == name) return &c;
    return nullptr;
}

CapOperator ComplexDocument::cap_operator(const std::string& name) const {
    if (name == "unit" || name == "1") return CapOperator(CohClass::unit(), {});
    const DocCap* dc = find_cap(name);
    if (!dc) throw InvalidInput("unknown cap class '" + name + "'");
    return CapOperator(CohClass{dc->nu_exp, dc->mu_exp}, dc->entries);
}

std::string emit_document(const ComplexDocument& doc) {
    ComplexDocument d = doc;
    std::sort(d.generators.begin(), d.generators.end(), [](const Generator& a, const Generator& b) {
        return std::tie(a.sf, a.id) < std::tie(b.sf, b.id);
    });
    auto entry_key = [](const BoundaryEntry& e) { return std::tie(e.from, e.to); };
    std::sort(d.boundary.begin(), d.boundary.end(),
              [&](const BoundaryEntry& a, const BoundaryEntry& b) { return entry_key(a) < entry_key(b); });
    std::sort(d.caps.begin(), d.caps.end(),
              [](const DocCap& a, const DocCap& b) { return a.name < b.name; });

    std::ostringstream os;
    os << "band_r " << format_rational(d.band_r) << "\n";
    for (const auto& g : d.generators)
        os << "generator id=" << g.id << " sf=" << g.sf << " cs=" << format_rational(g.cs) << "\n";
    for (const auto& e : d.boundary)
        os << "boundary from=" << e.from << " to=" << e.to << " coeff=" << e.coeff.get_str()
           << "\n";
    for (auto& cap : d.caps) {
        os << "cap name=" << cap.name << " nu_exp=" << cap.nu_exp << " mu_exp=" << cap.mu_exp
           << "\n";
        std::sort(cap.entries.begin(), cap.entries.end(), [](const CapEntry& a, const CapEntry& b) {
            return std::tie(a.from, a.to) < std::tie(b.from, b.to);
        });
        for (const auto& e : cap.entries)
            os << "capentry cap=" << cap.name << " from=" << e.from << " to=" << e.to
               << " coeff=" << e.coeff.get_str() << "\n";
    }
    return os.str();
}

ComplexDocument make_document(const FilteredComplex& c,
                              const std::vector<std::pair<std::string, CapOperator>>& caps) {
    ComplexDocument doc;
    doc.band_r = c.band_r();
    doc.generators = c.generators();
    doc.boundary = c.boundary();
    for (const auto& [name, op] : caps)
        doc.caps.push_back({name, op.cls().nu_exp, op.cls().mu_exp, op.entries()});
    return doc;
}

}  // namespace fsseq
