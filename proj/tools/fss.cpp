// fss: command-line front end for filtered Floer chain complex analysis.
//
// Subcommands operate on .fss documents and print deterministic reports in
// text or json-lines form; exit codes: 0 ok, 2 parse error, 3 validation
// error, 4 internal consistency failure.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "fsseq/cap.hpp"
#include "fsseq/complex.hpp"
#include "fsseq/document.hpp"
#include "fsseq/errors.hpp"
#include "fsseq/spectral.hpp"
#include "fsseq/synth.hpp"

using json = nlohmann::ordered_json;
using namespace fsseq;

namespace {

struct Options {
    std::string over = "Z";
    std::string format = "text";

    bool json_mode() const { return format == "json-lines"; }
    bool over_q() const { return over == "Q"; }
};

std::string group_string(const AbelianInvariants& inv, const Options& opt) {
    if (!opt.over_q()) return inv.to_string();
    if (inv.free_rank == 0) return "0";
    return "Q^" + std::to_string(inv.free_rank);
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.to_dense()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(r);
    }
    return rows;
}

std::string matrix_text(const IntMatrix& m) {
    std::string out = "[";
    auto dense = m.to_dense();
    for (std::size_t r = 0; r < dense.size(); ++r) {
        out += r ? "; " : "";
        for (std::size_t c = 0; c < dense[r].size(); ++c)
            out += (c ? " " : "") + dense[r][c].get_str();
    }
    return out + "]";
}

void emit(const Options& opt, const json& record, const std::string& text) {
    if (opt.json_mode())
        std::cout << record.dump() << "\n";
    else
        std::cout << text << "\n";
}

int run_validate(const std::string& path, const Options& opt) {
    ComplexDocument doc = load_document(path);
    std::vector<std::string> issues;
    try {
        doc.build();
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        std::size_t pos = 0;
        while (pos < msg.size()) {
            std::size_t next = msg.find("; ", pos);
            issues.push_back(msg.substr(pos, next == std::string::npos ? next : next - pos));
            if (next == std::string::npos) break;
            pos = next + 2;
        }
    }
    emit(opt, {{"record", "validate"}, {"valid", issues.empty()}, {"issues", issues}},
         std::string("valid: ") + (issues.empty() ? "true" : "false"));
    for (const auto& issue : issues) emit(opt, {{"record", "issue"}, {"detail", issue}}, "  issue: " + issue);
    return issues.empty() ? 0 : 3;
}

int run_homology(const std::string& path, const Options& opt) {
    FilteredComplex c = load_document(path).to_complex();
    HomologyTable graded = graded_homology(c);
    HomologyTable total = total_homology_mod8(c);
    emit(opt, {{"record", "band"}, {"r", format_rational(c.band_r())}},
         "band r = " + format_rational(c.band_r()));
    for (const auto& [n, entry] : graded.groups)
        emit(opt,
             {{"record", "graded_group"}, {"n", n}, {"group", group_string(entry.invariants, opt)}},
             "I_" + std::to_string(n) + " = " + group_string(entry.invariants, opt));
    for (long j = 0; j < 8; ++j) {
        AbelianInvariants inv = total.invariants_at(j);
        if (inv.trivial()) continue;
        emit(opt, {{"record", "hf_group"}, {"j", j}, {"group", group_string(inv, opt)}},
             "HF_" + std::to_string(j) + " = " + group_string(inv, opt));
    }
    return 0;
}

int run_pages(const std::string& path, long max_k, const Options& opt) {
    FilteredComplex c = load_document(path).to_complex();
    long stable = stabilization_page(c);
    if (max_k < 0) max_k = stable;
    emit(opt, {{"record", "stabilization"}, {"stable_k", stable}, {"max_k", max_k}},
         "stable_k = " + std::to_string(stable) + " (computing pages through k = " +
             std::to_string(max_k) + ")");
    for (long k = 0; k <= max_k; ++k) {
        Page page = page_differential(c, compute_page(c, k));
        for (const auto& [n, group] : page.groups)
            emit(opt,
                 {{"record", "page_group"},
                  {"k", k},
                  {"n", n},
                  {"j", ((n % 8) + 8) % 8},
                  {"group", group_string(group.invariants, opt)}},
                 "E^" + std::to_string(k) + "_" + std::to_string(n) + " = " +
                     group_string(group.invariants, opt));
        for (const auto& [n, d] : page.differentials) {
            if (d.is_zero()) continue;
            emit(opt,
                 {{"record", "differential"},
                  {"k", k},
                  {"n", n},
                  {"target_n", n + 8 * k - 1},
                  {"matrix", matrix_json(d)}},
                 "d^" + std::to_string(k) + ": E_" + std::to_string(n) + " -> E_" +
                     std::to_string(n + 8 * k - 1) + " = " + matrix_text(d));
        }
    }
    return 0;
}

int run_collapse(const std::string& path, const Options& opt) {
    FilteredComplex c = load_document(path).to_complex();
    CollapseResult res = collapse_detect(c);
    if (res.collapses) {
        emit(opt, {{"record", "collapse"}, {"collapses", true}}, "collapse: true");
    } else {
        emit(opt,
             {{"record", "collapse"},
              {"collapses", false},
              {"witness_k", res.witness->k},
              {"witness_n", res.witness->n}},
             "collapse: false, witness d^" + std::to_string(res.witness->k) + " at (" +
                 std::to_string(res.witness->n) + "," +
                 std::to_string(((res.witness->n % 8) + 8) % 8) + ")");
    }
    return 0;
}

int run_capact(const std::string& path, const std::string& cls_name, const Options& opt) {
    ComplexDocument doc = load_document(path);
    auto [c, ops] = doc.build();
    CapOperator op = doc.cap_operator(cls_name);
    long shift = op.cls().degree() + 1;
    long stable = stabilization_page(c);
    emit(opt,
         {{"record", "class"},
          {"name", cls_name},
          {"nu_exp", op.cls().nu_exp},
          {"mu_exp", op.cls().mu_exp},
          {"degree", op.cls().degree()},
          {"shift", shift},
          {"stable_k", stable}},
         "class " + cls_name + ": degree " + std::to_string(op.cls().degree()) + ", shift " +
             std::to_string(shift) + ", stable_k " + std::to_string(stable));

    GradedMapResult graded = induced_graded_map(op, c);
    for (const auto& [n, m] : graded.maps)
        emit(opt,
             {{"record", "graded_map"},
              {"n", n},
              {"target_n", n - shift},
              {"matrix", matrix_json(m)}},
             "I_" + std::to_string(n) + " -> I_" + std::to_string(n - shift) + ": " +
                 matrix_text(m));

    for (long k = 1; k <= stable; ++k) {
        PageMapResult pm = induced_page_map(op, c, k);
        for (const auto& [n, m] : pm.maps)
            emit(opt,
                 {{"record", "page_map"},
                  {"k", k},
                  {"n", n},
                  {"target_n", n - shift},
                  {"matrix", matrix_json(m)}},
                 "E^" + std::to_string(k) + "_" + std::to_string(n) + " -> E^" +
                     std::to_string(k) + "_" + std::to_string(n - shift) + ": " + matrix_text(m));
        emit(opt,
             {{"record", "commutation"}, {"k", k}, {"commutes", pm.commutes_with_dk}},
             "d^" + std::to_string(k) + " commutation: " +
                 (pm.commutes_with_dk ? "pass" : "fail"));
    }

    HFMapResult hf = induced_hf_map(op, c);
    for (const auto& [j, m] : hf.maps)
        emit(opt,
             {{"record", "hf_map"},
              {"j", j},
              {"target_j", ((j - shift) % 8 + 8) % 8},
              {"matrix", matrix_json(m)}},
             "HF_" + std::to_string(j) + " -> HF_" + std::to_string(((j - shift) % 8 + 8) % 8) +
                 ": " + matrix_text(m));
    return 0;
}

int run_relift(const std::string& path, const Options&) {
    ComplexDocument doc = load_document(path);
    auto [c, ops] = doc.build();
    std::cout << emit_document(make_document(relift(c), ops));
    return 0;
}

int run_synth(const SynthParams& params, const Options&) {
    std::cout << emit_document(make_document(random_complex(params)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Filtered Floer chain complex engine: spectral sequence, graded "
                 "homology, and cap-product actions over exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --over/--format after the subcommand too

    Options opt;
    app.add_option("--over", opt.over, "Coefficients for reports")
        ->check(CLI::IsMember({"Z", "Q"}));
    app.add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "json-lines"}));

    std::string path;
    std::string cls_name = "nu";
    long max_k = -1;
    SynthParams params;
    long survivors = 4, pairs = 4, moves = 8;

    auto* validate = app.add_subcommand("validate", "Report every structural rule check");
    validate->add_option("file", path)->required();
    auto* homology = app.add_subcommand("homology", "Z-graded and mod-8 homology tables");
    homology->add_option("file", path)->required();
    auto* pages = app.add_subcommand("pages", "Spectral sequence pages and differentials");
    pages->add_option("file", path)->required();
    pages->add_option("--max-k", max_k, "Last page to compute (default: stabilization)");
    auto* collapse = app.add_subcommand("collapse", "Higher-differential collapse verdict");
    collapse->add_option("file", path)->required();
    auto* capact = app.add_subcommand("capact", "Induced maps of a named cap operator");
    capact->add_option("file", path)->required();
    capact->add_option("--class", cls_name, "Cap class name declared in the document")
        ->required();
    auto* relift_cmd = app.add_subcommand("relift", "Emit the next-band shifted document");
    relift_cmd->add_option("file", path)->required();
    auto* synth = app.add_subcommand("synth", "Emit a generated document");
    synth->add_option("--seed", params.seed, "PRNG seed")->required();
    synth->add_option("--survivors", survivors, "Surviving generators");
    synth->add_option("--pairs", pairs, "Acyclic pairs");
    synth->add_option("--moves", moves, "Unimodular mixing moves");
    synth->add_option("--span", params.sf_span, "Spectral-flow span");
    synth->add_option("--coeff", params.coeff_bound, "Coefficient bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate(path, opt);
        if (homology->parsed()) return run_homology(path, opt);
        if (pages->parsed()) return run_pages(path, max_k, opt);
        if (collapse->parsed()) return run_collapse(path, opt);
        if (capact->parsed()) return run_capact(path, cls_name, opt);
        if (relift_cmd->parsed()) return run_relift(path, opt);
        if (synth->parsed()) {
            params.n_survivors = static_cast<std::size_t>(survivors);
            params.n_pairs = static_cast<std::size_t>(pairs);
            params.n_mixing_moves = static_cast<std::size_t>(moves);
            return run_synth(params, opt);
        }
    } catch (const ParseError& e) {
        std::cerr << json{{"error", "parse"}, {"detail", e.what()}}.dump() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << json{{"error", "validation"}, {"detail", e.what()}}.dump() << "\n";
        return 3;
    } catch (const InvalidComplex& e) {
        std::cerr << json{{"error", "validation"}, {"detail", e.what()}}.dump() << "\n";
        return 3;
    } catch (const CapInvalid& e) {
        std::cerr << json{{"error", "validation"}, {"detail", e.what()}}.dump() << "\n";
        return 3;
    } catch (const InvalidInput& e) {
        std::cerr << json{{"error", "validation"}, {"detail", e.what()}}.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"detail", e.what()}}.dump() << "\n";
        return 4;
    }
    return 0;
}
