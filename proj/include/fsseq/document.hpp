#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fsseq/cap.hpp"
#include "fsseq/complex.hpp"

namespace fsseq {

struct DocCap {
    std::string name;
    long nu_exp = 0;
    long mu_exp = 0;
    std::vector<CapEntry> entries;
};

/// Parsed form of a .fss document: a line-oriented text format with explicit
/// field names and exact "num/den" rationals. Records:
///   band_r N/D
///   generator id=ID sf=N cs=N/D
///   boundary from=ID to=ID coeff=N
///   cap name=NAME nu_exp=N mu_exp=N
///   capentry cap=NAME from=ID to=ID coeff=N
/// Blank lines and lines starting with '#' are ignored.
struct ComplexDocument {
    Rat band_r;
    std::vector<Generator> generators;
    std::vector<BoundaryEntry> boundary;
    std::vector<DocCap> caps;

    /// Build and validate the complex; throws ValidationError with every
    /// violated rule listed.
    FilteredComplex to_complex() const;
    /// Validate and return the named caps alongside the complex.
    std::pair<FilteredComplex, std::vector<std::pair<std::string, CapOperator>>> build() const;
    const DocCap* find_cap(const std::string& name) const;
    CapOperator cap_operator(const std::string& name) const;
};

ComplexDocument parse_document(const std::string& text);
ComplexDocument load_document(const std::string& path);

/// Canonical serialization: one field ordering, generators by (sf, id),
/// boundary by (from, to), caps by name; parse(emit(doc)) == doc.
std::string emit_document(const ComplexDocument& doc);

ComplexDocument make_document(
    const FilteredComplex& c,
    const std::vector<std::pair<std::string, CapOperator>>& caps = {});

/// Exact rational from "num/den" or plain integer text.
Rat parse_rational(const std::string& text, long line);
std::string format_rational(const Rat& q);

}  // namespace fsseq
