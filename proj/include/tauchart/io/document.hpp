#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tauchart/equivariant/equivariant.hpp"

namespace tauchart {

inline constexpr int kSchemaVersion = 1;

// Malformed documents. `where` is a JSON pointer into the document, or
// "line L, column C" for syntax errors.
struct DocumentError : std::runtime_error {
    DocumentError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where(where) {}
    std::string where;
};

// A list of virtual representations over one subgroup.
struct RepSupport {
    std::shared_ptr<const GroupData> group;
    std::size_t subgroup = 0;
    std::vector<VirtualRep> reps;
};

// "tau-chart" and "bss-pages" both decode to a SpectralChart; a chart is
// written as "tau-chart" exactly when it carries nothing but homotopy.
using Payload = std::variant<SpectralChart, FilteredComplex, GeomFamily, ROFiltered, GroupData, SphereSymbol,
                             ChartMap, RepSupport>;

struct Document {
    std::string kind;
    Payload payload;
};

const std::vector<std::string>& document_kinds();

Document parse_document(const std::string& text);
// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const Document& doc);

Document read_document(const std::string& path);
void write_document(const std::string& path, const Document& doc);

// Wraps a payload with its natural kind.
Document make_document(SpectralChart c);
Document make_document(FilteredComplex x);
Document make_document(GeomFamily f);
Document make_document(ROFiltered x);
Document make_document(GroupData g);
Document make_document(SphereSymbol s);
Document make_document(ChartMap m);
Document make_document(RepSupport s);

// Typed access; throws DocumentError naming the expected kind.
template <class T>
const T& expect(const Document& doc, const std::string& what) {
    if (auto* p = std::get_if<T>(&doc.payload)) return *p;
    throw DocumentError("/kind", "expected " + what + ", got " + doc.kind);
}

// Group data by name from $TAUCHART_DATA/groups/<name>.json, or the shipped data directory.
std::shared_ptr<const GroupData> resolve_group(const std::string& name);
std::string data_dir();
// $TAUCHART_FIXTURES, or the shipped fixture directory.
std::string fixture_dir();

}  // namespace tauchart
