#ifndef MININDEX_GOLDEN_HPP_
#define MININDEX_GOLDEN_HPP_

#include "minindex/element.hpp"
#include "minindex/field_model.hpp"
#include "minindex/integer.hpp"
#include "minindex/thue.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace minindex {

/* Reference tables loaded from the JSON documents under fixtures/.  They are
 * data, never derived from the solver. */

struct ExpectedRow {
    Int t;
    Int m;
    std::vector<Triple> listed;       /* as recorded in the table */
    std::vector<Triple> corrected;    /* erratum-corrected list; equals listed when no correction applies */
    std::string correction;           /* empty when listed == corrected */
    bool requires_override = false;
    bool exceptional = false;
};

struct ThueBaseSet {
    int w;
    std::optional<Int> t;   /* nullopt: every t */
    std::vector<IntPair> pairs;
};

struct GoldenTables {
    std::vector<ExpectedRow> monogenic;          /* index-1 generators */
    std::vector<Int> exceptional_t;
    std::vector<std::array<Int, 3>> case2_triples;
    std::vector<ThueBaseSet> thue_base;

    /* Row for t: the exceptional row when t is listed there, else the generic
     * row of its 2-adic class evaluated at t. */
    ExpectedRow expected_for(Int const& t) const;

    static GoldenTables load(std::filesystem::path const& dir);

    /* Generic coordinates are (c + ct t) / den. */
    struct LinearCoord {
        long c, ct, den;
    };
    using GenericElement = std::array<LinearCoord, 3>;
    struct GenericRow {
        TwoAdicClass v2_class;
        long m;
        std::vector<GenericElement> listed, corrected;
        std::string correction;
    };
    struct ExceptionalRow {
        ExpectedRow row;
        bool with_generic = false;
    };
    std::vector<GenericRow> generic_rows;
    std::vector<ExceptionalRow> exceptional_rows;
    /* Generic rows that fail at a particular t. */
    struct Erratum {
        Int t, m;
        std::vector<Triple> elements;
        std::string correction;
    };
    std::vector<Erratum> errata;
};

/* MININDEX_FIXTURES if set, else the source tree's fixtures/ directory. */
std::filesystem::path default_fixture_dir();

struct SetComparison {
    bool equal = false;
    std::vector<Triple> missing;      /* expected, not found */
    std::vector<Triple> unexpected;   /* found, not expected */
};

/* Equality up to per-element sign and translation. */
SetComparison compare_elements(std::vector<Triple> const& expected, std::vector<Triple> const& got);

}  // namespace minindex

#endif  /* MININDEX_GOLDEN_HPP_ */
