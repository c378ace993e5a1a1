#pragma once

#include <string>
#include <vector>

#include "semifrac/verify.hpp"

namespace semifrac {

// One published representation of 1. Entry ids are stable; reproduction
// reports refer to them by name.
struct CorpusEntry {
    std::string id;
    std::string source;
    SolutionRecord record;
};

// All published solutions: Johnson's 48-term representation plus the 17
// known 47-term representations (2 found with prime bound 53, 15 with
// bound 101). Every entry is re-verified on first load so a mistyped
// denominator cannot survive.
inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        struct Raw {
            const char* id;
            const char* source;
            std::vector<u64> terms;
        };
        const std::vector<Raw> raw = {
            {"johnson-48", "A. W. Johnson, 1978",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 85, 86, 87, 91, 93, 95, 115, 119, 123, 133, 155, 187,
              203, 209, 215, 221, 247, 265, 287, 299, 319, 323, 391, 689, 731, 901}},
            {"p53-47-a", "47-term search, prime bound 53",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 74, 82, 85, 86, 87, 91, 93, 95, 106, 111, 123, 133, 145, 155,
              159, 185, 203, 215, 253, 265, 287, 319, 493, 583, 731, 851, 1073}},
            {"p53-47-b", "47-term search, prime bound 53",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 74, 77, 82, 85, 87, 91, 93, 95, 111, 115, 119, 123, 129, 133, 143,
              145, 155, 161, 221, 253, 259, 287, 299, 391, 473, 481, 1247, 1591}},
            {"p101-47-01", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 74, 77, 86, 87, 91, 93, 94, 95, 111, 115, 118, 119, 129, 133,
              145, 155, 161, 185, 187, 329, 517, 667, 851, 1073, 1357, 1363, 2537}},
            {"p101-47-02", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 85, 86, 87, 91, 93, 94, 95, 118, 119, 123, 133, 145,
              155, 161, 187, 203, 215, 287, 329, 493, 517, 1247, 1357, 1363, 2537}},
            {"p101-47-03", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 85, 86, 87, 93, 94, 95, 115, 118, 119, 123, 129, 133,
              141, 143, 145, 155, 287, 377, 391, 551, 799, 893, 1357, 1363, 2537}},
            {"p101-47-04", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 85, 86, 87, 93, 94, 95, 115, 118, 119, 123, 129, 133,
              143, 145, 155, 177, 287, 299, 391, 551, 611, 799, 893, 1711, 2537}},
            {"p101-47-05", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 86, 87, 91, 93, 94, 95, 118, 119, 123, 129, 133, 145,
              155, 161, 177, 187, 203, 287, 299, 329, 377, 517, 1363, 1711, 2537}},
            {"p101-47-06", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 74, 77, 82, 86, 91, 93, 95, 111, 119, 122, 123, 133, 143, 145,
              155, 161, 183, 187, 259, 287, 299, 319, 473, 481, 559, 671, 1591}},
            {"p101-47-07", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 85, 86, 87, 91, 93, 94, 95, 118, 119, 123, 129, 133,
              155, 161, 187, 213, 287, 329, 355, 493, 497, 517, 1357, 1363, 2537}},
            {"p101-47-08", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 74, 77, 82, 85, 87, 91, 93, 95, 115, 119, 123, 129, 133, 143,
              145, 155, 187, 213, 221, 287, 301, 559, 629, 781, 1247, 1591, 1633}},
            {"p101-47-09", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 85, 86, 91, 93, 94, 95, 115, 119, 123, 133, 141, 142,
              143, 155, 203, 221, 235, 287, 299, 355, 377, 391, 559, 2021, 2059}},
            {"p101-47-10", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 85, 86, 87, 91, 93, 94, 95, 111, 115, 119, 133, 141,
              142, 155, 187, 205, 213, 235, 493, 517, 1363, 1633, 1763, 1927, 2627}},
            {"p101-47-11", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 86, 91, 93, 94, 95, 111, 115, 119, 123, 133, 141, 142,
              143, 145, 155, 203, 213, 221, 235, 287, 493, 559, 1633, 2021, 2627}},
            {"p101-47-12", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 74, 77, 85, 86, 87, 91, 93, 94, 95, 111, 115, 119, 133, 141,
              142, 145, 155, 187, 213, 517, 629, 799, 1247, 1591, 1633, 2021, 2627}},
            {"p101-47-13", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 85, 87, 91, 93, 94, 95, 111, 115, 118, 119, 123, 133,
              142, 155, 187, 213, 287, 295, 329, 413, 493, 517, 1363, 1633, 2627}},
            {"p101-47-14", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 87, 91, 93, 95, 106, 111, 115, 119, 122, 123, 133, 142,
              155, 159, 183, 187, 203, 213, 265, 287, 319, 583, 671, 1633, 2627}},
            {"p101-47-15", "47-term search, prime bound 101",
             {6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58, 62,
              65, 69, 77, 82, 85, 86, 87, 91, 93, 94, 95, 115, 119, 123, 129, 133,
              141, 142, 145, 155, 187, 517, 799, 1207, 1247, 1633, 1763, 2021, 2911}},
        };
        std::vector<CorpusEntry> built;
        for (const Raw& r : raw) {
            CorpusEntry e{r.id, r.source, make_record(r.terms)};
            VerifyReport check = verify_solution(e.record);
            if (!check.pass)
                throw ArithmeticFault("corpus entry " + e.id +
                                      " failed verification: " + check.violations.front());
            built.push_back(std::move(e));
        }
        return built;
    }();
    return entries;
}

inline const CorpusEntry* corpus_entry(const std::string& id) {
    for (const CorpusEntry& e : corpus())
        if (e.id == id) return &e;
    return nullptr;
}

} // namespace semifrac
