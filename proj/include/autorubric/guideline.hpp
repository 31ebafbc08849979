#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace autorubric {

/// Ordered vocabulary of integer score labels. Default is the three-point
/// scale {0, 1, 2}.
struct ScoreScale {
    std::vector<int> categories{0, 1, 2};

    void validate() const;  // non-empty, strictly increasing
    bool contains(int category) const;
    std::size_t size() const { return categories.size(); }
    std::size_t index_of(int category) const;  // throws InvalidArgument

    /// "0, 1, or 2" — used when prompts enumerate legal scores.
    std::string spoken_list() const;
};

/// Where a candidate guideline came from: parent fingerprint plus the
/// (outer, inner, beam slot, branch) coordinates that produced it.
struct Lineage {
    std::string parent;
    int outer = 0;
    int inner = 0;
    int beam_slot = 0;
    int branch = 0;

    bool operator==(const Lineage&) const = default;
};

/// A grading instruction document. The three expert sections are immutable
/// for the lifetime of an optimization run; only adaptation_rules is ever
/// rewritten.
struct Guideline {
    std::string question_stem;
    std::string key_concept;       // may be empty
    std::string scoring_rubric;
    std::string adaptation_rules;  // may be empty
    std::optional<Lineage> lineage;
};

/// Canonical single-document rendering: fixed section headers in fixed
/// order, empty sections omitted entirely. Deterministic byte-for-byte.
/// Throws InvalidGuideline when question_stem or scoring_rubric is empty.
std::string render_guideline(const Guideline& g);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;  // names of mutated expert sections
};

/// Passes iff g's expert sections equal reference's byte-for-byte.
/// adaptation_rules is free to differ.
ValidationReport validate_guideline(const Guideline& g, const Guideline& reference);

/// Stable identity of a guideline's rendered text (hex digest).
std::string guideline_fingerprint(const Guideline& g);

struct GuidelineDoc {
    Guideline guideline;
    ScoreScale scale;
};

GuidelineDoc load_guideline_file(const std::filesystem::path& path);
void save_guideline_file(const std::filesystem::path& path, const Guideline& g,
                         const ScoreScale& scale);

}  // namespace autorubric
