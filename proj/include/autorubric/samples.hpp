#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace autorubric {

struct AnswerSample {
    std::string id;
    std::string question_id;
    std::string answer_text;
    std::optional<std::vector<double>> embedding;  // unit L2 norm when present
};

struct LabeledSample {
    AnswerSample sample;
    int label = 0;
    std::optional<std::string> rater_meta;
};

/// argmax over a category->logprob map; ties break toward the lowest
/// category (conservative grading, deterministic behavior).
int argmax_category(const std::map<int, double>& category_logprobs);

/// One grading verdict. `predicted` always equals the distribution argmax
/// with the documented tie-break; use make_grading_output to construct.
struct GradingOutput {
    int predicted = 0;
    std::string reasoning;
    std::map<int, double> category_logprobs;
    std::string raw_completion;
};

/// Validates the distribution (each logprob <= 0, mass within [1e-6, 1+1e-6])
/// and sets predicted = argmax. Throws MalformedResponse on violations.
GradingOutput make_grading_output(std::map<int, double> category_logprobs, std::string reasoning,
                                  std::string raw_completion);

/// A sample together with the grading it received; the unit the sampler and
/// optimizer pass around as "previous-iteration grading records".
struct GradeRecord {
    LabeledSample sample;
    GradingOutput output;
};

}  // namespace autorubric
