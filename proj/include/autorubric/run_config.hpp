#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace autorubric {

/// Which misconfidence formula drives seed ranking. LogRatio is the ratio of
/// log-probabilities; ProbRatio is exp(lp_best_wrong - lp_true), which ranks
/// confidently-wrong samples highest.
enum class PsiVariant { LogRatio, ProbRatio };

std::string to_string(PsiVariant v);
PsiVariant psi_variant_from_string(const std::string& s);

struct RunConfig {
    int outer_iterations = 5;
    int inner_iterations = 3;
    int parallel_branches = 4;
    int beam_size = 4;
    int outer_batch_size = 64;
    int inner_batch_size = 8;
    int seed_count = 4;  // misconfidence seeds per batch composition
    double grader_temperature = 0.0;
    double reflector_temperature = 0.5;
    double refiner_temperature = 0.5;
    int ucb_rounds_factor = 4;
    int ucb_minibatch_size = 16;
    double ucb_exploration_c = 1.4142135623730951;  // sqrt(2)
    int early_stop_patience = 2;
    std::uint64_t rng_seed = 1;
    PsiVariant psi_variant = PsiVariant::LogRatio;
    bool use_quadratic_kappa = false;

    void validate() const;  // throws ConfigError
};

nlohmann::json run_config_to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const nlohmann::json& j);

/// Loads a config file whose keys mirror RunConfig fields exactly. Unknown
/// keys other than the optional "backend" object are rejected.
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace autorubric
