#pragma once

#include "qtorsion/weight.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qtorsion {

struct JobConfig {
    /// torsion, zeta, spectrum, occur-check, clifford-check or torus.
    std::string command;
    std::string group = "C2";
    int k = 0;
    /// K0 fundamental-weight coordinates, or ambient coordinates when lambda_orthogonal.
    std::vector<Rational> lambda_circ;
    bool lambda_orthogonal = false;
    /// nullopt is the identity.
    std::optional<std::vector<Rational>> element;
    /// Eigenvalue cutoff for zeta and spectrum, Casimir cutoff for occur-check.
    Rational cutoff{20};
    /// Target tolerance 10^-precision.
    int precision = 12;
    std::string format = "json";
    std::uint64_t seed = 1;
    double s = 4.0;
    /// Quaternionic dimension for clifford-check.
    int n = 1;
    std::size_t trials = 20;
    /// Torus lattice basis, column-major; empty means Z^4.
    std::vector<double> lattice;
};

struct JobOutput {
    /// 0 ok, 1 numeric failure, 2 validation failure.
    int exit_code = 0;
    std::string text;
};

/// Runs one job and renders the report; never throws.
JobOutput run(const JobConfig& config);

/// Comma-separated rationals; "identity" is handled by the caller.
std::vector<Rational> parse_rational_list(const std::string& text);

/// Applies the keys of a JSON config object (same names as the flags) to `config`.
void apply_config_json(const std::string& text, JobConfig& config);

}  // namespace qtorsion
