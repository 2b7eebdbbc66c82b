#pragma once

#include "ggplab/report.hpp"

namespace ggplab::suites {

using report::CheckResult;
using report::Report;
using report::RunConfig;

// Exact determinantal identity plus homogeneity and moment-series identities.
std::vector<CheckResult> run_detid(const RunConfig& cfg);

// Stability equivalences over random and constructed degenerate inputs.
std::vector<CheckResult> run_stability(const RunConfig& cfg);

// Floating-point coadjoint geometry: splitting invariants, Gram cross-check
// against the exact determinant, transversal projection floor.
std::vector<CheckResult> run_geometry(const RunConfig& cfg);

// Orbit-distance size bound and central-volume scaling experiments.
std::vector<CheckResult> run_volume(const RunConfig& cfg);

// BCH support constraint and star-product leading-term fit.
std::vector<CheckResult> run_star(const RunConfig& cfg);

// Character identity, operator traces, composition expansion.
std::vector<CheckResult> run_kirillov(const RunConfig& cfg,
                                      std::vector<report::CsvTable>* tables = nullptr);

// Spherical character cross-validation, restrictions, amplifier bounds.
std::vector<CheckResult> run_hecke(const RunConfig& cfg,
                                   std::vector<report::CsvTable>* tables = nullptr);

// Closed-form exponent bound against its frozen reference values.
std::vector<CheckResult> run_exponent(const RunConfig& cfg);

// Dispatch on cfg.suite ("all" runs everything); fills wall_time_ms.
Report run(const RunConfig& cfg);

}  // namespace ggplab::suites
