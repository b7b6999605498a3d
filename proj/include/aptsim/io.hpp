#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "aptsim/dynamics.hpp"
#include "aptsim/tomography.hpp"

namespace aptsim::io {

/// Six significant digits, locale independent.
std::string format_number(double x);

/// Header `t,concurrence,norm`.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// Header `basis,observed,total`.
void write_counts_csv(std::ostream& os, std::span<const CountRecord> counts);

/// Parses the count-file format. Throws ValidationError on a wrong header,
/// unknown basis labels or malformed numbers.
std::vector<CountRecord> read_counts_csv(std::istream& is);

/// 16 row-major entries as {"re", "im"} objects.
nlohmann::json matrix_to_json(const ComplexMatrix4& m);
ComplexMatrix4 matrix_from_json(const nlohmann::json& j);

/// {"rho": [...16 entries], "log_likelihood": x, "iterations": n
///  [, "fidelity_vs_truth": f]}.
nlohmann::json mle_to_json(const MleResult& r);
/// Inverse of mle_to_json; the state is re-validated.
MleResult mle_from_json(const nlohmann::json& j);

/// Writes `contents` to `path`, creating parent directories. IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace aptsim::io
