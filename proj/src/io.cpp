#include "aptsim/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "aptsim/errors.hpp"

namespace aptsim::io {

std::string format_number(double x) {
  if (x == 0.0) return "0";  // no "-0"
  return fmt::format("{:.6g}", x);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,concurrence,norm\n";
  for (std::size_t i = 0; i < traj.size(); ++i)
    os << format_number(traj.times[i]) << ',' << format_number(traj.concurrence[i]) << ','
       << format_number(traj.unnormalized_norm[i]) << '\n';
}

void write_counts_csv(std::ostream& os, std::span<const CountRecord> counts) {
  os << "basis,observed,total\n";
  for (const auto& r : counts) os << r.basis << ',' << r.observed << ',' << r.total << '\n';
}

namespace {

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

std::uint64_t parse_count(const std::string& field, std::size_t line) {
  const std::string f = trim(field);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (f.empty() || ec != std::errc() || ptr != f.data() + f.size())
    throw ValidationError(fmt::format("counts line {}: '{}' is not a nonnegative integer", line, f));
  return v;
}

}  // namespace

std::vector<CountRecord> read_counts_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || trim(line) != "basis,observed,total")
    throw ValidationError("counts file: expected header 'basis,observed,total'");

  std::vector<CountRecord> out;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 3)
      throw ValidationError(fmt::format("counts line {}: expected 3 fields, got {}", line_no, fields.size()));
    CountRecord r;
    r.basis = trim(fields[0]);
    find_basis(r.basis);
    r.observed = parse_count(fields[1], line_no);
    r.total = parse_count(fields[2], line_no);
    if (r.total == 0) throw ValidationError(fmt::format("counts line {}: total must be > 0", line_no));
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json matrix_to_json(const ComplexMatrix4& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) arr.push_back({{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
  return arr;
}

ComplexMatrix4 matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 16) throw ValidationError("matrix JSON must hold 16 entries");
  ComplexMatrix4 m;
  try {
    for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = Complex(j[k].at("re").get<double>(), j[k].at("im").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("matrix JSON: ") + e.what());
  }
  return m;
}

nlohmann::json mle_to_json(const MleResult& r) {
  nlohmann::json j;
  j["rho"] = matrix_to_json(r.rho_hat.matrix());
  j["log_likelihood"] = r.log_likelihood;
  j["iterations"] = r.iterations;
  if (r.fidelity_vs_truth) j["fidelity_vs_truth"] = *r.fidelity_vs_truth;
  return j;
}

MleResult mle_from_json(const nlohmann::json& j) {
  try {
    MleResult r{DensityMatrix::from_matrix(matrix_from_json(j.at("rho"))), j.at("log_likelihood").get<double>(),
                j.at("iterations").get<std::size_t>(), std::nullopt};
    if (j.contains("fidelity_vs_truth")) r.fidelity_vs_truth = j["fidelity_vs_truth"].get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("MLE JSON: ") + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError(fmt::format("cannot create directory {}: {}", path.parent_path().string(), ec.message()));
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os << contents;
  if (!os) throw IoError("write failed: " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace aptsim::io
