#include "rrcbf/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "rrcbf/errors.hpp"

namespace rrcbf {

namespace {

void append_num(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

double parse_field(const std::string& s, const std::string& where) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw ConfigError(where + ": bad numeric field '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& traj) {
  if (traj.records.empty()) throw DomainError("trajectory_to_csv: empty trajectory");
  const auto& first = traj.records.front();
  const auto n = first.x.size();
  const auto npsi = first.psi.size();
  const auto m = first.a.size();

  std::string out;
  out += "t";
  for (Eigen::Index i = 0; i < n; ++i) out += ",x" + std::to_string(i);
  out += ",h";
  for (std::size_t i = 1; i <= npsi; ++i) out += ",psi" + std::to_string(i);
  out += ",u_nominal,u_applied,filter_status,slack,w_true,d_hat";
  for (Eigen::Index i = 0; i < m; ++i) out += ",a" + std::to_string(i);
  out += ",b\n";

  for (const auto& r : traj.records) {
    append_num(out, r.t);
    for (Eigen::Index i = 0; i < n; ++i) {
      out += ',';
      append_num(out, r.x[i]);
    }
    out += ',';
    append_num(out, r.h);
    for (std::size_t i = 0; i < npsi; ++i) {
      out += ',';
      append_num(out, r.psi[i]);
    }
    out += ',';
    append_num(out, r.u_nominal);
    out += ',';
    append_num(out, r.u_applied);
    out += ',';
    out += filter_status_name(r.status);
    out += ',';
    append_num(out, r.slack);
    out += ',';
    append_num(out, r.w_true);
    out += ',';
    append_num(out, r.d_hat);
    for (Eigen::Index i = 0; i < m; ++i) {
      out += ',';
      append_num(out, r.a[i]);
    }
    out += ',';
    append_num(out, r.b);
    out += '\n';
  }
  return out;
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << trajectory_to_csv(traj);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Trajectory trajectory_from_csv(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError(origin + ": empty CSV");
  const auto header = split(line);

  Eigen::Index n = 0, m = 0;
  std::size_t npsi = 0;
  for (const auto& c : header) {
    if (c.size() > 1 && c[0] == 'x') ++n;
    if (c.rfind("psi", 0) == 0) ++npsi;
    if (c.size() > 1 && c[0] == 'a' && std::isdigit(static_cast<unsigned char>(c[1]))) ++m;
  }
  const std::size_t expected = 8 + static_cast<std::size_t>(n) + npsi + static_cast<std::size_t>(m);
  if (header.size() != expected) throw ConfigError(origin + ": unexpected CSV header layout");

  Trajectory traj;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    const auto f = split(line);
    if (f.size() != expected) throw ConfigError(where + ": wrong field count");
    StepRecord r;
    std::size_t i = 0;
    r.t = parse_field(f[i++], where);
    r.x.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) r.x[j] = parse_field(f[i++], where);
    r.h = parse_field(f[i++], where);
    r.psi.resize(npsi);
    for (std::size_t j = 0; j < npsi; ++j) r.psi[j] = parse_field(f[i++], where);
    r.u_nominal = parse_field(f[i++], where);
    r.u_applied = parse_field(f[i++], where);
    r.status = filter_status_from_name(f[i++]);
    r.slack = parse_field(f[i++], where);
    r.w_true = parse_field(f[i++], where);
    r.d_hat = parse_field(f[i++], where);
    r.a.resize(m);
    for (Eigen::Index j = 0; j < m; ++j) r.a[j] = parse_field(f[i++], where);
    r.b = parse_field(f[i++], where);
    traj.records.push_back(std::move(r));
  }
  return traj;
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open CSV '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return trajectory_from_csv(ss.str(), path);
}

}  // namespace rrcbf
