#include "ncps/params.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ncps {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

void ModelParams::validate() const {
  for (double v : {c_theta, c_eta, mass, omega, omega_osc, alpha, beta}) {
    require(std::isfinite(v), "ModelParams: all fields must be finite");
  }
  require(mass > 0.0, "ModelParams: mass must be > 0");
  require(omega >= 0.0, "ModelParams: omega must be >= 0");
  require(omega_osc > 0.0, "ModelParams: omega_osc must be > 0");
  require(c_theta >= 0.0, "ModelParams: c_theta must be >= 0");
  require(c_eta >= 0.0, "ModelParams: c_eta must be >= 0");
}

namespace detail {

std::map<std::string, std::string> parse_kv_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    require(eq != std::string::npos,
            "config line " + std::to_string(lineno) + " is not key=value: '" + stripped + "'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    require(!key.empty(), "config line " + std::to_string(lineno) + " has an empty key");
    require(!kv.count(key), "duplicate config key '" + key + "'");
    kv[key] = value;
  }
  return kv;
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  require(ec == std::errc() && ptr == last,
          "config key '" + key + "' has a malformed numeric value '" + value + "'");
  return out;
}

long parse_long(const std::string& key, const std::string& value) {
  long out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  require(ec == std::errc() && ptr == last,
          "config key '" + key + "' has a malformed integer value '" + value + "'");
  return out;
}

}  // namespace detail

ModelParams ModelParams::from_config_text(const std::string& text) {
  ModelParams p;
  for (const auto& [key, value] : detail::parse_kv_text(text)) {
    const double v = detail::parse_double(key, value);
    if (key == "c_theta") {
      p.c_theta = v;
    } else if (key == "c_eta") {
      p.c_eta = v;
    } else if (key == "mass") {
      p.mass = v;
    } else if (key == "omega") {
      p.omega = v;
    } else if (key == "omega_osc") {
      p.omega_osc = v;
    } else if (key == "alpha") {
      p.alpha = v;
    } else if (key == "beta") {
      p.beta = v;
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  p.validate();
  return p;
}

ModelParams ModelParams::from_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_config_text(buf.str());
}

double mean_theta_sq(const ModelParams& params) {
  params.validate();
  return 1.5 * params.c_theta * params.c_theta;
}

double mean_eta_sq(const ModelParams& params) {
  params.validate();
  return 1.5 * params.c_eta * params.c_eta;
}

}  // namespace ncps
