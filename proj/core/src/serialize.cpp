#include "pmech/serialize.hpp"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "pmech/common.hpp"

namespace pmech {

namespace {

void require_little_endian() {
  const std::uint16_t probe = 1;
  if (*reinterpret_cast<const unsigned char*>(&probe) != 1) {
    throw config_error("serialization requires a little-endian host");
  }
}

void write_u64(std::ostream& os, std::uint64_t v) {
  char buf[8];
  std::memcpy(buf, &v, 8);
  os.write(buf, 8);
}

void write_f64(std::ostream& os, double v) {
  char buf[8];
  std::memcpy(buf, &v, 8);
  os.write(buf, 8);
}

std::uint64_t read_u64(std::istream& is, const std::string& what) {
  char buf[8];
  if (!is.read(buf, 8)) {
    throw config_error("truncated file while reading " + what);
  }
  std::uint64_t v = 0;
  std::memcpy(&v, buf, 8);
  return v;
}

double read_f64(std::istream& is, const std::string& what) {
  char buf[8];
  if (!is.read(buf, 8)) {
    throw config_error("truncated file while reading " + what);
  }
  double v = 0.0;
  std::memcpy(&v, buf, 8);
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) {
    throw config_error("cannot open " + path + " for writing");
  }
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw config_error("cannot open " + path + " for reading");
  }
  return is;
}

std::string payload_name(const std::string& base) {
  return std::filesystem::path(base + ".bin").filename().string();
}

}  // namespace

void save_pfunction(const PFunction& f, const std::string& base) {
  require_little_endian();
  f.spec.validate();
  {
    std::ofstream os = open_out(base + ".bin");
    write_u64(os, f.spec.N_s);
    write_u64(os, f.spec.N_x);
    write_u64(os, f.spec.N_y);
    write_f64(os, f.spec.L_s);
    write_f64(os, f.spec.L_x);
    write_f64(os, f.spec.L_y);
    for (const cplx& v : f.values) {
      write_f64(os, v.real());
      write_f64(os, v.imag());
    }
    if (!os) {
      throw config_error("write failed for " + base + ".bin");
    }
  }
  nlohmann::json sidecar{{"format", "pfunction-v1"},
                         {"N_s", f.spec.N_s},
                         {"N_x", f.spec.N_x},
                         {"N_y", f.spec.N_y},
                         {"L_s", f.spec.L_s},
                         {"L_x", f.spec.L_x},
                         {"L_y", f.spec.L_y},
                         {"data", payload_name(base)}};
  std::ofstream os = open_out(base + ".json");
  os << sidecar.dump(2) << "\n";
}

PFunction load_pfunction(const std::string& base) {
  require_little_endian();
  std::ifstream is = open_in(base + ".bin");
  GridSpec spec;
  spec.N_s = static_cast<std::size_t>(read_u64(is, "N_s"));
  spec.N_x = static_cast<std::size_t>(read_u64(is, "N_x"));
  spec.N_y = static_cast<std::size_t>(read_u64(is, "N_y"));
  spec.L_s = read_f64(is, "L_s");
  spec.L_x = read_f64(is, "L_x");
  spec.L_y = read_f64(is, "L_y");
  spec.validate();
  PFunction f(spec);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double re = read_f64(is, "payload");
    const double im = read_f64(is, "payload");
    f.values[i] = cplx(re, im);
  }
  return f;
}

void save_waveop(const WaveOp& op, const std::string& base) {
  require_little_endian();
  {
    std::ofstream os = open_out(base + ".bin");
    for (Eigen::Index i = 0; i < op.matrix.rows(); ++i) {
      for (Eigen::Index j = 0; j < op.matrix.cols(); ++j) {
        write_f64(os, op.matrix(i, j).real());
        write_f64(os, op.matrix(i, j).imag());
      }
    }
    if (!os) {
      throw config_error("write failed for " + base + ".bin");
    }
  }
  nlohmann::json header{
      {"format", "waveop-v1"},
      {"hbar", op.hbar},
      {"sign", op.sign == RepSign::plus ? "plus" : "minus"},
      {"N_v", op.grid.N_v},
      {"L_v", op.grid.L_v},
      {"data", payload_name(base)}};
  std::ofstream os = open_out(base + ".json");
  os << header.dump(2) << "\n";
}

WaveOp load_waveop(const std::string& base) {
  require_little_endian();
  nlohmann::json header;
  {
    std::ifstream is = open_in(base + ".json");
    try {
      is >> header;
    } catch (const nlohmann::json::exception& e) {
      throw config_error("malformed JSON header " + base + ".json: " +
                         e.what());
    }
  }
  WaveOp op;
  try {
    op.hbar = header.at("hbar").get<double>();
    const std::string sign = header.at("sign").get<std::string>();
    if (sign == "plus") {
      op.sign = RepSign::plus;
    } else if (sign == "minus") {
      op.sign = RepSign::minus;
    } else {
      throw config_error("unknown sign '" + sign + "' in " + base + ".json");
    }
    op.grid.N_v = header.at("N_v").get<std::size_t>();
    op.grid.L_v = header.at("L_v").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw config_error("missing field in " + base + ".json: " + e.what());
  }
  op.grid.validate();
  const auto n = static_cast<Eigen::Index>(op.grid.N_v);
  op.matrix.resize(n, n);
  std::ifstream is = open_in(base + ".bin");
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = read_f64(is, "matrix payload");
      const double im = read_f64(is, "matrix payload");
      op.matrix(i, j) = cplx(re, im);
    }
  }
  return op;
}

void save_trajectory_csv(const std::string& path,
                         const std::vector<double>& times,
                         const std::vector<TrajectoryColumn>& columns) {
  for (const TrajectoryColumn& col : columns) {
    if (col.values.size() != times.size()) {
      throw config_error("trajectory column '" + col.name + "' has " +
                         std::to_string(col.values.size()) + " entries for " +
                         std::to_string(times.size()) + " times");
    }
  }
  std::ofstream os(path, std::ios::trunc);
  if (!os) {
    throw config_error("cannot open " + path + " for writing");
  }
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  os << "t";
  for (const TrajectoryColumn& col : columns) {
    os << "," << col.name;
  }
  os << "\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    os << times[i];
    for (const TrajectoryColumn& col : columns) {
      os << "," << col.values[i];
    }
    os << "\n";
  }
}

}  // namespace pmech
