#pragma once

// File formats: PFunction and WaveOp binary payloads with JSON sidecars,
// and CSV trajectory export.  All binary payloads are 8-byte little-endian
// reals (values interleaved re/im); integers are 8-byte little-endian.
//
// save_pfunction(f, base) writes base.bin (header: N_s, N_x, N_y as
// uint64, then L_s, L_x, L_y as float64; payload s-major, then x, then y)
// and base.json (the grid plus the payload file name).  save_waveop(op,
// base) writes base.bin (row-major matrix payload) and base.json (hbar,
// sign, grid, payload file name).

#include <cstddef>
#include <string>
#include <vector>

#include "pmech/grid.hpp"
#include "pmech/schrodinger.hpp"

namespace pmech {

void save_pfunction(const PFunction& f, const std::string& base);
PFunction load_pfunction(const std::string& base);

void save_waveop(const WaveOp& op, const std::string& base);
WaveOp load_waveop(const std::string& base);

/// One named CSV column; all columns must share times.size() entries.
struct TrajectoryColumn {
  std::string name;
  std::vector<double> values;
};

/// Writes "t,<name1>,<name2>,..." with one row per time.
void save_trajectory_csv(const std::string& path,
                         const std::vector<double>& times,
                         const std::vector<TrajectoryColumn>& columns);

}  // namespace pmech
