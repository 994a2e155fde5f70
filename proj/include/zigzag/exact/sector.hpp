#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "zigzag/model/hamiltonian.hpp"
#include "zigzag/model/ladder.hpp"
#include "zigzag/model/state.hpp"

namespace zigzag {

// Configurations with fixed total Sz (stored as 2 Sz), in increasing index order.
class SectorBasis {
 public:
  SectorBasis(const LadderSpec& spec, int twice_sz);

  int twice_sz() const { return twice_sz_; }
  std::size_t dimension() const { return configs_.size(); }
  std::uint64_t config(std::size_t i) const { return configs_[i]; }
  const std::vector<std::uint64_t>& configs() const { return configs_; }
  std::optional<std::size_t> index_of(std::uint64_t config) const;
  std::int64_t position(std::uint64_t config) const { return lookup_[config]; }  // -1 outside the sector

  StateVector embed(const Eigen::VectorXd& local, int n_sites, int local_dim) const;
  StateVector embed(const Eigen::VectorXcd& local, int n_sites, int local_dim) const;
  Eigen::VectorXcd restrict(const StateVector& state) const;

 private:
  int twice_sz_;
  std::vector<std::uint64_t> configs_;
  std::vector<std::int32_t> lookup_;
};

// Allowed 2 Sz values, ascending.
std::vector<int> available_sectors(const LadderSpec& spec);

// out = H in on the sector (real arithmetic; H is real symmetric).
void apply_sector_hamiltonian(const HamiltonianKernel& kernel, const SectorBasis& basis, const double* in,
                              double* out);

Eigen::MatrixXd sector_hamiltonian_dense(const LadderSpec& spec, const SectorBasis& basis);

}  // namespace zigzag
