#pragma once

#include <cstdint>
#include <utility>

#include "numrad/block_ops.hpp"
#include "numrad/types.hpp"

namespace numrad {

enum class Ensemble { Ginibre, Hermitian, Psd, Pd, Unitary };

struct GenSpec {
  int dim = 2;
  std::uint64_t seed = 0;
  Ensemble ensemble = Ensemble::Ginibre;
  double scale = 1.0;
};

namespace detail {
/// One Philox4x32-10 block (Salmon et al. 2011).
void philox4x32_10(const std::uint32_t ctr[4], const std::uint32_t key[2], std::uint32_t out[4]);
}  // namespace detail

/// Counter-based deterministic stream (Philox4x32-10, Salmon et al. 2011).
/// Key = the 64-bit seed; counter = (block, trial_lo, trial_hi, stream_id).
/// Identical (seed, stream_id, trial) always reproduces the same draws, and
/// streams with distinct ids are independent.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint32_t stream_id, std::uint64_t trial);

  std::uint32_t next_u32();
  /// Uniform double in [0, 1) with 53 random bits.
  double u01();
  /// Standard normal via Box-Muller (one fresh pair per call).
  double normal();
  /// Complex normal with E|z|^2 = 1.
  cplx cnormal();

 private:
  std::uint32_t key_[2];
  std::uint32_t ctr_[4];
  std::uint32_t buf_[4];
  int pos_ = 4;
  void refill();
};

CMatrix gen_matrix(RandomStream& rs, int dim, Ensemble ensemble, double scale = 1.0);
CMatrix gen_matrix(const GenSpec& spec);

/// iid complex-normal entries scaled by `scale`.
CVector gen_vector(RandomStream& rs, int dim, double scale = 1.0);

enum class IntertwineMode { Hermitian, Polar };

/// (X, Y) with |X| Y = Y^* |X| exactly by construction (simultaneous
/// diagonalization); the residual is re-measured through the matrix kernel and
/// ConstructionFailure is raised if it exceeds 1e-10 of the instance scale.
std::pair<CMatrix, CMatrix> gen_intertwined_pair(RandomStream& rs, int dim, double scale,
                                                 IntertwineMode mode);
std::pair<CMatrix, CMatrix> gen_intertwined_pair(const GenSpec& spec, IntertwineMode mode);

/// (X, Y) with XY = YX and |X^2| Y^2 = (Y^2)^* |X^2|: X normal and Y Hermitian
/// in a common eigenbasis.
std::pair<CMatrix, CMatrix> gen_commuting_pair(RandomStream& rs, int dim, double scale);
std::pair<CMatrix, CMatrix> gen_commuting_pair(const GenSpec& spec);

enum class BlockStructure { Full, Offdiag2 };

BlockMatrix gen_blocks(RandomStream& rs, int dim, double scale, int n, BlockStructure structure);
BlockMatrix gen_blocks(const GenSpec& spec, int n, BlockStructure structure);

}  // namespace numrad
