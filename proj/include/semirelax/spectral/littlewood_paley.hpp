#pragma once

namespace semirelax::spectral {

/// Smooth dyadic partition of unity in |xi|.
///
/// theta(x) = 1 for x <= 1, 0 for x >= 9/8, C^infinity in between. Block 0 is
/// the low-frequency cap theta(|xi|); block b >= 1 is
///   phi_j(xi) = theta(|xi| / 2^{j+1}) - theta(|xi| / 2^j),  j = b - 1,
/// which equals 1 on [9/8 * 2^j, 2^{j+1}] and vanishes outside
/// [2^j, 9/8 * 2^{j+1}]. The blocks telescope, so their sum is exactly
/// theta(|xi| / 2^{J+1}) = 1 on every frequency the partition was built for.
class LittlewoodPaley {
 public:
  /// Builds enough blocks to cover |xi| <= max_frequency.
  explicit LittlewoodPaley(double max_frequency);

  int block_count() const noexcept { return blocks_; }
  double weight(int block, double abs_xi) const noexcept;
  /// Dyadic scale 2^j of block b >= 1; 1 for the low block.
  double scale(int block) const noexcept;

  static double cutoff(double x) noexcept;

 private:
  int blocks_;
};

}  // namespace semirelax::spectral
