#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace mmdseg {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11): a keyed bijection of a
/// 128-bit counter. Output depends only on (counter, key), so any stream position can be
/// reproduced on any platform.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key);
};

/// SplitMix64 finaliser; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// Combines a seed with a sequence of labels into a 64-bit stream key. Order-sensitive.
std::uint64_t derive_key(std::uint64_t seed, std::initializer_list<std::uint64_t> labels);

/// Sequential reader over one Philox stream. The generator key is `key`; the upper half of
/// the counter holds `stream`, the lower half counts 128-bit blocks.
class RandomStream {
 public:
  RandomStream(std::uint64_t key, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_positive();
  /// Uniform integer on [0, bound); bound >= 1. Unbiased (Lemire's multiply-and-reject).
  std::uint64_t below(std::uint64_t bound);
  /// Standard normal via the Box-Muller transform; the second variate is cached.
  double normal();
  /// Student t with 3 degrees of freedom divided by sqrt(3), which has unit variance.
  double student_t3_unit();
  /// Uniform random permutation in place (Fisher-Yates).
  void shuffle(std::span<std::size_t> values);

 private:
  void refill();

  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mmdseg
