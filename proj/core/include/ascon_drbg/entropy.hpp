#pragma once

#include <cstddef>
#include <utility>

#include "ascon_drbg/bitstring.hpp"

namespace ascon_drbg {

/// Source of seed material. Implementations are not thread-safe.
class EntropySource {
 public:
  virtual ~EntropySource() = default;

  /// Exactly n_bits of entropy. n_bits must be positive and a multiple of 8
  /// (ParameterError otherwise); EntropyError if the source cannot deliver.
  BitString get_entropy(std::size_t n_bits);

 protected:
  virtual Bytes read(std::size_t n_bytes) = 0;
};

/// Kernel randomness via getrandom(2).
class OsEntropySource final : public EntropySource {
 protected:
  Bytes read(std::size_t n_bytes) override;
};

/// Replays a fixed byte script in order, then fails.
class ScriptedEntropySource final : public EntropySource {
 public:
  explicit ScriptedEntropySource(Bytes script) : script_(std::move(script)) {}

  std::size_t remaining_bytes() const noexcept { return script_.size() - pos_; }

 protected:
  Bytes read(std::size_t n_bytes) override;

 private:
  Bytes script_;
  std::size_t pos_ = 0;
};

inline BitString get_entropy(EntropySource& source, std::size_t n_bits) {
  return source.get_entropy(n_bits);
}

}  // namespace ascon_drbg
