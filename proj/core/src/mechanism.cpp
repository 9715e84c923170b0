#include "ascon_drbg/mechanism.hpp"

#include <string>

#include "ascon_drbg/baselines.hpp"
#include "ascon_drbg/ctr_drbg.hpp"
#include "ascon_drbg/errors.hpp"
#include "ascon_drbg/hash_drbg.hpp"
#include "ascon_drbg/hmac_drbg.hpp"

namespace ascon_drbg {

namespace {

constexpr std::size_t kCounterBytes = 8;

template <typename State>
struct Ops {
  State (*instantiate)(EntropySource&, const OptionalBits&, const MechanismOptions&);
  State (*reseed)(const State&, EntropySource&, const OptionalBits&);
  GenerateResult<State> (*generate)(const State&, std::size_t, const OptionalBits&);
  std::size_t (*state_bytes)(const State&);
};

template <typename State>
class BasicMechanism final : public Mechanism {
 public:
  BasicMechanism(std::string_view name, std::string_view primitive, Ops<State> ops,
                 MechanismOptions options)
      : name_(name), primitive_(primitive), ops_(ops), options_(std::move(options)) {}

  std::string_view name() const noexcept override { return name_; }
  std::string_view primitive() const noexcept override { return primitive_; }

  void instantiate(EntropySource& entropy, const OptionalBits& personalization) override {
    state_ = ops_.instantiate(entropy, personalization, options_);
  }

  void reseed(EntropySource& entropy, const OptionalBits& add_input) override {
    state_ = ops_.reseed(state_, entropy, add_input);
  }

  DrbgStatus generate(std::size_t n_bits, const OptionalBits& add_input, BitString& out) override {
    GenerateResult<State> r = ops_.generate(state_, n_bits, add_input);
    if (r.status == DrbgStatus::success) {
      state_ = std::move(r.state);
      out = std::move(r.bits);
    } else {
      out = BitString{};
    }
    return r.status;
  }

  std::size_t state_bytes() const noexcept override { return ops_.state_bytes(state_); }
  std::uint64_t reseed_counter() const noexcept override { return state_.reseed_counter; }

 private:
  std::string_view name_;
  std::string_view primitive_;
  Ops<State> ops_;
  MechanismOptions options_;
  State state_{};
};

std::size_t hash_state_bytes(const HashDrbgState&) { return 2 * kHashSeedLen / 8 + kCounterBytes; }
std::size_t hmac_state_bytes(const HmacDrbgState&) { return 2 * kHmacOutLen / 8 + kCounterBytes; }
std::size_t ascon_ctr_state_bytes(const CtrDrbgState& s) {
  return 3 * kCtrBlockLen / 8 + s.a.size() + kCounterBytes;
}
std::size_t aes_ctr_state_bytes(const AesCtrDrbgState&) { return 2 * kCtrBlockLen / 8 + kCounterBytes; }

template <typename State>
std::unique_ptr<Mechanism> make(std::string_view name, std::string_view primitive, Ops<State> ops,
                                 const MechanismOptions& options) {
  return std::make_unique<BasicMechanism<State>>(name, primitive, ops, options);
}

}  // namespace

std::unique_ptr<Mechanism> make_mechanism(std::string_view name, const MechanismOptions& options) {
  if (options.ctr_len < kCtrMinCtrLen || options.ctr_len > kCtrBlockLen) {
    throw ParameterError("ctr_len must lie in [4, 128], got " + std::to_string(options.ctr_len));
  }

  if (name == "ascon-hash") {
    return make<HashDrbgState>(
        kMechanismNames[0], "Ascon-Hash256",
        {[](EntropySource& e, const OptionalBits& p, const MechanismOptions&) { return hash_instantiate(e, p); },
         [](const HashDrbgState& s, EntropySource& e, const OptionalBits& a) { return hash_reseed(s, e, a); },
         [](const HashDrbgState& s, std::size_t n, const OptionalBits& a) { return hash_generate(s, n, a); },
         hash_state_bytes},
        options);
  }
  if (name == "ascon-hmac") {
    return make<HmacDrbgState>(
        kMechanismNames[1], "Ascon-Hash256",
        {[](EntropySource& e, const OptionalBits& p, const MechanismOptions&) { return hmac_instantiate(e, p); },
         [](const HmacDrbgState& s, EntropySource& e, const OptionalBits& a) { return hmac_reseed(s, e, a); },
         [](const HmacDrbgState& s, std::size_t n, const OptionalBits& a) { return hmac_generate(s, n, a); },
         hmac_state_bytes},
        options);
  }
  if (name == "ascon-ctr") {
    return make<CtrDrbgState>(
        kMechanismNames[2], "Ascon-AEAD128",
        {[](EntropySource& e, const OptionalBits& p, const MechanismOptions& o) {
           return ctr_instantiate(e, p, o.associated_data, o.ctr_len);
         },
         [](const CtrDrbgState& s, EntropySource& e, const OptionalBits& a) { return ctr_reseed(s, e, a); },
         [](const CtrDrbgState& s, std::size_t n, const OptionalBits& a) { return ctr_generate(s, n, a); },
         ascon_ctr_state_bytes},
        options);
  }
  if (name == "sha256-hash") {
    return make<HashDrbgState>(
        kMechanismNames[3], "SHA-256",
        {[](EntropySource& e, const OptionalBits& p, const MechanismOptions&) {
           return sha256_hash_instantiate(e, p);
         },
         [](const HashDrbgState& s, EntropySource& e, const OptionalBits& a) {
           return sha256_hash_reseed(s, e, a);
         },
         [](const HashDrbgState& s, std::size_t n, const OptionalBits& a) {
           return sha256_hash_generate(s, n, a);
         },
         hash_state_bytes},
        options);
  }
  if (name == "sha256-hmac") {
    return make<HmacDrbgState>(
        kMechanismNames[4], "SHA-256",
        {[](EntropySource& e, const OptionalBits& p, const MechanismOptions&) {
           return sha256_hmac_instantiate(e, p);
         },
         [](const HmacDrbgState& s, EntropySource& e, const OptionalBits& a) {
           return sha256_hmac_reseed(s, e, a);
         },
         [](const HmacDrbgState& s, std::size_t n, const OptionalBits& a) {
           return sha256_hmac_generate(s, n, a);
         },
         hmac_state_bytes},
        options);
  }
  if (name == "aes128-ctr") {
    return make<AesCtrDrbgState>(
        kMechanismNames[5], "AES-128",
        {[](EntropySource& e, const OptionalBits& p, const MechanismOptions& o) {
           return aes128_ctr_instantiate(e, p, o.ctr_len);
         },
         [](const AesCtrDrbgState& s, EntropySource& e, const OptionalBits& a) {
           return aes128_ctr_reseed(s, e, a);
         },
         [](const AesCtrDrbgState& s, std::size_t n, const OptionalBits& a) {
           return aes128_ctr_generate(s, n, a);
         },
         aes_ctr_state_bytes},
        options);
  }
  throw ParameterError("unknown mechanism '" + std::string(name) + "'");
}

}  // namespace ascon_drbg
