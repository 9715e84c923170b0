#include "ascon_drbg/hmac.hpp"

namespace ascon_drbg {

BitString ascon_hmac(ByteSpan key, ByteSpan message, const HmacParams& params) {
  return BitString::from_bytes(hmac<AsconHash256Fn>(key, message, params));
}

Bytes ascon_derive_k0(ByteSpan key, const HmacParams& params) {
  return derive_k0<AsconHash256Fn>(key, params);
}

}  // namespace ascon_drbg
