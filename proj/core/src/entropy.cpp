#include "ascon_drbg/entropy.hpp"

#include <sys/random.h>

#include <cerrno>
#include <cstring>
#include <string>

#include "ascon_drbg/errors.hpp"

namespace ascon_drbg {

BitString EntropySource::get_entropy(std::size_t n_bits) {
  if (n_bits == 0 || n_bits % 8 != 0) {
    throw ParameterError("entropy requests must be a positive multiple of 8 bits, got " +
                         std::to_string(n_bits));
  }
  Bytes bytes = read(n_bits / 8);
  if (bytes.size() != n_bits / 8) throw EntropyError("entropy source returned a short read");
  return BitString::from_bytes(bytes);
}

Bytes OsEntropySource::read(std::size_t n_bytes) {
  Bytes out(n_bytes);
  std::size_t filled = 0;
  while (filled < n_bytes) {
    const ssize_t got = getrandom(out.data() + filled, n_bytes - filled, 0);
    if (got < 0) {
      if (errno == EINTR) continue;
      throw EntropyError(std::string("getrandom failed: ") + std::strerror(errno));
    }
    filled += static_cast<std::size_t>(got);
  }
  return out;
}

Bytes ScriptedEntropySource::read(std::size_t n_bytes) {
  if (n_bytes > remaining_bytes()) {
    throw EntropyError("entropy script exhausted: wanted " + std::to_string(n_bytes) +
                       " bytes, " + std::to_string(remaining_bytes()) + " left");
  }
  const auto first = script_.begin() + static_cast<std::ptrdiff_t>(pos_);
  pos_ += n_bytes;
  return Bytes(first, first + static_cast<std::ptrdiff_t>(n_bytes));
}

}  // namespace ascon_drbg
