#include "ascon_drbg/primitives.hpp"

#include <openssl/evp.h>

#include <memory>

#include "ascon_drbg/errors.hpp"

namespace ascon_drbg {

namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const noexcept { EVP_MD_CTX_free(ctx); }
};
struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const noexcept { EVP_CIPHER_CTX_free(ctx); }
};

EVP_MD_CTX* md_ctx() {
  thread_local std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx(EVP_MD_CTX_new());
  if (!ctx) throw Error("EVP_MD_CTX_new failed");
  return ctx.get();
}

EVP_CIPHER_CTX* cipher_ctx() {
  thread_local std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter> ctx(EVP_CIPHER_CTX_new());
  if (!ctx) throw Error("EVP_CIPHER_CTX_new failed");
  return ctx.get();
}

}  // namespace

Digest256 AsconHash256Fn::digest(std::initializer_list<ByteSpan> parts) {
  AsconHash256 h;
  for (ByteSpan p : parts) h.update(p);
  return h.finalize();
}

Digest256 Sha256Fn::digest(std::initializer_list<ByteSpan> parts) {
  EVP_MD_CTX* ctx = md_ctx();
  if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 init failed");
  for (ByteSpan p : parts) {
    if (!p.empty() && EVP_DigestUpdate(ctx, p.data(), p.size()) != 1) {
      throw Error("SHA-256 update failed");
    }
  }
  Digest256 out{};
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(ctx, out.data(), &len) != 1 || len != out.size()) {
    throw Error("SHA-256 final failed");
  }
  return out;
}

Digest256 sha256(ByteSpan message) { return Sha256Fn::digest({message}); }

Block16 aes128_encrypt_block(const Block16& key, const Block16& block) {
  EVP_CIPHER_CTX* ctx = cipher_ctx();
  if (EVP_EncryptInit_ex(ctx, EVP_aes_128_ecb(), nullptr, key.data(), nullptr) != 1) {
    throw Error("AES-128 key setup failed");
  }
  EVP_CIPHER_CTX_set_padding(ctx, 0);
  Block16 out{};
  int len = 0;
  if (EVP_EncryptUpdate(ctx, out.data(), &len, block.data(), static_cast<int>(block.size())) != 1 ||
      len != static_cast<int>(out.size())) {
    throw Error("AES-128 block encryption failed");
  }
  return out;
}

}  // namespace ascon_drbg
