/*
 * Copyright (C) 2026 The petriproof Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "petriproof/scheme/hash.hpp"

#include <memory>

#include <openssl/evp.h>

#include "petriproof/error.hpp"

namespace petriproof::scheme {

Bytes digest(HashAlg alg, const Bytes& data) {
    const EVP_MD* md = alg == HashAlg::Sha1 ? EVP_sha1() : EVP_sha256();
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    unsigned char out[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), md, nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), out, &len) != 1)
        throw Error(ErrorCode::InvalidArgument, "digest computation failed");
    return Bytes(out, out + len);
}

Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

BigInt from_big_endian(const Bytes& b) {
    BigInt v = 0;
    for (auto c : b) v = (v << 8) | c;
    return v;
}

BigInt hash_to_int(HashAlg alg, const Bytes& m, const BigInt& n) {
    BigInt e = from_big_endian(digest(alg, m)) % n;
    return e;
}

}  // namespace petriproof::scheme
