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

#pragma once

#include <string_view>

#include "petriproof/value.hpp"

namespace petriproof::scheme {

enum class HashAlg { Sha256, Sha1 };

Bytes digest(HashAlg alg, const Bytes& data);
Bytes to_bytes(std::string_view s);
BigInt from_big_endian(const Bytes& b);

/* e = int(H(m)) mod n. */
BigInt hash_to_int(HashAlg alg, const Bytes& m, const BigInt& n);

}  // namespace petriproof::scheme
