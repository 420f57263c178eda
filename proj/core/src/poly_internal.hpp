// Copyright 2026 The rrseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RRSEQ_POLY_INTERNAL_HPP
#define RRSEQ_POLY_INTERNAL_HPP

#include "rrseq/poly.hpp"

namespace rrseq::detail {

Poly prem(const Poly& A, const Poly& B);
bool definitely_coprime(const Poly& f, const Poly& g);

}  // namespace rrseq::detail

#endif  // RRSEQ_POLY_INTERNAL_HPP
