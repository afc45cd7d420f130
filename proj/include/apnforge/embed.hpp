/*
   Copyright 2026 The apnforge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Field embeddings GF(2^m) -> GF(2^M), m | M. The image of the source
// generator is the least root (integer order of bit vectors) of the source
// modulus in the target, so the map is reproducible. A field embeds into
// itself by the identity.

#ifndef APNFORGE_EMBED_HPP
#define APNFORGE_EMBED_HPP

#include <vector>

#include "apnforge/error.hpp"
#include "apnforge/gf2m.hpp"
#include "apnforge/polyalg.hpp"

namespace apnforge {

class Embedding {
public:
    Embedding(const FieldCtx& source, const FieldCtx& target) : src_(&source), dst_(&target) {
        const int m = source.degree();
        const int big = target.degree();
        if (big % m != 0) {
            throw InvalidArgument("cannot embed GF(2^" + std::to_string(m) + ") into GF(2^" +
                                  std::to_string(big) + ")");
        }
        FieldElem root = target.generator();
        if (&source != &target) {
            std::vector<FieldElem> c;
            for (int k = 0; k <= m; ++k) {
                c.push_back(source.modulus().bit(static_cast<std::size_t>(k)) ? target.one() : target.zero());
            }
            const auto roots = find_roots(UniPoly(target, std::move(c)));
            if (roots.empty()) throw Error("internal: source modulus has no root in the target field");
            root = roots.front();
        }
        powers_.reserve(static_cast<std::size_t>(m));
        FieldElem p = target.one();
        for (int k = 0; k < m; ++k) {
            powers_.push_back(p);
            p *= root;
        }
        root_ = root;
    }

    const FieldCtx& source() const noexcept { return *src_; }
    const FieldCtx& target() const noexcept { return *dst_; }
    /// Image of the source generator.
    const FieldElem& root() const noexcept { return root_; }

    FieldElem operator()(const FieldElem& a) const {
        if (a.field_ptr() != src_) throw FieldMismatch();
        if (src_ == dst_) return a;
        FieldElem r = dst_->zero();
        const auto& w = a.bits();
        for (std::size_t k = 0; k < powers_.size(); ++k) {
            if (((w[k / 64] >> (k % 64)) & 1U) != 0) r += powers_[k];
        }
        return r;
    }

private:
    const FieldCtx* src_;
    const FieldCtx* dst_;
    FieldElem root_;
    std::vector<FieldElem> powers_;
};

/// One-off embedding of a single element; build an Embedding for batches.
inline FieldElem compositum_embed(const FieldElem& a, const FieldCtx& target) {
    return Embedding(a.field(), target)(a);
}

}  // namespace apnforge

#endif  // APNFORGE_EMBED_HPP
