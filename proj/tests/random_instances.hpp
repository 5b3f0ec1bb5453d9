// Random micro-dictionaries and tokens over a tiny vocabulary, dense enough
// that every audit class turns up within a few hundred draws.
#pragma once

#include <random>
#include <string>

#include "pdtc/audit.hpp"

namespace pdtc::testing {

inline const char* const k_lemma_pool[] = {
    "x", "x-1", "x-2", "x_,a", "x_^(^DD**y)", "x-1_,h", "x-1_^(^GC**y)", "y", "y-1", "y_,a",
};
inline const char* const k_tag_pool[] = {"NNFS1-----A----", "NNFS4-----A----", "Vf--------A-I--"};
inline const char* const k_form_pool[] = {"f", "g", "h"};

template <std::size_t N>
const char* pick(std::mt19937& rng, const char* const (&pool)[N]) {
  return pool[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

inline Dictionary random_dictionary(std::mt19937& rng) {
  Dictionary dict;
  auto triples = std::uniform_int_distribution<int>(0, 8)(rng);
  for (int i = 0; i < triples; ++i)
    dict.insert(Lemma::parse(pick(rng, k_lemma_pool)), PosTag::decode(pick(rng, k_tag_pool)),
                pick(rng, k_form_pool));
  return dict;
}

inline TokenAnalysis random_token(std::mt19937& rng, std::size_t n) {
  return {pick(rng, k_form_pool), Lemma::parse(pick(rng, k_lemma_pool)),
          PosTag::decode(pick(rng, k_tag_pool)), TokenLocation{"rand", "1", n + 1}};
}

}  // namespace pdtc::testing
