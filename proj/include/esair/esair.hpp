#pragma once

// ESAIR: templatic Arabic stemming, stem-keyed indexing, retrieval and
// evaluation. Everything is header-only; include this to get the full API.

#include "esair/errors.hpp"
#include "esair/evaluation.hpp"
#include "esair/index.hpp"
#include "esair/lexicon.hpp"
#include "esair/normalize.hpp"
#include "esair/retrieval.hpp"
#include "esair/segmentation.hpp"
#include "esair/stemmer.hpp"
#include "esair/unicode.hpp"

namespace esair {
inline constexpr std::string_view kVersion = "1.0.0";
}
