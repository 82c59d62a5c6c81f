#pragma once

// Data files compiled into the library (generated at configure time).

#include <span>
#include <string_view>

#include "l1/hilbert.hpp"

namespace l1::embedded {

std::string_view corpus();
std::span<const BundledProof> proofs();

}  // namespace l1::embedded
