#pragma once

#include <cstddef>
#include <string>

#include "tempval/validator.hpp"

namespace tempval {

struct BenchInstance {
  std::string domain;
  std::string problem;
  std::string plan;
};

/// A token walks along nodes n0 .. n<n>: step i moves it from n<i> to
/// n<i+1> at time 2i with duration 1. Valid by construction.
BenchInstance chain_instance(std::size_t n);

RunReport bench(std::size_t n, SequencePath path = SequencePath::Auto);

}  // namespace tempval
