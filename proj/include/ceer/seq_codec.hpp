#pragma once

// Coding of nonzero-integer sequences as naturals.
//
// Each item x becomes |x| zeros preceded by "1" (x < 0) or "11" (x > 0); the
// concatenation is read as a base-2 numeral, most significant digit first.
// A digit string is a code iff it starts with 1, ends with 0 and contains no
// "111".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ceer/types.hpp"

namespace ceer {

using NzSeq = std::vector<std::int64_t>;

/// Throws SpecError on an empty sequence or a zero item.
BigNat encode_seq(const NzSeq& s);

/// 0 if z is not a code; else the length for i = 0, the i-th item for
/// 1 <= i <= length, and 0 past the end.
BigNat decode_seq_big(const BigNat& z, std::uint64_t i);
std::int64_t decode_seq(std::uint64_t z, std::uint64_t i);

/// The whole sequence coded by z, or nullopt if z is not a code.
std::optional<NzSeq> decode_all(std::uint64_t z);
std::optional<NzSeq> decode_all(const BigNat& z);

bool is_valid_code(std::uint64_t z);
bool is_valid_code(const BigNat& z);

/// 2^(1 + k(2+k)). Throws SpecError for k = 0.
BigNat beta(std::uint64_t k);

std::string to_binary(const BigNat& z);

}  // namespace ceer
