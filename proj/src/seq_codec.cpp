#include "ceer/seq_codec.hpp"

#include <bit>
#include <string>

#include "ceer/errors.hpp"

namespace ceer {

namespace {

// Most significant digit first.
std::string digits_of(const NzSeq& s) {
  std::string out;
  for (std::int64_t x : s) {
    if (x == 0) throw SpecError("encode_seq: sequence items must be nonzero");
    out += x < 0 ? "1" : "11";
    const std::uint64_t mag = x < 0 ? 0 - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
    out.append(mag, '0');
  }
  return out;
}

bool valid_digits(const std::string& d) {
  return !d.empty() && d.front() == '1' && d.back() == '0' && d.find("111") == std::string::npos;
}

// Items start exactly at each "10" or "11" boundary.
NzSeq parse_digits(const std::string& d) {
  NzSeq out;
  std::size_t p = 0;
  while (p < d.size()) {
    std::size_t q = p + 1;
    const bool positive = d[q] == '1';
    if (positive) ++q;
    std::int64_t mag = 0;
    while (q < d.size() && d[q] == '0') {
      ++mag;
      ++q;
    }
    out.push_back(positive ? mag : -mag);
    p = q;
  }
  return out;
}

}  // namespace

BigNat encode_seq(const NzSeq& s) {
  if (s.empty()) throw SpecError("encode_seq: sequence must be nonempty");
  BigNat z = 0;
  for (char c : digits_of(s)) {
    z <<= 1;
    if (c == '1') z |= 1;
  }
  return z;
}

std::string to_binary(const BigNat& z) {
  if (z == 0) return "0";
  std::string out;
  const auto bits = boost::multiprecision::msb(z) + 1;
  out.reserve(bits);
  for (auto b = bits; b-- > 0;) out += boost::multiprecision::bit_test(z, b) ? '1' : '0';
  return out;
}

bool is_valid_code(std::uint64_t z) {
  return z != 0 && (z & 1u) == 0 && (z & (z >> 1) & (z >> 2)) == 0;
}

bool is_valid_code(const BigNat& z) { return z > 0 && valid_digits(to_binary(z)); }

std::optional<NzSeq> decode_all(std::uint64_t z) {
  if (!is_valid_code(z)) return std::nullopt;
  NzSeq out;
  int p = 63 - std::countl_zero(z);  // position of the leading 1
  while (p >= 0) {
    // bit p is the 1 that opens an item
    int q = p - 1;
    const bool positive = ((z >> q) & 1u) != 0;
    if (positive) --q;
    std::int64_t mag = 0;
    while (q >= 0 && ((z >> q) & 1u) == 0) {
      ++mag;
      --q;
    }
    out.push_back(positive ? mag : -mag);
    p = q;
  }
  return out;
}

std::optional<NzSeq> decode_all(const BigNat& z) {
  if (z <= 0) return std::nullopt;
  const std::string d = to_binary(z);
  if (!valid_digits(d)) return std::nullopt;
  return parse_digits(d);
}

std::int64_t decode_seq(std::uint64_t z, std::uint64_t i) {
  const auto s = decode_all(z);
  if (!s) return 0;
  if (i == 0) return static_cast<std::int64_t>(s->size());
  return i <= s->size() ? (*s)[i - 1] : 0;
}

BigNat decode_seq_big(const BigNat& z, std::uint64_t i) {
  const auto s = decode_all(z);
  if (!s) return 0;
  if (i == 0) return BigNat(s->size());
  return i <= s->size() ? BigNat((*s)[i - 1]) : BigNat(0);
}

BigNat beta(std::uint64_t k) {
  if (k == 0) throw SpecError("beta is defined on k >= 1");
  return BigNat(1) << static_cast<unsigned>(1 + k * (2 + k));
}

}  // namespace ceer
