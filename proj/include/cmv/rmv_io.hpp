#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmv/ref_matrix.hpp"

namespace cmv {

/// Unrecognized container (bad magic or unsupported version).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Recognized container with inconsistent contents (truncation, invariant
/// violations, trailing bytes).
struct CorruptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void append_varint(std::vector<std::uint8_t>& out, std::uint64_t value);

/// Decodes one varint at `pos`, advancing it. Throws CorruptionError on
/// truncation or overflow.
std::uint64_t read_varint(std::span<const std::uint8_t> data,
                          std::size_t& pos);

/**
 * RMV1 container.
 *
 * Header: magic "RMV1", version byte 0x01, little-endian u64 n, u64 m'.
 * Body:   n reference entries as varint(i - refs[i]) with 0 meaning no
 *         reference; then per row: varint plus-count, plus columns as
 *         varint gaps (first gap = column + 1, later gaps = successive
 *         differences), then the minus count and gaps likewise.
 *
 * Encoding is bit-exact: equal matrices produce identical bytes.
 */
std::vector<std::uint8_t> encode_rmv(const ReferencedMatrix& rm);

/// Inverse of encode_rmv. Validates the header, every structural invariant
/// and the m' total; rejects trailing bytes. No partial results.
ReferencedMatrix decode_rmv(std::span<const std::uint8_t> data);

void save_rmv(const ReferencedMatrix& rm, const std::string& path);
ReferencedMatrix load_rmv(const std::string& path);

} // namespace cmv
