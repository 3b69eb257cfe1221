#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qfuse {

// Nonempty subset of a frame, stored as a bitmask over frame positions.
//
// Ordering is the canonical report order: singletons first, then larger
// sets by cardinality, ties broken lexicographically on member positions.
// The full frame therefore always sorts last.
class FocalSet {
public:
    static constexpr std::size_t kMaxFrameSize = 64;

    explicit FocalSet(std::uint64_t bits);
    static FocalSet singleton(std::size_t position);

    std::uint64_t bits() const { return bits_; }
    std::size_t size() const;
    bool contains(std::size_t position) const { return (bits_ >> position) & 1U; }
    bool is_subset_of(FocalSet other) const { return (bits_ & ~other.bits_) == 0; }

    friend bool operator==(FocalSet, FocalSet) = default;
    friend bool operator<(FocalSet a, FocalSet b);

private:
    std::uint64_t bits_;
};

class Frame {
public:
    explicit Frame(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t position) const { return labels_.at(position); }
    std::size_t position(std::string_view label) const;

    FocalSet full() const;
    bool contains(FocalSet s) const { return s.is_subset_of(full()); }

    // Members may come in any order but must be distinct frame labels.
    FocalSet focal(const std::vector<std::string>& members) const;
    std::vector<std::string> members(FocalSet s) const;

    // Concatenated labels ("SD") for single-character frames, braces otherwise.
    std::string name(FocalSet s) const;

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    std::vector<std::string> labels_;
};

}  // namespace qfuse
