#include "qfuse/frame.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "qfuse/error.hpp"

namespace qfuse {

FocalSet::FocalSet(std::uint64_t bits) : bits_(bits) {
    if (bits == 0) {
        throw ValidationError("focal set must be nonempty");
    }
}

FocalSet FocalSet::singleton(std::size_t position) {
    if (position >= kMaxFrameSize) {
        throw ValidationError("frame position out of range");
    }
    return FocalSet(std::uint64_t{1} << position);
}

std::size_t FocalSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

bool operator<(FocalSet a, FocalSet b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) {
        return false;
    }
    // The set owning the lowest differing position has the smaller member list.
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits_ & lowest) != 0;
}

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw ValidationError("frame needs at least one element");
    }
    if (labels_.size() > FocalSet::kMaxFrameSize) {
        throw ValidationError("frame is limited to 64 elements");
    }
    std::set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (l.empty()) {
            throw ValidationError("frame labels must be non-empty");
        }
        if (!seen.insert(l).second) {
            throw ValidationError("duplicate frame label '" + l + "'");
        }
    }
}

std::size_t Frame::position(std::string_view label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw ValidationError("'" + std::string(label) + "' is not a frame element");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

FocalSet Frame::full() const {
    const std::size_t n = labels_.size();
    return FocalSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

FocalSet Frame::focal(const std::vector<std::string>& members) const {
    if (members.empty()) {
        throw ValidationError("focal set must be nonempty");
    }
    std::uint64_t bits = 0;
    for (const auto& m : members) {
        const std::uint64_t bit = std::uint64_t{1} << position(m);
        if (bits & bit) {
            throw ValidationError("duplicate member '" + m + "' in focal set");
        }
        bits |= bit;
    }
    return FocalSet(bits);
}

std::vector<std::string> Frame::members(FocalSet s) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (s.contains(i)) out.push_back(labels_[i]);
    }
    return out;
}

std::string Frame::name(FocalSet s) const {
    const auto ms = members(s);
    const bool compact = std::all_of(labels_.begin(), labels_.end(),
                                     [](const std::string& l) { return l.size() == 1; });
    std::string out;
    if (compact) {
        for (const auto& m : ms) out += m;
        return out;
    }
    out = "{";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ",";
        out += ms[i];
    }
    return out + "}";
}

}  // namespace qfuse
