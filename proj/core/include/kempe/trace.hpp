#pragma once

#include <cstdint>

#include "kempe/graph.hpp"

namespace kempe {

using Color = std::int32_t;  // 1..K
inline constexpr Color kNoColor = 0;

// Ordered pair of link colors on one edge; `first` is the color at the
// lower-id endpoint under the canonical edge orientation.
struct ComplexColor {
    Color first{kNoColor};
    Color second{kNoColor};
    bool is_constant() const { return first == second; }
    bool is_variable() const { return first != second; }
    bool contains(Color c) const { return first == c || second == c; }
    ComplexColor negated() const { return {second, first}; }
    friend bool operator==(const ComplexColor&, const ComplexColor&) = default;
};

// One structured run event. The serialized line format lives with the rest
// of the I/O code; engines only fill these fields.
struct TraceEvent {
    enum class Kind {
        exchange,    // edge recolored by one exchange operand
        dontcare,    // recolor against a missing color
        invert,      // edge flipped by a path inversion
        classify,    // move classification for (tagged, next); detail = case
        deflect,     // blocked candidate skipped
        eliminate,   // variable edge became constant
        budget,      // walk budget state: a=n_i, b=k, c=r
        select,      // variable selected for walking
    };
    Kind kind;
    EdgeId edge{kNoEdge};
    ComplexColor before{};
    ComplexColor after{};
    const char* detail = "";
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
};

class TraceSink {
public:
    virtual ~TraceSink() = default;
    virtual void on_event(const TraceEvent& event) = 0;
};

}  // namespace kempe
