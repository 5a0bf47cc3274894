#pragma once

#include <string>
#include <vector>

#include "apdisk/types.hpp"

namespace apdisk {

enum class CorpusKind { series, trace, arc, map };

std::string to_string(CorpusKind k);

/// Reference fixture with analytically known ground truth. Exactly one of
/// the payload members is meaningful, selected by `kind`.
struct CorpusEntry {
    std::string name;
    CorpusKind kind = CorpusKind::series;
    PowerSeries series;      // kind series: the function; kind map: phi
    BoundaryTrace trace;     // kind trace
    ArcTrace arc;            // kind arc
    int true_class = kUnboundedOrder;  // A^p class where known
    std::string ground_truth;          // derivation note, never an unsourced number
};

/// Deterministic registry lookup; throws on unknown names.
const CorpusEntry& corpus_get(const std::string& name);

/// All entries in stable registration order.
const std::vector<CorpusEntry>& corpus_all();

std::vector<CorpusEntry> corpus_filter_kind(CorpusKind kind);

/// Entries whose true A^p class lies in [lo, hi].
std::vector<CorpusEntry> corpus_filter_class(int lo, int hi);

}  // namespace apdisk
