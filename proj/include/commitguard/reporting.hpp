#pragma once

#include <filesystem>
#include <string>
#include <tuple>

#include "commitguard/log.hpp"
#include "commitguard/metrics.hpp"

namespace commitguard {

std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> state_counts(const Metrics& m);

std::uint64_t waited_count(const Metrics& m);

// Human label used in narratives, e.g. Resp1 -> "Collects Information".
std::string_view narrative_label(ResponsibilityId id);

// One line per transition: "C_Resp<k> : <Label> is <State>", with signal
// lines rendered as "C_Resp<k> : is Signal" and failed cut-offs marked.
std::string render_narrative(const ExecutionLog& log);

enum class EmitFormat : std::uint8_t { Csv, StructuredText };

std::optional<EmitFormat> emit_format_from_string(std::string_view text);

std::string metrics_to_text(const Metrics& m);
std::string metrics_to_csv(const Metrics& m);
std::string queue_series_to_csv(const Metrics& m);

// Writes log.csv, narrative.txt, queue_lengths.csv, and metrics.{csv,txt}
// into out_dir.  Each file lands atomically (temp file + rename).  Throws
// IoError.
void emit(const Metrics& metrics, const ExecutionLog& log, EmitFormat format,
          const std::filesystem::path& out_dir);

}  // namespace commitguard
