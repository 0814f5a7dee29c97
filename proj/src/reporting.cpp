#include "commitguard/reporting.hpp"

#include <fstream>
#include <system_error>

#include "commitguard/errors.hpp"

namespace commitguard {

std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> state_counts(const Metrics& m) {
    return {m.friend_count, m.family_count, m.strange_count};
}

std::uint64_t waited_count(const Metrics& m) {
    return m.waited_total;
}

std::string_view narrative_label(ResponsibilityId id) {
    switch (id) {
        case ResponsibilityId::Resp1: return "Collects Information";
        case ResponsibilityId::Resp2: return "Shares Information";
        case ResponsibilityId::Resp3: return "Protects Information";
        case ResponsibilityId::Resp4: return "Signs Off";
        case ResponsibilityId::Resp5: return "Guards Privacy";
        case ResponsibilityId::Resp6: return "Checks Sharing Goal";
        case ResponsibilityId::Resp7: return "Post Activity";
    }
    return "?";
}

std::string render_narrative(const ExecutionLog& log) {
    std::string out;
    for (const LogRecord& rec : log.records()) {
        const std::string tag = "C_Resp" + std::to_string(responsibility_ordinal(rec.responsibility));
        if (rec.new_state == LifecycleState::Signaled) {
            out += tag + " : is Signal\n";
            continue;
        }
        std::string_view state;
        switch (rec.new_state) {
            case LifecycleState::Active: state = "Active"; break;
            case LifecycleState::Waiting: state = "Waiting"; break;
            case LifecycleState::Deactivated: state = "Deactivate"; break;
            default: state = to_string(rec.new_state); break;
        }
        out += tag + " : " + std::string(narrative_label(rec.responsibility)) + " is " +
               std::string(state);
        if (rec.failed) out += " (failed)";
        out += "\n";
    }
    return out;
}

std::optional<EmitFormat> emit_format_from_string(std::string_view text) {
    if (text == "csv") return EmitFormat::Csv;
    if (text == "text" || text == "structured-text") return EmitFormat::StructuredText;
    return std::nullopt;
}

namespace {

std::string per_responsibility_lines(const Metrics& m, char sep) {
    std::string out;
    for (ResponsibilityId id : kAllResponsibilities) {
        const auto it = m.per_responsibility_counts.find(id);
        const std::uint64_t count = it == m.per_responsibility_counts.end() ? 0 : it->second;
        out += std::string(to_string(id)) + sep + std::to_string(count) + "\n";
    }
    return out;
}

}  // namespace

std::string metrics_to_text(const Metrics& m) {
    std::string out;
    out += "friend=" + std::to_string(m.friend_count) + "\n";
    out += "family=" + std::to_string(m.family_count) + "\n";
    out += "strange=" + std::to_string(m.strange_count) + "\n";
    out += "waited_total=" + std::to_string(m.waited_total) + "\n";
    out += per_responsibility_lines(m, '=');
    return out;
}

std::string metrics_to_csv(const Metrics& m) {
    std::string out = "key,value\n";
    out += "friend," + std::to_string(m.friend_count) + "\n";
    out += "family," + std::to_string(m.family_count) + "\n";
    out += "strange," + std::to_string(m.strange_count) + "\n";
    out += "waited_total," + std::to_string(m.waited_total) + "\n";
    out += per_responsibility_lines(m, ',');
    return out;
}

std::string queue_series_to_csv(const Metrics& m) {
    std::string out = "tick,account,length\n";
    for (const QueueSample& sample : m.queue_length_series) {
        out += std::to_string(sample.tick) + "," + to_display(sample.account) + "," +
               std::to_string(sample.length) + "\n";
    }
    return out;
}

namespace {

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out.is_open()) throw IoError(tmp.string(), "cannot open for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out.good()) throw IoError(tmp.string(), "write failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError(path.string(), "rename failed: " + ec.message());
}

}  // namespace

void emit(const Metrics& metrics, const ExecutionLog& log, EmitFormat format,
          const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError(out_dir.string(), "cannot create directory: " + ec.message());

    write_atomic(out_dir / "log.csv", to_csv(log));
    write_atomic(out_dir / "narrative.txt", render_narrative(log));
    write_atomic(out_dir / "queue_lengths.csv", queue_series_to_csv(metrics));
    if (format == EmitFormat::Csv) {
        write_atomic(out_dir / "metrics.csv", metrics_to_csv(metrics));
    } else {
        write_atomic(out_dir / "metrics.txt", metrics_to_text(metrics));
    }
}

}  // namespace commitguard
