#include "commitguard/log.hpp"

#include <charconv>
#include <sstream>

#include "commitguard/errors.hpp"

namespace commitguard {

namespace {

constexpr std::string_view kCsvHeader =
    "tick,cid,responsibility,action,old_state,new_state,network,account,relation,failed";

bool needs_quoting(std::string_view field) {
    return field.find_first_of(",\"\n") != std::string_view::npos;
}

void write_field(std::string& out, std::string_view field) {
    if (!needs_quoting(field)) {
        out.append(field);
        return;
    }
    out.push_back('"');
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
}

// Splits one CSV row, honoring double-quoted fields.
std::vector<std::string> split_row(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (quoted) throw ParseError(line_no, "unterminated quote");
    fields.push_back(std::move(current));
    return fields;
}

std::int64_t parse_int(const std::string& text, std::size_t line_no, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(line_no, std::string("bad ") + what + " '" + text + "'");
    }
    return value;
}

}  // namespace

void ExecutionLog::append(LogRecord rec) {
    if (!records_.empty() && rec.tick < records_.back().tick) {
        throw MalformedLog("tick regressed from " + std::to_string(records_.back().tick) +
                           " to " + std::to_string(rec.tick));
    }
    records_.push_back(std::move(rec));
}

void apply_transition(Commitment& c, LifecycleState target, Tick now, ExecutionLog& log,
                      std::optional<Relation> relation_seen) {
    if (!transition_is_legal(c.state, target)) {
        throw IllegalTransition(std::string(to_string(c.state)),
                                std::string(to_string(target)));
    }
    LogRecord rec;
    rec.tick = now;
    rec.cid = c.cid;
    rec.responsibility = c.responsibility;
    rec.action_name = std::string(responsibility_template(c.responsibility).action_name);
    rec.old_state = c.state;
    rec.new_state = target;
    rec.account = c.account;
    rec.relation_seen = relation_seen;
    log.append(std::move(rec));
    c.state = target;
}

void fail_commitment(Commitment& c, Tick now, ExecutionLog& log) {
    if (c.state != LifecycleState::Created) {
        throw IllegalTransition(std::string(to_string(c.state)), "Deactivated(failed)");
    }
    LogRecord rec;
    rec.tick = now;
    rec.cid = c.cid;
    rec.responsibility = c.responsibility;
    rec.action_name = std::string(responsibility_template(c.responsibility).action_name);
    rec.old_state = c.state;
    rec.new_state = LifecycleState::Deactivated;
    rec.account = c.account;
    rec.failed = true;
    log.append(std::move(rec));
    c.state = LifecycleState::Deactivated;
}

std::string to_csv(const ExecutionLog& log) {
    std::string out;
    out.append(kCsvHeader);
    out.push_back('\n');
    for (const LogRecord& rec : log.records()) {
        out.append(std::to_string(rec.tick));
        out.push_back(',');
        out.append(std::to_string(rec.cid));
        out.push_back(',');
        out.append(to_string(rec.responsibility));
        out.push_back(',');
        write_field(out, rec.action_name);
        out.push_back(',');
        out.append(to_string(rec.old_state));
        out.push_back(',');
        out.append(to_string(rec.new_state));
        out.push_back(',');
        write_field(out, rec.account.network);
        out.push_back(',');
        write_field(out, rec.account.account);
        out.push_back(',');
        if (rec.relation_seen) out.append(to_string(*rec.relation_seen));
        out.push_back(',');
        out.push_back(rec.failed ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

namespace {

// Next row boundary, skipping newlines inside quoted fields.
std::size_t find_row_end(std::string_view text, std::size_t pos) {
    bool quoted = false;
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] == '"') quoted = !quoted;
        if (text[i] == '\n' && !quoted) return i;
    }
    return std::string_view::npos;
}

}  // namespace

ExecutionLog log_from_csv(std::string_view text) {
    ExecutionLog log;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = find_row_end(text, pos);
        std::string_view line = (end == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, end - pos);
        pos = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != kCsvHeader) throw ParseError(1, "unexpected log header");
            continue;
        }
        std::vector<std::string> fields = split_row(line, line_no);
        if (fields.size() != 10) {
            throw ParseError(line_no, "expected 10 fields, got " +
                                          std::to_string(fields.size()));
        }
        LogRecord rec;
        rec.tick = parse_int(fields[0], line_no, "tick");
        rec.cid = static_cast<Cid>(parse_int(fields[1], line_no, "cid"));
        auto resp = responsibility_from_string(fields[2]);
        if (!resp) throw ParseError(line_no, "bad responsibility '" + fields[2] + "'");
        rec.responsibility = *resp;
        rec.action_name = fields[3];
        auto old_state = lifecycle_from_string(fields[4]);
        auto new_state = lifecycle_from_string(fields[5]);
        if (!old_state || !new_state) throw ParseError(line_no, "bad lifecycle state");
        rec.old_state = *old_state;
        rec.new_state = *new_state;
        rec.account = AccountRef{fields[6], fields[7]};
        if (!fields[8].empty()) {
            auto rel = relation_from_string(fields[8]);
            if (!rel) throw ParseError(line_no, "bad relation '" + fields[8] + "'");
            rec.relation_seen = rel;
        }
        if (fields[9] != "0" && fields[9] != "1") {
            throw ParseError(line_no, "bad failed flag '" + fields[9] + "'");
        }
        rec.failed = fields[9] == "1";
        log.append(std::move(rec));
    }
    return log;
}

}  // namespace commitguard
