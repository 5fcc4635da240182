#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace sepcx {

enum class Status { pass, fail, inconclusive, skipped, info };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::inconclusive: return "INCONCLUSIVE";
    case Status::skipped: return "SKIPPED";
    case Status::info: return "INFO";
    }
    return "?";
}

struct ReportRow {
    std::string check;
    std::string scope;
    std::string expected;
    std::string computed;
    Status status = Status::info;
    std::string witness;
};

class Report {
public:
    /// Adds a row whose status is PASS iff computed == expected.
    void expect(std::string check, std::string scope, std::string expected, std::string computed,
                std::string witness = {})
    {
        const Status s = expected == computed ? Status::pass : Status::fail;
        rows_.push_back({std::move(check), std::move(scope), std::move(expected), std::move(computed), s,
                         std::move(witness)});
    }

    void add(ReportRow row) { rows_.push_back(std::move(row)); }

    void info(std::string check, std::string scope, std::string computed)
    {
        rows_.push_back({std::move(check), std::move(scope), "", std::move(computed), Status::info, ""});
    }

    void skipped(std::string check, std::string scope, std::string reason)
    {
        rows_.push_back({std::move(check), std::move(scope), "", "not run", Status::skipped, std::move(reason)});
    }

    const std::vector<ReportRow>& rows() const { return rows_; }

    std::size_t count(Status s) const
    {
        return static_cast<std::size_t>(
            std::count_if(rows_.begin(), rows_.end(), [s](const ReportRow& r) { return r.status == s; }));
    }

    bool failed() const { return count(Status::fail) > 0; }

    void append(const Report& other) { rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end()); }

    /// One line per row: "check = computed : STATUS", with the expectation
    /// and witness appended on failure.
    void write_text(std::ostream& os) const
    {
        for (const auto& r : rows_) {
            os << r.check << " = " << r.computed << " : " << to_string(r.status);
            if (r.status == Status::fail)
                os << " (expected " << r.expected << ")";
            if (!r.witness.empty() && r.status != Status::pass)
                os << " [" << r.witness << "]";
            os << '\n';
        }
        os << "summary: " << count(Status::pass) << " passed, " << count(Status::fail) << " failed, "
           << count(Status::inconclusive) << " inconclusive, " << count(Status::skipped) << " skipped, "
           << count(Status::info) << " info\n";
    }

    nlohmann::ordered_json to_json() const
    {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& r : rows_) {
            nlohmann::ordered_json row;
            row["check"] = r.check;
            row["scope"] = r.scope;
            row["expected"] = r.expected;
            row["computed"] = r.computed;
            row["status"] = to_string(r.status);
            row["witness"] = r.witness;
            rows.push_back(std::move(row));
        }
        nlohmann::ordered_json out;
        out["checks"] = std::move(rows);
        out["failed"] = count(Status::fail);
        return out;
    }

private:
    std::vector<ReportRow> rows_;
};

}  // namespace sepcx
