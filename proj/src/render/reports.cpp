#include <charconv>
#include <cstdio>

#include "io.hpp"

namespace diamond {

  using namespace detail;

  namespace {

    Status status_from(std::string_view s) {
      for (Status st : {Status::Pass, Status::Fail, Status::MismatchNoted,
                        Status::Skip}) {
        if (to_string(st) == s) {
          return st;
        }
      }
      bad("unknown status '" + std::string(s) + "'");
    }

    std::string seconds_text(double s) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", s);
      return buf;
    }

    double seconds_from(std::string const& s) {
      try {
        return std::stod(s);
      } catch (std::exception const&) {
        bad("bad time '" + s + "'");
      }
    }

    std::string summary_line(std::vector<ClaimReport> const& reports) {
      auto s = summarize(reports);
      return "summary: " + std::to_string(s.pass) + " pass, "
             + std::to_string(s.fail) + " fail, " + std::to_string(s.mismatch)
             + " mismatch-noted, " + std::to_string(s.skip) + " skip\n";
    }

  }  // namespace

  std::string render(std::vector<ClaimReport> const& reports,
                     Format                          f,
                     bool                            timings) {
    switch (f) {
      case Format::Json: {
        Json j    = json_head("verify");
        Json list = Json::array();
        for (auto const& r : reports) {
          Json x;
          x["id"]      = r.id;
          x["n"]       = r.n;
          x["status"]  = to_string(r.status);
          x["summary"] = r.summary;
          Json ws      = Json::array();
          for (auto const& w : r.witnesses) {
            ws.push_back({{"label", w.label}, {"items", w.items}});
          }
          x["witnesses"] = std::move(ws);
          x["findings"]  = r.findings;
          if (timings) {
            x["seconds"] = r.seconds;
          }
          list.push_back(std::move(x));
        }
        j["reports"] = std::move(list);
        auto s       = summarize(reports);
        j["summary"] = {{"pass", s.pass},
                        {"fail", s.fail},
                        {"mismatch_noted", s.mismatch},
                        {"skip", s.skip}};
        return j.dump(2) + "\n";
      }
      case Format::Csv: {
        std::string out = csv_line({"id", "n", "status", "record", "label", "text"});
        for (auto const& r : reports) {
          auto row = [&](std::string rec, std::string label, std::string text) {
            out += csv_line({r.id, std::to_string(r.n), to_string(r.status),
                             std::move(rec), std::move(label), std::move(text)});
          };
          row("summary", "", r.summary);
          for (auto const& fnd : r.findings) {
            row("finding", "", fnd);
          }
          for (auto const& w : r.witnesses) {
            row("witness", w.label, "");
            for (auto const& it : w.items) {
              row("item", w.label, it);
            }
          }
          if (timings) {
            row("seconds", "", seconds_text(r.seconds));
          }
        }
        return out;
      }
      case Format::Text: {
        std::string out;
        for (auto const& r : reports) {
          out += "[" + to_string(r.status) + "] " + r.id + " @ n="
                 + std::to_string(r.n) + ": " + r.summary + "\n";
          for (auto const& fnd : r.findings) {
            out += "  finding: " + fnd + "\n";
          }
          for (auto const& w : r.witnesses) {
            out += "  witness: " + w.label + "\n";
            for (auto const& it : w.items) {
              out += "    - " + it + "\n";
            }
          }
          if (timings) {
            out += "  seconds: " + seconds_text(r.seconds) + "\n";
          }
        }
        out += summary_line(reports);
        return out;
      }
    }
    return {};
  }

  std::vector<ClaimReport> parse_reports(std::string_view text, Format f) {
    std::vector<ClaimReport> out;
    if (f == Format::Json) {
      Json j = json_doc(text, "verify");
      try {
        for (auto const& x : j.at("reports")) {
          ClaimReport r;
          r.id      = x.at("id").get<std::string>();
          r.n       = x.at("n").get<int>();
          r.status  = status_from(x.at("status").get<std::string>());
          r.summary = x.at("summary").get<std::string>();
          for (auto const& w : x.at("witnesses")) {
            r.witnesses.push_back({w.at("label").get<std::string>(),
                                   w.at("items").get<std::vector<std::string>>()});
          }
          r.findings = x.at("findings").get<std::vector<std::string>>();
          if (x.contains("seconds")) {
            r.seconds = x.at("seconds").get<double>();
          }
          out.push_back(std::move(r));
        }
      } catch (nlohmann::json::exception const& e) {
        bad(std::string("malformed verify document: ") + e.what());
      }
      return out;
    }

    if (f == Format::Csv) {
      auto rows = csv_rows(text);
      if (rows.empty() || rows[0] != Row{"id", "n", "status", "record", "label", "text"}) {
        bad("missing CSV header");
      }
      for (std::size_t i = 1; i < rows.size(); ++i) {
        auto const& r = rows[i];
        if (r.size() != 6) {
          bad("ragged CSV row " + std::to_string(i));
        }
        if (r[3] == "summary") {
          ClaimReport c;
          c.id      = r[0];
          c.n       = to_int(r[1]);
          c.status  = status_from(r[2]);
          c.summary = r[5];
          out.push_back(std::move(c));
          continue;
        }
        if (out.empty() || out.back().id != r[0]
            || out.back().n != to_int(r[1])) {
          bad("CSV row " + std::to_string(i) + " does not follow its summary");
        }
        auto& c = out.back();
        if (r[3] == "finding") {
          c.findings.push_back(r[5]);
        } else if (r[3] == "witness") {
          c.witnesses.push_back({r[4], {}});
        } else if (r[3] == "item") {
          if (c.witnesses.empty() || c.witnesses.back().label != r[4]) {
            bad("item without its witness in CSV row " + std::to_string(i));
          }
          c.witnesses.back().items.push_back(r[5]);
        } else if (r[3] == "seconds") {
          c.seconds = seconds_from(r[5]);
        } else {
          bad("unknown record '" + r[3] + "'");
        }
      }
      return out;
    }

    for (auto const& line : lines_of(text)) {
      if (starts_with(line, "summary:") || line.empty()) {
        continue;
      }
      if (starts_with(line, "[")) {
        auto close = line.find("] ");
        auto at    = line.find(" @ n=");
        auto colon = at == std::string::npos ? at : line.find(": ", at);
        if (close == std::string::npos || at == std::string::npos
            || colon == std::string::npos) {
          bad("bad report line: " + line);
        }
        ClaimReport c;
        c.status  = status_from(line.substr(1, close - 1));
        c.id      = line.substr(close + 2, at - close - 2);
        c.n       = to_int(line.substr(at + 5, colon - at - 5));
        c.summary = line.substr(colon + 2);
        out.push_back(std::move(c));
        continue;
      }
      if (out.empty()) {
        bad("detail line before any report: " + line);
      }
      auto& c = out.back();
      if (starts_with(line, "  finding: ")) {
        c.findings.push_back(line.substr(11));
      } else if (starts_with(line, "  witness: ")) {
        c.witnesses.push_back({line.substr(11), {}});
      } else if (starts_with(line, "    - ")) {
        if (c.witnesses.empty()) {
          bad("item without a witness: " + line);
        }
        c.witnesses.back().items.push_back(line.substr(6));
      } else if (starts_with(line, "  seconds: ")) {
        c.seconds = seconds_from(line.substr(11));
      } else {
        bad("unrecognized line: " + line);
      }
    }
    return out;
  }

  //////////////////////////////////////////////////////////////////////////

  namespace {

    std::string opt_text(std::optional<std::string> const& s) {
      return s ? *s : "-";
    }
    std::string opt_text(std::optional<bool> const& b) {
      return b ? (*b ? "yes" : "no") : "-";
    }
    std::optional<std::string> opt_string(std::string const& s) {
      return s == "-" ? std::nullopt : std::optional(s);
    }
    std::optional<bool> opt_bool(std::string const& s) {
      if (s == "-") {
        return std::nullopt;
      }
      if (s != "yes" && s != "no") {
        bad("expected yes, no or -, found '" + s + "'");
      }
      return s == "yes";
    }
    std::string dash_empty(std::string const& s) {
      return s.empty() ? "-" : s;
    }
    std::string empty_dash(std::string const& s) {
      return s == "-" ? std::string() : s;
    }

    std::vector<std::pair<std::string, std::string>>
    fields(SubsetReport const& r) {
      return {{"n", std::to_string(r.n)},
              {"subset", r.subset},
              {"size", std::to_string(r.members.size())},
              {"members", r.members.empty() ? "-" : joined(r.members)},
              {"closed", r.closed ? "yes" : "no"},
              {"closure_witness", dash_empty(r.closure_witness)},
              {"ideal_kind", r.ideal_kind},
              {"zero", opt_text(r.zero)},
              {"identity", opt_text(r.identity)},
              {"infinity", opt_text(r.infinity)},
              {"ideal_simple", opt_text(r.ideal_simple)},
              {"congruence_simple", opt_text(r.congruence_simple)},
              {"proper_ideal", r.proper_ideal.empty() ? "-" : joined(r.proper_ideal)},
              {"proper_congruence", dash_empty(r.proper_congruence)}};
    }

    SubsetReport from_fields(std::vector<std::pair<std::string, std::string>> const& kv) {
      auto const want = fields(SubsetReport{});
      if (kv.size() != want.size()) {
        bad("subset report has " + std::to_string(kv.size()) + " fields, expected "
            + std::to_string(want.size()));
      }
      for (std::size_t i = 0; i < kv.size(); ++i) {
        if (kv[i].first != want[i].first) {
          bad("expected field '" + want[i].first + "', found '" + kv[i].first + "'");
        }
      }
      SubsetReport r;
      r.n                 = to_int(kv[0].second);
      r.subset            = kv[1].second;
      r.members           = kv[3].second == "-" ? std::vector<std::string>{}
                                                : words(kv[3].second);
      r.closed            = kv[4].second == "yes";
      r.closure_witness   = empty_dash(kv[5].second);
      r.ideal_kind        = kv[6].second;
      r.zero              = opt_string(kv[7].second);
      r.identity          = opt_string(kv[8].second);
      r.infinity          = opt_string(kv[9].second);
      r.ideal_simple      = opt_bool(kv[10].second);
      r.congruence_simple = opt_bool(kv[11].second);
      r.proper_ideal      = kv[12].second == "-" ? std::vector<std::string>{}
                                                 : words(kv[12].second);
      r.proper_congruence = empty_dash(kv[13].second);
      if (static_cast<std::size_t>(to_int(kv[2].second)) != r.members.size()) {
        bad("size does not match the member list");
      }
      return r;
    }

    Json opt_json(std::optional<std::string> const& s) {
      return s ? Json(*s) : Json();
    }
    Json opt_json(std::optional<bool> const& b) {
      return b ? Json(*b) : Json();
    }

  }  // namespace

  std::string render(SubsetReport const& r, Format f) {
    switch (f) {
      case Format::Json: {
        Json j                 = json_head("subset");
        j["n"]                 = r.n;
        j["subset"]            = r.subset;
        j["size"]              = r.members.size();
        j["members"]           = r.members;
        j["closed"]            = r.closed;
        j["closure_witness"]   = r.closure_witness.empty() ? Json() : Json(r.closure_witness);
        j["ideal_kind"]        = r.ideal_kind;
        j["zero"]              = opt_json(r.zero);
        j["identity"]          = opt_json(r.identity);
        j["infinity"]          = opt_json(r.infinity);
        j["ideal_simple"]      = opt_json(r.ideal_simple);
        j["congruence_simple"] = opt_json(r.congruence_simple);
        j["proper_ideal"]      = r.proper_ideal;
        j["proper_congruence"] = r.proper_congruence.empty() ? Json() : Json(r.proper_congruence);
        return j.dump(2) + "\n";
      }
      case Format::Csv: {
        std::string out = csv_line({"key", "value"});
        for (auto const& [k, v] : fields(r)) {
          out += csv_line({k, v});
        }
        return out;
      }
      case Format::Text: {
        std::string out;
        for (auto const& [k, v] : fields(r)) {
          out += k + ": " + v + "\n";
        }
        return out;
      }
    }
    return {};
  }

  SubsetReport parse_subset_report(std::string_view text, Format f) {
    if (f == Format::Json) {
      Json         j = json_doc(text, "subset");
      SubsetReport r;
      try {
        r.n               = j.at("n").get<int>();
        r.subset          = j.at("subset").get<std::string>();
        r.members         = j.at("members").get<std::vector<std::string>>();
        r.closed          = j.at("closed").get<bool>();
        r.closure_witness = j.at("closure_witness").is_null()
                                ? ""
                                : j.at("closure_witness").get<std::string>();
        r.ideal_kind      = j.at("ideal_kind").get<std::string>();
        for (auto [key, dst] : {std::pair{"zero", &r.zero},
                                {"identity", &r.identity},
                                {"infinity", &r.infinity}}) {
          if (!j.at(key).is_null()) {
            *dst = j.at(key).get<std::string>();
          }
        }
        for (auto [key, dst] : {std::pair{"ideal_simple", &r.ideal_simple},
                                {"congruence_simple", &r.congruence_simple}}) {
          if (!j.at(key).is_null()) {
            *dst = j.at(key).get<bool>();
          }
        }
        r.proper_ideal      = j.at("proper_ideal").get<std::vector<std::string>>();
        r.proper_congruence = j.at("proper_congruence").is_null()
                                  ? ""
                                  : j.at("proper_congruence").get<std::string>();
        if (j.at("size").get<std::size_t>() != r.members.size()) {
          bad("size does not match the member list");
        }
      } catch (nlohmann::json::exception const& e) {
        bad(std::string("malformed subset document: ") + e.what());
      }
      return r;
    }
    std::vector<std::pair<std::string, std::string>> kv;
    if (f == Format::Csv) {
      auto rows = csv_rows(text);
      if (rows.empty() || rows[0] != Row{"key", "value"}) {
        bad("missing CSV header");
      }
      for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 2) {
          bad("ragged CSV row " + std::to_string(i));
        }
        kv.emplace_back(rows[i][0], rows[i][1]);
      }
    } else {
      for (auto const& line : lines_of(text)) {
        auto colon = line.find(": ");
        if (colon == std::string::npos) {
          bad("bad line: " + line);
        }
        kv.emplace_back(line.substr(0, colon), line.substr(colon + 2));
      }
    }
    return from_fields(kv);
  }

}  // namespace diamond
