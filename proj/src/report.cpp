#include "report.hpp"

#include <sstream>

namespace gexp::report {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::cited: return "cited";
  }
  return "fail";
}

bool Report::passed() const {
  for (const Check& c : checks)
    if (c.status == Status::fail) return false;
  return true;
}

namespace {

void append_scalar_lines(std::ostringstream& out, const json& obj, const char* indent) {
  for (const auto& [key, value] : obj.items()) {
    out << indent << key << ": ";
    if (value.is_string())
      out << value.get<std::string>();
    else
      out << value.dump();
    out << "\n";
  }
}

}  // namespace

std::string Report::render_text() const {
  std::ostringstream out;
  out << "== " << title << " ==\n";
  append_scalar_lines(out, meta, "");
  out << "\n";
  for (const Check& c : checks) {
    const char* tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "CITE";
    out << "[" << tag << "] " << c.id << "\n";
    out << "       " << c.claim << "\n";
    if (!c.details.empty()) out << "       " << c.details << "\n";
  }
  out << "\nverdict:\n";
  append_scalar_lines(out, verdict, "  ");
  out << "result: " << (passed() ? "all computed checks pass" : "at least one check failed") << "\n";
  return out.str();
}

std::string Report::render_json() const {
  json j;
  j["title"] = title;
  j["meta"] = meta;
  j["checks"] = json::array();
  for (const Check& c : checks) {
    json e;
    e["check_id"] = c.id;
    e["claim"] = c.claim;
    e["status"] = status_name(c.status);
    e["details"] = c.details;
    if (!c.data.is_null()) e["data"] = c.data;
    j["checks"].push_back(std::move(e));
  }
  j["verdict"] = verdict;
  j["passed"] = passed();
  return j.dump(2) + "\n";
}

Rendered render(const Report& r) {
  Rendered out;
  out.text = r.render_text();
  out.json_text = r.render_json();
  out.ok = r.passed();
  out.checks = r.checks;
  return out;
}

}  // namespace gexp::report
