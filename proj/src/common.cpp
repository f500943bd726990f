#include "gq/common.hpp"

#include <cstdio>
#include <mutex>
#include <sstream>

namespace gq {

namespace {

std::mutex g_log_mutex;

bool needs_quoting(std::string_view v) {
  if (v.empty()) return true;
  for (char c : v) {
    if (c == ' ' || c == '"' || c == '=' || c == '\n' || c == '\t') return true;
  }
  return false;
}

void append_value(std::string& out, std::string_view v) {
  if (!needs_quoting(v)) {
    out.append(v);
    return;
  }
  out.push_back('"');
  for (char c : v) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out.append("\\n");
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
}

}  // namespace

void log_line(std::string_view level, LogFields fields) {
  std::string line = "level=";
  line.append(level);
  for (const auto& [k, v] : fields) {
    line.push_back(' ');
    line.append(k);
    line.push_back('=');
    append_value(line, v);
  }
  line.push_back('\n');
  std::lock_guard<std::mutex> lock(g_log_mutex);
  std::fputs(line.c_str(), stderr);
}

namespace {
void log_with_msg(std::string_view level, std::string_view msg, LogFields fields) {
  std::string line = "level=";
  line.append(level);
  for (const auto& [k, v] : fields) {
    line.push_back(' ');
    line.append(k);
    line.push_back('=');
    append_value(line, v);
  }
  line.append(" msg=");
  append_value(line, msg);
  line.push_back('\n');
  std::lock_guard<std::mutex> lock(g_log_mutex);
  std::fputs(line.c_str(), stderr);
}
}  // namespace

void log_info(std::string_view msg, LogFields fields) { log_with_msg("info", msg, fields); }
void log_warn(std::string_view msg, LogFields fields) { log_with_msg("warn", msg, fields); }
void log_error(std::string_view msg, LogFields fields) { log_with_msg("error", msg, fields); }

std::string format_double(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

}  // namespace gq
