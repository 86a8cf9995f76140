#include "reqlint/service/store.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <mutex>

#include "reqlint/common/error.h"
#include "reqlint/common/log.h"
#include "reqlint/common/strings.h"
#include "reqlint/service/analysis_document.h"

namespace reqlint::service {

namespace fs = std::filesystem;

std::string_view review_flag_name(ReviewFlag f) { return f == ReviewFlag::kReviewed ? "reviewed" : "unreviewed"; }

std::string content_hash(std::string_view text) { return hex64(fnv1a64(trim(text))); }

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

constexpr const char* kProjects = "projects.jsonl";
constexpr const char* kRequirements = "requirements.jsonl";
constexpr const char* kAudit = "audit.jsonl";

// Lines of a JSONL file; a missing file has none.
std::vector<std::pair<std::size_t, json>> read_jsonl(const fs::path& path, bool tolerate_torn_tail) {
  std::vector<std::pair<std::size_t, json>> out;
  if (!fs::exists(path)) return out;
  const auto lines = split(read_file(path), '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    try {
      out.emplace_back(i + 1, json::parse(lines[i]));
    } catch (const json::exception& e) {
      if (tolerate_torn_tail && i + 1 >= lines.size() - 1) {
        log::warning("ignoring torn last line of " + path.string());
        break;
      }
      throw Error(ErrorCode::kFormatError, path.string() + ": " + e.what(), i + 1);
    }
  }
  return out;
}

std::uint64_t numeric_suffix(const std::string& id) {
  if (id.size() < 2) return 0;
  try {
    return std::stoull(id.substr(1));
  } catch (const std::exception&) {
    return 0;
  }
}

template <typename T>
void upsert(std::vector<T>& items, const T& item) {
  auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.id == item.id; });
  if (it == items.end()) {
    items.push_back(item);
  } else {
    *it = item;
  }
}

}  // namespace

Store::Store(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) raise(ErrorCode::kIoError, "cannot create store directory " + dir_.string() + ": " + ec.message());
  // Temporaries left by an interrupted write never became visible.
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.path().extension() == ".tmp") fs::remove(entry.path(), ec);
  }
  auto wrap = [](const fs::path& path, std::size_t line, auto&& fn) {
    try {
      fn();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kFormatError, path.string() + ": " + e.what(), line);
    }
  };
  for (const auto& [line, j] : read_jsonl(dir_ / kProjects, false)) {
    wrap(dir_ / kProjects, line, [&, &j = j] { projects_.push_back(project_from_json(j)); });
    next_project_ = std::max(next_project_, numeric_suffix(projects_.back().id) + 1);
  }
  for (const auto& [line, j] : read_jsonl(dir_ / kRequirements, false)) {
    wrap(dir_ / kRequirements, line, [&, &j = j] { requirements_.push_back(requirement_from_json(j)); });
    next_requirement_ = std::max(next_requirement_, numeric_suffix(requirements_.back().id) + 1);
  }
  for (const auto& [line, j] : read_jsonl(dir_ / kAudit, true)) audit_.push_back(audit_from_json(j));
}

fs::path Store::default_dir() {
  if (const char* env = std::getenv("REQLINT_DATA_DIR"); env && *env) return env;
  return fs::current_path() / "reqlint-data";
}

std::vector<Project> Store::projects() const {
  std::shared_lock lock(mutex_);
  return projects_;
}

std::optional<Project> Store::project(std::string_view id) const {
  std::shared_lock lock(mutex_);
  for (const auto& p : projects_) {
    if (p.id == id) return p;
  }
  return std::nullopt;
}

std::vector<StoredRequirement> Store::requirements() const {
  std::shared_lock lock(mutex_);
  return requirements_;
}

std::vector<StoredRequirement> Store::requirements_of(std::string_view project_id) const {
  std::shared_lock lock(mutex_);
  std::vector<StoredRequirement> out;
  for (const auto& r : requirements_) {
    if (r.project_id == project_id) out.push_back(r);
  }
  return out;
}

std::optional<StoredRequirement> Store::requirement(std::string_view id) const {
  std::shared_lock lock(mutex_);
  for (const auto& r : requirements_) {
    if (r.id == id) return r;
  }
  return std::nullopt;
}

std::vector<AuditEntry> Store::audit() const {
  std::shared_lock lock(mutex_);
  return audit_;
}

void Store::put_project(const Project& p) {
  std::unique_lock lock(mutex_);
  auto next = projects_;
  upsert(next, p);
  save_projects(next);
  projects_ = std::move(next);
}

void Store::put_requirements(const std::vector<StoredRequirement>& rs) {
  if (rs.empty()) return;
  std::unique_lock lock(mutex_);
  auto next = requirements_;
  for (const auto& r : rs) upsert(next, r);
  save_requirements(next);
  requirements_ = std::move(next);
}

void Store::append_audit(const AuditEntry& e) {
  std::unique_lock lock(mutex_);
  std::ofstream out(dir_ / kAudit, std::ios::app | std::ios::binary);
  out << audit_json(e).dump() << '\n';
  out.flush();
  if (!out) raise(ErrorCode::kIoError, "cannot append to " + (dir_ / kAudit).string());
  audit_.push_back(e);
}

std::string Store::next_project_id() {
  std::unique_lock lock(mutex_);
  return "p" + std::to_string(next_project_++);
}

std::string Store::next_requirement_id() {
  std::unique_lock lock(mutex_);
  return "r" + std::to_string(next_requirement_++);
}

void Store::set_crash_hook(std::function<void(std::string_view)> hook) {
  std::unique_lock lock(mutex_);
  crash_hook_ = std::move(hook);
}

void Store::write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) raise(ErrorCode::kIoError, "cannot write " + tmp.string());
  }
  if (crash_hook_) crash_hook_("temp_written");
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) raise(ErrorCode::kIoError, "cannot rename " + tmp.string() + ": " + ec.message());
  if (crash_hook_) crash_hook_("renamed");
}

void Store::save_projects(const std::vector<Project>& ps) {
  std::string content;
  for (const auto& p : ps) content += project_json(p).dump() + "\n";
  write_atomic(dir_ / kProjects, content);
}

void Store::save_requirements(const std::vector<StoredRequirement>& rs) {
  std::string content;
  for (const auto& r : rs) content += requirement_json(r).dump() + "\n";
  write_atomic(dir_ / kRequirements, content);
}

}  // namespace reqlint::service
