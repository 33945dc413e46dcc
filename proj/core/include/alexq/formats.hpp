#pragma once

// Text formats: module specs, Cayley table files, classification reports, and the on-disk
// carrier cache.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "alexq/classify.hpp"
#include "alexq/quandle.hpp"

namespace alexq {

// "L16/3" or "<group>|<automorphism>", e.g. "4,4|0,1;3,2" or "1|" for the zero module.
// The group must already be written in invariant-factor form.
LambdaModule parse_module_spec(std::string_view text);

// Line 1: n. Lines 2..n+1: n space-separated zero-based entries; row a, column b is a▷b.
// Errors carry 1-based line/column positions.
CayleyTable parse_table(std::string_view text);
CayleyTable read_table_file(const std::filesystem::path& path);
std::string format_table(const CayleyTable& table);

std::string report_to_json(const ClassificationReport& report);
ClassificationReport report_from_json(std::string_view text);
// Header "id,image_label,connected,members"; labels containing commas are quoted.
std::string report_to_csv(const ClassificationReport& report, bool connected_only = false);
// Plain-text listing; the final line is "<k> classes, <c> connected".
std::string report_to_text(const ClassificationReport& report, bool connected_only = false);

// One JSON file per carrier under `directory`, keyed by carrier and tool version. Files are
// written to a temporary name and renamed into place, so readers never see partial entries.
class FileCarrierCache : public CarrierCache {
 public:
  explicit FileCarrierCache(std::filesystem::path directory, std::string version = kVersion);

  std::optional<CarrierResult> load(const AbelianGroup& carrier) override;
  void store(const CarrierResult& result) override;

  std::filesystem::path path_for(const AbelianGroup& carrier) const;

 private:
  std::filesystem::path directory_;
  std::string version_;
};

// $ALEXQ_CACHE, or "./.alexq-cache".
std::filesystem::path default_cache_directory();

}  // namespace alexq
