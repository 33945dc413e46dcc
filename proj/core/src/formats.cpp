#include "alexq/formats.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "alexq/error.hpp"
#include "alexq/linearq.hpp"
#include "parse_util.hpp"

namespace alexq {

using ordered_json = nlohmann::ordered_json;

LambdaModule parse_module_spec(std::string_view text) {
  const auto body = detail::trim(text);
  if (body.empty()) throw ParseError("empty module spec");
  if (body.front() == 'L') return build_linear(LinearQuandleSpec::parse(body));
  const auto bar = body.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("module spec '" + std::string(text) + "' must be L<n>/<a> or <group>|<automorphism>");
  const auto group_text = detail::trim(body.substr(0, bar));
  const AbelianGroup group = AbelianGroup::parse(group_text);
  // Generator images only make sense relative to the written decomposition.
  std::string written;
  for (char c : group_text)
    if (c != ' ') written += c;
  if (written != group.to_string())
    throw ParseError("group '" + std::string(group_text) + "' must be written in invariant-factor form (" + group.to_string() +
                     ") when an automorphism is given");
  try {
    return LambdaModule(Automorphism::parse(group, body.substr(bar + 1)));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

CayleyTable parse_table(std::string_view text) {
  std::vector<std::string_view> lines = detail::split(text, '\n');
  while (!lines.empty() && detail::trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty table file", 1, 1);

  struct Token {
    std::string_view text;
    std::size_t column;
  };
  auto tokens_of = [](std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
  };

  const auto header = tokens_of(lines[0]);
  if (header.size() != 1) throw ParseError("first line must hold only the table order", 1, header.empty() ? 1 : header[1].column);
  int n = 0;
  if (!detail::parse_int(header[0].text, n) || n < 1)
    throw ParseError("invalid table order '" + std::string(header[0].text) + "'", 1, header[0].column);
  if (lines.size() != static_cast<std::size_t>(n) + 1)
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1), lines.size(), 1);

  std::vector<std::uint32_t> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (std::size_t row = 0; row < static_cast<std::size_t>(n); ++row) {
    const auto tokens = tokens_of(lines[row + 1]);
    if (tokens.size() != static_cast<std::size_t>(n))
      throw ParseError("expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()), row + 2,
                       tokens.size() > static_cast<std::size_t>(n) ? tokens[n].column : lines[row + 1].size() + 1);
    for (const auto& tok : tokens) {
      int value = 0;
      if (!detail::parse_int(tok.text, value) || value < 0 || value >= n)
        throw ParseError("invalid entry '" + std::string(tok.text) + "' (must be in [0," + std::to_string(n) + "))", row + 2,
                         tok.column);
      entries.push_back(static_cast<std::uint32_t>(value));
    }
  }
  return CayleyTable(static_cast<std::size_t>(n), std::move(entries));
}

CayleyTable read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open table file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

std::string format_table(const CayleyTable& table) {
  std::string out = std::to_string(table.size()) + "\n";
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t b = 0; b < table.size(); ++b) {
      if (b) out += ' ';
      out += std::to_string(table.op(a, b));
    }
    out += '\n';
  }
  return out;
}

namespace {

ordered_json module_json(const LambdaModule& m) {
  return ordered_json{{"group", m.group().to_string()}, {"t", m.t().to_string()}};
}

LambdaModule module_from_json(const ordered_json& j) {
  const auto group = AbelianGroup::parse(j.at("group").get<std::string>());
  return LambdaModule(Automorphism::parse(group, j.at("t").get<std::string>()));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_to_json(const ClassificationReport& report) {
  ordered_json classes = ordered_json::array();
  for (const auto& cls : report.classes) {
    ordered_json members = ordered_json::array();
    for (const auto& m : cls.members)
      members.push_back({{"group", m.carrier.to_string()}, {"phi", m.phi.to_string()}, {"class_size", m.class_size}});
    classes.push_back({{"id", cls.id},
                       {"image_label", cls.image_label.text},
                       {"image", module_json(cls.image)},
                       {"connected", cls.connected},
                       {"members", std::move(members)}});
  }
  ordered_json per_group = ordered_json::object();
  for (const auto& [g, count] : report.per_group_counts) per_group[g.to_string()] = count;
  const ordered_json doc{{"order", report.order},
                         {"generated_by", kVersion},
                         {"classes", std::move(classes)},
                         {"per_group_counts", std::move(per_group)},
                         {"totals", {{"classes", report.class_count}, {"connected", report.connected_count}}}};
  return doc.dump(2) + "\n";
}

ClassificationReport report_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what());
  }
  try {
    ClassificationReport report;
    report.order = doc.at("order").get<std::size_t>();
    for (const auto& c : doc.at("classes")) {
      QuandleClass cls;
      cls.id = c.at("id").get<std::size_t>();
      cls.image_label = {c.at("image_label").get<std::string>()};
      cls.image = module_from_json(c.at("image"));
      cls.connected = c.at("connected").get<bool>();
      for (const auto& m : c.at("members")) {
        const auto group = AbelianGroup::parse(m.at("group").get<std::string>());
        cls.members.push_back(
            Member{group, Automorphism::parse(group, m.at("phi").get<std::string>()), m.at("class_size").get<std::size_t>()});
      }
      report.classes.push_back(std::move(cls));
    }
    for (const auto& [g, count] : doc.at("per_group_counts").items())
      report.per_group_counts[AbelianGroup::parse(g)] = count.get<std::size_t>();
    report.class_count = doc.at("totals").at("classes").get<std::size_t>();
    report.connected_count = doc.at("totals").at("connected").get<std::size_t>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_csv(const ClassificationReport& report, bool connected_only) {
  std::string out = "id,image_label,connected,members\n";
  for (const auto& cls : report.classes) {
    if (connected_only && !cls.connected) continue;
    out += std::to_string(cls.id) + "," + csv_field(cls.image_label.text) + "," + (cls.connected ? "true" : "false") + "," +
           std::to_string(cls.members.size()) + "\n";
  }
  return out;
}

std::string report_to_text(const ClassificationReport& report, bool connected_only) {
  std::ostringstream out;
  out << "Alexander quandles of order " << report.order << "\n";
  out << "  * = connected; each class lists the structures (carrier|t) realizing it\n\n";
  for (const auto& cls : report.classes) {
    if (connected_only && !cls.connected) continue;
    const auto module_label = canonical_label(cls.representative().module()).text;
    out << (cls.connected ? "* " : "  ") << cls.id << ". M = " << module_label << "   (1-t)M = " << cls.image_label.text
        << "\n";
    for (const auto& m : cls.members)
      out << "       " << m.carrier.pretty() << "  t=" << m.phi.to_string() << "  (conjugacy class of " << m.class_size << ")\n";
  }
  out << "\nper carrier:";
  for (const auto& [g, count] : report.per_group_counts) out << " " << g.pretty() << "=" << count;
  out << "\n" << report.class_count << " classes, " << report.connected_count << " connected\n";
  return out.str();
}

FileCarrierCache::FileCarrierCache(std::filesystem::path directory, std::string version)
    : directory_(std::move(directory)), version_(std::move(version)) {}

std::filesystem::path FileCarrierCache::path_for(const AbelianGroup& carrier) const {
  std::string key = "carrier-" + carrier.to_string();
  for (auto& c : key)
    if (c == ',') c = '_';
  std::string version;
  for (char c : version_) version += std::isalnum(static_cast<unsigned char>(c)) || c == '.' ? c : '-';
  return directory_ / (key + "@" + version + ".json");
}

std::optional<CarrierResult> FileCarrierCache::load(const AbelianGroup& carrier) {
  std::ifstream in(path_for(carrier), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    const auto doc = ordered_json::parse(in);
    if (doc.at("version").get<std::string>() != version_ || doc.at("carrier").get<std::string>() != carrier.to_string())
      return std::nullopt;
    CarrierResult result{carrier, {}, {}};
    for (const auto& c : doc.at("classes")) {
      result.classes.push_back({Automorphism::parse(carrier, c.at("phi").get<std::string>()), c.at("size").get<std::size_t>()});
      result.images.push_back(module_from_json(c.at("image")));
    }
    return result;
  } catch (const std::exception&) {
    // A corrupt entry is treated as a miss and recomputed.
    return std::nullopt;
  }
}

void FileCarrierCache::store(const CarrierResult& result) {
  ordered_json classes = ordered_json::array();
  for (std::size_t i = 0; i < result.classes.size(); ++i)
    classes.push_back({{"phi", result.classes[i].representative.to_string()},
                       {"size", result.classes[i].size},
                       {"image", module_json(result.images[i])}});
  const ordered_json doc{{"version", version_}, {"carrier", result.carrier.to_string()}, {"classes", std::move(classes)}};

  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  const auto target = path_for(result.carrier);
  std::ostringstream tid;
  tid << std::this_thread::get_id();
  auto tmp = target;
  tmp += ".tmp-" + tid.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // caching is best effort
    out << doc.dump() << "\n";
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::filesystem::path default_cache_directory() {
  if (const char* env = std::getenv("ALEXQ_CACHE"); env != nullptr && *env != '\0') return env;
  return ".alexq-cache";
}

}  // namespace alexq
