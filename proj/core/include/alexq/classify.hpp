#pragma once

// Classification of the Alexander quandles of a given order: for every abelian carrier and every
// conjugacy class of automorphisms, compute Im(1−t); two quandles of equal order are isomorphic
// exactly when these images are isomorphic Λ-modules.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alexq/autgroup.hpp"
#include "alexq/lambda.hpp"
#include "alexq/polymod.hpp"

namespace alexq {

inline constexpr const char* kVersion = "alexq 1.0.0";

struct Member {
  AbelianGroup carrier;
  Automorphism phi;
  std::size_t class_size = 0;  // size of phi's conjugacy class in Aut(carrier)

  LambdaModule module() const { return LambdaModule(phi); }
  friend bool operator==(const Member&, const Member&) = default;
};

struct QuandleClass {
  std::size_t id = 0;  // 1-based, assigned after sorting
  ModuleLabel image_label;
  LambdaModule image;
  bool connected = false;
  std::vector<Member> members;  // sorted; front() is the representative

  const Member& representative() const { return members.front(); }
  friend bool operator==(const QuandleClass&, const QuandleClass&) = default;
};

struct ClassificationReport {
  std::size_t order = 1;
  std::vector<QuandleClass> classes;  // sorted by (|image|, label)
  std::map<AbelianGroup, std::size_t> per_group_counts;
  std::size_t class_count = 0;
  std::size_t connected_count = 0;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

// Conjugacy classes of Aut(carrier) and their images, index-aligned.
struct CarrierResult {
  AbelianGroup carrier;
  std::vector<ConjugacyClass> classes;
  std::vector<LambdaModule> images;

  friend bool operator==(const CarrierResult& a, const CarrierResult& b) {
    if (a.carrier != b.carrier || a.images != b.images || a.classes.size() != b.classes.size()) return false;
    for (std::size_t i = 0; i < a.classes.size(); ++i)
      if (a.classes[i].representative != b.classes[i].representative || a.classes[i].size != b.classes[i].size) return false;
    return true;
  }
};

// Storage for per-carrier results. Implementations must tolerate concurrent loads.
class CarrierCache {
 public:
  virtual ~CarrierCache() = default;
  virtual std::optional<CarrierResult> load(const AbelianGroup& carrier) = 0;
  virtual void store(const CarrierResult& result) = 0;
};

struct ClassifyOptions {
  EnumerationOptions enumeration;
  unsigned threads = 1;
  CarrierCache* cache = nullptr;
};

CarrierResult analyze_carrier(const AbelianGroup& carrier, const ClassifyOptions& options = {});

ClassificationReport classify_order(std::size_t order, const ClassifyOptions& options = {});

// The polynomial-chain route and the conjugacy-class route over (ℤ_p)^k, matched one-to-one.
struct CrossValidation {
  bool ok = false;
  std::string message;
  std::size_t spec_count = 0;
  std::size_t class_count = 0;
  std::vector<std::pair<PolySpec, Automorphism>> matches;
};
// Throws InvalidArgument unless order is a prime power > 1.
CrossValidation cross_validate(std::size_t order, const ClassifyOptions& options = {});

// Number of isomorphism classes among the Cayley tables of all Alexander quandle structures
// of this order, found with the brute-force oracle only.
std::size_t oracle_class_count(std::size_t order, const EnumerationOptions& options = {});

struct RangeRow {
  std::size_t order = 0;
  std::size_t classes = 0;
  std::size_t connected = 0;
  std::optional<std::size_t> oracle_classes;  // filled for orders <= kOracleLimit

  friend bool operator==(const RangeRow&, const RangeRow&) = default;
};
inline constexpr std::size_t kOracleLimit = 8;
// Throws InternalError when an oracle count disagrees.
std::vector<RangeRow> classify_range(std::size_t lo, std::size_t hi, const ClassifyOptions& options = {});

}  // namespace alexq
