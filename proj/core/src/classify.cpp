#include "alexq/classify.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

#include "alexq/error.hpp"
#include "alexq/quandle.hpp"

namespace alexq {

namespace {

// Runs fn(i) for i in [0, count) on up to `threads` workers; results land in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn fn) {
  std::vector<T> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> workers;
  const unsigned n_workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned w = 0; w < n_workers; ++w)
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
    }));
  for (auto& w : workers) w.get();
  return out;
}

}  // namespace

CarrierResult analyze_carrier(const AbelianGroup& carrier, const ClassifyOptions& options) {
  if (options.cache != nullptr)
    if (auto cached = options.cache->load(carrier)) return std::move(*cached);

  EnumerationOptions enumeration = options.enumeration;
  enumeration.threads = std::max(enumeration.threads, options.threads);
  CarrierResult result{carrier, conjugacy_classes(carrier, enumeration), {}};
  result.images = parallel_map<LambdaModule>(result.classes.size(), options.threads, [&](std::size_t i) {
    return image_one_minus_t(LambdaModule(result.classes[i].representative));
  });

  if (options.cache != nullptr) options.cache->store(result);
  return result;
}

ClassificationReport classify_order(std::size_t order, const ClassifyOptions& options) {
  if (order < 1) throw InvalidArgument("order must be positive");
  const auto carriers = enumerate_groups(order);
  const auto results = parallel_map<CarrierResult>(carriers.size(), options.threads,
                                                   [&](std::size_t i) { return analyze_carrier(carriers[i], options); });

  // Merge in the fixed (carrier, representative) order; isomorphism tests only within buckets.
  struct Pending {
    LambdaModule image;
    std::vector<Member> members;
  };
  std::vector<Pending> pending;
  std::map<ModuleInvariants, std::vector<std::size_t>> buckets;
  for (const auto& r : results) {
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      Member member{r.carrier, r.classes[i].representative, r.classes[i].size};
      const auto& image = r.images[i];
      auto& bucket = buckets[module_invariants(image)];
      bool merged = false;
      for (auto idx : bucket) {
        if (is_lambda_isomorphic(pending[idx].image, image)) {
          pending[idx].members.push_back(std::move(member));
          merged = true;
          break;
        }
      }
      if (!merged) {
        bucket.push_back(pending.size());
        pending.push_back({image, {std::move(member)}});
      }
    }
  }

  auto labels = parallel_map<ModuleLabel>(pending.size(), options.threads,
                                          [&](std::size_t i) { return canonical_label(pending[i].image); });

  ClassificationReport report;
  report.order = order;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    QuandleClass cls;
    cls.image_label = std::move(labels[i]);
    cls.image = pending[i].image;
    cls.connected = pending[i].image.order() == order;
    cls.members = std::move(pending[i].members);
    report.classes.push_back(std::move(cls));
  }
  std::stable_sort(report.classes.begin(), report.classes.end(), [](const QuandleClass& a, const QuandleClass& b) {
    if (a.image.order() != b.image.order()) return a.image.order() < b.image.order();
    return a.image_label < b.image_label;
  });
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    auto& cls = report.classes[i];
    cls.id = i + 1;
    if (cls.connected) ++report.connected_count;
    std::vector<AbelianGroup> seen;
    for (const auto& m : cls.members)
      if (std::find(seen.begin(), seen.end(), m.carrier) == seen.end()) seen.push_back(m.carrier);
    for (const auto& g : seen) ++report.per_group_counts[g];
  }
  for (const auto& g : carriers) report.per_group_counts.try_emplace(g, 0);
  report.class_count = report.classes.size();
  return report;
}

CrossValidation cross_validate(std::size_t order, const ClassifyOptions& options) {
  const auto primes = factorize(order);
  if (primes.size() != 1) throw InvalidArgument("cross-validation needs a prime power order, got " + std::to_string(order));
  const auto [p, k] = primes.front();
  const AbelianGroup carrier(std::vector<int>(static_cast<std::size_t>(k), p));

  CrossValidation out;
  const auto specs = enumerate_specs(p, k);
  const auto result = analyze_carrier(carrier, options);
  out.spec_count = specs.size();
  out.class_count = result.classes.size();

  std::vector<char> used(result.classes.size(), 0);
  for (const auto& spec : specs) {
    const LambdaModule built = build(spec);
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < result.classes.size() && !hit; ++i)
      if (is_lambda_isomorphic(built, LambdaModule(result.classes[i].representative))) hit = i;
    if (!hit) {
      out.message = "spec " + spec.to_string() + " (module " + built.to_string() + ") matches no conjugacy class";
      return out;
    }
    if (used[*hit]) {
      out.message = "spec " + spec.to_string() + " and an earlier spec both match conjugacy class " +
                    result.classes[*hit].representative.to_string();
      return out;
    }
    used[*hit] = 1;
    out.matches.emplace_back(spec, result.classes[*hit].representative);
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) {
      out.message = "conjugacy class " + result.classes[i].representative.to_string() + " matches no spec";
      return out;
    }
  }
  out.ok = true;
  out.message = std::to_string(specs.size()) + " specs matched one-to-one with " + std::to_string(result.classes.size()) +
                " conjugacy classes over " + carrier.to_string();
  return out;
}

std::size_t oracle_class_count(std::size_t order, const EnumerationOptions& options) {
  std::vector<CayleyTable> reps;
  for (const auto& g : enumerate_groups(order)) {
    for (const auto& phi : enumerate_automorphisms(g, options)) {
      const auto table = alexander_table(LambdaModule(phi));
      const bool known = std::any_of(reps.begin(), reps.end(),
                                     [&](const CayleyTable& r) { return brute_force_isomorphic(r, table).has_value(); });
      if (!known) reps.push_back(table);
    }
  }
  return reps.size();
}

std::vector<RangeRow> classify_range(std::size_t lo, std::size_t hi, const ClassifyOptions& options) {
  if (lo < 1 || lo > hi) throw InvalidArgument("invalid order range");
  std::vector<RangeRow> rows;
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto report = classify_order(n, options);
    RangeRow row{n, report.class_count, report.connected_count, std::nullopt};
    if (n <= kOracleLimit) {
      row.oracle_classes = oracle_class_count(n, options.enumeration);
      if (*row.oracle_classes != row.classes)
        throw InternalError("order " + std::to_string(n) + ": classification found " + std::to_string(row.classes) +
                            " classes, oracle found " + std::to_string(*row.oracle_classes));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace alexq
