#include "fpcat/category.hpp"

#include <sstream>

namespace fpcat {

bool Object::operator==(const Object& other) const {
  if (payload_ == other.payload_) return true;
  if (!payload_ || !other.payload_) return false;
  return payload_->same_as(*other.payload_);
}

bool Morphism::same_as(const Morphism& other) const {
  if (!(source == other.source) || !(target == other.target)) return false;
  if (datum == other.datum) return true;
  return datum && other.datum && datum->same_as(*other.datum);
}

std::string Morphism::describe() const {
  return (datum ? datum->describe() : "<null>") + " : " + source.describe() + " -> " +
         target.describe();
}

std::size_t LinearSystem::add_unknown(Object source, Object target) {
  unknowns.push_back({std::move(source), std::move(target)});
  return unknowns.size() - 1;
}

void Report::add(std::string check, std::string sample, bool passed, std::string detail) {
  entries.push_back({std::move(check), std::move(sample), passed, std::move(detail)});
}

void Report::append(const Report& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (!e.passed) ++n;
  return n;
}

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << (e.passed ? "PASS " : "FAIL ") << e.check;
    if (!e.sample.empty()) os << " [" << e.sample << "]";
    if (!e.detail.empty()) os << ": " << e.detail;
    os << "\n";
  }
  os << (entries.size() - failures()) << "/" << entries.size() << " passed\n";
  return os.str();
}

std::optional<Morphism> Category::lift(const Morphism& along, const Morphism& b) const {
  require_capability(capabilities().linear_systems, "lifts");
  if (!(along.target == b.target)) throw PreconditionError("lift: targets differ");
  LinearSystem sys;
  auto x = sys.add_unknown(b.source, along.source);
  sys.equations.push_back({{{x, identity(b.source), along}}, b});
  auto sol = solve(sys);
  if (!sol) return std::nullopt;
  return sol->front();
}

std::optional<Morphism> Category::colift(const Morphism& along, const Morphism& b) const {
  require_capability(capabilities().linear_systems, "colifts");
  if (!(along.source == b.source)) throw PreconditionError("colift: sources differ");
  LinearSystem sys;
  auto x = sys.add_unknown(along.target, b.target);
  sys.equations.push_back({{{x, along, identity(b.target)}}, b});
  auto sol = solve(sys);
  if (!sol) return std::nullopt;
  return sol->front();
}

std::optional<std::vector<Morphism>> Category::solve(const LinearSystem&) const {
  throw CapabilityError(name() + " cannot solve linear systems");
}

Morphism Category::weak_kernel_embedding(const Morphism& f) const {
  if (capabilities().kernels) return kernel_embedding(f);
  throw CapabilityError(name() + " has no weak kernels");
}

Morphism Category::weak_cokernel_projection(const Morphism& f) const {
  if (capabilities().cokernels) return cokernel_projection(f);
  throw CapabilityError(name() + " has no weak cokernels");
}

Morphism Category::kernel_embedding(const Morphism&) const {
  throw CapabilityError(name() + " has no kernels");
}

Morphism Category::kernel_lift(const Morphism&, const Morphism&) const {
  throw CapabilityError(name() + " has no kernels");
}

Morphism Category::cokernel_projection(const Morphism&) const {
  throw CapabilityError(name() + " has no cokernels");
}

Morphism Category::cokernel_colift(const Morphism&, const Morphism&) const {
  throw CapabilityError(name() + " has no cokernels");
}

Morphism Category::compose(const std::vector<Morphism>& chain) const {
  if (chain.empty()) throw PreconditionError("compose of an empty chain");
  Morphism acc = chain.front();
  for (std::size_t i = 1; i < chain.size(); ++i) acc = compose(acc, chain[i]);
  return acc;
}

Morphism Category::sum(const std::vector<Morphism>& terms, const Object& source,
                       const Object& target) const {
  if (terms.empty()) return zero_morphism(source, target);
  Morphism acc = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) acc = add(acc, terms[i]);
  return acc;
}

bool Category::is_zero(const Morphism& f) const {
  return is_equal(f, zero_morphism(f.source, f.target));
}

Morphism Category::from_direct_sum(const std::vector<Morphism>& parts) const {
  if (parts.empty()) throw PreconditionError("from_direct_sum needs at least one part");
  if (parts.size() == 1) return parts.front();
  std::vector<Object> sources;
  for (const auto& p : parts) {
    if (!(p.target == parts.front().target))
      throw PreconditionError("from_direct_sum: targets differ");
    sources.push_back(p.source);
  }
  std::vector<Morphism> terms;
  for (std::size_t i = 0; i < parts.size(); ++i)
    terms.push_back(compose(projection(sources, i), parts[i]));
  return sum(terms, direct_sum(sources), parts.front().target);
}

Morphism Category::into_direct_sum(const std::vector<Morphism>& parts) const {
  if (parts.empty()) throw PreconditionError("into_direct_sum needs at least one part");
  if (parts.size() == 1) return parts.front();
  std::vector<Object> targets;
  for (const auto& p : parts) {
    if (!(p.source == parts.front().source))
      throw PreconditionError("into_direct_sum: sources differ");
    targets.push_back(p.target);
  }
  std::vector<Morphism> terms;
  for (std::size_t i = 0; i < parts.size(); ++i)
    terms.push_back(compose(parts[i], injection(targets, i)));
  return sum(terms, parts.front().source, direct_sum(targets));
}

Morphism Category::direct_sum_morphism(const std::vector<Morphism>& parts) const {
  if (parts.size() == 1) return parts.front();
  std::vector<Object> sources, targets;
  for (const auto& p : parts) {
    sources.push_back(p.source);
    targets.push_back(p.target);
  }
  std::vector<std::vector<std::optional<Morphism>>> entries(parts.size(),
      std::vector<std::optional<Morphism>>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) entries[i][i] = parts[i];
  return block_morphism(sources, targets, entries);
}

Morphism Category::block_morphism(const std::vector<Object>& sources,
                                  const std::vector<Object>& targets,
                                  const std::vector<std::vector<std::optional<Morphism>>>& entries) const {
  if (entries.size() != sources.size()) throw PreconditionError("block_morphism: row count");
  std::vector<Morphism> terms;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (entries[i].size() != targets.size()) throw PreconditionError("block_morphism: column count");
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (!entries[i][j]) continue;
      const Morphism& e = *entries[i][j];
      if (!(e.source == sources[i]) || !(e.target == targets[j]))
        throw PreconditionError("block_morphism: entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ") has the wrong source or target");
      Morphism t = sources.size() == 1 ? e : compose(projection(sources, i), e);
      terms.push_back(targets.size() == 1 ? t : compose(t, injection(targets, j)));
    }
  }
  return sum(terms, sources.size() == 1 ? sources.front() : direct_sum(sources),
             targets.size() == 1 ? targets.front() : direct_sum(targets));
}

void Category::require_capability(bool present, const char* what) const {
  if (!present) throw CapabilityError(name() + " lacks " + what);
}

void Category::require_composable(const Morphism& f, const Morphism& g) const {
  if (!(f.target == g.source))
    throw PreconditionError("cannot compose: target " + f.target.describe() + " vs source " +
                            g.source.describe());
}

void Category::require_parallel(const Morphism& f, const Morphism& g) const {
  if (!(f.source == g.source) || !(f.target == g.target))
    throw PreconditionError("morphisms are not parallel");
}

Report check_biproduct_axioms(const Category& c, const std::vector<Object>& samples) {
  Report report;
  auto check_sum = [&](const std::vector<Object>& summands, const std::string& label) {
    Object s = c.direct_sum(summands);
    std::vector<Morphism> round_trips;
    bool ok = true;
    std::string detail;
    try {
      for (std::size_t i = 0; i < summands.size(); ++i) {
        for (std::size_t j = 0; j < summands.size(); ++j) {
          Morphism ij = c.compose(c.injection(summands, i), c.projection(summands, j));
          Morphism expected = i == j ? c.identity(summands[i])
                                     : c.zero_morphism(summands[i], summands[j]);
          if (!c.is_equal(ij, expected)) {
            ok = false;
            detail = "injection " + std::to_string(i) + " then projection " + std::to_string(j);
          }
        }
        round_trips.push_back(c.compose(c.projection(summands, i), c.injection(summands, i)));
      }
      if (!c.is_equal(c.sum(round_trips, s, s), c.identity(s))) {
        ok = false;
        detail = "sum of projection-injection composites is not the identity";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    report.add("biproduct", label, ok, detail);
  };

  check_sum({}, "empty sum");
  {
    Object z = c.zero_object();
    bool ok = c.is_equal(c.identity(z), c.zero_morphism(z, z));
    report.add("zero object", "", ok, ok ? "" : "identity of zero object is not zero");
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < samples.size(); ++j)
      check_sum({samples[i], samples[j]},
                samples[i].describe() + " (+) " + samples[j].describe());
  return report;
}

}  // namespace fpcat
