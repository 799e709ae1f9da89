#include "pseudoknot/wereset.hpp"

#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

#include "pseudoknot/error.hpp"

namespace pk {
namespace {

WereSet enumerate_range(const PseudoPD& d, const KnotTable& table, std::uint64_t begin, std::uint64_t end) {
  WereSet w;
  w.precrossings = d.precrossing_count();
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const Classification c = classify(resolve_mask(d, mask), table);
    if (c.name) {
      ++w.counts[*c.name];
    } else {
      ++w.unknown[c.jones];
    }
  }
  return w;
}

}  // namespace

std::uint64_t WereSet::count(const KnotName& name) const {
  auto it = counts.find(name);
  return it == counts.end() ? 0 : it->second;
}

std::string WereSet::probability(std::uint64_t count, std::size_t precrossings) {
  std::uint64_t den = std::uint64_t{1} << precrossings;
  const std::uint64_t g = std::gcd(count, den);
  if (count == 0) return "0/1";
  return std::to_string(count / g) + "/" + std::to_string(den / g);
}

WereSet& WereSet::operator+=(const WereSet& other) {
  if (other.precrossings != precrossings) throw InternalError("merging were-sets of different diagrams");
  for (const auto& [k, v] : other.counts) counts[k] += v;
  for (const auto& [k, v] : other.unknown) unknown[k] += v;
  return *this;
}

WereSet wereset(const PseudoPD& d, const KnotTable& table, unsigned workers) {
  const std::size_t k = d.precrossing_count();
  if (k >= 63) throw ValidationError("too many precrossings for exhaustive enumeration");
  const std::uint64_t total = std::uint64_t{1} << k;
  workers = std::max(1U, workers);
  if (workers > total) workers = static_cast<unsigned>(total);

  std::vector<WereSet> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned i) {
    try {
      const std::uint64_t begin = total * i / workers;
      const std::uint64_t end = total * (i + 1) / workers;
      parts[i] = enumerate_range(d, table, begin, end);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < workers; ++i) threads.emplace_back(run, i);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  WereSet w;
  w.precrossings = k;
  for (const WereSet& p : parts) w += p;

  std::uint64_t sum = 0;
  for (const auto& [name, c] : w.counts) sum += c;
  for (const auto& [poly, c] : w.unknown) sum += c;
  if (sum != total) throw InternalError("were-set counts sum to " + std::to_string(sum) + ", not " + std::to_string(total));
  return w;
}

std::string render_paper_style(const WereSet& w) {
  std::string out = "{";
  bool first = true;
  auto item = [&](const std::string& name, std::uint64_t c) {
    if (!first) out += ',';
    first = false;
    out += "{" + name + "," + std::to_string(c) + "}";
  };
  for (const auto& [name, c] : w.counts) item(name.to_string(), c);
  for (const auto& [poly, c] : w.unknown) item("unknown[" + poly.to_term_list() + "]", c);
  return out + "}";
}

std::string render_text(const WereSet& w) {
  std::ostringstream out;
  out << "precrossings " << w.precrossings << ", resolutions " << w.total() << '\n';
  for (const auto& [name, c] : w.counts) {
    out << name.to_string() << ' ' << c << '/' << w.total() << " = " << WereSet::probability(c, w.precrossings)
        << '\n';
  }
  for (const auto& [poly, c] : w.unknown) {
    out << "unknown(" << poly.to_string("t") << ") " << c << '/' << w.total() << " = "
        << WereSet::probability(c, w.precrossings) << '\n';
  }
  return out.str();
}

}  // namespace pk
