#include "irack/tuple_rack.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "irack/errors.hpp"
#include "irack/parallel.hpp"
#include "irack/tuple.hpp"

namespace irack {

// --- tuple.hpp -------------------------------------------------------------

Tuple Tuple::slice(std::size_t first, std::size_t count) const {
  if (first + count > elems_.size()) throw OutOfRange("tuple slice out of range");
  return Tuple(std::vector<Element>(elems_.begin() + first, elems_.begin() + first + count));
}

Tuple concat(const Tuple& lhs, const Tuple& rhs) {
  std::vector<Element> out;
  out.reserve(lhs.arity() + rhs.arity());
  out.insert(out.end(), lhs.elems_.begin(), lhs.elems_.end());
  out.insert(out.end(), rhs.elems_.begin(), rhs.elems_.end());
  return Tuple(std::move(out));
}

Tuple tuple_minus(const IrackTable& irack, const Tuple& a) {
  std::vector<Element> out;
  out.reserve(a.arity());
  for (auto it = a.elems().rbegin(); it != a.elems().rend(); ++it) out.push_back(irack.minus(*it));
  return Tuple(std::move(out));
}

Tuple tuple_plus(const IrackTable& irack, const Tuple& a) {
  std::vector<Element> out;
  out.reserve(a.arity());
  for (auto it = a.elems().rbegin(); it != a.elems().rend(); ++it) out.push_back(irack.plus(*it));
  return Tuple(std::move(out));
}

std::string format_tuple(const Carrier& carrier, const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    out += carrier.label(t[i]);
  }
  out += ')';
  return out;
}

Tuple parse_tuple(const Carrier& carrier, std::string_view text, const std::string& source,
                  std::size_t line) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw ParseError(source, line, "expected a tuple literal like (a,b), got '" + std::string(text) + "'");
  text = text.substr(1, text.size() - 2);

  std::vector<Element> elems;
  bool blank = std::all_of(text.begin(), text.end(), is_space);
  if (blank) return Tuple();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    if (item.empty()) throw ParseError(source, line, "empty tuple component");
    auto e = carrier.find(item);
    if (!e) throw ParseError(source, line, "unknown element '" + std::string(item) + "'");
    elems.push_back(*e);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Tuple(std::move(elems));
}

std::size_t tuple_count(std::size_t k, std::size_t arity) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (k != 0 && n > std::numeric_limits<std::size_t>::max() / k)
      return std::numeric_limits<std::size_t>::max();
    n *= k;
  }
  return n;
}

Tuple tuple_at(std::size_t k, std::size_t arity, std::size_t index) {
  std::vector<Element> out(arity);
  for (std::size_t i = arity; i-- > 0;) {
    out[i] = static_cast<Element>(index % k);
    index /= k;
  }
  return Tuple(std::move(out));
}

std::vector<Tuple> all_tuples(std::size_t k, std::size_t arity) {
  const std::size_t n = tuple_count(k, arity);
  std::vector<Tuple> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(tuple_at(k, arity, i));
  return out;
}

// --- tuple rack checks -----------------------------------------------------

namespace {

enum class TupleLaw { r1, r2, r3, r4 };

struct Job {
  TupleLaw law;
  std::vector<std::size_t> arities;
};

std::size_t law_index(TupleLaw law) { return static_cast<std::size_t>(law); }

bool record_instance(const IrackTable& ir, TupleLaw law, const std::vector<Tuple>& x, LawTally& tally) {
  switch (law) {
    case TupleLaw::r1: {  // (a▷b)◁a = b
      const auto& [a, b] = std::tie(x[0], x[1]);
      return tally.record(tuple_lhd(ir, tuple_rhd(ir, a, b), a), b, {a, b});
    }
    case TupleLaw::r2: {  // a▷(b◁a) = b
      const auto& [a, b] = std::tie(x[0], x[1]);
      return tally.record(tuple_rhd(ir, a, tuple_lhd(ir, b, a)), b, {a, b});
    }
    case TupleLaw::r3: {  // a▷(b▷c) = (a▷b)▷(a▷c)
      const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
      return tally.record(tuple_rhd(ir, a, tuple_rhd(ir, b, c)),
                          tuple_rhd(ir, tuple_rhd(ir, a, b), tuple_rhd(ir, a, c)), {a, b, c});
    }
    case TupleLaw::r4: {  // (c◁b)◁a = (c◁a)◁(b◁a)
      const auto& [a, b, c] = std::tie(x[0], x[1], x[2]);
      return tally.record(tuple_lhd(ir, tuple_lhd(ir, c, b), a),
                          tuple_lhd(ir, tuple_lhd(ir, c, a), tuple_lhd(ir, b, a)), {a, b, c});
    }
  }
  return true;
}

LawResult run_job(const IrackTable& ir, const Job& job, const TupleCheckOptions& opt) {
  static const char* names[] = {"R(1)", "R(2)", "R(3)", "R(4)"};
  LawTally tally(names[law_index(job.law)]);
  const std::size_t k = ir.size();

  std::vector<std::size_t> counts;
  std::size_t total = 1;
  bool overflow = false;
  for (auto ar : job.arities) {
    counts.push_back(tuple_count(k, ar));
    if (counts.back() == 0) return std::move(tally).take();
    if (total > std::numeric_limits<std::size_t>::max() / counts.back()) overflow = true;
    else total *= counts.back();
  }

  std::vector<Tuple> args(job.arities.size());
  if (!overflow && total <= opt.budget) {
    for (std::size_t i = 0; i < total; ++i) {
      std::size_t rest = i;
      for (std::size_t j = args.size(); j-- > 0;) {
        args[j] = tuple_at(k, job.arities[j], rest % counts[j]);
        rest /= counts[j];
      }
      record_instance(ir, job.law, args, tally);
    }
  } else {
    tally.set_sampled();
    std::vector<std::uint64_t> seed_words{opt.seed, law_index(job.law)};
    seed_words.insert(seed_words.end(), job.arities.begin(), job.arities.end());
    std::seed_seq seq(seed_words.begin(), seed_words.end());
    std::mt19937_64 rng(seq);
    for (std::uint64_t i = 0; i < opt.budget; ++i) {
      for (std::size_t j = 0; j < args.size(); ++j) {
        std::vector<Element> elems(job.arities[j]);
        for (auto& e : elems) e = static_cast<Element>(rng() % k);
        args[j] = Tuple(std::move(elems));
      }
      record_instance(ir, job.law, args, tally);
    }
  }
  return std::move(tally).take();
}

std::vector<std::vector<std::size_t>> arity_combos(std::size_t max_arity, std::size_t width) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t w = 0; w < width; ++w) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : out)
      for (std::size_t a = 0; a <= max_arity; ++a) {
        auto v = prefix;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

CheckReport check_tuple_rack(const IrackTable& irack, const TupleCheckOptions& options) {
  std::vector<Job> jobs;
  for (auto law : {TupleLaw::r1, TupleLaw::r2})
    for (auto& c : arity_combos(options.max_arity, 2)) jobs.push_back({law, c});
  for (auto law : {TupleLaw::r3, TupleLaw::r4})
    for (auto& c : arity_combos(options.max_arity, 3)) jobs.push_back({law, c});

  auto results = parallel_map(jobs.size(), options.threads,
                              [&](std::size_t i) { return run_job(irack, jobs[i], options); });

  CheckReport report;
  report.seed = options.seed;
  report.entries.resize(4);
  const char* names[] = {"R(1)", "R(2)", "R(3)", "R(4)"};
  for (std::size_t i = 0; i < 4; ++i) report.entries[i].law = names[i];
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto& dst = report.entries[law_index(jobs[i].law)];
    auto& src = results[i];
    dst.checked += src.checked;
    dst.exhaustive = dst.exhaustive && src.exhaustive;
    if (dst.passed() && !src.passed()) {
      dst.status = Status::fail;
      dst.witness = std::move(src.witness);
      dst.lhs = std::move(src.lhs);
      dst.rhs = std::move(src.rhs);
    }
  }
  return report;
}

CheckReport check_tuple_irack(const IrackTable& irack, std::size_t max_arity) {
  std::vector<Tuple> tuples;
  for (std::size_t ar = 0; ar <= max_arity; ++ar) {
    auto level = all_tuples(irack.size(), ar);
    tuples.insert(tuples.end(), level.begin(), level.end());
  }
  auto neg = [&](const Tuple& t) { return tuple_minus(irack, t); };
  auto pos = [&](const Tuple& t) { return tuple_plus(irack, t); };
  auto rhd = [&](const Tuple& a, const Tuple& b) { return tuple_rhd(irack, a, b); };

  std::vector<LawTally> t{LawTally("IR(1)"), LawTally("IR(2)"), LawTally("IR(3)"),
                          LawTally("IR(4)"), LawTally("IR(5)"), LawTally("IR(6)")};
  for (const auto& a : tuples) {
    if (t[0].record(neg(pos(a)), a, {a})) t[0].record(pos(neg(a)), a, {a});
    t[1].record(rhd(a, neg(a)), pos(a), {a});
  }
  for (const auto& a : tuples) {
    for (const auto& b : tuples) {
      t[2].record(rhd(neg(a), rhd(a, b)), b, {a, b});
      t[3].record(rhd(a, rhd(neg(a), b)), b, {a, b});
      t[5].record(rhd(a, neg(b)), neg(rhd(a, b)), {a, b});
    }
  }
  for (const auto& a : tuples)
    for (const auto& b : tuples) {
      const Tuple ab = rhd(a, b);
      for (const auto& c : tuples) t[4].record(rhd(a, rhd(b, c)), rhd(ab, rhd(a, c)), {a, b, c});
    }

  CheckReport report;
  for (auto& x : t) report.entries.push_back(std::move(x).take());
  return report;
}

}  // namespace irack
