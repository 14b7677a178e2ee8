#include "irack/braid.hpp"

#include <sstream>

#include "irack/errors.hpp"
#include "irack/tuple.hpp"

namespace irack {

BraidWord::BraidWord(std::size_t strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ == 0) throw OutOfRange("a braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.generator < 1 || l.generator + 1 > strands_) {
      throw OutOfRange("generator s" + std::to_string(l.generator) + " is out of range for " +
                       std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.positive = !l.positive;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(std::size_t k) const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.strands_ != rhs.strands_) throw ArityMismatch("concatenating braids on different strand counts");
  auto letters = lhs.letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(lhs.strands_, std::move(letters));
}

BraidWord parse_braid(std::string_view text, std::size_t strands) {
  std::istringstream in{std::string(text)};
  std::vector<BraidLetter> letters;
  std::string token;
  while (in >> token) {
    std::string_view body = token;
    bool positive = true;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
      positive = false;
      body.remove_suffix(3);
    }
    if (body.size() < 2 || body.front() != 's' || body.size() > 10 ||
        body.find_first_not_of("0123456789", 1) != std::string_view::npos) {
      throw ParseError("<braid>", 0, "unknown token '" + token + "'");
    }
    letters.push_back({std::stoul(std::string(body.substr(1))), positive});
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& word) {
  std::string out;
  for (const auto& l : word.letters()) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.generator);
    if (!l.positive) out += "^-1";
  }
  return out;
}

Tuple apply_braid(const BraidWord& word, const Tuple& t, const IrackTable& irack) {
  if (t.arity() != word.strands()) {
    throw ArityMismatch("tuple of arity " + std::to_string(t.arity()) + " on a " +
                        std::to_string(word.strands()) + "-strand braid");
  }
  std::vector<Element> x(t.begin(), t.end());
  for (const auto& l : word.letters()) {
    Element& u = x[l.generator - 1];
    Element& v = x[l.generator];
    const Element u0 = u;
    const Element v0 = v;
    if (l.positive) {
      u = irack.rhd(u0, v0);
      v = u0;
    } else {
      u = v0;
      v = irack.lhd(u0, v0);
    }
  }
  return Tuple(std::move(x));
}

Relation eval_braid(const BraidWord& word, const IrackTable& irack) {
  const std::size_t n = word.strands();
  if (tuple_count(irack.size(), n) > kMaterializationCap) {
    throw CapExceeded("A^" + std::to_string(n) + " exceeds the materialization cap");
  }
  std::vector<Pair> pairs;
  for (auto& t : all_tuples(irack.size(), n)) {
    Tuple image = apply_braid(word, t, irack);
    pairs.emplace_back(std::move(t), std::move(image));
  }
  return Relation(n, n, std::move(pairs));
}

BraidWord torsion(std::size_t strands) {
  if (strands < 2) throw OutOfRange("torsion needs at least two strands");
  std::vector<BraidLetter> letters;
  for (std::size_t top = strands - 1; top >= 1; --top)
    for (std::size_t i = 1; i <= top; ++i) letters.push_back({i, true});
  return BraidWord(strands, std::move(letters));
}

Probes belt_probes(std::size_t strands, const IrackTable& irack) {
  if (strands < 3) throw OutOfRange("the belt-trick probes need at least three strands");
  auto element = [&](const char* label) {
    auto e = irack.carrier().find(label);
    if (!e) throw Error(std::string("probe element '") + label + "' is not in the carrier");
    return *e;
  };
  const Element one = element("1");
  auto padded = [&](std::initializer_list<const char*> head) {
    std::vector<Element> out;
    for (const char* l : head) out.push_back(element(l));
    out.resize(strands, one);
    return Tuple(std::move(out));
  };
  Relation seed(0, strands, {{Tuple{}, padded({"a", "c", "d"})}, {Tuple{}, padded({"b", "e", "f"})}});
  Relation test(strands, 0, {{padded({"a", "e", "f"}), Tuple{}}, {padded({"b", "c", "d"}), Tuple{}}});
  return Probes{TangledRelation::certify(std::move(seed), irack),
                TangledRelation::certify(std::move(test), irack)};
}

Relation sandwich(const BraidWord& word, const Relation& seed, const Relation& test,
                  const IrackTable& irack) {
  if (seed.dst_arity() != word.strands() || test.src_arity() != word.strands()) {
    throw ArityMismatch("probe arities do not match the braid's strand count");
  }
  std::vector<Pair> out;
  for (const auto& [x, t] : seed.pairs()) {
    auto [lo, hi] = test.image(apply_braid(word, t, irack));
    for (auto it = lo; it != hi; ++it) out.emplace_back(x, it->second);
  }
  return Relation(seed.src_arity(), test.dst_arity(), std::move(out));
}

BeltReport belt_trick(std::size_t strands, std::size_t power, const IrackTable& irack) {
  const auto probes = belt_probes(strands, irack);
  const BraidWord word = torsion(strands).power(power);
  BeltReport report;
  report.strands = strands;
  report.power = power;
  for (const auto& [unit, t] : probes.seed.relation().pairs())
    report.trajectories.push_back({t, apply_braid(word, t, irack)});
  report.point =
      sandwich(word, probes.seed, probes.test, irack).contains(Tuple{}, Tuple{});
  return report;
}

std::string format_belt_report(const Carrier& carrier, const BeltReport& report) {
  std::ostringstream os;
  os << "n=" << report.strands << " k=" << report.power
     << " result=" << (report.point ? "point" : "empty") << '\n';
  for (const auto& tr : report.trajectories)
    os << "trajectory: " << format_tuple(carrier, tr.from) << " -> " << format_tuple(carrier, tr.to)
       << '\n';
  return os.str();
}

Distinction distinguish(const BraidWord& w1, const BraidWord& w2, const Relation& seed,
                        const Relation& test, const IrackTable& irack) {
  if (w1.strands() != w2.strands()) throw ArityMismatch("braids on different strand counts");
  Distinction d;
  d.first = sandwich(w1, seed, test, irack);
  d.second = sandwich(w2, seed, test, irack);
  d.distinct = d.first != d.second;
  return d;
}

}  // namespace irack
