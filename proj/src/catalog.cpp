#include "elastinv/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace elastinv {

namespace {

constexpr const char* kTensorNames[11] = {"D1", "D2", "B", "C", "D", "F", "G", "H", "K", "M", "N"};
constexpr const char* kScalarNames[11] = {"lambda", "mu", "J2", "J3", "J4", "J5",
                                          "J6",     "J7", "J8", "J9", "J10"};
constexpr int kScalarDegrees[11] = {1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

int tensor_degree(Tens t) { return IntermediateSet::degrees()[static_cast<int>(t)]; }

Tens tensor_by_name(const std::string& s) {
  for (int i = 0; i < 11; ++i)
    if (s == kTensorNames[i]) return static_cast<Tens>(i);
  throw std::invalid_argument("unknown tensor symbol: " + s);
}

/// Parse "J4" or "tr D1^2 D2" into a descriptor (degree from the factors).
InvariantDescriptor parse_entry(int table_degree, const std::string& name) {
  InvariantDescriptor d;
  d.name = name;
  d.table_degree = table_degree;
  if (name.rfind("tr ", 0) != 0) {
    d.is_scalar = true;
    for (int i = 0; i < 11; ++i)
      if (name == kScalarNames[i]) {
        d.scalar = static_cast<Scal>(i);
        d.degree = kScalarDegrees[i];
        return d;
      }
    throw std::invalid_argument("unknown scalar: " + name);
  }
  std::istringstream in(name.substr(3));
  std::string tok;
  while (in >> tok) {
    int pow = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      pow = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    d.word.push_back({tensor_by_name(tok), pow});
  }
  d.degree = 0;
  for (const auto& f : d.word) d.degree += f.pow * tensor_degree(f.t);
  return d;
}

// Table order, degree-major. The degree-10 row repeats the degree-8 word
// "tr B H K"; it is flagged below but kept to preserve the section counts.
const char* const kTable[][2] = {
    // clang-format off
    {"1", "lambda"}, {"1", "mu"},

    {"2", "J2"}, {"2", "tr D1^2"}, {"2", "tr D2^2"}, {"2", "tr D1 D2"},

    {"3", "J3"}, {"3", "tr H"}, {"3", "tr K"}, {"3", "tr D1^3"}, {"3", "tr D2^3"},
    {"3", "tr D1 F"}, {"3", "tr D1 G"}, {"3", "tr D2 G"}, {"3", "tr D1^2 D2"},
    {"3", "tr D1 D2^2"},

    {"4", "J4"}, {"4", "tr F^2"}, {"4", "tr G^2"}, {"4", "tr D1 C"}, {"4", "tr D1 H"},
    {"4", "tr D1 K"}, {"4", "tr D1 M"}, {"4", "tr D1 N"}, {"4", "tr D2 C"}, {"4", "tr D2 K"},
    {"4", "tr D2 M"}, {"4", "tr D2 N"}, {"4", "tr F G"}, {"4", "tr D1^2 D2^2"},
    {"4", "tr D1 D2 F"}, {"4", "tr D1 D2 G"},

    {"5", "J5"}, {"5", "tr B H"}, {"5", "tr B K"}, {"5", "tr B M"}, {"5", "tr B N"},
    {"5", "tr F C"}, {"5", "tr F H"}, {"5", "tr F K"}, {"5", "tr F M"}, {"5", "tr F N"},
    {"5", "tr G C"}, {"5", "tr G H"}, {"5", "tr G K"}, {"5", "tr G M"}, {"5", "tr G N"},
    {"5", "tr D1^2 K"}, {"5", "tr D1^2 M"}, {"5", "tr D1^2 N"}, {"5", "tr D2^2 H"},
    {"5", "tr D2^2 N"}, {"5", "tr D1 F^2"}, {"5", "tr D1 G^2"}, {"5", "tr D2 F^2"},
    {"5", "tr D2 G^2"}, {"5", "tr D1 D2 C"}, {"5", "tr D1 D2 H"}, {"5", "tr D1 D2 K"},
    {"5", "tr D1 D2 M"}, {"5", "tr D1 D2 N"},

    {"6", "J6"}, {"6", "tr H^2"}, {"6", "tr K^2"}, {"6", "tr M^2"}, {"6", "tr N^2"},
    {"6", "tr F^3"}, {"6", "tr G^3"}, {"6", "tr D1 D"}, {"6", "tr D2 D"}, {"6", "tr C H"},
    {"6", "tr C K"}, {"6", "tr C M"}, {"6", "tr C N"}, {"6", "tr H K"}, {"6", "tr H M"},
    {"6", "tr H N"}, {"6", "tr K M"}, {"6", "tr K N"}, {"6", "tr M N"}, {"6", "tr F^2 G"},
    {"6", "tr B F^2"}, {"6", "tr B G^2"}, {"6", "tr F G^2"}, {"6", "tr D1^2 F^2"},
    {"6", "tr D1^2 G^2"}, {"6", "tr D2^2 F^2"}, {"6", "tr D2^2 G^2"}, {"6", "tr D1 B K"},
    {"6", "tr D1 B M"}, {"6", "tr D1 B N"}, {"6", "tr D1 F K"}, {"6", "tr D1 F N"},
    {"6", "tr D1 G C"}, {"6", "tr D1 G H"}, {"6", "tr D1 G K"}, {"6", "tr D1 G M"},
    {"6", "tr D1 G N"}, {"6", "tr D2 B H"}, {"6", "tr D2 B M"}, {"6", "tr D2 B N"},
    {"6", "tr D2 F H"}, {"6", "tr D2 F K"}, {"6", "tr D2 F M"}, {"6", "tr D2 F N"},
    {"6", "tr D2 G H"}, {"6", "tr D2 G M"},

    {"7", "J7"}, {"7", "tr F D"}, {"7", "tr G D"}, {"7", "tr D1^2 D"}, {"7", "tr D2^2 D"},
    {"7", "tr F^2 C"}, {"7", "tr F^2 H"}, {"7", "tr F^2 K"}, {"7", "tr F^2 M"},
    {"7", "tr F^2 N"}, {"7", "tr G^2 C"}, {"7", "tr G^2 H"}, {"7", "tr G^2 K"},
    {"7", "tr G^2 M"}, {"7", "tr G^2 N"}, {"7", "tr D1 H^2"}, {"7", "tr D1 K^2"},
    {"7", "tr D1 M^2"}, {"7", "tr D1 N^2"}, {"7", "tr D2 H^2"}, {"7", "tr D2 K^2"},
    {"7", "tr D2 M^2"}, {"7", "tr D2 N^2"}, {"7", "tr D1 D2 D"}, {"7", "tr D1 C H"},
    {"7", "tr D1 C K"}, {"7", "tr D1 C M"}, {"7", "tr D1 C N"}, {"7", "tr D1 H K"},
    {"7", "tr D1 H M"}, {"7", "tr D1 H N"}, {"7", "tr D1 K M"}, {"7", "tr D1 K N"},
    {"7", "tr D1 M N"}, {"7", "tr D2 C H"}, {"7", "tr D2 C K"}, {"7", "tr D2 C M"},
    {"7", "tr D2 C N"}, {"7", "tr D2 H K"}, {"7", "tr D2 H M"}, {"7", "tr D2 H N"},
    {"7", "tr D2 K M"}, {"7", "tr D2 K N"}, {"7", "tr D2 M N"}, {"7", "tr B F C"},
    {"7", "tr B F K"}, {"7", "tr B F N"}, {"7", "tr B G C"}, {"7", "tr B G H"},
    {"7", "tr B G M"}, {"7", "tr F G H"}, {"7", "tr F G K"}, {"7", "tr F G M"},
    {"7", "tr F G N"},

    {"8", "J8"}, {"8", "tr H D"}, {"8", "tr K D"}, {"8", "tr M D"}, {"8", "tr N D"},
    {"8", "tr B H^2"}, {"8", "tr B K^2"}, {"8", "tr B M^2"}, {"8", "tr B N^2"},
    {"8", "tr F C^2"}, {"8", "tr F H^2"}, {"8", "tr F K^2"}, {"8", "tr F M^2"},
    {"8", "tr F N^2"}, {"8", "tr G C^2"}, {"8", "tr G H^2"}, {"8", "tr G K^2"},
    {"8", "tr G M^2"}, {"8", "tr G N^2"}, {"8", "tr B^2 F^2"}, {"8", "tr B^2 G^2"},
    {"8", "tr F^2 G^2"}, {"8", "tr D1^2 H^2"}, {"8", "tr D1^2 K^2"}, {"8", "tr D1^2 N^2"},
    {"8", "tr D2^2 H^2"}, {"8", "tr D2^2 K^2"}, {"8", "tr D2^2 M^2"}, {"8", "tr D1 G D"},
    {"8", "tr D2 F D"}, {"8", "tr B H K"}, {"8", "tr B H M"}, {"8", "tr B H N"},
    {"8", "tr B K M"}, {"8", "tr B K N"}, {"8", "tr B M N"}, {"8", "tr F C K"},
    {"8", "tr F C N"}, {"8", "tr F H K"}, {"8", "tr F H N"}, {"8", "tr F K M"},
    {"8", "tr F K N"}, {"8", "tr F M N"}, {"8", "tr G C H"}, {"8", "tr G C M"},
    {"8", "tr G H K"}, {"8", "tr G H M"}, {"8", "tr G H N"}, {"8", "tr G M N"},

    {"9", "J9"}, {"9", "tr H^3"}, {"9", "tr K^3"}, {"9", "tr F^2 D"}, {"9", "tr G^2 D"},
    {"9", "tr C^2 H"}, {"9", "tr C^2 K"}, {"9", "tr C^2 M"}, {"9", "tr C^2 N"},
    {"9", "tr H^2 K"}, {"9", "tr H^2 N"}, {"9", "tr K^2 M"}, {"9", "tr M^2 N"},
    {"9", "tr H K^2"}, {"9", "tr H N^2"}, {"9", "tr K M^2"}, {"9", "tr M N^2"},
    {"9", "tr D1 C D"}, {"9", "tr D1 K D"}, {"9", "tr D1 N D"}, {"9", "tr D2 C D"},
    {"9", "tr D2 H D"}, {"9", "tr D2 M D"}, {"9", "tr F G D"}, {"9", "tr C M N"},
    {"9", "tr H K M"}, {"9", "tr H K N"}, {"9", "tr H M N"}, {"9", "tr K M N"},

    {"10", "J10"}, {"10", "tr B^2 H^2"}, {"10", "tr B^2 K^2"}, {"10", "tr F^2 K^2"},
    {"10", "tr B H K"}, {"10", "tr B K D"}, {"10", "tr F K D"}, {"10", "tr F N D"},
    {"10", "tr G H D"}, {"10", "tr G M D"},

    {"11", "tr D1 D^2"}, {"11", "tr D2 D^2"},
    // clang-format on
};

std::vector<InvariantDescriptor> build_catalog() {
  std::vector<InvariantDescriptor> out;
  out.reserve(251);
  for (const auto& row : kTable) {
    auto d = parse_entry(std::stoi(row[0]), row[1]);
    d.duplicate_suspect = (d.table_degree == 10 && d.name == "tr B H K");
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

const std::vector<InvariantDescriptor>& catalog251() {
  static const std::vector<InvariantDescriptor> cat = build_catalog();
  return cat;
}

std::array<int, 11> catalog_counts() {
  std::array<int, 11> n{};
  for (const auto& d : catalog251()) ++n[d.table_degree - 1];
  return n;
}

double evaluate_descriptor(const InvariantDescriptor& d, const IntermediateSet& t, double lambda,
                           double mu, const JInvariants& j) {
  if (d.is_scalar) {
    switch (d.scalar) {
      case Scal::Lambda: return lambda;
      case Scal::Mu: return mu;
      default: return j.j[static_cast<int>(d.scalar) - static_cast<int>(Scal::J2)];
    }
  }
  const auto tensors = t.ordered();
  Mat3 acc = Mat3::Identity();
  for (const auto& f : d.word) {
    const Mat3 m = tensors[static_cast<int>(f.t)]->to_matrix();
    for (int p = 0; p < f.pow; ++p) acc = acc * m;
  }
  return acc.trace();
}

ZhengClosure zheng_closure(const std::vector<Sym2>& tensors, const std::vector<double>& scalars) {
  if (tensors.size() != IntermediateSet::kCount || scalars.size() != 11)
    throw std::invalid_argument("zheng_closure: expects exactly 11 tensors and 11 scalars");

  ZhengClosure out;
  const auto degs = IntermediateSet::degrees();
  auto word_name = [&](std::vector<WordFactor> w) {
    std::string s = "tr";
    for (const auto& f : w) {
      s += " ";
      s += kTensorNames[static_cast<int>(f.t)];
      if (f.pow > 1) s += "^" + std::to_string(f.pow);
    }
    return s;
  };
  auto emit = [&](std::vector<WordFactor> w) {
    InvariantDescriptor d;
    d.word = std::move(w);
    d.name = word_name(d.word);
    d.degree = 0;
    for (const auto& f : d.word) d.degree += f.pow * degs[static_cast<int>(f.t)];
    d.table_degree = d.degree;
    std::vector<std::pair<Sym2, int>> factors;
    for (const auto& f : d.word) factors.push_back({tensors[static_cast<int>(f.t)], f.pow});
    const double val = trace_product(factors);
    out.items.emplace_back(std::move(d), val);
    ++out.trace_count;
  };

  const int n = IntermediateSet::kCount;
  for (int i = 0; i < n; ++i) emit({{static_cast<Tens>(i), 1}});
  for (int i = 0; i < n; ++i) emit({{static_cast<Tens>(i), 2}});
  for (int i = 0; i < n; ++i) emit({{static_cast<Tens>(i), 3}});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) emit({{static_cast<Tens>(i), 1}, {static_cast<Tens>(j), 1}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) emit({{static_cast<Tens>(i), 2}, {static_cast<Tens>(j), 1}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) emit({{static_cast<Tens>(i), 1}, {static_cast<Tens>(j), 2}});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) emit({{static_cast<Tens>(i), 2}, {static_cast<Tens>(j), 2}});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        emit({{static_cast<Tens>(i), 1}, {static_cast<Tens>(j), 1}, {static_cast<Tens>(k), 1}});

  // cyclic-equivalence classes of the emitted words: tr Ti^2 Tj and
  // tr Tj Ti^2 name the same invariant, which is the whole gap between the
  // literal enumeration and the deduplicated count
  std::set<std::vector<int>> classes;
  for (const auto& [d, v] : out.items) {
    std::vector<int> flat;
    for (const auto& f : d.word)
      for (int p = 0; p < f.pow; ++p) flat.push_back(static_cast<int>(f.t));
    std::vector<int> best = flat;
    for (std::size_t r = 1; r < flat.size(); ++r) {
      std::rotate(flat.begin(), flat.begin() + 1, flat.end());
      best = std::min(best, flat);
    }
    classes.insert(best);
  }
  out.cyclic_distinct = static_cast<int>(classes.size()) + 11;

  static constexpr const char* scalar_names[11] = {"lambda", "mu", "J2", "J3", "J4", "J5",
                                                   "J6",     "J7", "J8", "J9", "J10"};
  for (int i = 0; i < 11; ++i) {
    InvariantDescriptor d;
    d.name = scalar_names[i];
    d.is_scalar = true;
    d.scalar = static_cast<Scal>(i);
    d.degree = d.table_degree = kScalarDegrees[i];
    out.items.emplace_back(std::move(d), scalars[i]);
    ++out.scalar_count;
  }
  return out;
}

}  // namespace elastinv
