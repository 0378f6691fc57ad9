#include "spectral/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace spectral {

namespace {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json mask_json(const BinaryString& s) {
  Json out = Json::array();
  for (auto b : s.bits()) out.push_back(static_cast<int>(b));
  return out;
}

BinaryString mask_from_json(const Json& j) {
  std::vector<std::uint8_t> bits;
  for (const auto& b : j) {
    const int v = b.get<int>();
    if (v != 0 && v != 1) throw std::invalid_argument("mask entries must be 0 or 1");
    bits.push_back(static_cast<std::uint8_t>(v));
  }
  return BinaryString(std::move(bits));
}

template <typename Terms, typename Fn>
Json terms_json(const Terms& terms, Fn&& coefficient) {
  Json out = Json::array();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Json t;
    t["partition"] = partition_json(it->first);
    coefficient(t, it->second);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

Json to_json(const SymExpansion& x) {
  Json out;
  out["basis"] = std::string(1, basis_letter(x.basis()));
  out["terms"] = terms_json(x.terms(), [](Json& t, const Rational& c) {
    t["num"] = integer_json(numerator_of(c));
    t["den"] = integer_json(denominator_of(c));
  });
  return out;
}

SymExpansion expansion_from_json(const Json& j) {
  const auto letter = j.at("basis").get<std::string>();
  if (letter.size() != 1) throw std::invalid_argument("basis must be a single letter");
  SymExpansion out(basis_from_letter(letter[0]));
  for (const auto& t : j.at("terms")) {
    const Integer den = t.contains("den") ? integer_from_json(t.at("den")) : Integer(1);
    if (den == 0) throw std::invalid_argument("zero denominator");
    out.add(partition_from_json(t.at("partition")), Rational(integer_from_json(t.at("num"))) / Rational(den));
  }
  return out;
}

Json to_json(const CohomologyClass& x) {
  Json out;
  out["k"] = x.context().k;
  out["n"] = x.context().n;
  out["basis"] = "s";
  out["terms"] = terms_json(x.terms(), [](Json& t, const Integer& c) {
    t["num"] = integer_json(c);
    t["den"] = 1;
  });
  return out;
}

CohomologyClass class_from_json(const Json& j) {
  CohomologyClass out(GrassContext(j.at("k").get<int>(), j.at("n").get<int>()));
  if (j.contains("basis") && j.at("basis") != "s") throw std::invalid_argument("classes use the s basis");
  for (const auto& t : j.at("terms")) {
    if (t.contains("den") && integer_from_json(t.at("den")) != 1) {
      throw std::invalid_argument("class coefficients must be integers");
    }
    out.add(partition_from_json(t.at("partition")), integer_from_json(t.at("num")));
  }
  return out;
}

Json to_json(const SpectralInequality& q) {
  Json out;
  out["lhs"] = mask_json(q.lhs);
  out["rhs"] = mask_json(q.rhs);
  out["sense"] = q.sense == Sense::le ? "le" : "ge";
  return out;
}

SpectralInequality inequality_from_json(const Json& j) {
  const auto sense = j.value("sense", std::string("le"));
  if (sense != "le" && sense != "ge") throw std::invalid_argument("sense must be \"le\" or \"ge\"");
  return SpectralInequality(mask_from_json(j.at("lhs")), mask_from_json(j.at("rhs")),
                            sense == "le" ? Sense::le : Sense::ge);
}

Json to_json(const Candidate& c) {
  Json out = to_json(c.inequality);
  out["text"] = to_string(c.inequality);
  out["origin"] = std::string(origin_name(c.provenance.origin));
  out["k"] = c.provenance.k;
  out["nu"] = partition_json(c.provenance.nu);
  out["pi"] = partition_json(c.provenance.pi);
  out["coefficient"] = integer_json(c.provenance.coefficient);
  return out;
}

Json to_json(const InequalitySystem& S) {
  Json out;
  out["d_A"] = S.d_A();
  out["d_B"] = S.d_B();
  out["trace"] = true;
  Json list = Json::array();
  for (const auto& q : S.inequalities()) list.push_back(to_json(q));
  out["inequalities"] = std::move(list);
  return out;
}

InequalitySystem system_from_json(const Json& j) {
  InequalitySystem out(j.at("d_A").get<int>(), j.at("d_B").get<int>());
  if (j.contains("trace") && !j.at("trace").get<bool>()) {
    throw std::invalid_argument("systems always carry the trace equality");
  }
  for (const auto& q : j.at("inequalities")) out.add(inequality_from_json(q));
  return out;
}

Json to_json(const HornTriple& t) {
  Json out;
  out["r"] = t.r;
  out["I"] = t.I;
  out["J"] = t.J;
  out["K"] = t.K;
  return out;
}

HornTriple horn_triple_from_json(const Json& j) {
  HornTriple t{j.at("r").get<int>(), j.at("I").get<std::vector<int>>(), j.at("J").get<std::vector<int>>(),
               j.at("K").get<std::vector<int>>()};
  const auto r = static_cast<std::size_t>(t.r);
  if (t.r < 1 || t.I.size() != r || t.J.size() != r || t.K.size() != r) {
    throw std::invalid_argument("Horn triple index sets must all have size r");
  }
  for (const auto* s : {&t.I, &t.J, &t.K}) {
    if (!std::is_sorted(s->begin(), s->end()) || std::adjacent_find(s->begin(), s->end()) != s->end()) {
      throw std::invalid_argument("Horn triple index sets must be strictly increasing");
    }
  }
  return t;
}

Json to_json(const TrialRecord& r) {
  Json out;
  out["seed"] = r.seed;
  out["index"] = r.index;
  out["d_A"] = r.d_A;
  out["d_B"] = r.d_B;
  out["lambda"] = r.lambda.values();
  out["lambda_tilde"] = r.lambda_tilde.values();
  out["slacks"] = r.slacks;
  out["trace_gap"] = r.trace_gap;
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"constraint", x.constraint}, {"slack", x.slack}});
  out["violations"] = std::move(v);
  return out;
}

std::vector<double> values_from_json(const Json& j) {
  const Json& arr = j.is_object() ? j.at("values") : j;
  if (!arr.is_array()) throw std::invalid_argument("expected an array of numbers");
  return arr.get<std::vector<double>>();
}

}  // namespace spectral
