#include "covlab/io/json.hpp"

#include <fstream>
#include <sstream>

#include "covlab/errors.hpp"

namespace covlab::io {

namespace {

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InvalidSystemError(std::string("system spec needs an integer \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw InputError("not a rational number: \"" + s + "\"");
  }
  q.canonicalize();
  return q;
}

template <class S, class ToJson>
json table_to_json(const CylinderFunction<S>& f, ToJson&& value) {
  json table = json::object();
  const WordTable& words = f.words();
  for (std::size_t i = 0; i < words.size(); ++i) table[format_word(words[i])] = value(f.values()[i]);
  return table;
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ShiftSystem system_from_json(const json& j) {
  if (!j.is_object()) throw InvalidSystemError("system spec must be a JSON object");
  if (j.contains("full_shift")) {
    const int d = require_int(j, "full_shift");
    if (d < 1 || d > kMaxAlphabet) throw InvalidSystemError("full_shift alphabet out of range");
    return ShiftSystem::full_shift(d);
  }
  const int d = require_int(j, "alphabet");
  if (!j.contains("adjacency") || !j.at("adjacency").is_array()) {
    throw InvalidSystemError("system spec needs \"full_shift\" or \"adjacency\"");
  }
  std::vector<std::vector<int>> adj;
  for (const json& row : j.at("adjacency")) {
    if (!row.is_array()) throw InvalidSystemError("adjacency rows must be arrays");
    std::vector<int> r;
    for (const json& v : row) {
      if (!v.is_number_integer()) throw InvalidSystemError("adjacency entries must be 0 or 1");
      r.push_back(v.get<int>());
    }
    adj.push_back(std::move(r));
  }
  if (static_cast<int>(adj.size()) != d) {
    throw InvalidSystemError("adjacency has " + std::to_string(adj.size()) + " rows but alphabet is " +
                             std::to_string(d));
  }
  return ShiftSystem::from_adjacency(adj);
}

json to_json(const ShiftSystem& sys) {
  if (sys.is_full_shift()) return json{{"full_shift", sys.alphabet_size()}};
  return json{{"alphabet", sys.alphabet_size()}, {"adjacency", sys.adjacency()}};
}

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

ShiftSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return system_from_json(parse_text(buf.str(), path));
}

Point point_from_json(const ShiftSystem& sys, const json& j) {
  if (!j.is_object() || !j.contains("per")) throw InputError("point needs \"pre\" and \"per\" strings");
  const std::string pre = j.value("pre", std::string());
  Point x(parse_word(pre, sys.alphabet_size()), parse_word(j.at("per").get<std::string>(), sys.alphabet_size()));
  require_admissible(sys, x);
  return x;
}

json to_json(const Point& x) {
  return json{{"pre", format_word(x.preperiod())}, {"per", format_word(x.period())}};
}

json to_json(const QComplex& z) {
  json out = json::array();
  for (const Rational* q : {&z.real(), &z.imag()}) {
    for (const mpz_class* n : {&q->get_num(), &q->get_den()}) {
      if (n->fits_slong_p()) {
        out.push_back(n->get_si());
      } else {
        out.push_back(n->get_str());
      }
    }
  }
  return out;
}

QComplex qcomplex_from_json(const json& j) {
  if (j.is_number_integer()) return QComplex(j.get<long>());
  if (j.is_string()) return QComplex(rational_from_string(j.get<std::string>()));
  if (j.is_array() && j.size() == 4) {
    mpz_class parts[4];
    for (std::size_t i = 0; i < 4; ++i) {
      if (j[i].is_number_integer()) {
        parts[i] = j[i].get<long>();
      } else if (!j[i].is_string() || parts[i].set_str(j[i].get<std::string>(), 10) != 0) {
        throw InputError("rational component must be an integer");
      }
    }
    if (parts[1] == 0 || parts[3] == 0) throw InputError("rational with zero denominator");
    return QComplex(Rational(parts[0], parts[1]), Rational(parts[2], parts[3]));
  }
  throw InputError("value must be [re_num, re_den, im_num, im_den], an integer or \"p/q\"");
}

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json to_json(const LCF& f) {
  return json{{"depth", f.depth()}, {"table", table_to_json(f, [](const QComplex& z) { return to_json(z); })}};
}

LCF lcf_from_json(const ShiftSystem& sys, const json& j) {
  if (!j.is_object() || !j.contains("depth") || !j.contains("table")) {
    throw InputError("function needs \"depth\" and \"table\"");
  }
  const int depth = j.at("depth").get<int>();
  const json& table = j.at("table");
  return LCF::tabulate(sys, depth, [&](const Word& w) {
    const std::string key = format_word(w);
    if (!table.contains(key)) throw InputError("function table misses word " + key);
    return qcomplex_from_json(table.at(key));
  });
}

json to_json(const Coefficient& c) {
  if (const FloatFunction* values = c.float_values()) {
    return json{{"depth", values->depth()},
                {"float", table_to_json(*values, [](const Complex& z) { return to_json(z); })}};
  }
  if (const SqrtFunction* root = c.root()) {
    return json{{"factor", to_json(*c.factor())}, {"sqrt", to_json(root->radicand())}};
  }
  return to_json(*c.factor());
}

json to_json(const Element& e) {
  json terms = json::array();
  for (const Monomial& t : e.terms()) {
    terms.push_back(json{{"f", to_json(t.f)}, {"k", t.k}, {"l", t.l}, {"g", to_json(t.g)}});
  }
  return json{{"terms", terms}};
}

Element element_from_json(const ShiftSystem& sys, const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw InputError("element needs a \"terms\" array");
  }
  std::vector<Monomial> terms;
  for (const json& t : j.at("terms")) {
    terms.push_back(Monomial{lcf_from_json(sys, t.at("f")), t.at("k").get<std::size_t>(),
                             t.at("l").get<std::size_t>(), lcf_from_json(sys, t.at("g"))});
  }
  return Element(sys, std::move(terms));
}

json to_json(const ResidualReport& r) {
  json entries = json::array();
  for (const ResidualEntry& e : r.entries) {
    entries.push_back(json{{"name", e.name},
                           {"value", e.value},
                           {"valid_columns", e.valid_columns},
                           {"vacuous", e.vacuous},
                           {"pass", e.pass}});
  }
  return json{{"mode", to_string(r.mode)},
              {"basis_size", r.basis_size},
              {"tolerance", r.tolerance},
              {"entries", entries},
              {"all_pass", r.all_pass()}};
}

json to_json(const MatrixEntry& e) {
  return json{{"row", e.row},
              {"col", e.col},
              {"from", {{"point", to_json(e.from)}, {"layer", e.from_layer}}},
              {"to", {{"point", to_json(e.to)}, {"layer", e.to_layer}}},
              {"value", to_json(e.value)}};
}

json to_json(const KernelWitness& k) {
  return json{{"c", to_json(k.c)},
              {"residual", k.residual},
              {"valid_columns", k.valid_columns},
              {"diagonal_law", k.diagonal_law},
              {"off_diagonal", k.off_diagonal ? to_json(*k.off_diagonal) : json(nullptr)},
              {"confirmed", k.confirmed}};
}

json to_json(const WitnessReport& w) {
  json commutant = json::array();
  for (const auto& [m, r] : w.commutant) commutant.push_back(json{{"depth", m}, {"residual", r}});
  return json{{"k", w.witness.k},
              {"l", w.witness.l},
              {"cylinder", w.witness.cylinder.to_string()},
              {"x0", to_json(w.witness.x0)},
              {"b", to_json(w.witness.b)},
              {"basis_size", w.basis_size},
              {"commutant", {{"residuals", commutant}, {"pass", w.commutes}}},
              {"entry",
               {{"value", to_json(w.entry)}, {"expected", w.entry_expected}, {"pass", w.entry_matches}}},
              {"kernel", to_json(w.kernel)},
              {"all_pass", w.all_pass()}};
}

json to_json(const ProbeReport& p) {
  json trials = json::array();
  for (const ProbeTrial& t : p.trials) {
    trials.push_back(json{{"k", t.k},
                          {"l", t.l},
                          {"f", to_json(t.f)},
                          {"g", to_json(t.g)},
                          {"residual", t.residual},
                          {"pass", t.pass}});
  }
  return json{{"trials", trials},
              {"seed", p.config.seed},
              {"max_power", p.config.max_power},
              {"coefficient_depth", p.config.coefficient_depth},
              {"hold_tolerance", p.config.hold_tolerance},
              {"fail_threshold", p.config.fail_threshold},
              {"commutant_depth", p.commutant_depth},
              {"basis_size", p.basis_size},
              {"rejected", p.rejected},
              {"all_pass", p.all_pass()}};
}

json to_json(const AnalyzeConfig& c) {
  return json{{"function_depth", c.function_depth}, {"orbit_depth", c.orbit_depth},
              {"forward_depth", c.forward_depth},   {"window", c.window},
              {"tolerance", c.tolerance},           {"probe_trials", c.probe_trials},
              {"seed", c.seed},                     {"probe_threshold", c.probe_threshold}};
}

json to_json(const FreenessVerdict& v) {
  json out{{"verdict", v.free ? "FREE" : "NOT_FREE"}};
  if (v.certificate) {
    out["certificate"] = json{{"k", v.certificate->k}, {"l", v.certificate->l},
                              {"cylinder", v.certificate->cylinder.to_string()}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

json to_json(const TheoremReport& r) {
  const json verdict = to_json(r.verdict);
  return json{{"schema", kSchemaVersion},
              {"system", to_json(r.system)},
              {"config", to_json(r.config)},
              {"verdict", verdict.at("verdict")},
              {"certificate", verdict.at("certificate")},
              {"residuals", {{"psi", to_json(r.psi_residuals)}, {"psi_tilde", to_json(r.psi_tilde_residuals)}}},
              {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
              {"probe", r.probe ? to_json(*r.probe) : json(nullptr)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace covlab::io
