#include "permulex/io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "permulex/errors.hpp"
#include "permulex/permutation.hpp"

namespace permulex {

using nlohmann::ordered_json;

Morphism MorphismSpec::morphism() const {
  Morphism phi(alphabet_size, images, name);
  return power == 1 ? phi : permulex::power(phi, power);
}

namespace {

std::string where(const std::string& source, const std::string& field) { return source + ": field '" + field + "'"; }

std::size_t line_of(const std::string& text, std::size_t byte) {
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n'));
}

std::size_t require_count(const ordered_json& j, const char* field, const std::string& source) {
  if (!j.contains(field)) throw ValidationError(where(source, field) + " is missing");
  const auto& v = j.at(field);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ValidationError(where(source, field) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

MorphismSpec parse_spec_text(const std::string& text, const std::string& source) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(source + ":" + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(source + ": top level must be an object");

  MorphismSpec spec;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ValidationError(where(source, "name") + " must be a string");
    spec.name = j["name"].get<std::string>();
  }
  spec.alphabet_size = require_count(j, "alphabet_size", source);
  if (spec.alphabet_size < 1 || spec.alphabet_size > 10) {
    throw ValidationError(where(source, "alphabet_size") + " must be between 1 and 10");
  }

  if (!j.contains("images") || !j["images"].is_array()) {
    throw ValidationError(where(source, "images") + " must be an array of strings");
  }
  const auto& images = j["images"];
  if (images.size() != spec.alphabet_size) {
    throw ValidationError(where(source, "images") + " has " + std::to_string(images.size()) + " entries, expected " +
                          std::to_string(spec.alphabet_size));
  }
  for (std::size_t a = 0; a < images.size(); ++a) {
    const std::string field = "images[" + std::to_string(a) + "]";
    if (!images[a].is_string()) throw ValidationError(where(source, field) + " must be a string");
    const std::string s = images[a].get<std::string>();
    if (s.empty()) throw ValidationError(where(source, field) + " is empty");
    for (char c : s) {
      if (c < '0' || c > '9' || static_cast<std::size_t>(c - '0') >= spec.alphabet_size) {
        throw ValidationError(where(source, field) + ": letter '" + std::string(1, c) + "' is not below " +
                              std::to_string(spec.alphabet_size));
      }
    }
    spec.images.push_back(word_from_string(s));
  }

  const std::size_t seed = require_count(j, "seed", source);
  if (seed >= spec.alphabet_size) throw ValidationError(where(source, "seed") + " is not a letter");
  spec.seed = static_cast<Letter>(seed);
  const Word& first = spec.images[seed];
  if (first.front() != spec.seed || first.size() < 2) {
    throw ValidationError(where(source, "seed") + ": image of the seed must start with it and have length >= 2");
  }

  if (j.contains("power")) {
    spec.power = require_count(j, "power", source);
    if (spec.power < 1) throw ValidationError(where(source, "power") + " must be >= 1");
  }
  return spec;
}

MorphismSpec parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_spec_text(os.str(), path);
}

namespace {

void reject(Analysis& a, const Error& e) { a.rejection = Rejection{e.kind(), e.what(), e.code()}; }

void swap_first_same_symbol_pair(TypeTable& table, const Morphism& phi) {
  auto symbol = [&](const PositionType& t) { return phi.image(t.letter).at(t.index - 1); };
  for (std::size_t i = 0; i + 1 < table.order.size(); ++i) {
    if (symbol(table.order[i]) == symbol(table.order[i + 1])) {
      std::swap(table.order[i], table.order[i + 1]);
      return;
    }
  }
}

}  // namespace

Analysis analyze(const MorphismSpec& spec, const AnalyzeOptions& opts) {
  Analysis a;
  a.spec = spec;
  a.options = opts;
  a.phi = spec.morphism();
  a.power = spec.power;
  const SpectralOptions sopts{opts.precision, opts.force_ball};

  try {
    a.primitivity = is_primitive(incidence_matrix(a.phi));
    if (!a.primitivity.primitive) throw NotPrimitive("incidence matrix has no positive power");
    a.spectral = perron_data(incidence_matrix(a.phi), sopts);

    a.monotonicity = monotonicity_verdict(a.phi, opts.depth);
    if (a.monotonicity->status != MonotonicityVerdict::Status::Monotone && opts.auto_power) {
      a.power_search = monotone_power(a.phi, opts.max_power, opts.depth);
      if (a.power_search->power) {
        const std::size_t k = *a.power_search->power;
        a.phi = power(a.phi, k);
        a.power *= k;
        a.primitivity = is_primitive(incidence_matrix(a.phi));
        a.spectral = perron_data(incidence_matrix(a.phi), sopts);
        a.monotonicity = monotonicity_verdict(a.phi, opts.depth);
      }
    }
    if (a.monotonicity->status != MonotonicityVerdict::Status::Monotone) {
      throw NotMonotone("monotonicity verdict is " + to_string(a.monotonicity->status));
    }

    WordStream stream(a.phi, spec.seed);
    a.period = detect_periodicity(stream);
    if (a.period) throw PeriodicWord("fixed point looks eventually periodic with period " + std::to_string(*a.period));

    a.table = type_order(stream, opts.prefix, opts.depth);
    if (a.table->verdict != TypeTable::Verdict::Separable) {
      throw NotSeparable("type order verdict is " + to_string(a.table->verdict));
    }
    if (opts.swap_types) swap_first_same_symbol_pair(*a.table, a.phi);

    a.inputs = ConstructionInputs{a.phi, spec.seed, *a.spectral, *a.table};
    a.construction = with_precision_escalation(
        *a.inputs, [](const IntervalMorphism& im) { return im; }, opts.precision);
  } catch (const NotPrimitive& e) {
    reject(a, e);
  } catch (const NotMonotone& e) {
    reject(a, e);
  } catch (const NotSeparable& e) {
    reject(a, e);
  } catch (const PeriodicWord& e) {
    reject(a, e);
  } catch (const TypeMissing& e) {
    reject(a, e);
  }
  return a;
}

namespace {

ordered_json type_json(const PositionType& t) { return ordered_json::array({t.letter, t.index}); }

ordered_json interval_json(const Interval& iv) { return ordered_json::array({iv.lo.str(), iv.hi.str()}); }

std::string generator() { return std::string("permulex ") + kVersion; }

}  // namespace

std::string analysis_report(const Analysis& a) {
  ordered_json j;
  j["generator"] = generator();
  j["name"] = a.spec.name;
  j["status"] = a.ok() ? "ok" : "rejected";
  if (a.rejection) {
    j["reason"] = a.rejection->reason;
    j["message"] = a.rejection->message;
  }
  j["alphabet_size"] = a.phi.alphabet_size();
  j["power"] = a.power;
  ordered_json images = ordered_json::array();
  for (const auto& w : a.phi.images()) images.push_back(to_string(w));
  j["images"] = images;
  j["seed"] = a.spec.seed;

  j["primitivity"] = {{"primitive", a.primitivity.primitive}, {"power", a.primitivity.power}};

  if (a.spectral) {
    const SpectralData& s = *a.spectral;
    j["exact"] = s.exact;
    if (!s.exact) j["precision"] = s.precision;
    j["theta"] = s.theta.str();
    ordered_json mu = ordered_json::array();
    for (const auto& m : s.mu) mu.push_back(m.str());
    j["mu"] = mu;
  }

  if (a.power_search) {
    ordered_json statuses = ordered_json::array();
    for (auto st : a.power_search->statuses) statuses.push_back(to_string(st));
    j["power_search"] = {{"statuses", statuses}};
  }
  if (a.monotonicity) {
    const MonotonicityVerdict& m = *a.monotonicity;
    ordered_json mono = {{"status", to_string(m.status)}, {"depth", m.depth}};
    if (m.witness) {
      mono["witness"] = {{"smaller", to_string(m.witness->smaller)},
                         {"larger", to_string(m.witness->larger)},
                         {"images_equal", m.witness->images_equal}};
    }
    j["monotonicity"] = mono;
  }

  if (a.table) {
    const TypeTable& t = *a.table;
    ordered_json order = ordered_json::array();
    for (const auto& p : t.order) order.push_back(type_json(p));
    ordered_json to = {{"verdict", to_string(t.verdict)}, {"prefix", t.prefix_len}, {"depth", t.depth}, {"order", order}};
    if (t.witness) to["witness"] = ordered_json::array({(*t.witness)[0], (*t.witness)[1], (*t.witness)[2]});
    j["type_order"] = to;
    if (t.witness && !a.ok()) j["witness"] = to["witness"];
  }

  if (a.construction) {
    const IntervalMorphism& im = *a.construction;
    ordered_json letters = ordered_json::array();
    for (const auto& iv : im.layout().letters) letters.push_back(interval_json(iv));
    ordered_json types = ordered_json::array();
    for (const auto& ti : im.layout().types) {
      types.push_back({{"type", type_json(ti.type)}, {"symbol", ti.symbol}, {"interval", interval_json(ti.range)}});
    }
    j["layout"] = {{"letters", letters}, {"types", types}};
    j["orientation"] = to_string(im.orientation());
    j["start"] = im.start().str();
    j["start_decimal"] = im.start().decimal(17);
  }
  return j.dump(2) + "\n";
}

std::vector<SequenceRow> sequence_rows(const std::vector<Scalar>& values) {
  const FinitePermutation ranks = permutation_from_values(values);
  std::vector<SequenceRow> rows;
  rows.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    rows.push_back({i, values[i].str(), values[i].decimal(17), ranks[i]});
  }
  return rows;
}

std::string format_rows(const std::vector<SequenceRow>& rows, Format format, const std::string& title) {
  std::ostringstream os;
  if (format == Format::Csv) {
    os << "# " << generator() << " " << title << "\n";
    os << "index,value,decimal,rank\n";
    for (const auto& r : rows) os << r.index << "," << r.value << "," << r.decimal << "," << r.rank << "\n";
    return os.str();
  }
  ordered_json j;
  j["generator"] = generator();
  j["name"] = title;
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"index", r.index}, {"value", r.value}, {"decimal", r.decimal}, {"rank", r.rank}});
  }
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

VerifySummary verify(const Analysis& a, const VerifyOptions& opts) {
  if (!a.ok() || !a.inputs) throw std::invalid_argument("verify needs a successful analysis");
  VerifySummary s;

  WordStream stream(a.phi, a.spec.seed);
  s.oracle = with_precision_escalation(
      *a.inputs, [&](const IntervalMorphism& im) { return verify_against_shifts(im, stream, opts.n, opts.depth); },
      a.options.precision);

  const std::vector<Scalar> values = with_precision_escalation(
      *a.inputs, [&](const IntervalMorphism& im) { return canonical_prefix(im, opts.n); }, a.options.precision);
  std::vector<std::pair<Scalar, Scalar>> intervals;
  for (std::size_t k = 1; k <= opts.dyadic_levels; ++k) {
    const long den = 1L << k;
    for (long d = 0; d < den; ++d) intervals.emplace_back(Scalar::rational(d, den), Scalar::rational(d + 1, den));
  }
  s.canonicality = canonicality_report(values, values.size(), intervals);
  for (const auto& f : s.canonicality) s.worst_deviation = std::max(s.worst_deviation, f.deviation);

  const std::size_t prefix = std::max(opts.prefix, opts.window + opts.factor_len);
  s.ergodic = ergodic_word_verdict(stream, opts.factor_len, opts.window, prefix, opts.ergodic_tol);

  if (opts.sturmian) s.sturmian = sturmian_cross_check(*opts.sturmian, a.phi, a.spec.seed, opts.n);

  s.pass = s.oracle.agree && s.worst_deviation <= opts.canonical_tol &&
           s.ergodic.status == ErgodicVerdict::Status::LikelyErgodic && (!s.sturmian || s.sturmian->agree());
  return s;
}

std::string verify_report(const Analysis& a, const VerifyOptions& opts, const VerifySummary& s) {
  ordered_json j;
  j["generator"] = generator();
  j["name"] = a.spec.name;
  j["pass"] = s.pass;
  j["n"] = opts.n;
  j["depth"] = opts.depth;

  ordered_json oracle = {{"agree", s.oracle.agree}};
  if (s.oracle.first_mismatch) {
    oracle["first_mismatch"] = ordered_json::array({s.oracle.first_mismatch->first, s.oracle.first_mismatch->second});
  }
  j["oracle"] = oracle;

  ordered_json freq = ordered_json::array();
  for (const auto& f : s.canonicality) {
    freq.push_back({{"interval", ordered_json::array({f.t1.str(), f.t2.str()})},
                    {"count", f.count},
                    {"frequency", f.frequency},
                    {"deviation", f.deviation}});
  }
  j["canonicality"] = {{"levels", opts.dyadic_levels},
                       {"tol", opts.canonical_tol},
                       {"worst_deviation", s.worst_deviation},
                       {"intervals", freq}};

  ordered_json erg = {{"status", to_string(s.ergodic.status)},
                      {"max_factor_len", s.ergodic.max_factor_len},
                      {"window", s.ergodic.window},
                      {"prefix", s.ergodic.prefix},
                      {"tol", s.ergodic.tol}};
  if (s.ergodic.witness) {
    erg["witness"] = {{"factor", to_string(s.ergodic.witness->factor)},
                      {"min_freq", s.ergodic.witness->min_freq},
                      {"max_freq", s.ergodic.witness->max_freq}};
  }
  j["ergodicity"] = erg;

  if (s.sturmian) {
    ordered_json st = {{"sigma", opts.sturmian->sigma.str()},
                       {"rho", opts.sturmian->rho.str()},
                       {"matches_shift_order", s.sturmian->matches_shift_order},
                       {"matches_canonical", s.sturmian->matches_canonical}};
    if (s.sturmian->first_mismatch) st["first_mismatch"] = *s.sturmian->first_mismatch;
    j["sturmian"] = st;
  }
  return j.dump(2) + "\n";
}

}  // namespace permulex
