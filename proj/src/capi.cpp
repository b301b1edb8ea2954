#include "repgrowth/repgrowth.h"

#include <cstdlib>
#include <cstring>
#include <set>
#include <tuple>

#include <json.hpp>

#include "repgrowth/class_function.hpp"
#include "repgrowth/error.hpp"
#include "repgrowth/growth.hpp"

using nlohmann::ordered_json;
using namespace repgrowth;

struct rg_root_system {
  RootSystemPtr rs;
};

struct rg_table {
  CharacterTablePtr table;
};

struct rg_combo {
  ClassFunctionCombo combo;
};

namespace {

thread_local std::string last_error;

struct CallbackStop {};

rg_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return RG_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return RG_ERR_PARSE;
    case ErrorCode::Domain: return RG_ERR_DOMAIN;
    case ErrorCode::Schema: return RG_ERR_SCHEMA;
    case ErrorCode::SizeMismatch: return RG_ERR_SIZE_MISMATCH;
    case ErrorCode::Orthogonality: return RG_ERR_ORTHOGONALITY;
    case ErrorCode::Limit: return RG_ERR_LIMIT;
    case ErrorCode::Internal: return RG_ERR_INTERNAL;
  }
  return RG_ERR_INTERNAL;
}

template <class Fn>
rg_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return RG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const CallbackStop&) {
    last_error = "stopped by callback";
    return RG_ERR_CALLBACK;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RG_ERR_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RG_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return RG_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const ordered_json& j) { *out = dup(j.dump()); }

Weight read_weight(const RootSystem& rs, const std::int64_t* w, std::size_t len) {
  require(w, "weight");
  if (len != static_cast<std::size_t>(rs.rank()))
    fail(ErrorCode::InvalidArgument, "weight has " + std::to_string(len) + " coordinates, " + rs.type().to_string() +
                                         " has rank " + std::to_string(rs.rank()));
  return Weight(std::vector<std::int64_t>(w, w + len));
}

ordered_json constituents_json(const VirtualCharacter& v) {
  ordered_json list = ordered_json::array();
  for (const auto& [w, m] : v.terms()) list.push_back({{"weight", w.coords()}, {"mult", m.get_str()}});
  return list;
}

ordered_json report_json(const std::string& type, const GrowthReport& r, int digits) {
  ordered_json j;
  j["group"] = type;
  j["weight"] = r.highest.coords();
  j["dim"] = r.dimension.get_str();
  j["measure"] = r.measure.get_str();
  j["measure_sq"] = r.measure_sq.get_str();
  if (r.exponent)
    j["exponent"] = std::stod(format_exponent(*r.exponent, digits));
  else
    j["exponent"] = nullptr;
  j["constituents_sq"] = r.constituents_sq;
  return j;
}

void check_digits(int digits) {
  if (digits < 1 || digits > 17) fail(ErrorCode::InvalidArgument, "digits must be in 1..17");
}

ordered_json combo_json(const ClassFunctionCombo& c) {
  ordered_json mults = ordered_json::array();
  for (const auto& m : c.mults()) mults.push_back(m.get_str());
  ordered_json j;
  j["group"] = c.table()->name();
  j["mults"] = std::move(mults);
  j["degree"] = c.degree().get_str();
  j["measure"] = plancherel_measure_finite(c).get_str();
  j["multiplicity_sum"] = multiplicity_sum(c).get_str();
  j["constituents"] = c.num_constituents();
  return j;
}

mpz_class parse_decimal(const char* s, const char* what) {
  require(s, what);
  mpz_class v;
  if (*s == '\0' || v.set_str(s, 10) != 0) fail(ErrorCode::Parse, std::string(what) + " \"" + s + "\" is not an integer");
  return v;
}

}  // namespace

extern "C" {

const char* rg_version(void) { return "1.0.0"; }

const char* rg_status_name(rg_status status) {
  switch (status) {
    case RG_OK: return "ok";
    case RG_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case RG_ERR_PARSE: return "parse_error";
    case RG_ERR_DOMAIN: return "domain_error";
    case RG_ERR_SCHEMA: return "schema_error";
    case RG_ERR_SIZE_MISMATCH: return "size_mismatch";
    case RG_ERR_ORTHOGONALITY: return "orthogonality_failure";
    case RG_ERR_LIMIT: return "limit_exceeded";
    case RG_ERR_INTERNAL: return "internal_error";
    case RG_ERR_CALLBACK: return "stopped_by_callback";
  }
  return "unknown_status";
}

const char* rg_last_error(void) { return last_error.c_str(); }

void rg_string_free(char* s) { std::free(s); }

rg_status rg_root_system_create(const char* type, rg_root_system** out) {
  return guarded([&] {
    require(type, "type");
    require(out, "out");
    *out = new rg_root_system{build_root_system(std::string_view(type))};
  });
}

void rg_root_system_free(rg_root_system* rs) { delete rs; }

int rg_root_system_rank(const rg_root_system* rs) { return rs ? rs->rs->rank() : 0; }

rg_status rg_root_system_json(const rg_root_system* rs, char** out_json) {
  return guarded([&] {
    require(rs, "root system");
    require(out_json, "out_json");
    ordered_json roots = ordered_json::array();
    for (const auto& a : rs->rs->positive_roots()) roots.push_back(a.coords());
    ordered_json j;
    j["type"] = rs->rs->type().to_string();
    j["rank"] = rs->rs->rank();
    j["cartan_matrix"] = rs->rs->cartan_matrix();
    j["positive_roots"] = std::move(roots);
    emit(out_json, j);
  });
}

rg_status rg_dimension(const rg_root_system* rs, const int64_t* w, size_t len, char** out_decimal) {
  return guarded([&] {
    require(rs, "root system");
    require(out_decimal, "out_decimal");
    const Irrep h(rs->rs, read_weight(*rs->rs, w, len));
    *out_decimal = dup(dimension(h).get_str());
  });
}

rg_status rg_decompose_json(const rg_root_system* rs, const int64_t* w1, const int64_t* w2, size_t len, unsigned power,
                            char** out_json) {
  return guarded([&] {
    require(rs, "root system");
    require(out_json, "out_json");
    const Irrep a(rs->rs, read_weight(*rs->rs, w1, len));
    const VirtualCharacter v =
        w2 ? tensor_decompose(a, Irrep(rs->rs, read_weight(*rs->rs, w2, len))) : power_decompose(a, power);
    emit(out_json, constituents_json(v));
  });
}

rg_status rg_growth_json(const rg_root_system* rs, const int64_t* w, size_t len, int digits, char** out_json) {
  return guarded([&] {
    require(rs, "root system");
    require(out_json, "out_json");
    check_digits(digits);
    const Irrep h(rs->rs, read_weight(*rs->rs, w, len));
    emit(out_json, report_json(rs->rs->type().to_string(), growth_report(h), digits));
  });
}

rg_status rg_su2_closed_form_json(uint64_t n, int digits, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    check_digits(digits);
    GrowthReport r;
    r.highest = Weight{static_cast<std::int64_t>(n)};
    r.dimension = mpz_class(static_cast<unsigned long>(n)) + 1;
    std::tie(r.measure, r.measure_sq) = su2_growth_closed_form(n);
    if (r.measure > 1) r.exponent = log_ratio(r.measure_sq, r.measure);
    r.constituents_sq = static_cast<std::size_t>(n + 1);
    emit(out_json, report_json("A1", r, digits));
  });
}

rg_status rg_delta_family_json(int n, int64_t k, int digits, char** out_json) {
  return guarded([&] {
    require(out_json, "out_json");
    check_digits(digits);
    const GrowthReport r = weyl_delta_family_report(n, k);
    ordered_json j = report_json("A" + std::to_string(n - 1), r, digits);
    j["delta_multiple"] = k;
    emit(out_json, j);
  });
}

rg_status rg_strict_growth_json(const rg_root_system* rs, const int64_t* w1, const int64_t* w2, size_t len,
                                char** out_json) {
  return guarded([&] {
    require(rs, "root system");
    require(out_json, "out_json");
    const Irrep a(rs->rs, read_weight(*rs->rs, w1, len));
    const Irrep b(rs->rs, read_weight(*rs->rs, w2, len));
    const StrictGrowthWitness s = strict_growth_check(a, b);
    ordered_json witness = ordered_json::array();
    for (const auto& w : s.witness) witness.push_back(w.coords());
    ordered_json j;
    j["holds"] = s.holds;
    j["measure_first"] = s.measure_first.get_str();
    j["measure_second"] = s.measure_second.get_str();
    j["lower_bound"] = s.lower_bound.get_str();
    j["measure_product"] = plancherel_measure(tensor_decompose(a, b)).get_str();
    j["witness"] = std::move(witness);
    emit(out_json, j);
  });
}

const char* rg_sweep_csv_header(void) {
  static const std::string header = sweep_csv_header();
  return header.c_str();
}

rg_status rg_sweep_csv(const rg_root_system* rs, int64_t max_coord, unsigned threads, int digits, rg_line_callback cb,
                       void* user) {
  return guarded([&] {
    require(rs, "root system");
    require(reinterpret_cast<const void*>(cb), "callback");
    check_digits(digits);
    growth_sweep(rs->rs, max_coord, threads, [&](const SweepRow& row) {
      if (cb(sweep_csv_line(row, digits).c_str(), user) != 0) throw CallbackStop{};
    });
  });
}

rg_status rg_su2_sweep_csv(int64_t max_n, int digits, rg_line_callback cb, void* user) {
  return guarded([&] {
    require(reinterpret_cast<const void*>(cb), "callback");
    check_digits(digits);
    su2_closed_form_sweep(max_n, [&](const SweepRow& row) {
      if (cb(sweep_csv_line(row, digits).c_str(), user) != 0) throw CallbackStop{};
    });
  });
}

rg_status rg_digits_for_bits(int bits, int* out_digits) {
  return guarded([&] {
    require(out_digits, "out_digits");
    if (bits < 10 || bits > 53)
      fail(ErrorCode::InvalidArgument, "precision must be between 10 and 53 bits (exponents are IEEE doubles)");
    *out_digits = digits_for_bits(bits);
  });
}

rg_status rg_table_builtin(const char* name, rg_table** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new rg_table{builtin_table(name)};
  });
}

rg_status rg_table_load_json(const char* json_text, rg_table** out) {
  return guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = new rg_table{load_table(json_text)};
  });
}

void rg_table_free(rg_table* t) { delete t; }

size_t rg_table_num_characters(const rg_table* t) { return t ? t->table->num_characters() : 0; }

rg_status rg_table_export_json(const rg_table* t, char** out_json) {
  return guarded([&] {
    require(t, "table");
    require(out_json, "out_json");
    *out_json = dup(table_to_json(*t->table));
  });
}

rg_status rg_table_summary_json(const rg_table* t, char** out_json) {
  return guarded([&] {
    require(t, "table");
    require(out_json, "out_json");
    const CharacterTable& tab = *t->table;
    ordered_json degrees = ordered_json::array();
    for (const auto& d : tab.degrees()) degrees.push_back(d.get_str());
    std::set<std::uint32_t> conductors;
    for (const auto& c : tab.columns()) conductors.insert(c.conductor);
    ordered_json j;
    j["group"] = tab.name();
    j["order"] = tab.order().get_str();
    j["num_classes"] = tab.num_classes();
    j["degrees"] = std::move(degrees);
    j["trivial_index"] = tab.trivial_index();
    j["num_linear"] = tab.num_linear();
    j["perfect"] = tab.is_perfect();
    j["quasisimple"] = tab.is_quasisimple();
    j["conductors"] = conductors;
    j["orthogonality"] = "exact";
    emit(out_json, j);
  });
}

rg_status rg_table_find_degree(const rg_table* t, const char* degree, size_t* out_index) {
  return guarded([&] {
    require(t, "table");
    require(out_index, "out_index");
    const mpz_class d = parse_decimal(degree, "degree");
    const auto i = t->table->find_degree(d);
    if (!i) fail(ErrorCode::InvalidArgument, t->table->name() + " has no irreducible of degree " + d.get_str());
    *out_index = *i;
  });
}

rg_status rg_combo_create(const rg_table* t, rg_combo** out) {
  return guarded([&] {
    require(t, "table");
    require(out, "out");
    *out = new rg_combo{ClassFunctionCombo(t->table)};
  });
}

rg_status rg_combo_irreducible(const rg_table* t, size_t index, rg_combo** out) {
  return guarded([&] {
    require(t, "table");
    require(out, "out");
    *out = new rg_combo{ClassFunctionCombo::irreducible(t->table, index)};
  });
}

void rg_combo_free(rg_combo* c) { delete c; }

rg_status rg_combo_add(rg_combo* c, size_t index, const char* mult) {
  return guarded([&] {
    require(c, "combo");
    std::vector<mpz_class> m(c->combo.mults().size(), 0);
    if (index >= m.size()) fail(ErrorCode::InvalidArgument, "character index " + std::to_string(index) + " out of range");
    m[index] = parse_decimal(mult, "multiplicity");
    c->combo += ClassFunctionCombo(c->combo.table(), std::move(m));
  });
}

rg_status rg_combo_product(const rg_combo* const* factors, size_t count, rg_combo** out) {
  return guarded([&] {
    require(out, "out");
    if (count == 0) fail(ErrorCode::InvalidArgument, "product needs at least one factor");
    require(factors, "factors");
    std::vector<ClassFunctionCombo> list;
    for (size_t i = 0; i < count; ++i) {
      require(factors[i], "factor");
      list.push_back(factors[i]->combo);
    }
    *out = new rg_combo{decompose_product(list[0].table(), list)};
  });
}

rg_status rg_combo_power(const rg_combo* c, unsigned k, rg_combo** out) {
  return guarded([&] {
    require(c, "combo");
    require(out, "out");
    *out = new rg_combo{power(c->combo, k)};
  });
}

rg_status rg_combo_measure(const rg_combo* c, char** out_decimal) {
  return guarded([&] {
    require(c, "combo");
    require(out_decimal, "out_decimal");
    *out_decimal = dup(plancherel_measure_finite(c->combo).get_str());
  });
}

rg_status rg_combo_multiplicity_sum(const rg_combo* c, char** out_decimal) {
  return guarded([&] {
    require(c, "combo");
    require(out_decimal, "out_decimal");
    *out_decimal = dup(multiplicity_sum(c->combo).get_str());
  });
}

rg_status rg_combo_json(const rg_combo* c, char** out_json) {
  return guarded([&] {
    require(c, "combo");
    require(out_json, "out_json");
    emit(out_json, combo_json(c->combo));
  });
}

rg_status rg_cover_json(const rg_combo* c, unsigned max_n, char** out_json) {
  return guarded([&] {
    require(c, "combo");
    require(out_json, "out_json");
    const CoveringReport r = covering_number(c->combo, max_n);
    ordered_json measures = ordered_json::array();
    for (const auto& m : r.measures) measures.push_back(m.get_str());
    ordered_json j;
    j["group"] = c->combo.table()->name();
    j["order"] = c->combo.table()->order().get_str();
    if (r.n)
      j["N"] = *r.n;
    else
      j["N"] = nullptr;
    j["max_N"] = max_n;
    j["measures"] = std::move(measures);
    if (r.monotone_next)
      j["monotone_next"] = *r.monotone_next;
    else
      j["monotone_next"] = nullptr;
    emit(out_json, j);
  });
}

rg_status rg_bound_json(const rg_table* t, const size_t* indices, size_t count, char** out_json) {
  return guarded([&] {
    require(t, "table");
    require(out_json, "out_json");
    if (count == 0) fail(ErrorCode::InvalidArgument, "bound check needs at least one factor");
    require(indices, "indices");
    const BoundReport r = verify_bound1(t->table, std::vector<std::size_t>(indices, indices + count));
    ordered_json j;
    j["factors"] = std::vector<std::size_t>(indices, indices + count);
    j["lhs"] = r.lhs.get_str();
    j["rhs"] = r.rhs.get_str();
    j["holds"] = r.holds;
    j["strict_expected"] = r.strict_expected;
    j["strict_holds"] = r.strict_holds;
    emit(out_json, j);
  });
}

rg_status rg_power_positivity_json(const rg_table* t, unsigned k, char** out_json) {
  return guarded([&] {
    require(t, "table");
    require(out_json, "out_json");
    ordered_json rows = ordered_json::array();
    std::size_t zeros = 0;
    for (const auto& r : power_positivity(t->table, k)) {
      rows.push_back({{"first", r.first}, {"second", r.second}, {"mult", r.multiplicity.get_str()},
                      {"positive", r.multiplicity > 0}});
      if (r.multiplicity == 0) ++zeros;
    }
    ordered_json j;
    j["group"] = t->table->name();
    j["power"] = k;
    j["pairs"] = rows.size();
    j["zero_pairs"] = zeros;
    j["all_positive"] = zeros == 0;
    j["rows"] = std::move(rows);
    emit(out_json, j);
  });
}

rg_status rg_random_checks_json(const rg_table* t, size_t pairs, uint64_t seed, char** out_json) {
  return guarded([&] {
    require(t, "table");
    require(out_json, "out_json");
    std::mt19937_64 rng(seed);
    std::size_t sub = 0, mult = 0, cs = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
      const auto a = random_combo(t->table, rng), b = random_combo(t->table, rng);
      const InequalityCheck c = check_measure_inequalities(a, b);
      sub += !c.subadditive;
      mult += !c.submultiplicative;
      cs += !c.cauchy_schwarz;
    }
    const ReducibleSearchReport search = reducible_factor_search(t->table, pairs, seed);
    ordered_json j;
    j["group"] = t->table->name();
    j["seed"] = seed;
    j["pairs"] = pairs;
    j["subadditive_failures"] = sub;
    j["submultiplicative_failures"] = mult;
    j["cauchy_schwarz_failures"] = cs;
    j["reducible_search_trials"] = search.trials;
    j["reducible_search_hits"] = search.hits.size();
    j["passed"] = sub + mult + cs == 0;
    emit(out_json, j);
  });
}

}  // extern "C"
