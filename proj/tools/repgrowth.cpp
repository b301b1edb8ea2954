// repgrowth command-line tool. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "repgrowth/repgrowth.h"

namespace {

using nlohmann::ordered_json;

/// Library failure carrying the C status code.
struct Failure {
  rg_status status;
  std::string message;
};

void check(rg_status s) {
  if (s != RG_OK) throw Failure{s, rg_last_error()};
}

void usage_error(const std::string& message) { throw Failure{RG_ERR_INVALID_ARGUMENT, message}; }

std::string take(char* s) {
  std::string out(s);
  rg_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using RootSystem = std::unique_ptr<rg_root_system, Deleter<rg_root_system, rg_root_system_free>>;
using Table = std::unique_ptr<rg_table, Deleter<rg_table, rg_table_free>>;
using Combo = std::unique_ptr<rg_combo, Deleter<rg_combo, rg_combo_free>>;

struct Config {
  std::string group, builtin, table, weight, weight2, chars, char_degree, format, output;
  unsigned power = 0;
  long long max = -1;
  int precision = 53;
  std::uint64_t seed = 1;
  std::size_t random_checks = 0;
  unsigned power_check = 0;
  long long delta_multiple = 0;
  bool closed_form = false;
  bool do_export = false;
};

std::vector<std::int64_t> parse_ints(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw Failure{RG_ERR_PARSE, std::string("malformed ") + what + " \"" + text + "\" (expected comma-separated integers)"};
    out.push_back(v);
  }
  if (out.empty()) throw Failure{RG_ERR_PARSE, std::string("empty ") + what};
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{RG_ERR_INVALID_ARGUMENT, "cannot read \"" + path + "\""};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Where the --group spec points.
enum class GroupKind { Lie, Finite };

GroupKind classify(Config& c) {
  if (!c.builtin.empty() || !c.table.empty()) {
    if (!c.group.empty()) usage_error("give only one of --group, --builtin, --table");
    return GroupKind::Finite;
  }
  if (c.group.empty()) usage_error("a group is required (--group, --builtin or --table)");
  if (c.group.find(':') != std::string::npos) {
    c.builtin = c.group;
    return GroupKind::Finite;
  }
  if (c.group.size() > 5 && c.group.substr(c.group.size() - 5) == ".json") {
    c.table = c.group;
    return GroupKind::Finite;
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(c.group, ec)) {
    c.table = c.group;
    return GroupKind::Finite;
  }
  return GroupKind::Lie;
}

RootSystem open_root_system(const Config& c) {
  rg_root_system* rs = nullptr;
  check(rg_root_system_create(c.group.c_str(), &rs));
  return RootSystem(rs);
}

Table open_table(const Config& c) {
  rg_table* t = nullptr;
  if (!c.builtin.empty())
    check(rg_table_builtin(c.builtin.c_str(), &t));
  else
    check(rg_table_load_json(read_file(c.table).c_str(), &t));
  return Table(t);
}

std::vector<std::size_t> selected_characters(const rg_table* t, const Config& c) {
  std::vector<std::size_t> out;
  if (!c.char_degree.empty()) {
    std::size_t idx = 0;
    check(rg_table_find_degree(t, c.char_degree.c_str(), &idx));
    out.push_back(idx);
  }
  if (!c.chars.empty())
    for (auto v : parse_ints(c.chars, "character list")) {
      if (v < 0) throw Failure{RG_ERR_INVALID_ARGUMENT, "character indices are non-negative"};
      out.push_back(static_cast<std::size_t>(v));
    }
  if (out.empty()) usage_error("select characters with --char or --char-degree");
  return out;
}

int digits(const Config& c) {
  int d = 0;
  check(rg_digits_for_bits(c.precision, &d));
  return d;
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  usage_error("format \"" + c.format + "\" is not available for this subcommand");
}

std::string json_line(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string text_of(const ordered_json& j) {
  std::string out;
  for (const auto& [k, v] : j.items()) {
    if (v.is_array() && !v.empty() && v[0].is_object()) {
      out += k + ":\n";
      for (const auto& row : v) {
        out += " ";
        for (const auto& [rk, rv] : row.items()) out += " " + rk + "=" + (rv.is_string() ? rv.get<std::string>() : rv.dump());
        out += "\n";
      }
      continue;
    }
    out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  return out;
}

std::string cmd_decompose(Config& c) {
  if (classify(c) == GroupKind::Lie) {
    require_format(c, {"json", "text", "csv"});
    const auto rs = open_root_system(c);
    if (c.weight.empty()) usage_error("--weight is required");
    const auto w1 = parse_ints(c.weight, "weight");
    std::vector<std::int64_t> w2;
    if (!c.weight2.empty()) {
      if (c.power) usage_error("give either --weight2 or --power");
      w2 = parse_ints(c.weight2, "weight");
      if (w2.size() != w1.size()) throw Failure{RG_ERR_INVALID_ARGUMENT, "--weight and --weight2 differ in length"};
    }
    const unsigned power = c.power ? c.power : 2;
    char* out = nullptr;
    check(rg_decompose_json(rs.get(), w1.data(), w2.empty() ? nullptr : w2.data(), w1.size(), power, &out));
    const auto list = ordered_json::parse(take(out));
    ordered_json doc;
    doc["group"] = c.group;
    doc["weight"] = w1;
    if (!w2.empty())
      doc["weight2"] = w2;
    else
      doc["power"] = power;
    doc["constituents"] = list;
    if (c.format == "json") return json_line(doc);
    std::string s = c.format == "csv" ? "weight,mult\n" : "";
    for (const auto& t : list) {
      std::string w;
      for (const auto& x : t["weight"]) w += (w.empty() ? "" : ";") + x.dump();
      s += c.format == "csv" ? w + "," + t["mult"].get<std::string>() + "\n"
                             : "(" + w + ") x " + t["mult"].get<std::string>() + "\n";
    }
    return s;
  }
  require_format(c, {"json", "text"});
  const auto t = open_table(c);
  const auto chars = selected_characters(t.get(), c);
  std::vector<Combo> factors;
  for (auto i : chars) {
    rg_combo* f = nullptr;
    check(rg_combo_irreducible(t.get(), i, &f));
    factors.emplace_back(f);
  }
  rg_combo* product = nullptr;
  if (c.power) {
    if (factors.size() != 1) usage_error("--power needs a single character");
    check(rg_combo_power(factors[0].get(), c.power, &product));
  } else {
    std::vector<const rg_combo*> raw;
    for (auto& f : factors) raw.push_back(f.get());
    check(rg_combo_product(raw.data(), raw.size(), &product));
  }
  Combo result(product);
  char* out = nullptr;
  check(rg_combo_json(result.get(), &out));
  ordered_json doc = ordered_json::parse(take(out));
  doc["factors"] = chars;
  if (c.power) doc["power"] = c.power;
  return c.format == "json" ? json_line(doc) : text_of(doc);
}

std::string cmd_growth(Config& c) {
  if (classify(c) != GroupKind::Lie) usage_error("growth works on Cartan types; use cover or decompose for tables");
  require_format(c, {"json", "text", "csv"});
  const int d = digits(c);
  char* out = nullptr;
  if (c.delta_multiple > 0) {
    // --group A<n-1> --delta-multiple k: the k*delta family of SU(n)
    const auto rs = open_root_system(c);
    char* info = nullptr;
    check(rg_root_system_json(rs.get(), &info));
    const auto j = ordered_json::parse(take(info));
    const std::string type = j["type"];
    if (type.size() < 2 || type[0] != 'A' || type.find('x') != std::string::npos)
      usage_error("--delta-multiple needs a type A group");
    check(rg_delta_family_json(j["rank"].get<int>() + 1, c.delta_multiple, d, &out));
  } else {
    if (c.weight.empty()) usage_error("--weight is required");
    const auto w = parse_ints(c.weight, "weight");
    if (c.closed_form) {
      const auto rs = open_root_system(c);
      if (rg_root_system_rank(rs.get()) != 1 || w.size() != 1) usage_error("--closed-form is only available for A1");
      char* info = nullptr;
      check(rg_root_system_json(rs.get(), &info));
      if (ordered_json::parse(take(info))["type"] != "A1") usage_error("--closed-form is only available for A1");
      if (w[0] < 0) throw Failure{RG_ERR_DOMAIN, "weight must be dominant"};
      check(rg_su2_closed_form_json(static_cast<std::uint64_t>(w[0]), d, &out));
    } else {
      const auto rs = open_root_system(c);
      check(rg_growth_json(rs.get(), w.data(), w.size(), d, &out));
    }
  }
  ordered_json doc = ordered_json::parse(take(out));
  doc["precision_bits"] = c.precision;
  if (c.format == "json") return json_line(doc);
  if (c.format == "text") return text_of(doc);
  std::string coords;
  for (const auto& x : doc["weight"]) coords += (coords.empty() ? "" : ";") + x.dump();
  std::ostringstream exponent;
  if (!doc["exponent"].is_null()) exponent << doc["exponent"].dump();
  return std::string(rg_sweep_csv_header()) + "\n" + doc["group"].get<std::string>() + "," + coords + "," +
         doc["dim"].get<std::string>() + "," + doc["measure"].get<std::string>() + "," +
         doc["measure_sq"].get<std::string>() + "," + exponent.str() + "," + doc["constituents_sq"].dump() + "\n";
}

struct Sink {
  std::ostream* out;
  bool json;
  bool first = true;
};

int write_line(const char* line, void* user) {
  auto* sink = static_cast<Sink*>(user);
  if (!sink->json) {
    *sink->out << line << '\n';
  } else {
    // cartan_type,lambda_coords,dim,measure,measure_sq,exponent,constituents_sq
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    while (f.size() < 7) f.emplace_back();
    ordered_json row;
    row["cartan_type"] = f[0];
    row["lambda_coords"] = parse_ints([&] {
      std::string s = f[1];
      for (auto& ch : s)
        if (ch == ';') ch = ',';
      return s;
    }(), "weight");
    row["dim"] = f[2];
    row["measure"] = f[3];
    row["measure_sq"] = f[4];
    if (f[5].empty())
      row["exponent"] = nullptr;
    else
      row["exponent"] = std::stod(f[5]);
    row["constituents_sq"] = std::stoull(f[6]);
    *sink->out << (sink->first ? "" : ",\n") << "  " << row.dump();
    sink->first = false;
  }
  return sink->out->good() ? 0 : 1;
}

unsigned thread_count() {
  if (const char* env = std::getenv("REPGROWTH_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0 || v > 1024)
      throw Failure{RG_ERR_INVALID_ARGUMENT, "REPGROWTH_THREADS must be an integer in 1..1024"};
    return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Streams straight to the destination.
void cmd_sweep(Config& c, std::ostream& out) {
  if (classify(c) != GroupKind::Lie) usage_error("sweep works on Cartan types");
  if (c.format == "text") c.format = "csv";
  require_format(c, {"csv", "json"});
  if (c.max < 1) usage_error("--max must be at least 1");
  const int d = digits(c);
  const unsigned threads = c.closed_form ? 1 : thread_count();
  Sink sink{&out, c.format == "json"};
  if (sink.json)
    out << "{\n\"group\": " << ordered_json(c.group).dump() << ",\n\"max\": " << c.max
        << ",\n\"precision_bits\": " << c.precision << ",\n\"rows\": [\n";
  else
    out << rg_sweep_csv_header() << '\n';
  if (c.closed_form) {
    const auto rs = open_root_system(c);
    char* info = nullptr;
    check(rg_root_system_json(rs.get(), &info));
    if (ordered_json::parse(take(info))["type"] != "A1") usage_error("--closed-form is only available for A1");
    check(rg_su2_sweep_csv(c.max, d, write_line, &sink));
  } else {
    const auto rs = open_root_system(c);
    check(rg_sweep_csv(rs.get(), c.max, threads, d, write_line, &sink));
  }
  if (sink.json) out << "\n]\n}\n";
}

std::string cmd_cover(Config& c) {
  if (classify(c) != GroupKind::Finite) usage_error("cover needs a character table (--builtin or --table)");
  require_format(c, {"json", "text"});
  if (c.max < 1) usage_error("--max must be at least 1");
  const auto t = open_table(c);
  const auto chars = selected_characters(t.get(), c);
  rg_combo* raw = nullptr;
  check(rg_combo_create(t.get(), &raw));
  Combo combo(raw);
  for (auto i : chars) check(rg_combo_add(combo.get(), i, "1"));
  char* out = nullptr;
  check(rg_cover_json(combo.get(), static_cast<unsigned>(c.max), &out));
  ordered_json doc = ordered_json::parse(take(out));
  doc["characters"] = chars;
  if (c.format == "json") return json_line(doc);
  return doc["N"].is_null() ? "none\n" : doc["N"].dump() + "\n";
}

std::string cmd_table(Config& c) {
  if (classify(c) != GroupKind::Finite) usage_error("table needs --builtin or --table");
  const auto t = open_table(c);
  char* out = nullptr;
  if (c.do_export) {
    require_format(c, {"json"});
    check(rg_table_export_json(t.get(), &out));
    return take(out);
  }
  require_format(c, {"json", "text"});
  check(rg_table_summary_json(t.get(), &out));
  const auto doc = ordered_json::parse(take(out));
  return c.format == "json" ? json_line(doc) : text_of(doc);
}

std::string cmd_validate(Config& c) {
  if (classify(c) != GroupKind::Finite) usage_error("validate needs --table or --builtin");
  require_format(c, {"json", "text"});
  const auto t = open_table(c);
  char* out = nullptr;
  check(rg_table_summary_json(t.get(), &out));
  ordered_json doc = ordered_json::parse(take(out));
  doc["valid"] = true;
  bool passed = true;
  if (c.random_checks > 0) {
    check(rg_random_checks_json(t.get(), c.random_checks, c.seed, &out));
    doc["random_checks"] = ordered_json::parse(take(out));
    passed = passed && doc["random_checks"]["passed"].get<bool>();
  }
  if (c.power_check > 0) {
    check(rg_power_positivity_json(t.get(), c.power_check, &out));
    auto pp = ordered_json::parse(take(out));
    pp.erase("rows");
    doc["power_check"] = pp;  // reported, not asserted
  }
  doc["seed"] = c.seed;
  if (!passed) throw Failure{RG_ERR_INTERNAL, "randomized property checks failed: " + doc["random_checks"].dump()};
  return c.format == "json" ? json_line(doc) : text_of(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor-product growth of group representations, computed exactly."};
  app.require_subcommand(1);
  Config c;
  c.format = "json";

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", c.group, "Cartan type (A2, B3, A1xG2), builtin name or table path");
  };
  auto add_table = [&](CLI::App* sub) {
    sub->add_option("--builtin", c.builtin, "Builtin table: psl2:<q> or extraspecial:<p>:<n>");
    sub->add_option("--table", c.table, "Character table JSON file");
  };
  auto add_output = [&](CLI::App* sub, const char* default_format) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->default_str(default_format);
    sub->add_option("--output,-o", c.output, "Write to this file instead of stdout");
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", c.precision, "Bits of precision for exponents (10..53)")->default_val(53);
  };
  auto add_chars = [&](CLI::App* sub) {
    sub->add_option("--char", c.chars, "Irreducible indices, comma-separated");
    sub->add_option("--char-degree", c.char_degree, "Use the first irreducible of this degree");
  };

  auto* decompose = app.add_subcommand("decompose", "Decompose a tensor product or power into irreducibles");
  add_group(decompose);
  add_table(decompose);
  add_chars(decompose);
  decompose->add_option("--weight", c.weight, "Highest weight, comma-separated fundamental-weight coordinates");
  decompose->add_option("--weight2", c.weight2, "Second highest weight");
  decompose->add_option("--power", c.power, "Power of the (first) character");
  add_output(decompose, "json");

  auto* growth = app.add_subcommand("growth", "Growth report |chi|, |chi^2| and the exponent");
  add_group(growth);
  growth->add_option("--weight", c.weight, "Highest weight");
  growth->add_flag("--closed-form", c.closed_form, "Use the SU(2) closed form (A1 only)");
  growth->add_option("--delta-multiple", c.delta_multiple, "Report chi_{k delta} on a type A group");
  add_precision(growth);
  add_output(growth, "json");

  auto* sweep = app.add_subcommand("sweep", "Growth over all nontrivial dominant weights with coordinates <= max");
  add_group(sweep);
  sweep->add_option("--max", c.max, "Largest coordinate")->required();
  sweep->add_flag("--closed-form", c.closed_form, "Use the SU(2) closed form (A1 only)");
  add_precision(sweep);
  add_output(sweep, "csv");

  auto* cover = app.add_subcommand("cover", "Smallest N with every irreducible in chi^N");
  add_group(cover);
  add_table(cover);
  add_chars(cover);
  cover->add_option("--max", c.max, "Largest N to try")->required();
  add_output(cover, "json");

  auto* table = app.add_subcommand("table", "Summarize or export a character table");
  add_group(table);
  add_table(table);
  table->add_flag("--export", c.do_export, "Print the table in the JSON interchange format");
  add_output(table, "json");

  auto* validate = app.add_subcommand("validate", "Validate a character table and run property checks");
  add_group(validate);
  add_table(validate);
  validate->add_option("--random-checks", c.random_checks, "Number of random combo pairs to check");
  validate->add_option("--power-check", c.power_check, "Report <chi_i^k, chi_j> positivity for this k");
  validate->add_option("--seed", c.seed, "Seed for randomized checks")->default_val(1);
  add_output(validate, "json");

  CLI11_PARSE(app, argc, argv);
  if (app.got_subcommand(sweep) && sweep->count("--format") == 0) c.format = "csv";

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!c.output.empty()) {
      file.open(c.output, std::ios::binary);
      if (!file) throw Failure{RG_ERR_INVALID_ARGUMENT, "cannot write \"" + c.output + "\""};
      out = &file;
    }
    if (name == "sweep") {
      cmd_sweep(c, *out);
    } else {
      std::string text;
      if (name == "decompose") text = cmd_decompose(c);
      else if (name == "growth") text = cmd_growth(c);
      else if (name == "cover") text = cmd_cover(c);
      else if (name == "table") text = cmd_table(c);
      else text = cmd_validate(c);
      *out << text;
    }
    out->flush();
    if (!*out) throw Failure{RG_ERR_INVALID_ARGUMENT, "write failed"};
  } catch (const Failure& f) {
    std::cerr << "repgrowth " << name << ": " << rg_status_name(f.status) << ": " << f.message << "\n";
    return static_cast<int>(f.status);
  }
  return 0;
}
