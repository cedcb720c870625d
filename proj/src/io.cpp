#include "hfs/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "hfs/fixtures.hpp"
#include "json.hpp"

namespace hfs::io {

namespace {

using nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

std::vector<std::string> string_list(const ordered_json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(what + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Splits "0.5,0.4,0.3" into trimmed pieces; empty pieces are rejected.
std::vector<std::string> split_degrees(const std::string& cell, const std::string& where) {
  std::vector<std::string> out;
  std::string piece;
  std::stringstream ss(cell);
  while (std::getline(ss, piece, ',')) {
    piece = trimmed(piece);
    if (piece.empty()) throw ParseError(where + ": empty degree entry");
    out.push_back(piece);
  }
  if (out.empty()) throw ParseError(where + ": no degrees");
  return out;
}

// Minimal CSV reader: comma-separated, double quotes may wrap a field and
// are doubled to escape themselves.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool seen_comma = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : '\n';
    if (quoted) {
      if (i == text.size()) throw ParseError("unterminated quote in CSV");
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
      seen_comma = true;
    } else if (c == '\n') {
      if (seen_comma || !trimmed(field).empty()) {
        row.push_back(field);
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      seen_comma = false;
    } else if (c != '\r') {
      field += c;
    }
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HesitantElement parse_element(const std::vector<std::string>& degrees, int precision,
                              const std::string& where) {
  if (degrees.empty()) throw ParseError(where + ": no degrees");
  std::vector<Degree> d;
  d.reserve(degrees.size());
  for (const std::string& s : degrees) d.push_back(Degree::parse(s, precision));
  return HesitantElement(std::move(d));
}

InclusionKind parse_kind(const std::string& s) {
  if (s.size() == 1) {
    if (std::optional<InclusionKind> k = kind_from_letter(s[0])) return *k;
  }
  throw ParseError("kind must be one of p, a, m, s, t, n (got \"" + s + "\")");
}

void check_precision(int precision) {
  if (precision < 0 || precision > Degree::kMaxPrecision)
    throw ParseError("precision must be between 0 and " +
                     std::to_string(Degree::kMaxPrecision));
}

void check_format(const std::string& format) {
  if (format != "text" && format != "json")
    throw ParseError("format must be \"text\" or \"json\" (got \"" + format + "\")");
}

// Everything a command needs from a space document plus flag overrides,
// short of the covering validation itself.
struct ResolvedSpace {
  HesitantFuzzySoftSet soft;
  HesitantElement beta;
  InclusionKind kind;
};

ResolvedSpace resolve_space(const SpaceDocument& doc, int precision,
                            const std::optional<InclusionKind>& kind_override,
                            const std::optional<std::vector<std::string>>& beta_override) {
  check_precision(precision);
  if (doc.universe.empty()) throw ParseError("universe must not be empty");
  if (doc.parameters.empty()) throw ParseError("parameter set must not be empty");
  if (doc.cells.size() != doc.parameters.size())
    throw ParseError("soft set image count does not match the parameter count");
  UniversePtr u = make_universe(doc.universe);
  std::vector<HesitantFuzzySet> images;
  images.reserve(doc.parameters.size());
  for (std::size_t p = 0; p < doc.parameters.size(); ++p) {
    if (doc.cells[p].size() != doc.universe.size())
      throw ParseError("image of " + doc.parameters[p] +
                       " does not cover every universe object");
    std::vector<HesitantElement> values;
    values.reserve(doc.universe.size());
    for (std::size_t x = 0; x < doc.universe.size(); ++x)
      values.push_back(parse_element(doc.cells[p][x], precision,
                                     doc.parameters[p] + "(" + doc.universe[x] + ")"));
    images.emplace_back(u, std::move(values));
  }
  HesitantFuzzySoftSet soft(u, ParameterSet(doc.parameters), std::move(images));

  std::optional<InclusionKind> kind = kind_override;
  if (!kind && doc.kind) {
    if (std::optional<InclusionKind> k = kind_from_letter(*doc.kind))
      kind = *k;
    else
      throw ParseError(std::string("document kind must be one of p, a, m, s, t, n (got \"") +
                       *doc.kind + "\")");
  }
  if (!kind)
    throw ParseError("no inclusion kind: supply \"kind\" in the document or --kind");

  const std::vector<std::string>& beta_src = beta_override ? *beta_override : doc.beta;
  if (beta_src.empty())
    throw ParseError("no threshold: supply \"beta\" in the document or --beta");
  HesitantElement beta = parse_element(beta_src, precision, "beta");
  return ResolvedSpace{std::move(soft), std::move(beta), *kind};
}

// --- canonical JSON fragments ------------------------------------------

ordered_json element_json(const HesitantElement& h) {
  ordered_json arr = ordered_json::array();
  for (Degree g : h.degrees()) arr.push_back(g.str());
  return arr;
}

ordered_json hfs_json(const HesitantFuzzySet& h) {
  ordered_json obj = ordered_json::object();
  for (std::size_t i = 0; i < h.size(); ++i)
    obj[h.universe()->name(i)] = element_json(h.at(i));
  return obj;
}

ordered_json objects_json(const Universe& u, const ObjectSet& s) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i : s) arr.push_back(u.name(i));
  return arr;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// --- text fragments ------------------------------------------------------

std::string hfs_text(const HesitantFuzzySet& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += " ";
    out += h.universe()->name(i) + "=" + h.at(i).str();
  }
  return out;
}

std::string hfs_block(const HesitantFuzzySet& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i)
    out += "  " + h.universe()->name(i) + " = " + h.at(i).str() + "\n";
  return out;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ";
    out += parts[i];
  }
  return out;
}

template <typename Fn>
CmdResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return CmdResult{2, std::string("error: ") + e.what() + "\n"};
  } catch (const ObjectNotInUniverse& e) {
    return CmdResult{2, std::string("error: ") + e.what() + "\n"};
  } catch (const NotABetaCovering& e) {
    return CmdResult{1, std::string("error: ") + e.what() + "\n"};
  } catch (const UndefinedNeighborhood& e) {
    return CmdResult{1, std::string("error: ") + e.what() + "\n"};
  } catch (const HfsError& e) {
    return CmdResult{2, std::string("error: ") + e.what() + "\n"};
  }
}

std::optional<InclusionKind> kind_flag(const std::optional<std::string>& kind) {
  if (!kind) return std::nullopt;
  return parse_kind(*kind);
}

std::optional<std::vector<std::string>> beta_flag(const std::optional<std::string>& beta) {
  if (!beta) return std::nullopt;
  return split_degrees(*beta, "--beta");
}

}  // namespace

SpaceDocument space_from_json(const std::string& text) {
  ordered_json j = parse_json(text);
  if (!j.is_object()) throw ParseError("space document must be a JSON object");
  SpaceDocument doc;
  if (!j.contains("universe")) throw ParseError("space document needs \"universe\"");
  doc.universe = string_list(j["universe"], "\"universe\"");
  if (!j.contains("parameters")) throw ParseError("space document needs \"parameters\"");
  doc.parameters = string_list(j["parameters"], "\"parameters\"");
  if (!j.contains("soft_set") || !j["soft_set"].is_object())
    throw ParseError("space document needs a \"soft_set\" object");
  const ordered_json& soft = j["soft_set"];
  for (const std::string& p : doc.parameters) {
    if (!soft.contains(p)) throw ParseError("soft_set is missing parameter " + p);
    const ordered_json& img = soft[p];
    if (!img.is_object())
      throw ParseError("soft_set[" + p + "] must map objects to degree arrays");
    std::vector<std::vector<std::string>> row;
    row.reserve(doc.universe.size());
    for (const std::string& x : doc.universe) {
      if (!img.contains(x))
        throw ParseError("soft_set[" + p + "] is missing object " + x);
      row.push_back(string_list(img[x], "soft_set[" + p + "][" + x + "]"));
    }
    doc.cells.push_back(std::move(row));
  }
  if (j.contains("beta")) doc.beta = string_list(j["beta"], "\"beta\"");
  if (j.contains("kind")) {
    if (!j["kind"].is_string() || j["kind"].get<std::string>().size() != 1)
      throw ParseError("\"kind\" must be a single letter");
    doc.kind = j["kind"].get<std::string>()[0];
  }
  return doc;
}

SpaceDocument space_from_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows = csv_rows(text);
  if (rows.size() < 2)
    throw ParseError("CSV needs a header row and at least one parameter row");
  const std::vector<std::string>& header = rows[0];
  if (header.size() < 2) throw ParseError("CSV header needs at least one object column");
  SpaceDocument doc;
  for (std::size_t i = 1; i < header.size(); ++i) {
    std::string name = trimmed(header[i]);
    if (name.empty()) throw ParseError("CSV header has an empty object name");
    doc.universe.push_back(std::move(name));
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::vector<std::string>& row = rows[r];
    if (row.size() != header.size())
      throw ParseError("CSV row " + std::to_string(r + 1) + " has " +
                       std::to_string(row.size()) + " cells, expected " +
                       std::to_string(header.size()));
    std::string param = trimmed(row[0]);
    if (param.empty()) throw ParseError("CSV row " + std::to_string(r + 1) +
                                        " has an empty parameter name");
    std::vector<std::vector<std::string>> cells;
    cells.reserve(doc.universe.size());
    for (std::size_t i = 1; i < row.size(); ++i)
      cells.push_back(split_degrees(row[i], param + "(" + doc.universe[i - 1] + ")"));
    doc.parameters.push_back(std::move(param));
    doc.cells.push_back(std::move(cells));
  }
  return doc;
}

SpaceDocument space_from_file(const std::string& path) {
  std::string text = read_file(path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
    return space_from_csv(text);
  return space_from_json(text);
}

std::string space_to_json(const SpaceDocument& doc) {
  ordered_json j;
  j["universe"] = doc.universe;
  j["parameters"] = doc.parameters;
  ordered_json soft = ordered_json::object();
  for (std::size_t p = 0; p < doc.parameters.size(); ++p) {
    ordered_json img = ordered_json::object();
    for (std::size_t x = 0; x < doc.universe.size(); ++x) img[doc.universe[x]] = doc.cells[p][x];
    soft[doc.parameters[p]] = std::move(img);
  }
  j["soft_set"] = std::move(soft);
  if (!doc.beta.empty()) j["beta"] = doc.beta;
  if (doc.kind) j["kind"] = std::string(1, *doc.kind);
  return dump(j);
}

TargetDocument target_from_json(const std::string& text) {
  ordered_json j = parse_json(text);
  if (!j.is_object()) throw ParseError("target document must be a JSON object");
  TargetDocument doc;
  if (j.contains("subset")) {
    doc.subset = string_list(j["subset"], "\"subset\"");
    return doc;
  }
  if (j.contains("values")) {
    if (!j["values"].is_object())
      throw ParseError("\"values\" must map objects to degree arrays");
    std::vector<std::pair<std::string, std::vector<std::string>>> vals;
    for (auto it = j["values"].begin(); it != j["values"].end(); ++it)
      vals.emplace_back(it.key(), string_list(it.value(), "values[" + it.key() + "]"));
    doc.hesitant = std::move(vals);
    return doc;
  }
  throw ParseError("target document needs \"values\" (hesitant) or \"subset\" (crisp)");
}

TargetDocument target_from_file(const std::string& path) {
  return target_from_json(read_file(path));
}

std::string target_to_json(const TargetDocument& doc) {
  ordered_json j;
  if (doc.subset) {
    j["subset"] = *doc.subset;
  } else if (doc.hesitant) {
    ordered_json vals = ordered_json::object();
    for (const auto& [name, degrees] : *doc.hesitant) vals[name] = degrees;
    j["values"] = std::move(vals);
  }
  return dump(j);
}

std::string hfs_to_json(const HesitantFuzzySet& h) { return hfs_json(h).dump(); }

CoveringSpace build_space(const SpaceDocument& doc, int precision,
                          std::optional<InclusionKind> kind_override,
                          const std::optional<std::vector<std::string>>& beta_override) {
  ResolvedSpace r = resolve_space(doc, precision, kind_override, beta_override);
  return CoveringSpace(std::move(r.soft), std::move(r.beta), r.kind);
}

CmdResult cmd_validate(const std::string& space_path,
                       const std::optional<std::string>& kind,
                       const std::optional<std::string>& beta,
                       const CommonOpts& opts) {
  return guarded([&]() -> CmdResult {
    check_format(opts.format);
    SpaceDocument doc = space_from_file(space_path);
    ResolvedSpace r = resolve_space(doc, opts.precision, kind_flag(kind), beta_flag(beta));
    // Scan for the first failing object instead of constructing the
    // space, so the verdict is a report rather than an exception.
    HesitantFuzzySet all = family_union(r.soft.images());
    std::optional<std::string> failing;
    for (std::size_t x = 0; x < r.soft.universe()->size() && !failing; ++x)
      if (!elem_includes(r.kind, r.beta, all.at(x)))
        failing = r.soft.universe()->name(x);

    CmdResult res;
    res.code = failing ? 1 : 0;
    if (opts.format == "json") {
      ordered_json j;
      j["objects"] = r.soft.universe()->objects();
      j["parameters"] = r.soft.params().params();
      j["kind"] = std::string(1, kind_letter(r.kind));
      j["beta"] = element_json(r.beta);
      j["valid"] = !failing;
      if (failing) j["failing_object"] = *failing;
      res.out = dump(j);
    } else {
      std::string out;
      out += "objects: " + joined(r.soft.universe()->objects()) + "\n";
      out += "parameters: " + joined(r.soft.params().params()) + "\n";
      out += std::string("kind: ") + kind_letter(r.kind) + "\n";
      out += "beta: " + r.beta.str() + "\n";
      out += failing ? "verdict: not a beta-covering (fails at " + *failing + ")\n"
                     : "verdict: valid beta-covering\n";
      res.out = out;
    }
    return res;
  });
}

CmdResult cmd_neighborhood(const std::string& space_path,
                           const std::optional<std::string>& object,
                           bool crisp_only,
                           const std::optional<std::string>& kind,
                           const std::optional<std::string>& beta,
                           const CommonOpts& opts) {
  return guarded([&]() -> CmdResult {
    check_format(opts.format);
    SpaceDocument doc = space_from_file(space_path);
    CoveringSpace s = build_space(doc, opts.precision, kind_flag(kind), beta_flag(beta));
    const Universe& u = *s.universe();

    std::vector<NeighborhoodRow> rows;
    if (object) {
      std::size_t x = u.index_of_checked(*object);
      rows.push_back(NeighborhoodRow{x, fuzzy_neighborhood(s, x), crisp_neighborhood(s, x)});
    } else {
      rows = neighborhood_table(s);
    }

    CmdResult res;
    if (opts.format == "json") {
      ordered_json j;
      j["kind"] = std::string(1, kind_letter(s.kind()));
      j["beta"] = element_json(s.beta());
      ordered_json out_rows = ordered_json::array();
      for (const NeighborhoodRow& row : rows) {
        ordered_json r;
        r["object"] = u.name(row.object);
        r["qualifying"] = row.fuzzy.qualifying;
        if (!crisp_only)
          r["fuzzy"] = row.fuzzy.defined() ? hfs_json(row.fuzzy.get()) : ordered_json("Null");
        r["crisp"] = row.crisp.defined() ? objects_json(u, row.crisp.get())
                                         : ordered_json("Null");
        out_rows.push_back(std::move(r));
      }
      j["rows"] = std::move(out_rows);
      res.out = dump(j);
    } else {
      std::size_t width = 0;
      for (const NeighborhoodRow& row : rows)
        width = std::max(width, u.name(row.object).size());
      std::string out;
      out += std::string("kind: ") + kind_letter(s.kind()) + "\n";
      out += "beta: " + s.beta().str() + "\n";
      for (const NeighborhoodRow& row : rows) {
        std::string name = u.name(row.object);
        out += name + std::string(width - name.size(), ' ');
        out += " | qualifying: ";
        out += row.fuzzy.qualifying.empty() ? "(none)" : joined(row.fuzzy.qualifying);
        if (!crisp_only) {
          out += " | fuzzy: ";
          out += row.fuzzy.defined() ? hfs_text(row.fuzzy.get()) : "Null";
        }
        out += " | crisp: ";
        out += row.crisp.defined() ? obj_str(u, row.crisp.get()) : "Null";
        out += "\n";
      }
      res.out = out;
    }
    return res;
  });
}

CmdResult cmd_approx(const std::string& space_path,
                     const std::string& target_path,
                     const std::string& mode,
                     const std::string& bound,
                     const std::optional<std::string>& kind,
                     const std::optional<std::string>& beta,
                     const CommonOpts& opts) {
  return guarded([&]() -> CmdResult {
    check_format(opts.format);
    if (mode != "hesitant" && mode != "crisp")
      throw ParseError("mode must be \"hesitant\" or \"crisp\" (got \"" + mode + "\")");
    if (bound != "lower" && bound != "upper" && bound != "both")
      throw ParseError("bound must be \"lower\", \"upper\" or \"both\" (got \"" + bound +
                       "\")");
    SpaceDocument doc = space_from_file(space_path);
    CoveringSpace s = build_space(doc, opts.precision, kind_flag(kind), beta_flag(beta));
    const Universe& u = *s.universe();
    TargetDocument target = target_from_file(target_path);

    bool want_lower = bound != "upper";
    bool want_upper = bound != "lower";

    ordered_json j;
    j["kind"] = std::string(1, kind_letter(s.kind()));
    j["beta"] = element_json(s.beta());
    j["mode"] = mode;
    std::string out;
    out += std::string("kind: ") + kind_letter(s.kind()) + "\n";
    out += "beta: " + s.beta().str() + "\n";

    if (mode == "hesitant") {
      if (!target.hesitant)
        throw ParseError("mode is hesitant but the target file has no \"values\"");
      std::vector<std::optional<HesitantElement>> values(u.size());
      for (const auto& [name, degrees] : *target.hesitant) {
        std::size_t x = u.index_of_checked(name);
        values[x] = parse_element(degrees, opts.precision, "values[" + name + "]");
      }
      std::vector<HesitantElement> total;
      for (std::size_t x = 0; x < u.size(); ++x) {
        if (!values[x]) throw ParseError("target is missing object " + u.name(x));
        total.push_back(std::move(*values[x]));
      }
      HesitantFuzzySet x(s.universe(), std::move(total));
      j["target"] = hfs_json(x);
      out += "target:\n" + hfs_block(x);
      if (want_lower) {
        HesitantFuzzySet low = hesitant_lower(s, x);
        j["lower"] = hfs_json(low);
        out += "lower:\n" + hfs_block(low);
      }
      if (want_upper) {
        HesitantFuzzySet up = hesitant_upper(s, x);
        j["upper"] = hfs_json(up);
        out += "upper:\n" + hfs_block(up);
      }
    } else {
      if (!target.subset)
        throw ParseError("mode is crisp but the target file has no \"subset\"");
      ObjectSet x;
      for (const std::string& name : *target.subset) x.push_back(u.index_of_checked(name));
      std::sort(x.begin(), x.end());
      x.erase(std::unique(x.begin(), x.end()), x.end());
      j["target"] = objects_json(u, x);
      out += "target: " + obj_str(u, x) + "\n";
      if (want_lower) {
        ObjectSet low = crisp_lower(s, x);
        j["lower"] = objects_json(u, low);
        out += "lower: " + obj_str(u, low) + "\n";
      }
      if (want_upper) {
        ObjectSet up = crisp_upper(s, x);
        j["upper"] = objects_json(u, up);
        out += "upper: " + obj_str(u, up) + "\n";
      }
    }

    CmdResult res;
    res.out = opts.format == "json" ? dump(j) : out;
    return res;
  });
}

CmdResult cmd_laws(std::uint64_t seed, std::uint64_t cases, const CommonOpts& opts) {
  return guarded([&]() -> CmdResult {
    check_format(opts.format);
    if (cases == 0) throw ParseError("cases must be at least 1");
    laws::LawReport rep = laws::run_laws(laws::law_registry(), seed, cases, laws::GenBounds{});

    CmdResult res;
    res.code = rep.all_passed() ? 0 : 1;
    if (opts.format == "json") {
      ordered_json j;
      j["seed"] = rep.seed;
      j["cases_per_law"] = rep.cases_per_law;
      ordered_json arr = ordered_json::array();
      for (const laws::LawResult& r : rep.results) {
        ordered_json e;
        e["id"] = r.id;
        e["expected"] = r.expected == laws::Expect::HOLDS ? "holds" : "strict-witness";
        e["cases"] = r.cases;
        ordered_json fails = ordered_json::array();
        for (const laws::CaseFailure& f : r.failures) {
          ordered_json fj;
          fj["case"] = f.case_index;
          fj["instance"] = f.description;
          fails.push_back(std::move(fj));
        }
        e["failures"] = std::move(fails);
        arr.push_back(std::move(e));
      }
      j["laws"] = std::move(arr);
      j["failed"] = rep.failed_laws();
      res.out = dump(j);
    } else {
      std::string out;
      out += "seed: " + std::to_string(rep.seed) + "\n";
      out += "cases per law: " + std::to_string(rep.cases_per_law) + "\n";
      for (const laws::LawResult& r : rep.results) {
        std::string cases_note =
            r.expected == laws::Expect::HOLDS
                ? " (" + std::to_string(r.cases) + " cases)"
                : " (witness)";
        if (r.passed()) {
          out += "pass " + r.id + cases_note + "\n";
        } else {
          out += "FAIL " + r.id + cases_note + "\n";
          for (const laws::CaseFailure& f : r.failures)
            out += "  case " + std::to_string(f.case_index) + ": " + f.description + "\n";
        }
      }
      out += "laws: " + std::to_string(rep.results.size()) +
             ", failed: " + std::to_string(rep.failed_laws()) + "\n";
      res.out = out;
    }
    return res;
  });
}

CmdResult cmd_repro(const CommonOpts& opts) {
  return guarded([&]() -> CmdResult {
    check_format(opts.format);
    std::size_t failed = 0;
    ordered_json arr = ordered_json::array();
    std::string text;
    for (const fixtures::Fixture& f : fixtures::paper_fixtures()) {
      std::string diag;
      bool ok = f.run(&diag);
      if (!ok) ++failed;
      if (opts.format == "json") {
        ordered_json e;
        e["id"] = f.id;
        e["passed"] = ok;
        if (!ok) e["diagnostics"] = diag;
        arr.push_back(std::move(e));
      } else {
        text += (ok ? "pass " : "FAIL ") + f.id + "\n";
        if (!ok) text += diag;
      }
    }

    CmdResult res;
    res.code = failed ? 1 : 0;
    if (opts.format == "json") {
      ordered_json j;
      j["fixtures"] = std::move(arr);
      j["failed"] = failed;
      res.out = dump(j);
    } else {
      text += "fixtures: " + std::to_string(fixtures::paper_fixtures().size()) +
              ", failed: " + std::to_string(failed) + "\n";
      res.out = text;
    }
    return res;
  });
}

}  // namespace hfs::io
