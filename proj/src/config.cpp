#include "stiffshell/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "stiffshell/errors.hpp"

namespace stiffshell {

namespace {

enum class Dim { none, count, length, area, inertia, pressure, density, angle, frequency, rate, winkler, pasternak };

const std::map<std::string, double>& units(Dim dim) {
    static const std::map<Dim, std::map<std::string, double>> table{
        {Dim::none, {}},
        {Dim::count, {}},
        {Dim::length, {{"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}}},
        {Dim::area, {{"m2", 1.0}, {"cm2", 1e-4}, {"mm2", 1e-6}, {"m^2", 1.0}, {"cm^2", 1e-4}, {"mm^2", 1e-6}}},
        {Dim::inertia, {{"m4", 1.0}, {"cm4", 1e-8}, {"mm4", 1e-12}, {"m^4", 1.0}, {"cm^4", 1e-8}, {"mm^4", 1e-12}}},
        {Dim::pressure,
         {{"Pa", 1.0}, {"kPa", 1e3}, {"MPa", 1e6}, {"GPa", 1e9}, {"N/m2", 1.0}, {"N/m^2", 1.0}, {"kN/m2", 1e3},
          {"N/mm2", 1e6}, {"N/mm^2", 1e6}}},
        {Dim::density, {{"kg/m3", 1.0}, {"kg/m^3", 1.0}, {"g/cm3", 1e3}, {"g/cm^3", 1e3}}},
        {Dim::angle, {{"rad", 1.0}, {"deg", pi / 180.0}}},
        {Dim::frequency, {{"rad/s", 1.0}, {"1/s", 1.0}}},
        {Dim::rate, {{"1/s", 1.0}}},
        {Dim::winkler, {{"N/m3", 1.0}, {"N/m^3", 1.0}, {"kN/m3", 1e3}, {"MN/m3", 1e6}}},
        {Dim::pasternak, {{"N/m", 1.0}, {"kN/m", 1e3}}},
    };
    return table.at(dim);
}

const char* si_unit(Dim dim) {
    switch (dim) {
        case Dim::length: return "m";
        case Dim::area: return "m2";
        case Dim::inertia: return "m4";
        case Dim::pressure: return "Pa";
        case Dim::density: return "kg/m3";
        case Dim::angle: return "rad";
        case Dim::frequency: return "rad/s";
        case Dim::rate: return "1/s";
        case Dim::winkler: return "N/m3";
        case Dim::pasternak: return "N/m";
        default: return "";
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

struct Section {
    int line = 0;
    std::map<std::string, Entry> entries;
};

const std::vector<std::string> known_sections{"geometry", "material", "rods",   "rings",  "foundation",
                                              "damage",   "loading",  "search", "sweep",  "output"};

std::map<std::string, Section> tokenize(const std::string& text) {
    std::map<std::string, Section> doc;
    std::istringstream in(text);
    std::string raw;
    Section* current = nullptr;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        const std::string where = "line " + std::to_string(line) + ": ";
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigParseError(where + "unterminated section header");
            const std::string name = trim(s.substr(1, s.size() - 2));
            bool known = false;
            for (const auto& k : known_sections) known = known || k == name;
            if (!known) throw ConfigParseError(where + "unknown section [" + name + "]");
            if (doc.count(name)) throw ConfigParseError(where + "duplicate section [" + name + "]");
            current = &doc[name];
            current->line = line;
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigParseError(where + "expected key = value");
        if (!current) throw ConfigParseError(where + "key outside of any section");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigParseError(where + "empty key");
        if (value.empty()) throw ConfigParseError(where + "empty value for '" + key + "'");
        if (current->entries.count(key)) throw ConfigParseError(where + "duplicate key '" + key + "'");
        current->entries[key] = Entry{value, line, false};
    }
    return doc;
}

double parse_number(const std::string& token, const std::string& where) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = first + token.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || token.empty()) throw ConfigParseError(where + "not a number: '" + token + "'");
    if (!std::isfinite(v)) throw ConfigParseError(where + "value must be finite");
    return v;
}

// A value is "x1, x2, ... xn [unit]"; the unit applies to every element.
std::vector<double> parse_values(const Entry& e, Dim dim, const std::string& where) {
    std::string body = e.value;
    std::string unit;
    const auto last_comma = body.rfind(',');
    const std::size_t tail_start = last_comma == std::string::npos ? 0 : last_comma + 1;
    const std::string tail = trim(body.substr(tail_start));
    const auto space = tail.find_first_of(" \t");
    if (space != std::string::npos) {
        unit = trim(tail.substr(space));
        body = body.substr(0, tail_start) + tail.substr(0, space);
    }
    double scale = 1.0;
    if (dim == Dim::none || dim == Dim::count) {
        if (!unit.empty()) throw ConfigParseError(where + "dimensionless value takes no unit, got '" + unit + "'");
    } else {
        if (unit.empty()) {
            throw ConfigParseError(where + "missing unit (expected e.g. '" + std::string(si_unit(dim)) + "')");
        }
        const auto& table = units(dim);
        const auto it = table.find(unit);
        if (it == table.end()) throw ConfigParseError(where + "unit '" + unit + "' not valid here");
        scale = it->second;
    }
    std::vector<double> out;
    std::istringstream in(body);
    std::string token;
    while (std::getline(in, token, ',')) out.push_back(parse_number(trim(token), where) * scale);
    if (out.empty()) throw ConfigParseError(where + "no value");
    return out;
}

int to_int(double v, const std::string& where) {
    if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigParseError(where + "expected an integer");
    return static_cast<int>(v);
}

class Reader {
public:
    Reader(std::map<std::string, Section>& doc, std::string section) : name_(std::move(section)) {
        const auto it = doc.find(name_);
        section_ = it == doc.end() ? nullptr : &it->second;
    }

    bool present() const { return section_ != nullptr; }

    bool has(const std::string& key) const { return section_ && section_->entries.count(key); }

    std::vector<double> list(const std::string& key, Dim dim) {
        Entry& e = entry(key);
        return parse_values(e, dim, where(e, key));
    }

    double quantity(const std::string& key, Dim dim, const char* symbol = nullptr) {
        if (!has(key)) {
            ValidationError err(std::string("required key missing") + (symbol ? std::string(" (") + symbol + ")" : ""));
            err.set_field(name_ + "." + key);
            throw err;
        }
        Entry& e = entry(key);
        const auto v = parse_values(e, dim, where(e, key));
        if (v.size() != 1) throw ConfigParseError(where(e, key) + "expected a single value");
        return v.front();
    }

    double quantity_or(const std::string& key, Dim dim, double fallback) {
        return has(key) ? quantity(key, dim) : fallback;
    }

    int integer_or(const std::string& key, int fallback) {
        if (!has(key)) return fallback;
        Entry& e = entry(key);
        return to_int(quantity(key, Dim::count), where(e, key));
    }

    std::string text_or(const std::string& key, const std::string& fallback) {
        return has(key) ? entry(key).value : fallback;
    }

    std::string where(const std::string& key) { return where(entry(key), key); }

    void reject_unused() const {
        if (!section_) return;
        for (const auto& [key, e] : section_->entries) {
            if (!e.used) {
                throw ConfigParseError("line " + std::to_string(e.line) + ": unknown key '" + key + "' in [" + name_ +
                                       "]");
            }
        }
    }

private:
    Entry& entry(const std::string& key) {
        Entry& e = section_->entries.at(key);
        e.used = true;
        return e;
    }

    std::string where(const Entry& e, const std::string& key) const {
        return "line " + std::to_string(e.line) + ": " + name_ + "." + key + ": ";
    }

    std::string name_;
    Section* section_ = nullptr;
};

template <class F>
auto with_field(const std::string& field, F&& make) {
    try {
        return make();
    } catch (Error& e) {
        e.set_field(e.field().empty() ? field : field + "." + e.field());
        throw;
    }
}

InhomogeneityLaw read_law(Reader& r, const std::string& section, const std::string& key, double span) {
    const std::string slope_key = key + "_slope";
    if (!r.has(key)) {
        if (r.has(slope_key)) {
            ValidationError err("slope given without a base value");
            err.set_field(section + "." + key);
            throw err;
        }
        return {};
    }
    const double base = r.quantity(key, key == "density" ? Dim::density : Dim::pressure);
    const double slope = r.quantity_or(slope_key, Dim::none, 0.0);
    return with_field(section + "." + key, [&] { return InhomogeneityLaw(base, slope, span); });
}

Dim sweep_dim(SweepParameter p) {
    switch (p) {
        case SweepParameter::ring_count: return Dim::count;
        case SweepParameter::winkler: return Dim::winkler;
        case SweepParameter::pasternak: return Dim::pasternak;
        default: return Dim::none;
    }
}

}  // namespace

const char* to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::none: return "none";
        case SweepParameter::ring_count: return "ring_count";
        case SweepParameter::sigma: return "sigma";
        case SweepParameter::tau: return "tau";
        case SweepParameter::modulus_ratio: return "modulus_ratio";
        case SweepParameter::winkler: return "winkler";
        case SweepParameter::pasternak: return "pasternak";
        case SweepParameter::gamma: return "gamma";
        case SweepParameter::rheologic: return "R_l";
    }
    return "none";
}

SweepParameter parse_sweep_parameter(const std::string& name) {
    for (auto p : {SweepParameter::ring_count, SweepParameter::sigma, SweepParameter::tau, SweepParameter::modulus_ratio,
                   SweepParameter::winkler, SweepParameter::pasternak, SweepParameter::gamma, SweepParameter::rheologic}) {
        if (name == to_string(p)) return p;
    }
    throw ConfigParseError("unknown sweep parameter '" + name +
                           "' (expected ring_count, sigma, tau, modulus_ratio, winkler, pasternak, gamma or R_l)");
}

RunConfig parse_config(const std::string& text) {
    auto doc = tokenize(text);
    RunConfig out;
    ShellConfig& c = out.shell;

    Reader geo(doc, "geometry");
    c.geometry.radius = geo.quantity("radius", Dim::length, "R");
    c.geometry.length = geo.quantity("length", Dim::length, "l");
    c.geometry.thickness = geo.quantity("thickness", Dim::length, "h");

    Reader mat(doc, "material");
    c.material.e1 = mat.quantity("e1", Dim::pressure, "E1");
    c.material.nu1 = mat.quantity("nu1", Dim::none, "nu1");
    c.material.nu2 = mat.quantity("nu2", Dim::none, "nu2");
    // E2 may be left to reciprocity, nu2 E1 = nu1 E2.
    c.material.e2 = mat.has("e2") || c.material.nu1 == 0.0 ? mat.quantity("e2", Dim::pressure, "E2")
                                                          : c.material.e1 * c.material.nu2 / c.material.nu1;
    c.material.shear = mat.quantity("shear", Dim::pressure, "G");
    c.material.density = mat.quantity("density", Dim::density, "rho0");

    // Laws need a valid span; geometry is checked first so the error points there.
    with_field("geometry", [&] { validate(c.geometry); return 0; });
    const double length = c.geometry.length;

    Reader rods(doc, "rods");
    c.rods.count = rods.integer_or("count", 0);
    c.rods.area = rods.quantity_or("area", Dim::area, 0.0);
    c.rods.inertia_y = rods.quantity_or("inertia_y", Dim::inertia, 0.0);
    c.rods.inertia_z = rods.quantity_or("inertia_z", Dim::inertia, 0.0);
    c.rods.torsion = rods.quantity_or("torsion", Dim::inertia, 0.0);
    c.rods.modulus = read_law(rods, "rods", "modulus", length);
    c.rods.shear = read_law(rods, "rods", "shear", length);
    c.rods.density = read_law(rods, "rods", "density", length);
    if (rods.has("positions")) c.rods.positions = rods.list("positions", Dim::angle);

    Reader rings(doc, "rings");
    c.rings.count = rings.integer_or("count", 0);
    c.rings.area = rings.quantity_or("area", Dim::area, 0.0);
    c.rings.inertia_z = rings.quantity_or("inertia_z", Dim::inertia, 0.0);
    c.rings.inertia_x = rings.quantity_or("inertia_x", Dim::inertia, 0.0);
    c.rings.torsion = rings.quantity_or("torsion", Dim::inertia, 0.0);
    c.rings.modulus = read_law(rings, "rings", "modulus", 2.0 * pi);
    c.rings.shear = read_law(rings, "rings", "shear", 2.0 * pi);
    c.rings.density = read_law(rings, "rings", "density", 2.0 * pi);
    if (rings.has("positions")) c.rings.positions = rings.list("positions", Dim::length);

    Reader fnd(doc, "foundation");
    c.foundation.winkler = fnd.quantity_or("winkler", Dim::winkler, 0.0);
    c.foundation.pasternak = fnd.quantity_or("pasternak", Dim::pasternak, 0.0);
    c.foundation.kernel_amplitude = fnd.quantity_or("kernel_amplitude", Dim::none, 0.0);
    c.foundation.kernel_decay = fnd.quantity_or("kernel_decay", Dim::rate, 0.0);

    Reader dmg(doc, "damage");
    c.damage.gamma = dmg.quantity_or("gamma", Dim::none, 0.0);
    c.damage.recovery = dmg.quantity_or("recovery", Dim::none, 1.0);
    c.damage.rheologic = dmg.quantity_or("R_l", Dim::none, 0.0);
    c.damage.cycles = dmg.integer_or("cycles", 1);
    for (int i = 0; i < damage_table_size; ++i) {
        c.damage.table[i] = dmg.quantity_or("t" + std::to_string(i + 1), Dim::none, 0.0);
    }

    Reader load(doc, "loading");
    c.loading.p0 = load.quantity_or("p0", Dim::pressure, 0.0);
    c.loading.p1 = load.quantity_or("p1", Dim::pressure, 0.0);
    c.loading.omega = load.quantity("omega", Dim::frequency, "omega");
    c.loading.omega1 = load.quantity_or("omega1", Dim::frequency, 2.0 * c.loading.omega);
    c.loading.w0_target = load.quantity("w0_target", Dim::length, "w0");

    Reader search(doc, "search");
    out.search.n_min = search.integer_or("n_min", out.search.n_min);
    out.search.n_max = search.integer_or("n_max", out.search.n_max);
    if (search.has("m_values")) {
        const std::string where = search.where("m_values");
        out.search.m_values.clear();
        for (double v : search.list("m_values", Dim::count)) out.search.m_values.push_back(to_int(v, where));
    }

    Reader sweep(doc, "sweep");
    if (sweep.has("parameter")) {
        const std::string where = sweep.where("parameter");
        try {
            out.sweep.parameter = parse_sweep_parameter(sweep.text_or("parameter", ""));
        } catch (const ConfigParseError& e) {
            throw ConfigParseError(where + e.message());
        }
    }
    if (sweep.has("values")) out.sweep.values = sweep.list("values", sweep_dim(out.sweep.parameter));

    Reader output(doc, "output");
    out.output.csv = output.text_or("csv", "");
    out.output.plot_script = output.text_or("plot_script", "");
    out.output.report = output.text_or("report", "");

    for (Reader* r : {&geo, &mat, &rods, &rings, &fnd, &dmg, &load, &search, &sweep, &output}) r->reject_unused();

    validate(out);
    return out;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigParseError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void validate(const RunConfig& config) {
    validate(config.shell);
    with_field("search", [&] { validate(config.search); return 0; });
    const SweepSpec& s = config.sweep;
    auto fail = [](const std::string& msg) {
        ValidationError e(msg);
        e.set_field("sweep.values");
        throw e;
    };
    if (s.parameter == SweepParameter::none) {
        if (!s.values.empty()) fail("values given without a sweep parameter");
        return;
    }
    if (s.values.empty()) fail("sweep needs at least one value");
    for (double v : s.values) {
        if (!std::isfinite(v)) fail("sweep values must be finite");
        if (s.parameter == SweepParameter::ring_count && (v < 0.0 || v != std::floor(v))) {
            fail("ring_count values must be non-negative integers");
        }
    }
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class Writer {
public:
    void section(const char* name) {
        if (!out_.str().empty()) out_ << '\n';
        out_ << '[' << name << "]\n";
    }
    void value(const char* key, double v, Dim dim) {
        out_ << key << " = " << fmt(v);
        if (*si_unit(dim)) out_ << ' ' << si_unit(dim);
        out_ << '\n';
    }
    void integer(const char* key, long v) { out_ << key << " = " << v << '\n'; }
    void text(const char* key, const std::string& v) {
        if (!v.empty()) out_ << key << " = " << v << '\n';
    }
    void list(const char* key, const std::vector<double>& v, Dim dim) {
        if (v.empty()) return;
        out_ << key << " = ";
        for (std::size_t i = 0; i < v.size(); ++i) out_ << (i ? ", " : "") << fmt(v[i]);
        if (*si_unit(dim)) out_ << ' ' << si_unit(dim);
        out_ << '\n';
    }
    void law(const std::string& key, const InhomogeneityLaw& law, Dim dim) {
        if (law == InhomogeneityLaw()) return;
        value(key.c_str(), law.base(), dim);
        value((key + "_slope").c_str(), law.slope(), Dim::none);
    }
    std::string str() const { return out_.str(); }

private:
    std::ostringstream out_;
};

}  // namespace

std::string echo_config(const RunConfig& config) {
    const ShellConfig& c = config.shell;
    Writer w;
    w.section("geometry");
    w.value("radius", c.geometry.radius, Dim::length);
    w.value("length", c.geometry.length, Dim::length);
    w.value("thickness", c.geometry.thickness, Dim::length);

    w.section("material");
    w.value("e1", c.material.e1, Dim::pressure);
    w.value("e2", c.material.e2, Dim::pressure);
    w.value("nu1", c.material.nu1, Dim::none);
    w.value("nu2", c.material.nu2, Dim::none);
    w.value("shear", c.material.shear, Dim::pressure);
    w.value("density", c.material.density, Dim::density);

    w.section("rods");
    w.integer("count", c.rods.count);
    w.value("area", c.rods.area, Dim::area);
    w.value("inertia_y", c.rods.inertia_y, Dim::inertia);
    w.value("inertia_z", c.rods.inertia_z, Dim::inertia);
    w.value("torsion", c.rods.torsion, Dim::inertia);
    w.law("modulus", c.rods.modulus, Dim::pressure);
    w.law("shear", c.rods.shear, Dim::pressure);
    w.law("density", c.rods.density, Dim::density);
    w.list("positions", c.rods.positions, Dim::angle);

    w.section("rings");
    w.integer("count", c.rings.count);
    w.value("area", c.rings.area, Dim::area);
    w.value("inertia_z", c.rings.inertia_z, Dim::inertia);
    w.value("inertia_x", c.rings.inertia_x, Dim::inertia);
    w.value("torsion", c.rings.torsion, Dim::inertia);
    w.law("modulus", c.rings.modulus, Dim::pressure);
    w.law("shear", c.rings.shear, Dim::pressure);
    w.law("density", c.rings.density, Dim::density);
    w.list("positions", c.rings.positions, Dim::length);

    w.section("foundation");
    w.value("winkler", c.foundation.winkler, Dim::winkler);
    w.value("pasternak", c.foundation.pasternak, Dim::pasternak);
    w.value("kernel_amplitude", c.foundation.kernel_amplitude, Dim::none);
    w.value("kernel_decay", c.foundation.kernel_decay, Dim::rate);

    w.section("damage");
    w.value("gamma", c.damage.gamma, Dim::none);
    w.value("recovery", c.damage.recovery, Dim::none);
    w.value("R_l", c.damage.rheologic, Dim::none);
    w.integer("cycles", c.damage.cycles);
    for (int i = 0; i < damage_table_size; ++i) {
        w.value(("t" + std::to_string(i + 1)).c_str(), c.damage.table[i], Dim::none);
    }

    w.section("loading");
    w.value("p0", c.loading.p0, Dim::pressure);
    w.value("p1", c.loading.p1, Dim::pressure);
    w.value("omega", c.loading.omega, Dim::frequency);
    w.value("omega1", c.loading.omega1, Dim::frequency);
    w.value("w0_target", c.loading.w0_target, Dim::length);

    w.section("search");
    w.integer("n_min", config.search.n_min);
    w.integer("n_max", config.search.n_max);
    std::vector<double> ms(config.search.m_values.begin(), config.search.m_values.end());
    w.list("m_values", ms, Dim::count);

    if (config.sweep.parameter != SweepParameter::none) {
        w.section("sweep");
        w.text("parameter", to_string(config.sweep.parameter));
        w.list("values", config.sweep.values, sweep_dim(config.sweep.parameter));
    }

    const OutputPaths& o = config.output;
    if (!o.csv.empty() || !o.plot_script.empty() || !o.report.empty()) {
        w.section("output");
        w.text("csv", o.csv);
        w.text("plot_script", o.plot_script);
        w.text("report", o.report);
    }
    return w.str();
}

}  // namespace stiffshell
