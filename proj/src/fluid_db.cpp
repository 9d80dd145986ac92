#include "vleq/fluid_db.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace vleq {

namespace {

constexpr double BAR = 1e5;  // Pa

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
    const auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

double parse_number(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (trim(tok.substr(used)).empty()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("not a number: '" + tok + "'", line);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

// shortest round-trip decimal representation
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

ComponentDb load_component_db(std::istream& source) {
    ComponentDb db;
    std::string raw;
    int lineno = 0;
    while (std::getline(source, raw)) {
        ++lineno;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.rfind("nasa ", 0) == 0 || line == "nasa") {
            std::istringstream head(line);
            std::string kw, name;
            double tlo = 0.0, tmid = 0.0, thi = 0.0;
            head >> kw >> name >> tlo >> tmid >> thi;
            if (head.fail() || name.empty())
                throw ParseError("malformed nasa header", lineno);
            const auto it = db.find(name);
            if (it == db.end())
                throw ParseError("nasa block for unknown component '" + name + "'", lineno);
            NasaRecord rec;
            rec.t_low = tlo;
            rec.t_mid = tmid;
            rec.t_high = thi;
            if (!(tlo < tmid && tmid < thi))
                throw ParseError("nasa ranges must satisfy Tlow < Tmid < Thigh", lineno);
            if (tlo > 200.0 || thi < 1000.0)
                throw ParseError("nasa ranges must cover [200 K, 1000 K]", lineno);
            for (int r = 0; r < 2; ++r) {
                std::string coefline;
                do {
                    if (!std::getline(source, coefline))
                        throw ParseError("unexpected end of nasa block", lineno);
                    ++lineno;
                    coefline = trim(strip_comment(coefline));
                } while (coefline.empty());
                std::istringstream cs(coefline);
                for (int k = 0; k < 9; ++k) {
                    if (!(cs >> rec.coef[r][k]))
                        throw ParseError("expected 9 coefficients", lineno);
                }
            }
            it->second.nasa = rec;
            continue;
        }

        const auto fields = split(line, ',');
        if (fields.size() != 4)
            throw ParseError("expected 'name, Tc, pc, omega'", lineno);
        Component c;
        c.name = fields[0];
        if (c.name.empty()) throw ParseError("missing component name", lineno);
        c.tc = parse_number(fields[1], lineno);
        c.pc = parse_number(fields[2], lineno) * BAR;
        c.omega = parse_number(fields[3], lineno);
        if (!(c.tc > 0.0)) throw ParseError("non-physical Tc for " + c.name, lineno);
        if (!(c.pc > 0.0)) throw ParseError("non-physical pc for " + c.name, lineno);
        if (db.count(c.name)) throw ParseError("duplicate component '" + c.name + "'", lineno);
        db.emplace(c.name, std::move(c));
    }
    return db;
}

ComponentDb load_component_db_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open component db: " + path);
    return load_component_db(in);
}

void Mixture::validate() const {
    const std::size_t n = size();
    if (n < 2) throw std::invalid_argument("mixture needs at least 2 components");
    if (z_hat.size() != n || kappa.size() != n * n)
        throw std::invalid_argument("mixture: inconsistent array sizes");
    double sum = 0.0;
    for (double z : z_hat) {
        if (!(z > 0.0)) throw std::invalid_argument("mixture: mole fractions must be positive");
        sum += z;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("mixture: mole fractions must sum to 1");
    for (std::size_t i = 0; i < n; ++i) {
        if (kappa_at(i, i) != 0.0) throw std::invalid_argument("mixture: kappa diagonal must be 0");
        for (std::size_t j = i + 1; j < n; ++j)
            if (kappa_at(i, j) != kappa_at(j, i))
                throw std::invalid_argument("mixture: kappa must be symmetric");
    }
}

Mixture parse_mixture_spec(std::istream& source, const ComponentDb& db, bool normalize) {
    Mixture mix;
    std::vector<std::pair<std::string, double>> comps;
    std::vector<std::tuple<std::string, std::string, double>> kappas;
    std::string section;
    std::string raw;
    int lineno = 0;
    bool eos_seen = false;

    while (std::getline(source, raw)) {
        ++lineno;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("malformed section header", lineno);
            section = line.substr(1, line.size() - 2);
            if (section != "components" && section != "kappa" && section != "eos")
                throw ParseError("unknown section [" + section + "]", lineno);
            continue;
        }
        if (section == "components") {
            const auto kv = split(line, '=');
            if (kv.size() != 2) throw ParseError("expected 'name = fraction'", lineno);
            if (!db.count(kv[0])) throw ParseError("unknown component '" + kv[0] + "'", lineno);
            comps.emplace_back(kv[0], parse_number(kv[1], lineno));
        } else if (section == "kappa") {
            const auto kv = split(line, '=');
            if (kv.size() != 2) throw ParseError("expected 'name,name = value'", lineno);
            const auto pair = split(kv[0], ',');
            if (pair.size() != 2) throw ParseError("expected 'name,name = value'", lineno);
            kappas.emplace_back(pair[0], pair[1], parse_number(kv[1], lineno));
        } else if (section == "eos") {
            if (line == "pr")
                mix.eos = EosSpec::peng_robinson();
            else if (line == "srk")
                mix.eos = EosSpec::soave_redlich_kwong();
            else
                throw ParseError("unknown eos '" + line + "' (expected pr or srk)", lineno);
            eos_seen = true;
        } else {
            throw ParseError("content outside any section", lineno);
        }
    }
    if (!eos_seen) mix.eos = EosSpec::peng_robinson();
    if (comps.size() < 2) throw ParseError("mixture needs at least 2 components", 0);

    double sum = 0.0;
    for (const auto& [name, z] : comps) {
        if (!(z > 0.0)) throw ParseError("mole fraction of " + name + " must be positive", 0);
        sum += z;
    }
    if (!normalize && std::abs(sum - 1.0) > 1e-8)
        throw ParseError("mole fractions sum to " + format_double(sum) + ", not 1", 0);
    if (std::abs(sum - 1.0) > 1e-12)
        for (auto& [name, z] : comps) z /= sum;

    const std::size_t n = comps.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& name = comps[i].first;
        if (index.count(name)) throw ParseError("component '" + name + "' listed twice", 0);
        index[name] = i;
        mix.components.push_back(db.at(name));
        mix.z_hat.push_back(comps[i].second);
    }
    mix.kappa.assign(n * n, 0.0);
    for (const auto& [a, b, v] : kappas) {
        const auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw ParseError("kappa references unknown component '" + a + "'", 0);
        if (ib == index.end()) throw ParseError("kappa references unknown component '" + b + "'", 0);
        if (ia->second == ib->second)
            throw ParseError("kappa diagonal entry for '" + a + "' must be absent", 0);
        const std::size_t i = ia->second, j = ib->second;
        const double existing = mix.kappa[i * n + j];
        if (existing != 0.0 && existing != v)
            throw ParseError("asymmetric kappa for " + a + "," + b, 0);
        mix.kappa[i * n + j] = v;
        mix.kappa[j * n + i] = v;
    }
    mix.validate();
    return mix;
}

Mixture parse_mixture_spec_file(const std::string& path, const ComponentDb& db, bool normalize) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mixture spec: " + path);
    return parse_mixture_spec(in, db, normalize);
}

std::string serialize_mixture_spec(const Mixture& mix) {
    std::ostringstream out;
    out << "[components]\n";
    const std::size_t n = mix.size();
    for (std::size_t i = 0; i < n; ++i)
        out << mix.components[i].name << " = " << format_double(mix.z_hat[i]) << "\n";
    out << "[kappa]\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (mix.kappa_at(i, j) != 0.0)
                out << mix.components[i].name << "," << mix.components[j].name << " = "
                    << format_double(mix.kappa_at(i, j)) << "\n";
    out << "[eos]\n";
    out << (mix.eos.alpha_form == EosSpec::AlphaForm::PengRobinson ? "pr" : "srk") << "\n";
    return out.str();
}

}  // namespace vleq
