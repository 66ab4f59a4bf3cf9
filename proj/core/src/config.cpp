#include "planelift/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace planelift {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split_list(const std::string& raw, const std::string& where) {
    std::string s = trim(raw);
    if (s.empty() || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("expected a [..] list for " + where);
    s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    else if (!out.empty() && trim(cur).empty() && !s.empty() && s.back() == ',')
        throw std::invalid_argument("trailing comma in list for " + where);
    return out;
}

}  // namespace

Config Config::parse(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
        if (cfg.data_[section].count(key))
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": duplicate key '" + key + "'");
        cfg.data_[section][key] = value;
    }
    return cfg;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto s = data_.find(section);
    return s != data_.end() && s->second.count(key);
}

bool Config::has_section(const std::string& section) const { return data_.count(section) > 0; }

std::string Config::raw(const std::string& section, const std::string& key) {
    auto s = data_.find(section);
    if (s == data_.end() || !s->second.count(key))
        throw std::invalid_argument("missing config key " +
                                    (section.empty() ? key : section + "." + key));
    consumed_.insert({section, key});
    return s->second.at(key);
}

std::string Config::get_string(const std::string& section, const std::string& key) {
    return unquote(raw(section, key));
}

std::string Config::get_string_or(const std::string& section, const std::string& key,
                                  const std::string& fallback) {
    if (!has(section, key)) return fallback;
    return get_string(section, key);
}

long Config::get_long(const std::string& section, const std::string& key) {
    std::string v = get_string(section, key);
    try {
        std::size_t used = 0;
        long out = std::stol(v, &used);
        if (used != v.size()) throw std::invalid_argument("");
        return out;
    } catch (...) {
        throw std::invalid_argument("config key " + section + "." + key +
                                    " is not an integer: " + v);
    }
}

long Config::get_long_or(const std::string& section, const std::string& key, long fallback) {
    if (!has(section, key)) return fallback;
    return get_long(section, key);
}

std::vector<long long> Config::get_int_list(const std::string& section, const std::string& key) {
    std::vector<long long> out;
    for (const auto& item : split_list(raw(section, key), section + "." + key)) {
        try {
            out.push_back(std::stoll(item));
        } catch (...) {
            throw std::invalid_argument("config key " + section + "." + key +
                                        " has a non-integer entry: " + item);
        }
    }
    return out;
}

std::vector<std::string> Config::get_string_list(const std::string& section,
                                                 const std::string& key) {
    std::vector<std::string> out;
    for (const auto& item : split_list(raw(section, key), section + "." + key))
        out.push_back(unquote(item));
    return out;
}

void Config::ensure_all_consumed() const {
    std::vector<std::string> leftovers;
    for (const auto& [section, kv] : data_)
        for (const auto& [key, value] : kv)
            if (!consumed_.count({section, key}))
                leftovers.push_back(section.empty() ? key : section + "." + key);
    if (!leftovers.empty()) {
        std::string msg = "unknown config keys:";
        for (const auto& k : leftovers) msg += " " + k;
        throw std::invalid_argument(msg);
    }
}

BraidedVectorSpace space_from_config(Config& cfg, const FieldPtr& field) {
    std::string kind = cfg.get_string("space", "kind");
    if (kind == "jordan") return make_block(Scalar(1), 2);
    if (kind == "super-jordan") return make_block(Scalar(-1), 2);
    if (kind == "block") {
        Scalar eps = parse_scalar(cfg.get_string("space", "eps"), field);
        long ell = cfg.get_long("space", "ell");
        return make_block(eps, static_cast<int>(ell));
    }
    if (kind == "block-point") {
        Scalar eps = parse_scalar(cfg.get_string("space", "eps"), field);
        Scalar q12 = parse_scalar(cfg.get_string("space", "q12"), field);
        Scalar q21 = parse_scalar(cfg.get_string("space", "q21"), field);
        Scalar q22 = parse_scalar(cfg.get_string("space", "q22"), field);
        Scalar a = parse_scalar(cfg.get_string("space", "a"), field);
        return make_block_point(eps, q12, q21, q22, a);
    }
    if (kind == "diagonal") {
        long dim = cfg.get_long("space", "dim");
        auto entries = cfg.get_string_list("space", "q");
        if (static_cast<long>(entries.size()) != dim * dim)
            throw std::invalid_argument("space.q must list dim^2 entries row-major");
        std::vector<std::vector<Scalar>> q(dim, std::vector<Scalar>(dim, Scalar(0)));
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < dim; ++j)
                q[i][j] = parse_scalar(entries[i * dim + j], field);
        return make_diagonal(q);
    }
    if (kind == "custom") {
        long dim = cfg.get_long("space", "dim");
        auto entries = cfg.get_string_list("space", "coeff");
        if (static_cast<long>(entries.size()) != dim * dim * dim * dim)
            throw std::invalid_argument("space.coeff must list dim^4 entries (i,j,k,l row-major)");
        std::vector<Scalar> coeff;
        coeff.reserve(entries.size());
        for (const auto& e : entries) coeff.push_back(parse_scalar(e, field));
        return BraidedVectorSpace(static_cast<int>(dim), std::move(coeff));
    }
    throw std::invalid_argument("unknown space.kind: " + kind);
}

YDTriple triple_from_config(Config& cfg, const FieldPtr& field) {
    YDTriple t;
    long rank = cfg.get_long("group", "free_rank");
    std::vector<long> torsion;
    if (cfg.has("group", "torsion"))
        for (long long m : cfg.get_int_list("group", "torsion")) torsion.push_back(static_cast<long>(m));
    t.group = FGAbelianGroup(static_cast<int>(rank), std::move(torsion));
    t.g = group_element(t.group, cfg.get_int_list("triple", "g"));
    for (const auto& s : cfg.get_string_list("triple", "chi"))
        t.chi.values.push_back(parse_scalar(s, field));
    for (const auto& s : cfg.get_string_list("triple", "eta"))
        t.eta.values.push_back(parse_scalar(s, field));
    if (static_cast<int>(t.chi.values.size()) != t.group.generator_count() ||
        static_cast<int>(t.eta.values.size()) != t.group.generator_count())
        throw std::invalid_argument("triple.chi / triple.eta must list one value per generator");
    return t;
}

Scalar lambda_from_config(Config& cfg, const FieldPtr& field) {
    return parse_scalar(cfg.get_string_or("triple", "lambda", "0"), field);
}

}  // namespace planelift
