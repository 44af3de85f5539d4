#include <moead/harness.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <yaml-cpp/yaml.h>

#include <moead/errors.hpp>

namespace moead
{

std::size_t default_population_size(std::size_t m)
{
    switch (m) {
        case 2:
            return 100;
        case 3:
            return 190;
        case 5:
            return 210;
        default:
            throw config_error("no default population size for m = " + std::to_string(m) + "; set N explicitly");
    }
}

std::size_t default_budget(problem_family family, std::size_t m)
{
    if (is_zdt(family)) {
        return 25000;
    }
    if (is_dtlz(family)) {
        return 100000;
    }
    return m <= 2 ? 200000 : 400000;
}

std::size_t default_t_mating(std::size_t population_size)
{
    return std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(0.1 * static_cast<double>(population_size))));
}

std::size_t default_t_replacement(std::size_t population_size)
{
    return (population_size + 19) / 20;
}

namespace
{

const std::set<std::string> top_level_keys{"problem", "problems",  "m",           "algorithm",   "algorithms",
                                           "p",       "scalarizer", "N",          "T_m",         "T_r",
                                           "budget",  "runs",       "seed",       "instance_seed", "workers",
                                           "checkpoints", "reference", "output",      "fronts",
                                           "operators"};

const std::set<std::string> problem_keys{"name", "m", "N", "T_m", "T_r", "budget", "instance"};
const std::set<std::string> algorithm_keys{"name", "p", "scalarizer"};
const std::set<std::string> operator_keys{"crossover_rate", "crossover_eta",        "exchange_rate",
                                          "mutation_rate",  "mutation_eta",         "binary_crossover_rate",
                                          "bitflip_rate",   "order_crossover_rate", "inversion_rate"};

void check_keys(const YAML::Node &node, const std::set<std::string> &allowed, const std::string &where)
{
    for (const auto &kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!allowed.contains(key)) {
            throw config_error("unknown key '" + key + "' in " + where);
        }
    }
}

template <typename T>
T get(const YAML::Node &node, const std::string &key)
{
    try {
        return node.as<T>();
    } catch (const YAML::Exception &) {
        throw config_error("invalid value '" + YAML::Dump(node) + "' for " + key);
    }
}

std::size_t get_count(const YAML::Node &node, const std::string &key)
{
    const auto v = get<long long>(node, key);
    if (v < 0) {
        throw config_error(key + " must be non-negative");
    }
    return static_cast<std::size_t>(v);
}

double get_exponent(const YAML::Node &node)
{
    auto token = get<std::string>(node, "p");
    if (token == ".inf" || token == ".Inf" || token == ".INF") {
        token = "inf";
    }
    try {
        return parse_exponent(token);
    } catch (const parameter_error &) {
        throw config_error("invalid exponent '" + token + "'");
    }
}

// Scalar or sequence, as a list.
std::vector<YAML::Node> as_list(const YAML::Node &node)
{
    std::vector<YAML::Node> out;
    if (!node) {
        return out;
    }
    if (node.IsSequence()) {
        for (const auto &item : node) {
            out.push_back(item);
        }
    } else if (node.IsDefined() && !node.IsNull()) {
        out.push_back(node);
    }
    return out;
}

void apply_override(YAML::Node &root, const std::string &entry)
{
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw config_error("override '" + entry + "' is not of the form key=value");
    }
    const std::string key = entry.substr(0, eq);
    YAML::Node value;
    try {
        value = YAML::Load(entry.substr(eq + 1));
    } catch (const YAML::Exception &e) {
        throw config_error("cannot parse override '" + entry + "': " + e.what());
    }
    const auto dot = key.find('.');
    if (dot == std::string::npos) {
        root[key] = value;
    } else {
        YAML::Node section = root[key.substr(0, dot)];
        section[key.substr(dot + 1)] = value;
    }
}

void parse_operators(const YAML::Node &node, operator_params &ops)
{
    check_keys(node, operator_keys, "operators");
    auto set = [&](const char *key, double &target) {
        if (node[key]) {
            target = get<double>(node[key], key);
        }
    };
    set("crossover_rate", ops.real.crossover_rate);
    set("crossover_eta", ops.real.crossover_eta);
    set("exchange_rate", ops.real.exchange_rate);
    set("mutation_rate", ops.real.mutation_rate);
    set("mutation_eta", ops.real.mutation_eta);
    set("binary_crossover_rate", ops.binary.crossover_rate);
    set("bitflip_rate", ops.binary.mutation_rate);
    set("order_crossover_rate", ops.perm.crossover_rate);
    set("inversion_rate", ops.perm.mutation_rate);
    try {
        ops.validate();
    } catch (const parameter_error &e) {
        throw config_error(e.what());
    }
}

problem_family problem_token(const std::string &token)
{
    try {
        return parse_problem_family(token);
    } catch (const std::invalid_argument &) {
        throw config_error("unknown problem '" + token + "'");
    }
}

std::size_t optional_count(const YAML::Node &local, const YAML::Node &global, const std::string &key,
                           std::size_t fallback)
{
    if (local.IsMap() && local[key]) {
        return get_count(local[key], key);
    }
    if (global[key]) {
        return get_count(global[key], key);
    }
    return fallback;
}

std::vector<problem_setting> parse_problems(const YAML::Node &root, std::uint64_t instance_seed)
{
    if (root["problem"] && root["problems"]) {
        throw config_error("give either 'problem' or 'problems', not both");
    }
    const auto entries = as_list(root["problems"] ? root["problems"] : root["problem"]);
    if (entries.empty()) {
        throw config_error("no problem given");
    }
    std::vector<std::size_t> default_ms;
    for (const auto &m : as_list(root["m"])) {
        default_ms.push_back(get_count(m, "m"));
    }
    std::vector<problem_setting> out;
    for (const auto &entry : entries) {
        std::string name;
        std::vector<std::size_t> ms = default_ms;
        if (entry.IsMap()) {
            check_keys(entry, problem_keys, "problem entry");
            if (!entry["name"]) {
                throw config_error("problem entry without a name");
            }
            name = get<std::string>(entry["name"], "problem name");
            if (entry["m"]) {
                ms.clear();
                for (const auto &m : as_list(entry["m"])) {
                    ms.push_back(get_count(m, "m"));
                }
            }
        } else {
            name = get<std::string>(entry, "problem");
        }
        if (ms.empty()) {
            ms.push_back(2);
        }
        const auto family = problem_token(name);
        for (std::size_t m : ms) {
            problem_setting s;
            s.spec = make_spec(family, m, instance_seed);
            const bool explicit_n = (entry.IsMap() && entry["N"]) || root["N"];
            s.population_size = optional_count(entry, root, "N", explicit_n ? 0 : default_population_size(m));
            if (!lattice_divisions_for(m, s.population_size)) {
                const auto [lo, hi] = nearest_lattice_sizes(m, s.population_size);
                throw config_error("N = " + std::to_string(s.population_size) + " is not a simplex-lattice size for m = "
                                   + std::to_string(m) + "; nearest feasible sizes are " + std::to_string(lo)
                                   + " and " + std::to_string(hi));
            }
            s.t_mating = optional_count(entry, root, "T_m", default_t_mating(s.population_size));
            s.t_replacement = optional_count(entry, root, "T_r", default_t_replacement(s.population_size));
            if (s.t_mating < 2 || s.t_mating > s.population_size) {
                throw config_error("T_m must lie in [2, N]");
            }
            if (s.t_replacement < 1 || s.t_replacement > s.population_size) {
                throw config_error("T_r must lie in [1, N]");
            }
            s.max_evaluations = optional_count(entry, root, "budget", default_budget(family, m));
            if (s.max_evaluations < s.population_size) {
                throw config_error("budget smaller than N");
            }
            if (entry.IsMap() && entry["instance"]) {
                if (!is_combinatorial(family)) {
                    throw config_error("'instance' only applies to MOKP and MOTSP");
                }
                s.instance_file = get<std::string>(entry["instance"], "instance");
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<algorithm_variant> parse_algorithms(const YAML::Node &root)
{
    if (root["algorithm"] && root["algorithms"]) {
        throw config_error("give either 'algorithm' or 'algorithms', not both");
    }
    auto entries = as_list(root["algorithms"] ? root["algorithms"] : root["algorithm"]);
    if (entries.empty()) {
        throw config_error("no algorithm given");
    }
    std::vector<double> default_ps;
    for (const auto &p : as_list(root["p"])) {
        default_ps.push_back(get_exponent(p));
    }
    if (default_ps.empty()) {
        default_ps.push_back(1.0);
    }
    std::optional<scalarizer_family> global_family;
    auto family_token = [](const YAML::Node &node) {
        const auto token = get<std::string>(node, "scalarizer");
        try {
            return parse_family(token);
        } catch (const std::invalid_argument &) {
            throw config_error("unknown scalarizer '" + token + "'");
        }
    };
    if (root["scalarizer"]) {
        global_family = family_token(root["scalarizer"]);
    }
    // p is the outer loop so that one sweep lists every algorithm at each p.
    std::vector<algorithm_variant> variants;
    for (double p : default_ps) {
        for (const auto &entry : entries) {
            std::string name;
            std::vector<double> ps{p};
            std::optional<scalarizer_family> family = global_family;
            if (entry.IsMap()) {
                check_keys(entry, algorithm_keys, "algorithm entry");
                if (!entry["name"]) {
                    throw config_error("algorithm entry without a name");
                }
                name = get<std::string>(entry["name"], "algorithm name");
                if (entry["p"]) {
                    if (p != default_ps.front()) {
                        continue; // entries with their own p are expanded once
                    }
                    ps.clear();
                    for (const auto &v : as_list(entry["p"])) {
                        ps.push_back(get_exponent(v));
                    }
                }
                if (entry["scalarizer"]) {
                    family = family_token(entry["scalarizer"]);
                }
            } else {
                name = get<std::string>(entry, "algorithm");
            }
            const auto strategy = parse_strategy(name);
            for (double q : ps) {
                auto v = make_variant(strategy, q);
                if (family) {
                    v.scal = scalarizer(*family, q);
                }
                variants.push_back(v);
            }
        }
    }
    return variants;
}

experiment_config resolve(YAML::Node root, const override_list &overrides)
{
    if (!root.IsDefined() || root.IsNull()) {
        root = YAML::Node(YAML::NodeType::Map);
    }
    if (!root.IsMap()) {
        throw config_error("config must be a mapping of keys to values");
    }
    for (const auto &o : overrides) {
        apply_override(root, o);
    }
    check_keys(root, top_level_keys, "config");

    experiment_config cfg;
    if (root["instance_seed"]) {
        cfg.instance_seed = get<std::uint64_t>(root["instance_seed"], "instance_seed");
    }
    cfg.problems = parse_problems(root, cfg.instance_seed);
    cfg.algorithms = parse_algorithms(root);
    if (root["runs"]) {
        cfg.runs = get_count(root["runs"], "runs");
        if (cfg.runs == 0) {
            throw config_error("runs must be positive");
        }
    }
    if (root["seed"]) {
        cfg.base_seed = get<std::uint64_t>(root["seed"], "seed");
    }
    if (root["workers"]) {
        cfg.workers = std::max<std::size_t>(1, get_count(root["workers"], "workers"));
    }
    if (root["checkpoints"]) {
        cfg.checkpoints = get_count(root["checkpoints"], "checkpoints");
        if (cfg.checkpoints == 0) {
            throw config_error("checkpoints must be positive");
        }
    }
    if (root["reference"]) {
        const auto token = get<std::string>(root["reference"], "reference");
        if (token == "ideal") {
            cfg.reference = reference_mode::ideal;
        } else if (token == "utopian") {
            cfg.reference = reference_mode::utopian;
        } else {
            throw config_error("unknown reference '" + token + "' (expected ideal or utopian)");
        }
    }
    if (root["output"]) {
        cfg.output_dir = get<std::string>(root["output"], "output");
    }
    if (root["fronts"]) {
        cfg.write_fronts = get<bool>(root["fronts"], "fronts");
    }
    if (root["operators"]) {
        parse_operators(root["operators"], cfg.operators);
    }
    return cfg;
}

} // namespace

experiment_config parse_config_text(const std::string &text, const override_list &overrides)
{
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception &e) {
        throw config_error(std::string("malformed config: ") + e.what());
    }
    return resolve(root, overrides);
}

experiment_config parse_config(const std::filesystem::path &path, const override_list &overrides)
{
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot read config file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), overrides);
}

std::string format_number(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace
{

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

std::string file_token(const std::string &s)
{
    std::string out;
    for (char c : s) {
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_') ? c : '-';
    }
    return out;
}

struct job {
    std::size_t problem = 0;
    std::size_t algorithm = 0;
    std::size_t run = 0;
};

struct job_output {
    std::vector<objective_vector> final_front;
    std::vector<std::vector<objective_vector>> checkpoint_fronts;
    std::size_t evaluations = 0;
    bool truncated = false;
    std::string status = "ok";
};

instance_data load_instance(problem_setting &setting, std::uint64_t instance_seed)
{
    if (!is_combinatorial(setting.spec.family)) {
        return {};
    }
    if (setting.instance_file) {
        std::ifstream in(*setting.instance_file);
        if (!in) {
            throw config_error("cannot read instance file " + setting.instance_file->string());
        }
        auto data = read_instance(in);
        const bool mokp = std::holds_alternative<mokp_instance>(data);
        if (mokp != (setting.spec.family == problem_family::mokp)) {
            throw config_error("instance file " + setting.instance_file->string() + " holds the wrong family");
        }
        setting.spec.n = mokp ? std::get<mokp_instance>(data).n : std::get<motsp_instance>(data).n;
        return data;
    }
    if (setting.spec.family == problem_family::mokp) {
        return generate_mokp(setting.spec.m, instance_seed, setting.spec.n);
    }
    return generate_motsp(setting.spec.m, instance_seed, setting.spec.n);
}

std::string instance_file_name(const problem_setting &s)
{
    return to_string(s.spec.family) + "_m" + std::to_string(s.spec.m) + ".txt";
}

experiment_result execute(const experiment_config &config, const std::filesystem::path *out_dir)
{
    if (config.problems.empty() || config.algorithms.empty()) {
        throw config_error("experiment needs at least one problem and one algorithm");
    }
    std::vector<problem_setting> settings = config.problems;
    std::vector<std::shared_ptr<const problem>> problems;
    for (auto &s : settings) {
        const auto data = load_instance(s, config.instance_seed);
        problems.push_back(make_problem(s.spec, data));
        if (out_dir != nullptr && !std::holds_alternative<std::monostate>(data)) {
            std::filesystem::create_directories(*out_dir / "instances");
            std::ofstream f(*out_dir / "instances" / instance_file_name(s));
            std::visit(
                [&f](const auto &inst) {
                    if constexpr (!std::is_same_v<std::decay_t<decltype(inst)>, std::monostate>) {
                        write_instance(f, inst);
                    }
                },
                data);
        }
    }

    std::vector<job> jobs;
    for (std::size_t i = 0; i < settings.size(); ++i) {
        for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
            for (std::size_t r = 0; r < config.runs; ++r) {
                jobs.push_back({i, a, r});
            }
        }
    }
    std::vector<job_output> outputs(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            const job &jb = jobs[k];
            const problem_setting &s = settings[jb.problem];
            job_output &out = outputs[k];
            try {
                run_config rc;
                rc.problem = s.spec;
                rc.variant = config.algorithms[jb.algorithm];
                rc.population_size = s.population_size;
                rc.t_mating = s.t_mating;
                rc.t_replacement = s.t_replacement;
                rc.max_evaluations = s.max_evaluations;
                rc.seed = config.base_seed + jb.run;
                rc.operators = config.operators;
                rc.checkpoints = config.checkpoints;
                rc.reference = config.reference;
                auto res = run(rc, *problems[jb.problem]);
                out.final_front = std::move(res.final_front);
                for (const auto &cp : res.trajectory) {
                    out.checkpoint_fronts.push_back(nondominated_filter(cp.objectives));
                }
                out.evaluations = res.evaluations;
                out.truncated = res.truncated;
            } catch (const std::exception &e) {
                out.status = std::string("error: ") + e.what();
            }
        }
    };
    const std::size_t n_workers = std::min(config.workers, jobs.size());
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < n_workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    // Normalization bounds per problem: the known front, or the pooled
    // non-dominated set of every successful run on that problem.
    std::vector<std::optional<objective_bounds>> bounds(settings.size());
    for (std::size_t i = 0; i < settings.size(); ++i) {
        bounds[i] = pf_bounds(settings[i].spec);
        if (!bounds[i]) {
            std::vector<std::vector<objective_vector>> pool;
            for (std::size_t k = 0; k < jobs.size(); ++k) {
                if (jobs[k].problem == i && outputs[k].status == "ok") {
                    pool.push_back(outputs[k].final_front);
                }
            }
            if (!pool.empty()) {
                try {
                    bounds[i] = pooled_pf_bounds(pool);
                } catch (const config_error &) {
                }
            }
        }
    }

    experiment_result result;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const job &jb = jobs[k];
        const problem_setting &s = settings[jb.problem];
        const algorithm_variant &v = config.algorithms[jb.algorithm];
        job_output &out = outputs[k];
        result_row row;
        row.problem = to_string(s.spec.family);
        row.m = s.spec.m;
        row.algorithm = v.label();
        row.scalarizer = v.scal.name();
        row.p = v.scal.p;
        row.run = jb.run;
        row.seed = config.base_seed + jb.run;
        row.population_size = s.population_size;
        row.t_mating = s.t_mating;
        row.t_replacement = s.t_replacement;
        row.evaluations = out.evaluations;
        row.truncated = out.truncated;
        row.status = out.status;
        if (row.status == "ok") {
            if (!bounds[jb.problem]) {
                row.status = "error: no normalization bounds";
            } else {
                try {
                    const auto &b = *bounds[jb.problem];
                    row.hv = normalized_hypervolume(out.final_front, b);
                    for (const auto &front : out.checkpoint_fronts) {
                        row.hv_trajectory.push_back(normalized_hypervolume(front, b));
                    }
                    row.max_gap = max_consecutive_gap(normalize(out.final_front, b));
                } catch (const std::exception &e) {
                    row.status = std::string("error: ") + e.what();
                }
            }
        }
        if (out_dir != nullptr && config.write_fronts && out.status == "ok") {
            std::filesystem::create_directories(*out_dir / "fronts");
            const auto name = file_token(row.problem) + "_m" + std::to_string(row.m) + "_" + file_token(row.algorithm)
                              + "_" + file_token(row.scalarizer) + "_run" + std::to_string(row.run) + ".txt";
            std::ofstream f(*out_dir / "fronts" / name);
            write_front(f, out.final_front);
        }
        result.rows.push_back(std::move(row));
    }
    result.summary = stats_summary(result.rows);
    return result;
}

} // namespace

experiment_result run_experiment_in_memory(const experiment_config &config)
{
    return execute(config, nullptr);
}

experiment_result run_experiment(const experiment_config &config)
{
    std::filesystem::create_directories(config.output_dir);
    auto result = execute(config, &config.output_dir);
    {
        std::ofstream f(config.output_dir / "results.csv");
        write_results_csv(f, result.rows, config.checkpoints);
    }
    {
        std::ofstream f(config.output_dir / "summary.csv");
        write_summary_csv(f, result.summary);
    }
    return result;
}

std::vector<summary_row> stats_summary(const std::vector<result_row> &rows, const std::string &baseline)
{
    // Cells in order of first appearance; each collects its successful I_H values.
    struct cell {
        summary_row row;
        std::vector<double> values;
        std::size_t group = 0;
    };
    std::vector<cell> cells;
    std::vector<std::tuple<std::string, std::size_t, double>> groups;
    for (const auto &r : rows) {
        const auto group_key = std::make_tuple(r.problem, r.m, r.p);
        auto g = std::find(groups.begin(), groups.end(), group_key);
        if (g == groups.end()) {
            groups.push_back(group_key);
            g = std::prev(groups.end());
        }
        const auto group = static_cast<std::size_t>(g - groups.begin());
        auto c = std::find_if(cells.begin(), cells.end(), [&](const cell &x) {
            return x.group == group && x.row.algorithm == r.algorithm && x.row.scalarizer == r.scalarizer;
        });
        if (c == cells.end()) {
            cell fresh;
            fresh.group = group;
            fresh.row.problem = r.problem;
            fresh.row.m = r.m;
            fresh.row.algorithm = r.algorithm;
            fresh.row.scalarizer = r.scalarizer;
            fresh.row.p = r.p;
            cells.push_back(std::move(fresh));
            c = std::prev(cells.end());
        }
        if (r.status == "ok") {
            c->values.push_back(r.hv);
        }
    }
    for (auto &c : cells) {
        c.row.runs = c.values.size();
        if (!c.values.empty()) {
            c.row.mean = mean(c.values);
            c.row.std = stddev(c.values);
            c.row.median = median(c.values);
        } else {
            c.row.mean = c.row.std = c.row.median = std::nan("");
        }
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::vector<cell *> members;
        for (auto &c : cells) {
            if (c.group == g) {
                members.push_back(&c);
            }
        }
        std::vector<cell *> ranked;
        for (auto *c : members) {
            if (c->row.runs > 0) {
                ranked.push_back(c);
            }
        }
        std::stable_sort(ranked.begin(), ranked.end(),
                         [](const cell *a, const cell *b) { return a->row.mean > b->row.mean; });
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            ranked[i]->row.rank = i + 1;
        }
        const auto base = std::find_if(members.begin(), members.end(),
                                       [&](const cell *c) { return c->row.algorithm == baseline; });
        if (base == members.end()) {
            continue;
        }
        for (auto *c : members) {
            if (c == *base || c->values.size() < 5 || (*base)->values.size() < 5) {
                continue;
            }
            c->row.mark = mark(wilcoxon_rank_sum(c->values, (*base)->values));
        }
    }
    std::vector<summary_row> out;
    out.reserve(cells.size());
    for (auto &c : cells) {
        out.push_back(std::move(c.row));
    }
    return out;
}

void write_results_csv(std::ostream &out, const std::vector<result_row> &rows, std::size_t checkpoints)
{
    out << "problem,m,algorithm,scalarizer,p,run,seed,N,T_m,T_r,evaluations,truncated,status,hv,max_gap";
    for (std::size_t k = 1; k <= checkpoints; ++k) {
        out << ",hv_c" << k;
    }
    out << '\n';
    for (const auto &r : rows) {
        const bool ok = r.status == "ok";
        out << csv_field(r.problem) << ',' << r.m << ',' << csv_field(r.algorithm) << ',' << csv_field(r.scalarizer)
            << ',' << format_exponent(r.p) << ',' << r.run << ',' << r.seed << ',' << r.population_size << ','
            << r.t_mating << ',' << r.t_replacement << ',' << r.evaluations << ',' << (r.truncated ? 1 : 0) << ','
            << csv_field(r.status) << ',' << (ok ? format_number(r.hv) : "") << ','
            << (ok ? format_number(r.max_gap) : "");
        for (std::size_t k = 0; k < checkpoints; ++k) {
            out << ',';
            if (ok && k < r.hv_trajectory.size()) {
                out << format_number(r.hv_trajectory[k]);
            }
        }
        out << '\n';
    }
}

void write_summary_csv(std::ostream &out, const std::vector<summary_row> &rows)
{
    out << "problem,m,algorithm,scalarizer,p,runs,mean,std,median,rank,mark\n";
    for (const auto &r : rows) {
        out << csv_field(r.problem) << ',' << r.m << ',' << csv_field(r.algorithm) << ',' << csv_field(r.scalarizer)
            << ',' << format_exponent(r.p) << ',' << r.runs << ',' << format_number(r.mean) << ','
            << format_number(r.std) << ',' << format_number(r.median) << ',' << r.rank << ',' << r.mark << '\n';
    }
}

std::vector<objective_vector> read_front(std::istream &in)
{
    std::vector<objective_vector> front;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        objective_vector f;
        std::string token;
        while (ls >> token) {
            double v = 0.0;
            const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
            if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
                throw config_error("front line " + std::to_string(line_no) + ": bad number '" + token + "'");
            }
            f.push_back(v);
        }
        if (f.empty()) {
            continue;
        }
        if (!front.empty() && f.size() != front.front().size()) {
            throw dimension_error("front line " + std::to_string(line_no) + " has " + std::to_string(f.size())
                                  + " values, expected " + std::to_string(front.front().size()));
        }
        front.push_back(std::move(f));
    }
    return front;
}

void write_front(std::ostream &out, const std::vector<objective_vector> &front)
{
    for (const auto &f : front) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            out << (i ? " " : "") << format_number(f[i]);
        }
        out << '\n';
    }
}

} // namespace moead
