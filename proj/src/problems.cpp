#include <moead/problems.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include <moead/errors.hpp>

namespace moead
{

namespace
{

constexpr double pi = std::numbers::pi;

std::string lower_case(const std::string &s)
{
    std::string out;
    for (char c : s) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

void check_real_vector(std::span<const double> x, std::size_t n, const char *what)
{
    if (x.size() != n) {
        throw encoding_error(std::string(what) + ": expected " + std::to_string(n) + " variables, got "
                             + std::to_string(x.size()));
    }
}

// Items ordered by ascending max-over-knapsacks profit/weight ratio, ties by index.
std::vector<std::size_t> removal_order(const mokp_instance &inst)
{
    std::vector<double> ratio(inst.n, 0.0);
    for (std::size_t j = 0; j < inst.n; ++j) {
        for (std::size_t i = 0; i < inst.m; ++i) {
            ratio[j] = std::max(ratio[j], static_cast<double>(inst.profits[i][j]) / inst.weights[i][j]);
        }
    }
    std::vector<std::size_t> order(inst.n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ratio[a] < ratio[b]; });
    return order;
}

bit_string repair_with_order(const mokp_instance &inst, const std::vector<std::size_t> &order, bit_string bits)
{
    if (bits.size() != inst.n) {
        throw encoding_error("knapsack selection has " + std::to_string(bits.size()) + " bits, expected "
                             + std::to_string(inst.n));
    }
    std::vector<long> load(inst.m, 0);
    for (std::size_t j = 0; j < inst.n; ++j) {
        if (bits[j]) {
            for (std::size_t i = 0; i < inst.m; ++i) {
                load[i] += inst.weights[i][j];
            }
        }
    }
    auto violated = [&] {
        for (std::size_t i = 0; i < inst.m; ++i) {
            if (load[i] > inst.capacities[i]) {
                return true;
            }
        }
        return false;
    };
    for (auto it = order.begin(); it != order.end() && violated(); ++it) {
        if (bits[*it]) {
            bits[*it] = 0;
            for (std::size_t i = 0; i < inst.m; ++i) {
                load[i] -= inst.weights[i][*it];
            }
        }
    }
    return bits;
}

objective_vector profits_of(const mokp_instance &inst, const bit_string &bits)
{
    objective_vector f(inst.m, 0.0);
    for (std::size_t j = 0; j < inst.n; ++j) {
        if (bits[j]) {
            for (std::size_t i = 0; i < inst.m; ++i) {
                f[i] -= inst.profits[i][j];
            }
        }
    }
    return f;
}

void check_permutation(const permutation &tour, std::size_t n)
{
    if (tour.size() != n) {
        throw encoding_error("tour has " + std::to_string(tour.size()) + " cities, expected " + std::to_string(n));
    }
    std::vector<char> seen(n, 0);
    for (int c : tour) {
        if (c < 0 || static_cast<std::size_t>(c) >= n || seen[static_cast<std::size_t>(c)]) {
            throw encoding_error("tour is not a permutation of 0..n-1");
        }
        seen[static_cast<std::size_t>(c)] = 1;
    }
}

class real_problem final : public problem
{
public:
    explicit real_problem(const problem_spec &spec)
        : problem(spec), m_lower(spec.n, 0.0), m_upper(spec.n, 1.0)
    {
        if (spec.family == problem_family::zdt4) {
            for (std::size_t i = 1; i < spec.n; ++i) {
                m_lower[i] = -5.0;
                m_upper[i] = 5.0;
            }
        }
    }

    objective_vector evaluate(const encoding &x) const override
    {
        const auto *v = std::get_if<real_vector>(&x);
        if (v == nullptr) {
            throw encoding_error(to_string(spec().family) + " expects a real-coded decision vector");
        }
        return is_zdt(spec().family) ? evaluate_zdt(spec().family, *v) : evaluate_dtlz(spec().family, spec().m, *v);
    }

    encoding random_solution(rng &r) const override
    {
        real_vector x(spec().n);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = r.uniform(m_lower[i], m_upper[i]);
        }
        return x;
    }

    const std::vector<double> &lower() const override
    {
        return m_lower;
    }
    const std::vector<double> &upper() const override
    {
        return m_upper;
    }

private:
    std::vector<double> m_lower;
    std::vector<double> m_upper;
};

class knapsack_problem final : public problem
{
public:
    knapsack_problem(const problem_spec &spec, mokp_instance inst)
        : problem(spec), m_inst(std::move(inst)), m_order(removal_order(m_inst))
    {
    }

    objective_vector evaluate(const encoding &x) const override
    {
        const auto *bits = std::get_if<bit_string>(&x);
        if (bits == nullptr) {
            throw encoding_error("MOKP expects a bit string");
        }
        return profits_of(m_inst, repair_with_order(m_inst, m_order, *bits));
    }

    encoding random_solution(rng &r) const override
    {
        bit_string bits(m_inst.n);
        for (auto &b : bits) {
            b = r.bernoulli(0.5) ? 1 : 0;
        }
        return repair_with_order(m_inst, m_order, std::move(bits));
    }

    void repair(encoding &x) const override
    {
        auto *bits = std::get_if<bit_string>(&x);
        if (bits == nullptr) {
            throw encoding_error("MOKP expects a bit string");
        }
        *bits = repair_with_order(m_inst, m_order, std::move(*bits));
    }

private:
    mokp_instance m_inst;
    std::vector<std::size_t> m_order;
};

class tsp_problem final : public problem
{
public:
    tsp_problem(const problem_spec &spec, motsp_instance inst) : problem(spec), m_inst(std::move(inst)) {}

    objective_vector evaluate(const encoding &x) const override
    {
        const auto *tour = std::get_if<permutation>(&x);
        if (tour == nullptr) {
            throw encoding_error("MOTSP expects a permutation");
        }
        return evaluate_motsp(m_inst, *tour);
    }

    encoding random_solution(rng &r) const override
    {
        permutation tour(m_inst.n);
        std::iota(tour.begin(), tour.end(), 0);
        for (std::size_t i = tour.size(); i > 1; --i) {
            std::swap(tour[i - 1], tour[r.index(i)]);
        }
        return tour;
    }

private:
    motsp_instance m_inst;
};

const std::vector<double> empty_bounds;

template <typename T> void write_number(std::ostream &out, T v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, res.ptr - buf);
}

template <typename T> T parse_number(const std::string &tok)
{
    T v{};
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
        throw config_error("instance file: cannot parse number '" + tok + "'");
    }
    return v;
}

template <typename T> void write_row(std::ostream &out, const std::vector<T> &row, std::size_t begin, std::size_t end)
{
    for (std::size_t j = begin; j < end; ++j) {
        if (j > begin) {
            out << ' ';
        }
        write_number(out, row[j]);
    }
    out << '\n';
}

template <typename T> std::vector<T> read_row(std::istream &in, std::size_t count)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw config_error("instance file: unexpected end of data");
    }
    std::istringstream row(line);
    std::vector<T> out;
    std::string tok;
    while (row >> tok) {
        out.push_back(parse_number<T>(tok));
    }
    if (out.size() != count) {
        throw config_error("instance file: expected " + std::to_string(count) + " values per row, got "
                           + std::to_string(out.size()));
    }
    return out;
}

std::string expect_key(std::istream &in, const std::string &key)
{
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string k;
        ls >> k;
        if (k != key) {
            throw config_error("instance file: expected '" + key + "', found '" + line + "'");
        }
        std::string rest;
        std::getline(ls >> std::ws, rest);
        return rest;
    }
    throw config_error("instance file: missing '" + key + "'");
}

} // namespace

problem_family parse_problem_family(const std::string &token)
{
    const std::string t = lower_case(token);
    static const std::pair<const char *, problem_family> table[] = {
        {"zdt1", problem_family::zdt1},   {"zdt2", problem_family::zdt2},   {"zdt3", problem_family::zdt3},
        {"zdt4", problem_family::zdt4},   {"dtlz1", problem_family::dtlz1}, {"dtlz3", problem_family::dtlz3},
        {"dtlz5", problem_family::dtlz5}, {"mokp", problem_family::mokp},   {"motsp", problem_family::motsp},
    };
    for (const auto &[name, fam] : table) {
        if (t == name) {
            return fam;
        }
    }
    throw config_error("unknown problem '" + token + "'");
}

std::string to_string(problem_family family)
{
    switch (family) {
        case problem_family::zdt1:
            return "ZDT1";
        case problem_family::zdt2:
            return "ZDT2";
        case problem_family::zdt3:
            return "ZDT3";
        case problem_family::zdt4:
            return "ZDT4";
        case problem_family::dtlz1:
            return "DTLZ1";
        case problem_family::dtlz3:
            return "DTLZ3";
        case problem_family::dtlz5:
            return "DTLZ5";
        case problem_family::mokp:
            return "MOKP";
        default:
            return "MOTSP";
    }
}

bool is_zdt(problem_family family)
{
    return family == problem_family::zdt1 || family == problem_family::zdt2 || family == problem_family::zdt3
           || family == problem_family::zdt4;
}

bool is_dtlz(problem_family family)
{
    return family == problem_family::dtlz1 || family == problem_family::dtlz3 || family == problem_family::dtlz5;
}

bool is_combinatorial(problem_family family)
{
    return family == problem_family::mokp || family == problem_family::motsp;
}

problem_spec make_spec(problem_family family, std::size_t m, std::uint64_t instance_seed)
{
    problem_spec spec;
    spec.family = family;
    spec.m = m;
    spec.instance_seed = instance_seed;
    if (is_zdt(family)) {
        if (m != 2) {
            throw config_error(to_string(family) + " has exactly 2 objectives");
        }
        spec.n = family == problem_family::zdt4 ? 10 : 30;
        spec.encoding = encoding_kind::real;
    } else if (is_dtlz(family)) {
        if (m < 2) {
            throw config_error("DTLZ needs m >= 2");
        }
        spec.n = m + 4;
        spec.encoding = encoding_kind::real;
    } else {
        if (m != 2 && m != 3) {
            throw config_error(to_string(family) + " instances support m in {2, 3}");
        }
        spec.n = family == problem_family::mokp ? 250 : 60;
        spec.encoding = family == problem_family::mokp ? encoding_kind::binary : encoding_kind::permutation;
    }
    return spec;
}

mokp_instance generate_mokp(std::size_t m, std::uint64_t seed, std::size_t items)
{
    mokp_instance inst;
    inst.m = m;
    inst.n = items;
    inst.seed = seed;
    rng r(seed);
    inst.profits.assign(m, std::vector<int>(items));
    inst.weights.assign(m, std::vector<int>(items));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < items; ++j) {
            inst.profits[i][j] = static_cast<int>(r.uniform_int(10, 100));
        }
        for (std::size_t j = 0; j < items; ++j) {
            inst.weights[i][j] = static_cast<int>(r.uniform_int(10, 100));
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        const long total = std::accumulate(inst.weights[i].begin(), inst.weights[i].end(), 0L);
        inst.capacities.push_back(total / 2);
    }
    return inst;
}

motsp_instance generate_motsp(std::size_t m, std::uint64_t seed, std::size_t cities)
{
    motsp_instance inst;
    inst.m = m;
    inst.n = cities;
    inst.seed = seed;
    rng r(seed);
    inst.costs.assign(m, std::vector<double>(cities * cities, 0.0));
    for (std::size_t k = 0; k < m; ++k) {
        auto &c = inst.costs[k];
        for (std::size_t a = 0; a < cities; ++a) {
            for (std::size_t b = a + 1; b < cities; ++b) {
                const double v = r.uniform();
                c[a * cities + b] = v;
                c[b * cities + a] = v;
            }
        }
    }
    return inst;
}

bit_string repair_knapsack(const mokp_instance &inst, bit_string bits)
{
    return repair_with_order(inst, removal_order(inst), std::move(bits));
}

objective_vector evaluate_mokp(const mokp_instance &inst, const bit_string &bits)
{
    return profits_of(inst, repair_knapsack(inst, bits));
}

objective_vector evaluate_motsp(const motsp_instance &inst, const permutation &tour)
{
    check_permutation(tour, inst.n);
    objective_vector f(inst.m, 0.0);
    for (std::size_t k = 0; k < inst.m; ++k) {
        double len = 0.0;
        for (std::size_t i = 0; i < tour.size(); ++i) {
            const auto a = static_cast<std::size_t>(tour[i]);
            const auto b = static_cast<std::size_t>(tour[(i + 1) % tour.size()]);
            len += inst.cost(k, a, b);
        }
        f[k] = len;
    }
    return f;
}

objective_vector evaluate_zdt(problem_family family, std::span<const double> x)
{
    const std::size_t n = family == problem_family::zdt4 ? 10 : 30;
    check_real_vector(x, n, "ZDT");
    const double f1 = x[0];
    double g = 0.0;
    if (family == problem_family::zdt4) {
        for (std::size_t i = 1; i < n; ++i) {
            g += x[i] * x[i] - 10.0 * std::cos(4.0 * pi * x[i]);
        }
        g += 1.0 + 10.0 * static_cast<double>(n - 1);
    } else {
        for (std::size_t i = 1; i < n; ++i) {
            g += x[i];
        }
        g = 1.0 + 9.0 * g / static_cast<double>(n - 1);
    }
    const double r = f1 / g;
    double f2 = 0.0;
    switch (family) {
        case problem_family::zdt2:
            f2 = g * (1.0 - r * r);
            break;
        case problem_family::zdt3:
            f2 = g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * pi * f1));
            break;
        case problem_family::zdt1:
        case problem_family::zdt4:
            f2 = g * (1.0 - std::sqrt(r));
            break;
        default:
            throw encoding_error("evaluate_zdt called with a non-ZDT family");
    }
    return {f1, f2};
}

objective_vector evaluate_dtlz(problem_family family, std::size_t m, std::span<const double> x)
{
    check_real_vector(x, m + 4, "DTLZ");
    const std::size_t n = x.size();
    const std::size_t k = n - m + 1;
    double g = 0.0;
    if (family == problem_family::dtlz5) {
        for (std::size_t i = m - 1; i < n; ++i) {
            g += (x[i] - 0.5) * (x[i] - 0.5);
        }
    } else {
        for (std::size_t i = m - 1; i < n; ++i) {
            const double d = x[i] - 0.5;
            g += d * d - std::cos(20.0 * pi * d);
        }
        g = 100.0 * (static_cast<double>(k) + g);
    }

    objective_vector f(m, 0.0);
    if (family == problem_family::dtlz1) {
        for (std::size_t i = 0; i < m; ++i) {
            double v = 0.5 * (1.0 + g);
            for (std::size_t j = 0; j + i + 1 < m; ++j) {
                v *= x[j];
            }
            if (i > 0) {
                v *= 1.0 - x[m - i - 1];
            }
            f[i] = v;
        }
        return f;
    }
    if (family != problem_family::dtlz3 && family != problem_family::dtlz5) {
        throw encoding_error("evaluate_dtlz called with a non-DTLZ family");
    }

    std::vector<double> theta(m - 1);
    theta[0] = x[0] * pi / 2.0;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        theta[i] = family == problem_family::dtlz5 ? pi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[i])
                                                   : x[i] * pi / 2.0;
    }
    for (std::size_t i = 0; i < m; ++i) {
        double v = 1.0 + g;
        for (std::size_t j = 0; j + i + 1 < m; ++j) {
            v *= std::cos(theta[j]);
        }
        if (i > 0) {
            v *= std::sin(theta[m - i - 1]);
        }
        f[i] = v;
    }
    return f;
}

std::optional<objective_bounds> pf_bounds(const problem_spec &spec)
{
    const std::size_t m = spec.m;
    switch (spec.family) {
        case problem_family::zdt1:
        case problem_family::zdt2:
        case problem_family::zdt4:
            return objective_bounds{{0.0, 0.0}, {1.0, 1.0}};
        case problem_family::zdt3:
            // Disconnected front; extremes of f2 = 1 - sqrt(f1) - f1 sin(10 pi f1)
            // restricted to its non-dominated pieces.
            return objective_bounds{{0.0, -0.7733690123266406}, {0.8518328655423077, 1.0}};
        case problem_family::dtlz1:
            return objective_bounds{std::vector<double>(m, 0.0), std::vector<double>(m, 0.5)};
        case problem_family::dtlz3:
            return objective_bounds{std::vector<double>(m, 0.0), std::vector<double>(m, 1.0)};
        case problem_family::dtlz5: {
            // Degenerate curve: f_1 = cos(t) s^(m-2), f_i = cos(t) s^(m-i) for
            // 2 <= i < m, f_m = sin(t), with s = sqrt(2)/2.
            const double s = std::sqrt(0.5);
            objective_bounds b{std::vector<double>(m, 0.0), std::vector<double>(m, 1.0)};
            b.upper[0] = std::pow(s, static_cast<double>(m - 2));
            for (std::size_t i = 2; i < m; ++i) {
                b.upper[i - 1] = std::pow(s, static_cast<double>(m - i));
            }
            return b;
        }
        default:
            return std::nullopt;
    }
}

const std::vector<double> &problem::lower() const
{
    return empty_bounds;
}

const std::vector<double> &problem::upper() const
{
    return empty_bounds;
}

std::shared_ptr<const problem> make_problem(const problem_spec &spec, const instance_data &instance)
{
    switch (spec.family) {
        case problem_family::mokp: {
            mokp_instance inst = std::holds_alternative<mokp_instance>(instance)
                                     ? std::get<mokp_instance>(instance)
                                     : generate_mokp(spec.m, spec.instance_seed, spec.n);
            if (inst.m != spec.m || inst.n != spec.n) {
                throw config_error("MOKP instance shape does not match the problem spec");
            }
            return std::make_shared<knapsack_problem>(spec, std::move(inst));
        }
        case problem_family::motsp: {
            motsp_instance inst = std::holds_alternative<motsp_instance>(instance)
                                      ? std::get<motsp_instance>(instance)
                                      : generate_motsp(spec.m, spec.instance_seed, spec.n);
            if (inst.m != spec.m || inst.n != spec.n) {
                throw config_error("MOTSP instance shape does not match the problem spec");
            }
            return std::make_shared<tsp_problem>(spec, std::move(inst));
        }
        default:
            return std::make_shared<real_problem>(spec);
    }
}

void write_instance(std::ostream &out, const mokp_instance &inst)
{
    out << "family MOKP\nm " << inst.m << "\nn " << inst.n << "\nseed " << inst.seed << "\n";
    out << "profits\n";
    for (const auto &row : inst.profits) {
        write_row(out, row, 0, row.size());
    }
    out << "weights\n";
    for (const auto &row : inst.weights) {
        write_row(out, row, 0, row.size());
    }
    out << "capacities\n";
    write_row(out, inst.capacities, 0, inst.capacities.size());
}

void write_instance(std::ostream &out, const motsp_instance &inst)
{
    out << "family MOTSP\nm " << inst.m << "\nn " << inst.n << "\nseed " << inst.seed << "\n";
    for (std::size_t k = 0; k < inst.m; ++k) {
        out << "cost " << k << "\n";
        for (std::size_t a = 0; a < inst.n; ++a) {
            write_row(out, inst.costs[k], a * inst.n, (a + 1) * inst.n);
        }
    }
}

instance_data read_instance(std::istream &in)
{
    const std::string family = expect_key(in, "family");
    const auto m = parse_number<std::size_t>(expect_key(in, "m"));
    const auto n = parse_number<std::size_t>(expect_key(in, "n"));
    const auto seed = parse_number<std::uint64_t>(expect_key(in, "seed"));
    if (family == "MOKP") {
        mokp_instance inst;
        inst.m = m;
        inst.n = n;
        inst.seed = seed;
        expect_key(in, "profits");
        for (std::size_t i = 0; i < m; ++i) {
            inst.profits.push_back(read_row<int>(in, n));
        }
        expect_key(in, "weights");
        for (std::size_t i = 0; i < m; ++i) {
            inst.weights.push_back(read_row<int>(in, n));
        }
        expect_key(in, "capacities");
        inst.capacities = read_row<long>(in, m);
        return inst;
    }
    if (family == "MOTSP") {
        motsp_instance inst;
        inst.m = m;
        inst.n = n;
        inst.seed = seed;
        for (std::size_t k = 0; k < m; ++k) {
            expect_key(in, "cost");
            std::vector<double> matrix;
            matrix.reserve(n * n);
            for (std::size_t a = 0; a < n; ++a) {
                const auto row = read_row<double>(in, n);
                matrix.insert(matrix.end(), row.begin(), row.end());
            }
            inst.costs.push_back(std::move(matrix));
        }
        return inst;
    }
    throw config_error("instance file: unknown family '" + family + "'");
}

} // namespace moead
