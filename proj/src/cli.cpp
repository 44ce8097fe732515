#include "k2rank/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "k2rank/classify.hpp"
#include "k2rank/errors.hpp"
#include "k2rank/report.hpp"

namespace k2rank::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options
{
    std::vector<u64> p_list;
    u64 limit = 0;
    u64 l = 0;
    u64 checkpoints = 10;
    std::string format = "csv";
    std::string out;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string fast_path = "off";
};

void add_common(CLI::App & sub, Options & o)
{
    sub.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub.add_option("--out", o.out, "output file (default: standard output)");
    sub.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub.add_option("--fast-path", o.fast_path,
                   "decide conditions by brute force (off), in the class group (on), or both (verify)")
        ->check(CLI::IsMember({"off", "on", "verify"}))
        ->capture_default_str();
}

CLI::Option * add_single_p(CLI::App & sub, Options & o)
{
    return sub.add_option("--p", o.p_list, "prime p = 7 mod 8")->required()->expected(1);
}

CLI::Option * add_limit(CLI::App & sub, Options & o)
{
    return sub.add_option("--limit", o.limit, "upper bound N on l")->required();
}

RunConfig make_config(Options const & o)
{
    RunConfig cfg;
    cfg.p_list = o.p_list;
    std::sort(cfg.p_list.begin(), cfg.p_list.end());
    cfg.p_list.erase(std::unique(cfg.p_list.begin(), cfg.p_list.end()), cfg.p_list.end());
    for (u64 p : cfg.p_list)
        if (!is_admissible_p(p))
            throw DomainError("p = " + std::to_string(p) + " is not a prime = 7 mod 8");
    cfg.limit = o.limit;
    cfg.format = o.format == "json" ? Format::json : Format::csv;
    if (!o.out.empty())
        cfg.out = o.out;
    cfg.jobs = o.jobs;
    cfg.fast_path = o.fast_path == "on" ? FastPath::on
                    : o.fast_path == "verify" ? FastPath::verify
                                              : FastPath::off;
    return cfg;
}

void require_limit(RunConfig const & cfg)
{
    if (cfg.limit < 2)
        throw DomainError("--limit must be >= 2");
}

json witness_json(std::optional<RepWitness> const & w, char const * first, char const * second)
{
    if (!w)
        return nullptr;
    json j;
    j[first] = w->n;
    j[second] = w->m;
    return j;
}

std::string dump(json const & j)
{
    return j.dump(2) + "\n";
}

/* hundredths of a percent as a fraction with four decimals */
double fraction4(u64 count, u64 total)
{
    return static_cast<double>(percent_hundredths(count, total)) / 10000.0;
}

std::string emit_omega(RunConfig const & cfg)
{
    require_limit(cfg);
    u64 const p = cfg.p_list.front();
    auto const omega = enumerate_omega(p, cfg.limit);
    if (cfg.format == Format::json) {
        json j;
        j["p"] = p;
        j["limit"] = cfg.limit;
        j["count"] = omega.members.size();
        j["members"] = omega.members;
        return dump(j);
    }
    std::ostringstream s;
    s << "p,l\n";
    for (u64 l : omega.members)
        s << p << "," << l << "\n";
    return s.str();
}

std::string emit_classify(RunConfig const & cfg, u64 l)
{
    OmegaContext const ctx(cfg.p_list.front());
    auto const rec = classify(l, ctx, cfg.fast_path);
    auto const & pr = rec.profile;
    if (cfg.format == Format::json) {
        json j;
        j["l"] = rec.l;
        j["p"] = rec.p;
        j["sat_1_32"] = pr.sat_1_32;
        j["quartic"] = to_string(pr.quartic);
        j["l_mod_16"] = pr.residue16;
        j["case"] = to_string(rec.splitting_case);
        j["tuple"] = {rec.tuple.upsilon, rec.tuple.mu, rec.tuple.sigma, rec.tuple.tau};
        json w;
        w["1_32"] = witness_json(pr.witness_1_32, "x", "y");
        w["quartic"] = witness_json(pr.quartic_witness, "n", "m");
        j["witnesses"] = w;
        return dump(j);
    }
    std::ostringstream s;
    s << "l,p,sat_1_32,quartic,l_mod_16,case,v,mu,sigma,tau\n";
    s << rec.l << "," << rec.p << "," << (pr.sat_1_32 ? "true" : "false") << "," << to_string(pr.quartic)
      << "," << pr.residue16 << "," << to_string(rec.splitting_case) << "," << rec.tuple.upsilon << ","
      << rec.tuple.mu << "," << rec.tuple.sigma << "," << rec.tuple.tau << "\n";
    return s.str();
}

std::vector<DensityReport> reports_for(RunConfig const & cfg)
{
    require_limit(cfg);
    auto const primes = sieve_primes(cfg.limit);
    std::vector<DensityReport> out;
    for (u64 p : cfg.p_list) {
        OmegaContext const ctx(p);
        auto report = tabulate(ctx, enumerate_omega(p, primes), {cfg.jobs, cfg.fast_path});
        require_consistent(report);
        out.push_back(report);
    }
    return out;
}

template <std::size_t N>
std::string emit_table(RunConfig const & cfg, std::array<char const *, N> const & names,
                       std::array<u64, N> const DensityCounts::*column)
{
    auto const reports = reports_for(cfg);
    if (cfg.format == Format::json) {
        json rows = json::array();
        for (auto const & r : reports) {
            json j;
            j["p"] = r.p;
            j["limit"] = r.limit;
            j["omega"] = r.counts.omega;
            auto const & values = r.counts.*column;
            for (std::size_t i = 0; i < N; ++i)
                j[names[i]] = values[i];
            json pct;
            for (std::size_t i = 0; i < N; ++i)
                pct[names[i]] = fraction4(values[i], r.counts.omega);
            j["percentages"] = pct;
            rows.push_back(j);
        }
        return dump(rows);
    }
    std::ostringstream s;
    s << "p,limit,omega";
    for (auto n : names)
        s << "," << n;
    s << "\n";
    for (auto const & r : reports) {
        s << r.p << "," << r.limit << "," << r.counts.omega;
        for (u64 v : r.counts.*column)
            s << "," << v;
        s << "\n";
    }
    return s.str();
}

std::string emit_densities(RunConfig const & cfg, u64 checkpoints)
{
    require_limit(cfg);
    if (checkpoints == 0)
        throw DomainError("--checkpoints must be >= 1");
    u64 const p = cfg.p_list.front();
    auto const rows = density_series(p, cfg.limit, checkpoints, {cfg.jobs, cfg.fast_path});
    if (cfg.format == Format::json) {
        json out = json::array();
        for (auto const & row : rows) {
            json j;
            j["bound"] = row.bound;
            j["omega"] = row.counts.omega;
            json fr;
            for (std::size_t i = 0; i < 8; ++i)
                fr[table1_names[i]] = row.counts.omega ? json(fraction4(row.counts.table1[i], row.counts.omega))
                                                       : json(nullptr);
            for (std::size_t i = 0; i < 8; ++i)
                fr[table2_names[i]] = row.counts.omega ? json(fraction4(row.counts.table2[i], row.counts.omega))
                                                       : json(nullptr);
            j["fractions"] = fr;
            out.push_back(j);
        }
        json doc;
        doc["p"] = p;
        doc["limit"] = cfg.limit;
        doc["rows"] = out;
        return dump(doc);
    }
    std::ostringstream s;
    s << "p,bound,omega";
    for (auto n : table1_names)
        s << "," << n;
    for (auto n : table2_names)
        s << "," << n;
    s << "\n";
    for (auto const & row : rows) {
        s << p << "," << row.bound << "," << row.counts.omega;
        for (u64 v : row.counts.table1)
            s << "," << v;
        for (u64 v : row.counts.table2)
            s << "," << v;
        s << "\n";
    }
    return s.str();
}

std::string emit_classgroup(RunConfig const & cfg)
{
    u64 const p = cfg.p_list.front();
    auto const cg = enumerate_class_group(-8 * static_cast<i64>(p));
    if (cfg.format == Format::json) {
        json j;
        j["p"] = p;
        j["disc"] = cg.disc();
        j["h"] = cg.h();
        auto const pr = cg.principal();
        j["principal"] = {pr.a, pr.b, pr.c};
        json forms = json::array();
        for (auto const & f : cg.forms())
            forms.push_back({f.a, f.b, f.c});
        j["forms"] = forms;
        return dump(j);
    }
    std::ostringstream s;
    s << "p,disc,h,a,b,c\n";
    for (auto const & f : cg.forms())
        s << p << "," << cg.disc() << "," << cg.h() << "," << f.a << "," << f.b << "," << f.c << "\n";
    return s.str();
}

std::string emit_splitgen(RunConfig const & cfg)
{
    u64 const p = cfg.p_list.front();
    auto const g = split_generator(p);
    if (cfg.format == Format::json) {
        json j;
        j["p"] = p;
        j["a"] = g.a;
        j["b"] = g.b;
        return dump(j);
    }
    std::ostringstream s;
    s << "p,a,b\n" << p << "," << g.a << "," << g.b << "\n";
    return s.str();
}

void write_output(RunConfig const & cfg, std::string const & text, std::ostream & out)
{
    if (!cfg.out) {
        out << text;
        out.flush();
        return;
    }
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f)
        throw DomainError("cannot open output file " + *cfg.out);
    f << text;
    if (!f)
        throw DomainError("failed writing " + *cfg.out);
}

} // namespace

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    Options o;
    CLI::App app{"4-rank classification of primes in Omega(p) by quadratic forms", "k2rank"};
    app.require_subcommand(1);

    auto * omega = app.add_subcommand("omega", "list the primes l <= N in Omega(p)");
    add_single_p(*omega, o);
    add_limit(*omega, o);

    auto * cls = app.add_subcommand("classify", "profile, splitting case and 4-rank tuple of one l");
    add_single_p(*cls, o);
    cls->add_option("--l", o.l, "prime l in Omega(p)")->required();

    auto * t1 = app.add_subcommand("table1", "counts of Omega_1..4 and Lambda_1..4");
    auto * t2 = app.add_subcommand("table2", "counts of the eight 4-rank tuples");
    for (auto * t : {t1, t2}) {
        t->add_option("--p", o.p_list, "comma-separated primes p = 7 mod 8")->required()->delimiter(',');
        add_limit(*t, o);
    }

    auto * dens = app.add_subcommand("densities", "cumulative class fractions at evenly spaced bounds");
    add_single_p(*dens, o);
    add_limit(*dens, o);
    dens->add_option("--checkpoints", o.checkpoints, "number of bounds")->capture_default_str();

    auto * cg = app.add_subcommand("classgroup", "reduced forms and class number of discriminant -8p");
    add_single_p(*cg, o);

    auto * sg = app.add_subcommand("splitgen", "least solution of a^2 - 2b^2 = -p");
    add_single_p(*sg, o);

    for (auto * sub : {omega, cls, t1, t2, dens, cg, sg})
        add_common(*sub, o);

    std::vector<char const *> argv{"k2rank"};
    for (auto const & a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const & e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        RunConfig const cfg = make_config(o);
        std::string text;
        if (omega->parsed())
            text = emit_omega(cfg);
        else if (cls->parsed())
            text = emit_classify(cfg, o.l);
        else if (t1->parsed())
            text = emit_table(cfg, table1_names, &DensityCounts::table1);
        else if (t2->parsed())
            text = emit_table(cfg, table2_names, &DensityCounts::table2);
        else if (dens->parsed())
            text = emit_densities(cfg, o.checkpoints);
        else if (cg->parsed())
            text = emit_classgroup(cfg);
        else
            text = emit_splitgen(cfg);
        write_output(cfg, text, out);
    } catch (InvariantViolation const & e) {
        err << "invariant violation: " << e.what() << "\n";
        return exit_invariant;
    } catch (std::exception const & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

} // namespace k2rank::cli
