// Command-line driver: semistability checks, discrepancy witnesses,
// Harder-Narasimhan filtrations, Kempf one-parameter subgroups, certificate
// verification, oracles, and instance generation. JSON in, JSON out.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qstab/io.hpp"
#include "qstab/oracles.hpp"

namespace {

qstab::json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw qstab::InputError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return qstab::json::parse(text);
    } catch (const std::exception& e) {
        throw qstab::InputError(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const qstab::json& j) { std::cout << qstab::dump_deterministic(j) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified stability toolkit for representations of acyclic quivers"};
    app.require_subcommand(1);

    std::string input = "-";
    uint64_t seed = 0;
    int retries = 6;
    std::string convention = "t0";

    auto add_common = [&](CLI::App* cmd, bool takes_instance = true) {
        if (takes_instance) cmd->add_option("input", input, "instance file, or - for stdin");
        cmd->add_option("--seed", seed, "seed for randomized certificate search");
        cmd->add_option("--retries", retries, "blow-up retry budget");
    };

    CLI::App* cmd_check = app.add_subcommand("check", "semistability and G value");
    add_common(cmd_check);
    CLI::App* cmd_disc = app.add_subcommand("disc", "discrepancy, witness, certificate");
    add_common(cmd_disc);
    CLI::App* cmd_hn = app.add_subcommand("hn", "Harder-Narasimhan filtration");
    add_common(cmd_hn);
    CLI::App* cmd_kempf = app.add_subcommand("kempf", "maximally destabilizing 1-PS");
    add_common(cmd_kempf);
    cmd_kempf->add_option("--convention", convention, "limit convention: t0 or tinf")
        ->check(CLI::IsMember({"t0", "tinf"}));
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "exhaustive cross-check oracles");
    cmd_oracle->add_option("input", input, "instance file, or - for stdin");

    CLI::App* cmd_verify = app.add_subcommand("verify-certificate", "re-check a certificate");
    std::string instance_path, cert_path;
    cmd_verify->add_option("--instance", instance_path, "instance the certificate refers to")
        ->required();
    cmd_verify->add_option("certificate", cert_path, "certificate file (or disc output)")
        ->required();

    CLI::App* cmd_gen = app.add_subcommand("gen", "emit a reproducible random instance");
    qstab::GenSpec spec;
    long index = 0;
    std::string klass = "general";
    cmd_gen->add_option("--seed", spec.seed, "stream seed");
    cmd_gen->add_option("--index", index, "index within the stream");
    cmd_gen->add_option("--class", klass, "instance class")
        ->check(CLI::IsMember({"general", "bipartite"}));
    cmd_gen->add_option("--max-vertices", spec.max_vertices, "vertex budget");
    cmd_gen->add_option("--max-dim", spec.max_dim, "per-vertex dimension budget");
    cmd_gen->add_option("--density", spec.density_pct, "arrow density (percent)");
    cmd_gen->add_option("--omega", spec.omega_max, "weight entry bound");
    cmd_gen->add_option("--kappa-max", spec.kappa_max, "kappa entry bound");
    cmd_gen->add_flag("--theta-zero", "balance theta so that theta(M) = 0");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_gen->parsed()) {
            spec.klass = klass == "bipartite" ? qstab::InstanceClass::bipartite
                                              : qstab::InstanceClass::general;
            qstab::Instance inst = qstab::gen_instance(spec, index);
            if (cmd_gen->count("--theta-zero") || spec.klass == qstab::InstanceClass::bipartite)
                qstab::force_theta_zero(inst);
            emit(qstab::instance_to_json(inst));
            return 0;
        }
        if (cmd_verify->parsed()) {
            qstab::Instance inst = qstab::parse_instance(read_json(instance_path));
            qstab::json out = qstab::verify_certificate_output(inst, read_json(cert_path));
            emit(out);
            return out["ok"].get<bool>() ? 0 : 2;
        }
        qstab::Instance inst = qstab::parse_instance(read_json(input));
        qstab::DiscOptions opt;
        opt.attempts = retries;
        if (cmd_check->parsed()) emit(qstab::check_output(inst, seed, opt));
        if (cmd_disc->parsed()) emit(qstab::disc_output(inst, seed, opt));
        if (cmd_hn->parsed()) emit(qstab::hn_output(inst, seed, opt));
        if (cmd_kempf->parsed())
            emit(qstab::kempf_output(inst, seed,
                                     convention == "tinf" ? qstab::LimitConvention::tinf
                                                          : qstab::LimitConvention::t0,
                                     opt));
        if (cmd_oracle->parsed()) emit(qstab::oracle_output(inst));
        return 0;
    } catch (const qstab::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const qstab::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const qstab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
