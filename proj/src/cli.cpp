/*
 * Copyright 2026 commutator-kit contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ckit/cli.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "ckit/algebra_io.hpp"
#include "ckit/commutator.hpp"
#include "ckit/congruence.hpp"
#include "ckit/debug.hpp"
#include "ckit/parallel.hpp"
#include "json.hpp"

namespace ckit::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public Error {
public:
    using Error::Error;
};

ojson blocks_json(const Partition& p) { return ojson{{"blocks", p.blocks()}}; }

std::string pair_text(PairAlgebra::Pair p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string format_tolerance(const Tolerance& t) {
    if (t.is_transitive()) return format_partition(t.to_partition());
    std::string out = "{";
    for (Element x = 0; x < t.size(); ++x) {
        for (Element y = 0; y < t.size(); ++y) {
            if (x != y && t.contains(x, y)) {
                if (out.size() > 1) out += ',';
                out += pair_text({x, y});
            }
        }
    }
    return out + "}";
}

Partition congruence_from_spec(const FiniteAlgebra& algebra, const std::optional<std::string>& spec,
                               bool generate, const char* name) {
    if (!spec) throw UsageError(std::string("--") + name + " is required for this command");
    Partition p = parse_partition(*spec, algebra.size());
    if (generate) return cg(algebra, PairSet::from_partition(p));
    if (!is_congruence(algebra, p)) {
        throw NotACongruence(std::string(name) + " = " + format_partition(p) + " is not a congruence");
    }
    return p;
}

int do_compute(const RunConfig& cfg, const FiniteAlgebra& algebra, std::ostream& out,
               std::ostream& err) {
    const Partition alpha = congruence_from_spec(algebra, cfg.alpha_spec, cfg.generate, "alpha");
    const Partition beta = congruence_from_spec(algebra, cfg.beta_spec, cfg.generate, "beta");
    const Partition result = commutator(algebra, alpha, beta);

    std::optional<Tolerance> oracle;
    if (cfg.oracle) {
        if (algebra.size() <= kMaxToleranceEnumeration) {
            oracle = lfp_by_meet(algebra, alpha, beta);
        } else {
            err << "note: meet oracle skipped, |A| = " << algebra.size() << " > "
                << kMaxToleranceEnumeration << "\n";
        }
    }
    const bool agree = oracle && *oracle == Tolerance::from_partition(result);

    if (cfg.output_format == Format::json) {
        ojson doc;
        doc["alpha"] = format_partition(alpha);
        doc["beta"] = format_partition(beta);
        doc["commutator"] = blocks_json(result);
        doc["text"] = format_partition(result);
        if (oracle) {
            doc["oracle"] = format_tolerance(*oracle);
            doc["verdict"] = agree ? "AGREE" : "DISAGREE";
        }
        out << doc.dump() << "\n";
    } else {
        out << format_partition(result) << "\n";
        if (oracle) {
            out << "oracle: " << format_tolerance(*oracle) << "\n";
            out << (agree ? "AGREE" : "DISAGREE") << "\n";
        }
    }
    return oracle && !agree ? kInternalError : kSuccess;
}

int do_con(const RunConfig& cfg, const FiniteAlgebra& algebra, std::ostream& out) {
    const auto lattice = cfg.parallel ? par::con_lattice(algebra) : con_lattice(algebra);
    if (cfg.output_format == Format::json) {
        ojson doc;
        doc["congruences"] = ojson::array();
        for (const auto& p : lattice) doc["congruences"].push_back(blocks_json(p));
        out << doc.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            out << "c" << i << " = " << format_partition(lattice[i]) << "\n";
        }
    }
    return kSuccess;
}

int do_table(const RunConfig& cfg, const FiniteAlgebra& algebra, std::ostream& out) {
    const CommutatorTable table = cfg.parallel ? par::commutator_table(algebra) : commutator_table(algebra);
    const std::size_t k = table.congruences.size();
    if (cfg.output_format == Format::json) {
        ojson doc;
        doc["congruences"] = ojson::array();
        for (const auto& p : table.congruences) doc["congruences"].push_back(blocks_json(p));
        doc["table"] = ojson::array();
        for (const auto& row : table.cells) {
            ojson r = ojson::array();
            for (const auto& cell : row) r.push_back(blocks_json(cell));
            doc["table"].push_back(std::move(r));
        }
        out << doc.dump() << "\n";
    } else {
        out << "congruences:\n";
        for (std::size_t i = 0; i < k; ++i) {
            out << "  c" << i << " = " << format_partition(table.congruences[i]) << "\n";
        }
        out << "commutators:\n";
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                out << "  [c" << i << ",c" << j << "] = " << format_partition(table.cells[i][j])
                    << "\n";
            }
        }
    }
    return kSuccess;
}

int do_witness(const RunConfig& cfg, const FiniteAlgebra& algebra, std::ostream& out) {
    const Partition alpha = congruence_from_spec(algebra, cfg.alpha_spec, cfg.generate, "alpha");
    const Partition beta = congruence_from_spec(algebra, cfg.beta_spec, cfg.generate, "beta");
    if (!cfg.witness_x || !cfg.witness_y) throw UsageError("witness needs two elements x y");
    const Element x = *cfg.witness_x, y = *cfg.witness_y;
    if (x >= algebra.size() || y >= algebra.size()) {
        throw DomainError("witness endpoints must be below " + std::to_string(algebra.size()));
    }

    const DeltaContext ctx = delta(algebra, alpha, beta);
    const WitnessChain chain = commutator_witness(ctx, x, y);
    const ReplayResult check = replay(ctx.pair_algebra.algebra(), chain, ctx.generators);
    if (!check) throw InternalInvariantViolation("witness chain failed replay: " + check.diagnostic);

    const auto& b = ctx.pair_algebra;
    if (cfg.output_format == Format::json) {
        ojson doc;
        doc["target"] = {x, y};
        doc["universe"] = ojson::array();
        for (const auto& [p, q] : b.universe()) doc["universe"].push_back({p, q});
        doc["chain"] = ojson::parse(witness_to_json(chain));
        doc["replay"] = true;
        out << doc.dump() << "\n";
        return kSuccess;
    }
    out << pair_text({x, y}) << " is in [alpha,beta]: Delta-related to "
        << pair_text(b.pair(chain.endpoints.first)) << "\n";
    for (std::size_t i = 0; i < chain.links.size(); ++i) {
        const auto& link = chain.links[i];
        out << "link " << i << ": " << pair_text(b.pair(link.from)) << " -> "
            << pair_text(b.pair(link.to)) << "  generator " << pair_text(b.pair(link.generator.first))
            << " ~ " << pair_text(b.pair(link.generator.second)) << "\n";
        for (const auto& step : link.translations) {
            const auto& f = b.algebra().op(step.op_index);
            out << "    " << f.name << "(";
            std::size_t c = 0;
            for (std::size_t pos = 0; pos < f.arity; ++pos) {
                if (pos) out << ", ";
                out << (pos == step.position ? std::string("_") : pair_text(b.pair(step.fixed_args[c++])));
            }
            out << ")\n";
        }
    }
    out << "replay: ok\n";
    return kSuccess;
}

int do_check(const RunConfig& cfg, const FiniteAlgebra& algebra, std::ostream& out) {
    const Partition alpha = congruence_from_spec(algebra, cfg.alpha_spec, cfg.generate, "alpha");
    const Partition beta = congruence_from_spec(algebra, cfg.beta_spec, cfg.generate, "beta");
    const Partition gamma = congruence_from_spec(algebra, cfg.gamma_spec, cfg.generate, "gamma");
    const bool holds = term_condition(algebra, alpha, beta, gamma);
    if (cfg.output_format == Format::json) {
        out << ojson{{"holds", holds}}.dump() << "\n";
    } else {
        out << "C(alpha,beta;gamma): " << (holds ? "true" : "false") << "\n";
    }
    return kSuccess;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.debug_asserts) set_debug_asserts(true);
    try {
        const FiniteAlgebra algebra = load_algebra(config.algebra_path);
        switch (config.command) {
            case Command::compute: return do_compute(config, algebra, out, err);
            case Command::table: return do_table(config, algebra, out);
            case Command::con: return do_con(config, algebra, out);
            case Command::witness: return do_witness(config, algebra, out);
            case Command::check: return do_check(config, algebra, out);
        }
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const InternalInvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const NotACongruence& e) {
        err << "error: " << e.what() << "\n";
        return kSemanticError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kSemanticError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Term-condition commutators of finite algebras", "commutator-kit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text";
    app.add_option("--algebra", cfg.algebra_path, "Algebra JSON file")->required();
    app.add_option("--alpha", cfg.alpha_spec, "Congruence alpha, e.g. \"0 2|1 3\"");
    app.add_option("--beta", cfg.beta_spec, "Congruence beta");
    app.add_option("--gamma", cfg.gamma_spec, "Congruence gamma (check)");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--oracle", cfg.oracle, "Cross-check compute against the tolerance-meet oracle");
    app.add_flag("--generate", cfg.generate, "Treat specs as generators and close them first");
    app.add_flag("--parallel", cfg.parallel, "Use the OpenMP kernels for table and con");

    auto* compute = app.add_subcommand("compute", "Print [alpha,beta]")->fallthrough();
    auto* table = app.add_subcommand("table", "Commutators of all pairs of congruences")->fallthrough();
    auto* con = app.add_subcommand("con", "List the congruence lattice")->fallthrough();
    auto* witness = app.add_subcommand("witness", "Mal'cev chain for a pair of [alpha,beta]")->fallthrough();
    Element wx = 0, wy = 0;
    witness->add_option("x", wx)->required();
    witness->add_option("y", wy)->required();
    auto* check = app.add_subcommand("check", "Decide C(alpha,beta;gamma)")->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    cfg.output_format = format == "json" ? Format::json : Format::text;
    if (const char* env = std::getenv("COMMUTATOR_KIT_DEBUG"); env && std::string(env) == "1") {
        cfg.debug_asserts = true;
    }
    if (*compute) cfg.command = Command::compute;
    if (*table) cfg.command = Command::table;
    if (*con) cfg.command = Command::con;
    if (*check) cfg.command = Command::check;
    if (*witness) {
        cfg.command = Command::witness;
        cfg.witness_x = wx;
        cfg.witness_y = wy;
    }
    return run(cfg, out, err);
}

}  // namespace ckit::cli
