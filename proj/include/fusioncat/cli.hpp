#pragma once

#include <cstdio>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusioncat/catalog.hpp"
#include "fusioncat/center.hpp"
#include "fusioncat/channels.hpp"
#include "fusioncat/errors.hpp"
#include "fusioncat/fusion_ring.hpp"
#include "fusioncat/lsm.hpp"
#include "fusioncat/perm_group.hpp"
#include "fusioncat/spin_chain.hpp"
#include "fusioncat/temperley_lieb.hpp"

namespace fusioncat::cli {

using nlohmann::json;

namespace detail {

inline std::string fmt_real(double v) {
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

// JSON reals carry 12 significant digits; integers stay integers
inline json jreal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return json::parse(buf);
}

inline json jbig(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline void emit_json(std::ostream& out, const std::string& command, json inputs, json result) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["result"] = std::move(result);
    out << doc.dump(2) << "\n";
}

inline std::string anyon_name(const MetricGroup& m, const AbelianGroup::Elem& x) {
    if (m.base().factors.size() == 1) {
        const int a = x[0], g = x[1];
        if (a == 0 && g == 0) return "1";
        std::string s;
        if (a > 0) s += a == 1 ? "e" : "e^" + std::to_string(a);
        if (g > 0) s += g == 1 ? "m" : "m^" + std::to_string(g);
        return s;
    }
    const std::size_t t = m.base().factors.size();
    std::string s = "(";
    for (std::size_t i = 0; i < t; ++i) s += (i ? "," : "") + std::to_string(x[i]);
    s += "|";
    for (std::size_t i = 0; i < t; ++i) s += (i ? "," : "") + std::to_string(x[t + i]);
    return s + ")";
}

inline std::string lagrangian_name(const MetricGroup& m, const Lagrangian& l) {
    std::string s;
    for (std::size_t i = 0; i < l.subgroup.elements.size(); ++i)
        s += (i ? "+" : "") + anyon_name(m, l.subgroup.elements[i]);
    return s;
}

inline json lagrangian_json(const Lagrangian& l) {
    json arr = json::array();
    for (const auto& x : l.subgroup.elements) arr.push_back(x);
    return arr;
}

// "--object" grammar: a label name or a '+'-separated direct sum of labels
inline std::vector<BigInt> parse_object(const FusionRing& ring, const std::string& spec) {
    std::vector<BigInt> object(ring.rank(), 0);
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t next = spec.find('+', pos);
        const std::string token = spec.substr(pos, next == std::string::npos ? std::string::npos
                                                                             : next - pos);
        if (token.empty()) throw LabelOutOfRange("empty summand in object spec '" + spec + "'");
        object[ring.label_index(token)] += 1;
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return object;
}

// subgroup generators: tuples separated by ';', coordinates by ','
inline std::vector<AbelianGroup::Elem> parse_generators(const AbelianGroup& g,
                                                        const std::string& spec) {
    std::vector<AbelianGroup::Elem> gens;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t next = spec.find(';', pos);
        std::string token = spec.substr(pos, next == std::string::npos ? std::string::npos
                                                                       : next - pos);
        AbelianGroup::Elem e;
        std::size_t tpos = 0;
        while (tpos <= token.size()) {
            const std::size_t comma = token.find(',', tpos);
            const std::string coord =
                token.substr(tpos, comma == std::string::npos ? std::string::npos : comma - tpos);
            if (!coord.empty()) e.push_back(std::stoi(coord));
            if (comma == std::string::npos) break;
            tpos = comma + 1;
        }
        if (e.size() != g.factors.size())
            throw UnknownName("generator '" + token + "' does not match the group rank");
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = ((e[i] % g.factors[i]) + g.factors[i]) % g.factors[i];
        gens.push_back(std::move(e));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return gens;
}

struct CommonArgs {
    std::string ring_spec;
    std::string group_spec;
    std::string object_spec;
    std::string state_spec;
    std::string ext_spec;
    std::string subgroup_spec;
    std::string word_spec;
    int n = 0, m = 0, k = 0, s = 1, p = 0;
    long long count = 0;
    long long order = 0;
    bool json_mode = false;
};

} // namespace detail

/// Leaf commands of the CLI, one per exposed operation.
inline std::vector<std::string> command_paths() {
    return {
        "ring verify",  "ring dims",       "ring integral", "ring tensor",
        "ring regular", "ring export",     "center lagrangians", "center lagrangian",
        "center anomaly", "center boundaries", "center fixed-forced",
        "channels table", "chain dims",    "chain regular", "chain embed",
        "chain kw-pauli", "tl dim",        "tl semisimple", "tl jw",
        "tl relations",  "tl kw-check",    "lsm verdict",   "lsm realizability",
        "lsm vacua",     "lsm duality",
    };
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fusion-category symmetry toolkit"};
    app.require_subcommand(1);
    auto ca = std::make_shared<detail::CommonArgs>();

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", ca->json_mode, "JSON output"); };

    // ---- ring ------------------------------------------------------------
    CLI::App* ring_cmd = app.add_subcommand("ring", "fusion ring operations");
    ring_cmd->require_subcommand(1);

    CLI::App* ring_verify = ring_cmd->add_subcommand("verify", "check the fusion-ring axioms");
    ring_verify->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    add_json(ring_verify);
    ring_verify->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        const VerificationReport rep = verify_ring(entry.ring);
        if (ca->json_mode) {
            json result;
            result["pass"] = rep.pass;
            if (!rep.pass) {
                result["axiom"] = rep.axiom;
                result["witness"] = rep.witness;
            }
            detail::emit_json(out, "ring verify", {{"ring", entry.ring.name()}}, result);
            return;
        }
        if (rep.pass) {
            out << "ring " << entry.ring.name() << ": pass\n";
        } else {
            out << "ring " << entry.ring.name() << ": FAIL axiom " << rep.axiom << " at (";
            for (std::size_t i = 0; i < rep.witness.size(); ++i)
                out << (i ? "," : "") << rep.witness[i];
            out << ") " << rep.detail << "\n";
        }
    });

    CLI::App* ring_dims = ring_cmd->add_subcommand("dims", "Frobenius-Perron dimensions");
    ring_dims->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    add_json(ring_dims);
    ring_dims->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        const DimensionVector dims = fp_dimensions(entry.ring);
        if (ca->json_mode) {
            json values = json::array();
            for (double d : dims.values) values.push_back(detail::jreal(d));
            json result;
            result["values"] = values;
            result["global_dim"] = detail::jreal(dims.total());
            if (dims.exact_integers) result["integers"] = *dims.exact_integers;
            detail::emit_json(out, "ring dims", {{"ring", entry.ring.name()}}, result);
            return;
        }
        for (std::size_t x = 0; x < entry.ring.rank(); ++x)
            out << "d_" << entry.ring.label(x) << " = " << detail::fmt_real(dims.values[x])
                << "\n";
        out << "Dim = " << detail::fmt_real(dims.total()) << "\n";
    });

    CLI::App* ring_integral = ring_cmd->add_subcommand("integral", "integrality verdict");
    ring_integral->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    add_json(ring_integral);
    ring_integral->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        const IntegralityVerdict v = is_integral(entry.ring);
        if (ca->json_mode) {
            json result;
            result["integral"] = v.integral;
            if (v.integral) {
                result["dims"] = *v.integer_dims;
            } else {
                json w = json::array();
                for (std::size_t i = 0; i < v.nonintegral_labels.size(); ++i)
                    w.push_back({{"label", entry.ring.label(v.nonintegral_labels[i])},
                                 {"dim", detail::jreal(v.nonintegral_values[i])}});
                result["witnesses"] = w;
            }
            detail::emit_json(out, "ring integral", {{"ring", entry.ring.name()}}, result);
            return;
        }
        if (v.integral) {
            out << "integral: yes\n";
        } else {
            out << "integral: no;";
            for (std::size_t i = 0; i < v.nonintegral_labels.size(); ++i)
                out << " d_" << entry.ring.label(v.nonintegral_labels[i]) << " = "
                    << detail::fmt_real(v.nonintegral_values[i]);
            out << "\n";
        }
    });

    CLI::App* ring_tensor =
        ring_cmd->add_subcommand("tensor", "multiplicities of an ordered tensor word");
    ring_tensor->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    ring_tensor->add_option("--word", ca->word_spec, "comma-separated labels")->required();
    add_json(ring_tensor);
    ring_tensor->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        std::vector<std::size_t> word;
        std::size_t pos = 0;
        while (pos <= ca->word_spec.size()) {
            const std::size_t comma = ca->word_spec.find(',', pos);
            const std::string token = ca->word_spec.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!token.empty()) word.push_back(entry.ring.label_index(token));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        const auto mult = tensor_multiplicities(entry.ring, word);
        if (ca->json_mode) {
            json values = json::array();
            for (const auto& v : mult) values.push_back(detail::jbig(v));
            detail::emit_json(out, "ring tensor",
                              {{"ring", entry.ring.name()}, {"word", ca->word_spec}},
                              {{"multiplicities", values}});
            return;
        }
        for (std::size_t x = 0; x < entry.ring.rank(); ++x)
            out << entry.ring.label(x) << ": " << mult[x].str() << "\n";
    });

    CLI::App* ring_regular = ring_cmd->add_subcommand("regular", "the regular object");
    ring_regular->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    add_json(ring_regular);
    ring_regular->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        const auto reg = regular_object(entry.ring);
        if (ca->json_mode) {
            detail::emit_json(out, "ring regular", {{"ring", entry.ring.name()}},
                              {{"multiplicities", reg}});
            return;
        }
        out << "R =";
        for (std::size_t x = 0; x < entry.ring.rank(); ++x)
            out << " " << reg[x] << "*" << entry.ring.label(x);
        out << "\n";
    });

    CLI::App* ring_export = ring_cmd->add_subcommand("export", "write the ring file format");
    ring_export->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    ring_export->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        write_ring(entry.ring, out);
    });

    // ---- center ----------------------------------------------------------
    CLI::App* center_cmd = app.add_subcommand("center", "doubles of pointed categories");
    center_cmd->require_subcommand(1);

    CLI::App* c_lag = center_cmd->add_subcommand("lagrangians", "enumerate Lagrangian subgroups");
    c_lag->add_option("--group", ca->group_spec, "abelian group, e.g. Z/2 or Z/2xZ/2")
        ->required();
    add_json(c_lag);
    c_lag->callback([ca, &out] {
        const MetricGroup m = center_of_pointed(parse_group_spec(ca->group_spec));
        const auto ls = enumerate_lagrangians(m);
        if (ca->json_mode) {
            json arr = json::array();
            for (const auto& l : ls) arr.push_back(detail::lagrangian_json(l));
            detail::emit_json(out, "center lagrangians", {{"group", ca->group_spec}},
                              {{"count", ls.size()}, {"lagrangians", arr}});
            return;
        }
        for (const auto& l : ls) out << detail::lagrangian_name(m, l) << "\n";
        out << "count " << ls.size() << "\n";
    });

    CLI::App* c_pair =
        center_cmd->add_subcommand("lagrangian", "Lagrangian from a subgroup H (trivial b)");
    c_pair->add_option("--group", ca->group_spec, "abelian group")->required();
    c_pair->add_option("--subgroup", ca->subgroup_spec, "generators of H, e.g. '2' or '1,0;0,1'")
        ->required();
    add_json(c_pair);
    c_pair->callback([ca, &out] {
        const AbelianGroup g = parse_group_spec(ca->group_spec);
        const MetricGroup m = center_of_pointed(g);
        const auto gens = detail::parse_generators(g, ca->subgroup_spec);
        // generator orders for the trivial bicharacter table
        std::vector<int> orders;
        for (const auto& gen : gens) {
            int ord = 1;
            auto cur = gen;
            while (cur != g.zero()) { cur = g.add(cur, gen); ++ord; }
            orders.push_back(ord);
        }
        const Lagrangian l = lagrangian_from_pair(m, gens, Bicharacter::trivial(orders));
        if (ca->json_mode) {
            detail::emit_json(out, "center lagrangian",
                              {{"group", ca->group_spec}, {"subgroup", ca->subgroup_spec}},
                              {{"order", l.order}, {"elements", detail::lagrangian_json(l)}});
            return;
        }
        out << detail::lagrangian_name(m, l) << "\n";
    });

    CLI::App* c_anom = center_cmd->add_subcommand("anomaly", "TY duality anomaly verdict");
    c_anom->add_option("--group", ca->group_spec, "cyclic group Z/n")->required();
    c_anom->add_option("--s", ca->s, "bicharacter parameter, coprime to n");
    add_json(c_anom);
    c_anom->callback([ca, &out] {
        const MetricGroup m = center_of_pointed(parse_group_spec(ca->group_spec));
        const CenterAutomorphism phi = ty_duality_auto(m, ca->s);
        const AnomalyVerdict v = anomaly_verdict(m, phi);
        if (ca->json_mode) {
            json orbits = json::array();
            for (const auto& o : v.orbits) orbits.push_back(o);
            json fixed = json::array();
            for (std::size_t i : v.fixed)
                fixed.push_back(detail::lagrangian_json(v.lagrangians[i]));
            detail::emit_json(out, "center anomaly",
                              {{"group", ca->group_spec}, {"s", ca->s}},
                              {{"anomalous", v.anomalous},
                               {"orbits", orbits},
                               {"fixed", fixed},
                               {"lagrangian_count", v.lagrangians.size()}});
            return;
        }
        out << "lagrangians " << v.lagrangians.size() << "\n";
        for (const auto& o : v.orbits) {
            out << "orbit:";
            for (std::size_t i : o) out << " " << detail::lagrangian_name(m, v.lagrangians[i]);
            out << "\n";
        }
        out << (v.anomalous ? "anomalous: yes\n" : "anomalous: no\n");
    });

    CLI::App* c_bound = center_cmd->add_subcommand("boundaries", "gapped boundary count of D(G)");
    c_bound->add_option("--group", ca->group_spec, "s3|a4|s4|d4|q8|zN or Z/n")->required();
    add_json(c_bound);
    c_bound->callback([ca, &out] {
        std::string name = ca->group_spec;
        if (name.rfind("Z/", 0) == 0) name = "z" + name.substr(2);
        const PermGroup g = named_group(name);
        const BoundaryCount bc = boundary_count_group(g);
        if (ca->json_mode) {
            json classes = json::array();
            for (const auto& c : bc.classes)
                classes.push_back({{"name", c.name},
                                   {"order", c.order},
                                   {"class_size", c.class_size},
                                   {"multiplier", c.multiplier}});
            detail::emit_json(out, "center boundaries", {{"group", ca->group_spec}},
                              {{"classes", classes}, {"total", bc.total}});
            return;
        }
        for (const auto& c : bc.classes)
            out << c.name << "  order " << c.order << "  conjugates " << c.class_size
                << "  multiplier " << c.multiplier << "\n";
        out << "total " << bc.total << "\n";
    });

    CLI::App* c_forced =
        center_cmd->add_subcommand("fixed-forced", "orbit-counting fixed-point test");
    c_forced->add_option("--count", ca->count, "number of permuted objects")->required();
    c_forced->add_option("--order", ca->order, "prime order of the action")->required();
    add_json(c_forced);
    c_forced->callback([ca, &out] {
        const bool forced = orbit_fixed_point_forced(ca->count, ca->order);
        if (ca->json_mode) {
            detail::emit_json(out, "center fixed-forced",
                              {{"count", ca->count}, {"order", ca->order}},
                              {{"forced", forced}});
            return;
        }
        out << (forced ? "fixed point forced\n" : "no fixed point forced\n");
    });

    // ---- channels ----------------------------------------------------------
    CLI::App* channels_cmd = app.add_subcommand("channels", "symmetry channel hypergroup");
    channels_cmd->require_subcommand(1);

    CLI::App* ch_table = channels_cmd->add_subcommand("table", "full composition table and E");
    ch_table->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    add_json(ch_table);
    ch_table->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        const FusionRing& ring = entry.ring;
        const ChannelCombo e = conditional_expectation(ring);
        auto render = [&](const ChannelCombo& c) {
            std::string s;
            bool first = true;
            for (std::size_t z = 0; z < ring.rank(); ++z) {
                if (c.coeff[z] == 0.0) continue;
                if (!first) s += " + ";
                s += detail::fmt_real(c.coeff[z]) + " l_" + ring.label(z);
                first = false;
            }
            return s.empty() ? std::string("0") : s;
        };
        if (ca->json_mode) {
            json table = json::array();
            for (std::size_t x = 0; x < ring.rank(); ++x) {
                json row = json::array();
                for (std::size_t y = 0; y < ring.rank(); ++y) {
                    const ChannelCombo c = lambda_compose(ring, x, y);
                    json coeffs = json::array();
                    for (double v : c.coeff) coeffs.push_back(detail::jreal(v));
                    row.push_back(coeffs);
                }
                table.push_back(row);
            }
            json ev = json::array();
            for (double v : e.coeff) ev.push_back(detail::jreal(v));
            detail::emit_json(out, "channels table", {{"ring", ring.name()}},
                              {{"lambda", table}, {"E", ev}});
            return;
        }
        for (std::size_t x = 0; x < ring.rank(); ++x)
            for (std::size_t y = 0; y < ring.rank(); ++y)
                out << "l_" << ring.label(x) << " . l_" << ring.label(y) << " = "
                    << render(lambda_compose(ring, x, y)) << "\n";
        out << "E = " << render(e) << "\n";
    });

    // ---- chain -------------------------------------------------------------
    CLI::App* chain_cmd = app.add_subcommand("chain", "fusion spin chain combinatorics");
    chain_cmd->require_subcommand(1);

    CLI::App* chain_dims_cmd = chain_cmd->add_subcommand("dims", "dims of End(X^k), k = 1..n");
    chain_dims_cmd->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    chain_dims_cmd->add_option("--object", ca->object_spec, "label or direct sum, e.g. X0+X1")
        ->required();
    chain_dims_cmd->add_option("--n", ca->n, "chain length")->required();
    add_json(chain_dims_cmd);
    chain_dims_cmd->callback([ca, &out, &err] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        const auto object = detail::parse_object(entry.ring, ca->object_spec);
        const ChainDims cd = chain_dims_object(entry.ring, object, ca->n);
        if (!cd.generator_self_dual)
            err << "warning: generator is not self-dual; chain conventions assume dual[X] = X\n";
        if (ca->json_mode) {
            json dims = json::array();
            for (const auto& d : cd.end_dims) dims.push_back(detail::jbig(d));
            detail::emit_json(out, "chain dims",
                              {{"ring", entry.ring.name()},
                               {"object", ca->object_spec},
                               {"n", ca->n}},
                              {{"end_dims", dims}, {"self_dual", cd.generator_self_dual}});
            return;
        }
        for (std::size_t k = 0; k < cd.end_dims.size(); ++k)
            out << "k=" << k + 1 << " dim End = " << cd.end_dims[k].str() << "\n";
    });

    CLI::App* chain_reg = chain_cmd->add_subcommand("regular", "bigraded dims of the regular object");
    chain_reg->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    add_json(chain_reg);
    chain_reg->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        const BigradedDims bd = regular_bigraded(entry.ring);
        if (ca->json_mode) {
            detail::emit_json(out, "chain regular", {{"ring", entry.ring.name()}},
                              {{"dims", bd.dims}, {"onsite", bd.onsite}});
            return;
        }
        for (std::size_t x = 0; x < bd.dims.size(); ++x) {
            for (std::size_t y = 0; y < bd.dims[x].size(); ++y)
                out << (y ? " " : "") << bd.dims[x][y];
            out << "\n";
        }
        out << "onsite d = " << bd.onsite << "\n";
    });

    CLI::App* chain_embed = chain_cmd->add_subcommand("embed", "spread-1 embedding bookkeeping");
    chain_embed->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    chain_embed->add_option("--k", ca->k, "number of sites")->required();
    add_json(chain_embed);
    chain_embed->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        const EmbeddingReport rep = embedding_dim_check(entry.ring, ca->k);
        if (ca->json_mode) {
            detail::emit_json(out, "chain embed",
                              {{"ring", entry.ring.name()}, {"k", ca->k}},
                              {{"pass", rep.pass},
                               {"onsite", rep.onsite},
                               {"total", detail::jbig(rep.lhs_total)},
                               {"bound", detail::jbig(rep.bound)}});
            return;
        }
        out << (rep.pass ? "pass" : "FAIL") << ": sum " << rep.lhs_total.str() << " <= bound "
            << rep.bound.str() << "\n";
    });

    CLI::App* chain_kw = chain_cmd->add_subcommand("kw-pauli", "Pauli-level KW generator check");
    chain_kw->add_option("--n", ca->n, "window size")->required();
    add_json(chain_kw);
    chain_kw->callback([ca, &out] {
        const PauliKwReport rep = pauli_kw_check(ca->n);
        if (ca->json_mode) {
            detail::emit_json(out, "chain kw-pauli", {{"n", ca->n}},
                              {{"pass", rep.pass}, {"pairs_checked", rep.pairs_checked}});
            return;
        }
        out << (rep.pass ? "pass" : "FAIL") << " (" << rep.pairs_checked
            << " generator pairs)\n";
    });

    // ---- tl ----------------------------------------------------------------
    CLI::App* tl_cmd = app.add_subcommand("tl", "Temperley-Lieb diagram algebra");
    tl_cmd->require_subcommand(1);

    CLI::App* tl_dim_cmd = tl_cmd->add_subcommand("dim", "diagram count of TL_m");
    tl_dim_cmd->add_option("--m", ca->m, "strand count")->required();
    add_json(tl_dim_cmd);
    tl_dim_cmd->callback([ca, &out] {
        const long long d = tl_dim(ca->m);
        if (ca->json_mode) {
            detail::emit_json(out, "tl dim", {{"m", ca->m}}, {{"dim", d}});
            return;
        }
        out << "dim TL_" << ca->m << " = " << d << "\n";
    });

    CLI::App* tl_semi = tl_cmd->add_subcommand("semisimple", "dim of the level-k quotient");
    tl_semi->add_option("--k", ca->k, "level")->required();
    tl_semi->add_option("--m", ca->m, "strand count")->required();
    add_json(tl_semi);
    tl_semi->callback([ca, &out] {
        const BigInt d = semisimple_dims(ca->k, ca->m);
        if (ca->json_mode) {
            detail::emit_json(out, "tl semisimple", {{"k", ca->k}, {"m", ca->m}},
                              {{"dim", detail::jbig(d)}});
            return;
        }
        out << "dim TL_" << ca->m << " at level " << ca->k << " = " << d.str() << "\n";
    });

    CLI::App* tl_jw = tl_cmd->add_subcommand("jw", "Jones-Wenzl idempotent diagnostics");
    tl_jw->add_option("--p", ca->p, "projector index")->required();
    tl_jw->add_option("--k", ca->k, "level fixing delta = 2cos(pi/(k+2))")->required();
    add_json(tl_jw);
    tl_jw->callback([ca, &out] {
        const double delta = loop_parameter(ca->k);
        const TLElement jw = jones_wenzl(ca->p, delta);
        const double idem = (multiply(jw, jw) - jw).norm_inf();
        double annih = 0;
        for (int i = 1; i <= ca->p - 1; ++i)
            annih = std::max(annih, multiply(jones_projection(i, ca->p, delta), jw).norm_inf());
        if (ca->json_mode) {
            detail::emit_json(out, "tl jw", {{"p", ca->p}, {"k", ca->k}},
                              {{"terms", jw.terms().size()},
                               {"idempotence_residual", detail::jreal(idem)},
                               {"annihilation_residual", detail::jreal(annih)}});
            return;
        }
        out << "JW_" << ca->p << ": " << jw.terms().size() << " diagrams, |JW^2-JW| = "
            << detail::fmt_real(idem) << ", max |e_i JW| = " << detail::fmt_real(annih) << "\n";
    });

    CLI::App* tl_rel = tl_cmd->add_subcommand("relations", "verify the Jones projection relations");
    tl_rel->add_option("--m", ca->m, "strand count")->required();
    tl_rel->add_option("--k", ca->k, "level fixing delta")->required();
    add_json(tl_rel);
    tl_rel->callback([ca, &out] {
        const double delta = loop_parameter(ca->k);
        const double tol = 1e-10;
        bool pass = true;
        int checked = 0;
        for (int i = 1; i <= ca->m - 1; ++i) {
            const TLElement ei = jones_projection(i, ca->m, delta);
            if ((multiply(ei, ei) - ei).norm_inf() > tol) pass = false;
            ++checked;
            for (int j = i + 1; j <= ca->m - 1; ++j) {
                const TLElement ej = jones_projection(j, ca->m, delta);
                if (j - i >= 2) {
                    if ((multiply(ei, ej) - multiply(ej, ei)).norm_inf() > tol) pass = false;
                } else {
                    const double inv2 = 1.0 / (delta * delta);
                    if ((multiply(multiply(ei, ej), ei) - inv2 * ei).norm_inf() > tol)
                        pass = false;
                }
                ++checked;
            }
        }
        if (ca->json_mode) {
            detail::emit_json(out, "tl relations", {{"m", ca->m}, {"k", ca->k}},
                              {{"pass", pass}, {"relations_checked", checked}});
            return;
        }
        out << (pass ? "pass" : "FAIL") << " (" << checked << " relations)\n";
    });

    CLI::App* tl_kw = tl_cmd->add_subcommand("kw-check", "shift e_i -> e_{i-1} duality check");
    tl_kw->add_option("--k", ca->k, "level")->required();
    tl_kw->add_option("--m", ca->m, "window strand count")->required();
    add_json(tl_kw);
    tl_kw->callback([ca, &out] {
        const KwShiftReport rep = kw_shift_check(ca->k, ca->m);
        if (ca->json_mode) {
            detail::emit_json(out, "tl kw-check", {{"k", ca->k}, {"m", ca->m}},
                              {{"pass", rep.pass},
                               {"relations_ok", rep.relations_ok},
                               {"jw_ok", rep.jw_ok},
                               {"hamiltonian_ok", rep.hamiltonian_ok},
                               {"detail", rep.detail}});
            return;
        }
        out << (rep.pass ? "pass" : "FAIL") << ": relations "
            << (rep.relations_ok ? "ok" : "FAIL") << ", killed projector "
            << (rep.jw_ok ? "ok" : "FAIL") << ", H_{J,h} -> H_{h,J} "
            << (rep.hamiltonian_ok ? "ok" : "FAIL");
        if (!rep.detail.empty()) out << " (" << rep.detail << ")";
        out << "\n";
    });

    // ---- lsm ---------------------------------------------------------------
    CLI::App* lsm_cmd = app.add_subcommand("lsm", "realizability and gaplessness verdicts");
    lsm_cmd->require_subcommand(1);

    CLI::App* lsm_verdict_cmd = lsm_cmd->add_subcommand("verdict", "LSM verdict for a ring");
    lsm_verdict_cmd->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    add_json(lsm_verdict_cmd);
    lsm_verdict_cmd->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        const StateVerdict v = lsm_verdict(entry);
        const char* kind = v.kind == StateKind::Gapless
                               ? "gapless"
                               : v.kind == StateKind::Topological ? "topological" : "indeterminate";
        if (ca->json_mode) {
            detail::emit_json(out, "lsm verdict", {{"ring", entry.ring.name()}},
                              {{"kind", kind}, {"reason", v.reason}});
            return;
        }
        out << kind << ": " << v.reason << "\n";
    });

    CLI::App* lsm_real = lsm_cmd->add_subcommand("realizability", "realizability matrix");
    lsm_real->add_option("--ring", ca->ring_spec, "ring name or file")->required();
    add_json(lsm_real);
    lsm_real->callback([ca, &out] {
        const CatalogEntry entry = ring_from_spec(ca->ring_spec);
        const RealizabilityReport rep = realizability_report(entry);
        if (ca->json_mode) {
            detail::emit_json(out, "lsm realizability", {{"ring", entry.ring.name()}},
                              {{"anyon_chain", rep.anyon_chain},
                               {"tensor_product", rep.tensor_product},
                               {"onsite_tensor_product", to_string(rep.onsite)},
                               {"reason", rep.reason}});
            return;
        }
        out << "anyon chain: always\n"
            << "tensor product: " << (rep.tensor_product ? "yes" : "no") << "\n"
            << "on-site tensor product: " << to_string(rep.onsite) << " (" << rep.reason << ")\n";
    });

    CLI::App* lsm_vacua = lsm_cmd->add_subcommand("vacua", "vacua count of an induced state");
    lsm_vacua->add_option("--group", ca->group_spec, "abelian group")->required();
    lsm_vacua->add_option("--state", ca->state_spec, "generators of H for the state Lagrangian")
        ->required();
    lsm_vacua->add_option("--ext", ca->ext_spec, "generators of H for the extension Lagrangian")
        ->required();
    add_json(lsm_vacua);
    lsm_vacua->callback([ca, &out] {
        const AbelianGroup g = parse_group_spec(ca->group_spec);
        const MetricGroup m = center_of_pointed(g);
        auto build = [&](const std::string& spec) {
            const auto gens = detail::parse_generators(g, spec);
            std::vector<int> orders;
            for (const auto& gen : gens) {
                int ord = 1;
                auto cur = gen;
                while (cur != g.zero()) { cur = g.add(cur, gen); ++ord; }
                orders.push_back(ord);
            }
            return lagrangian_from_pair(m, gens, Bicharacter::trivial(orders));
        };
        const Lagrangian l_state = build(ca->state_spec);
        const Lagrangian l_ext = build(ca->ext_spec);
        const std::size_t n = vacua_count(m, l_state, l_ext);
        if (ca->json_mode) {
            detail::emit_json(out, "lsm vacua",
                              {{"group", ca->group_spec},
                               {"state", ca->state_spec},
                               {"ext", ca->ext_spec}},
                              {{"vacua", n}});
            return;
        }
        out << "vacua " << n << "\n";
    });

    CLI::App* lsm_dual = lsm_cmd->add_subcommand("duality", "anomalous-duality gaplessness");
    lsm_dual->add_option("--group", ca->group_spec, "cyclic group Z/n")->required();
    lsm_dual->add_option("--s", ca->s, "bicharacter parameter");
    add_json(lsm_dual);
    lsm_dual->callback([ca, &out] {
        const MetricGroup m = center_of_pointed(parse_group_spec(ca->group_spec));
        const CenterAutomorphism phi = ty_duality_auto(m, ca->s);
        const DualityVerdict v = duality_gapless_verdict(m, phi);
        const char* kind = v.kind == StateKind::Gapless ? "gapless" : "indeterminate";
        if (ca->json_mode) {
            json fixed = json::array();
            for (std::size_t i : v.anomaly.fixed)
                fixed.push_back(detail::lagrangian_json(v.anomaly.lagrangians[i]));
            detail::emit_json(out, "lsm duality",
                              {{"group", ca->group_spec}, {"s", ca->s}},
                              {{"kind", kind}, {"reason", v.reason}, {"fixed", fixed}});
            return;
        }
        out << kind << ": " << v.reason << "\n";
        for (std::size_t i : v.anomaly.fixed)
            out << "fixed: " << detail::lagrangian_name(m, v.anomaly.lagrangians[i]) << "\n";
    });

    try {
        std::reverse(args.begin(), args.end()); // CLI11 consumes a reversed vector
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace fusioncat::cli
