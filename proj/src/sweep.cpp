#include "absep/sweep.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "absep/json_io.hpp"
#include "absep/state_criteria.hpp"
#include "absep/tolerances.hpp"

namespace absep {

using nlohmann::json;

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

json replace_placeholders(const json& node, const std::vector<std::string>& names,
                          const std::vector<double>& values, std::vector<int>& replacements) {
    if (node.is_object()) {
        json out = json::object();
        for (auto it = node.begin(); it != node.end(); ++it)
            out[it.key()] = replace_placeholders(it.value(), names, values, replacements);
        return out;
    }
    if (node.is_array()) {
        json out = json::array();
        for (const auto& v : node) out.push_back(replace_placeholders(v, names, values, replacements));
        return out;
    }
    if (node.is_string()) {
        const std::string s = node.get<std::string>();
        if (!s.empty() && s.front() == '$') {
            for (std::size_t i = 0; i < names.size(); ++i)
                if (s.compare(1, std::string::npos, names[i]) == 0) {
                    ++replacements[i];
                    return json(values[i]);
                }
            throw std::invalid_argument("sweep: placeholder '" + s + "' matches no axis");
        }
    }
    return node;
}

std::string map_status_word(MapStatus s) {
    switch (s) {
        case MapStatus::AbsolutelySeparating: return "AS";
        case MapStatus::NotAbsolutelySeparating: return "notAS";
        default: return "undet";
    }
}

SweepValue from_map_verdict(const MapVerdict& v) {
    return SweepValue{map_status_word(v.status), v.margin};
}

const LocalProduct& expect_local_product(const ChannelSpec& c, const char* id) {
    const auto* lp = c.get_if<LocalProduct>();
    if (!lp) throw std::invalid_argument(std::string(id) + ": needs a local_product channel");
    return *lp;
}

std::vector<double> qubit_dep_params(const ChannelSpec& c, const char* id) {
    const auto& lp = expect_local_product(c, id);
    std::vector<double> qs;
    for (const auto& f : lp.factors) {
        const auto* d = f.get_if<Depolarizing>();
        if (!d || d->d != 2)
            throw std::invalid_argument(std::string(id) + ": needs qubit depolarizing factors");
        qs.push_back(d->q);
    }
    return qs;
}

std::vector<UnitalQubit> unital_params(const ChannelSpec& c, const char* id) {
    const auto& lp = expect_local_product(c, id);
    std::vector<UnitalQubit> us;
    for (const auto& f : lp.factors) {
        const auto* u = f.get_if<UnitalQubit>();
        if (!u) throw std::invalid_argument(std::string(id) + ": needs unital qubit factors");
        us.push_back(*u);
    }
    return us;
}

const TraceIdTranspose& expect_ctit(const ChannelSpec& c, const char* id) {
    const auto* ct = c.get_if<TraceIdTranspose>();
    if (!ct) throw std::invalid_argument(std::string(id) + ": needs a ctit channel");
    return *ct;
}

// CP factors make a CP product; a non-CP factor sinks it (fixing a state on
// the other slot exhibits the non-CP block).
SweepValue cp_value(const ChannelSpec& c) {
    if (const auto* lp = c.get_if<LocalProduct>()) {
        double margin = std::numeric_limits<double>::infinity();
        for (const auto& f : lp->factors) margin = std::min(margin, is_completely_positive(f).margin);
        return SweepValue{margin >= -kNegativityTol ? "CP" : "notCP", margin};
    }
    const Verdict v = is_completely_positive(c);
    return SweepValue{v.status == Status::Holds ? "CP" : "notCP", v.margin};
}

SweepValue positivity_value(const ChannelSpec& c) {
    if (const auto* ct = c.get_if<TraceIdTranspose>()) {
        const double margin =
            std::min({1.0 + ct->alpha, 1.0 + ct->beta, 1.0 + ct->alpha + ct->beta});
        return SweepValue{margin >= -kBoundaryTol ? "pos" : "notpos", margin};
    }
    return SweepValue{is_positivity_region(c) ? "pos" : "notpos", 0.0};
}

}  // namespace

SweepValue evaluate_criterion(const std::string& id, const ChannelSpec& c, const Partition& part) {
    const auto* bip = std::get_if<Bipartition>(&part);
    auto need_bip = [&]() -> Bipartition {
        if (!bip) throw std::invalid_argument(id + ": needs a bipartition");
        return *bip;
    };

    if (id == "local-dep-exact") {
        const auto qs = qubit_dep_params(c, id.c_str());
        if (qs.size() != 2) throw std::invalid_argument(id + ": needs exactly 2 factors");
        return from_map_verdict(local_dep_2q_exact(qs[0], qs[1]));
    }
    if (id == "local-dep-sufficient") {
        const auto qs = qubit_dep_params(c, id.c_str());
        if (qs.size() != 2) throw std::invalid_argument(id + ": needs exactly 2 factors");
        return from_map_verdict(local_dep_2q_sufficient(qs[0], qs[1]));
    }
    if (id == "nqubit-dep-sufficient")
        return from_map_verdict(nqubit_ball_sufficient(
            max_output_purity(c), static_cast<int>(qubit_dep_params(c, id.c_str()).size())));
    if (id == "nqubit-dep-necessary") {
        const auto qs = qubit_dep_params(c, id.c_str());
        for (double q : qs)
            if (q != qs[0]) throw std::invalid_argument(id + ": needs uniform factors");
        return from_map_verdict(nqubit_dep_not_as(qs[0], static_cast<int>(qs.size())));
    }
    if (id == "local-unital-sufficient") {
        const auto us = unital_params(c, id.c_str());
        if (us.size() != 2) throw std::invalid_argument(id + ": needs exactly 2 factors");
        return from_map_verdict(local_unital_sufficient(us[0], us[1]));
    }
    if (id == "nqubit-unital-sufficient")
        return from_map_verdict(nqubit_unital_sufficient(unital_params(c, id.c_str())));
    if (id == "ctit-sufficient") {
        const auto& ct = expect_ctit(c, id.c_str());
        return from_map_verdict(ctit_sufficient(ct.alpha, ct.beta, need_bip()));
    }
    if (id == "ctit-2n-exact") {
        const auto& ct = expect_ctit(c, id.c_str());
        const Bipartition b = need_bip();
        if (std::min(b.m, b.n) != 2) throw std::invalid_argument(id + ": needs a 2|n partition");
        return from_map_verdict(ctit_2n_exact(ct.alpha, ct.beta, std::max(b.m, b.n)));
    }
    if (id == "ctit-necessary") {
        const auto& ct = expect_ctit(c, id.c_str());
        return from_map_verdict(ctit_necessary(ct.alpha, ct.beta));
    }
    if (id == "ctit-nqubit-sufficient") {
        const auto& ct = expect_ctit(c, id.c_str());
        int n = 0;
        while ((1 << (n + 1)) <= ct.d) ++n;
        if ((1 << n) != ct.d) throw std::invalid_argument(id + ": channel dim must be 2^N");
        return from_map_verdict(ctit_nqubit(ct.alpha, ct.beta, n));
    }
    if (id == "bipartite-dep-sufficient" || id == "bipartite-dep-necessary") {
        const auto* bd = c.get_if<BipartiteDepolarizing>();
        if (!bd) throw std::invalid_argument(id + ": needs a bipartite_depolarizing channel");
        const Bipartition b(bd->m, bd->n);
        return from_map_verdict(id == "bipartite-dep-sufficient"
                                    ? bipartite_dep_sufficient(bd->alpha, bd->beta, bd->gamma, b)
                                    : bipartite_dep_necessary(bd->alpha, bd->beta, bd->gamma, b));
    }
    if (id == "covariant-ea") {
        const auto* dep = c.get_if<Depolarizing>();
        if (!dep) throw std::invalid_argument(id + ": needs a depolarizing channel");
        return from_map_verdict(covariant_ea_equivalence(*dep, need_bip()));
    }
    if (id == "ball-sufficient") return from_map_verdict(ball_sufficient(max_output_purity(c), need_bip()));
    if (id == "anti-ball-necessary")
        return from_map_verdict(anti_ball_necessary(max_output_purity(c), need_bip()));
    if (id == "cp") return cp_value(c);
    if (id == "positive") return positivity_value(c);
    throw std::invalid_argument("sweep: unknown criterion '" + id + "'");
}

SweepSpec sweep_spec_from_json(const json& j) {
    SweepSpec s;
    if (j.contains("preset")) return preset_sweep(j["preset"].get<std::string>());
    if (!j.is_object() || !j.contains("family") || !j.contains("axes") || !j.contains("partition") ||
        !j.contains("criteria"))
        throw std::invalid_argument(
            "sweep spec: need \"family\", \"axes\", \"partition\", \"criteria\" (or \"preset\")");
    s.name = j.value("name", "custom");
    s.family_template = j["family"];
    for (const auto& a : j["axes"]) {
        SweepAxis ax;
        ax.name = a.at("name").get<std::string>();
        ax.min = a.at("min").get<double>();
        ax.max = a.at("max").get<double>();
        ax.steps = a.at("steps").get<int>();
        if (ax.steps < 2) throw std::invalid_argument("sweep spec: each axis needs steps >= 2");
        if (!(ax.max > ax.min)) throw std::invalid_argument("sweep spec: axis max must exceed min");
        s.axes.push_back(std::move(ax));
    }
    if (s.axes.empty() || s.axes.size() > 3)
        throw std::invalid_argument("sweep spec: 1 to 3 axes supported");
    s.partition = parse_partition(j["partition"].get<std::string>());
    s.criteria = j["criteria"].get<std::vector<std::string>>();
    if (s.criteria.empty()) throw std::invalid_argument("sweep spec: empty criteria list");
    s.seed = j.value("seed", 0ULL);
    return s;
}

std::vector<std::string> preset_names() {
    return {"figure1", "figure3", "figure4", "figure5", "figure6", "figure7"};
}

SweepSpec preset_sweep(const std::string& name) {
    SweepSpec s;
    s.name = name;
    if (name == "figure1") {
        s.kind = SweepKind::PurityBounds;
        s.mn_min = 4;
        s.mn_max = 64;
        return s;
    }
    if (name == "figure3") {
        s.family_template =
            json{{"family", "local_product"},
                 {"factors", json::array({json{{"family", "depolarizing"}, {"d", 2}, {"q", "$q1"}},
                                          json{{"family", "depolarizing"}, {"d", 2}, {"q", "$q2"}}})}};
        s.axes = {{"q1", -1.0, 1.0, 400}, {"q2", -1.0, 1.0, 400}};
        s.partition = Bipartition(2, 2);
        s.criteria = {"local-dep-exact", "local-dep-sufficient"};
        return s;
    }
    if (name == "figure4") {
        const json factor =
            json{{"family", "unital_qubit"}, {"l1", "$l1"}, {"l2", "$l2"}, {"l3", "$l3"}};
        s.family_template =
            json{{"family", "local_product"}, {"factors", json::array({factor, factor})}};
        s.axes = {{"l1", -1.0, 1.0, 40}, {"l2", -1.0, 1.0, 40}, {"l3", -1.0, 1.0, 40}};
        s.partition = Bipartition(2, 2);
        s.criteria = {"local-unital-sufficient", "cp"};
        return s;
    }
    if (name == "figure5") {
        s.family_template =
            json{{"family", "ctit"}, {"d", 8}, {"alpha", "$alpha"}, {"beta", "$beta"}};
        s.axes = {{"alpha", -1.5, 3.0, 300}, {"beta", -1.5, 3.0, 300}};
        s.partition = Bipartition(2, 4);
        s.criteria = {"ctit-2n-exact", "ctit-sufficient", "ctit-nqubit-sufficient",
                      "ctit-necessary", "positive"};
        return s;
    }
    if (name == "figure6" || name == "figure7") {
        const int n = (name == "figure6") ? 2 : 3;
        s.family_template = json{{"family", "bipartite_depolarizing"}, {"m", n},     {"n", n},
                                 {"alpha", "$alpha"},                  {"beta", "$beta"},
                                 {"gamma", "$gamma"}};
        s.axes = {{"alpha", -1.5, 3.0, 40}, {"beta", -1.5, 3.0, 40}, {"gamma", -2.0, 5.0, 40}};
        s.partition = Bipartition(n, n);
        s.criteria = {"bipartite-dep-sufficient", "bipartite-dep-necessary"};
        return s;
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

namespace {

std::vector<SweepCell> run_channel_grid(const SweepSpec& spec) {
    std::vector<std::string> names;
    for (const auto& a : spec.axes) names.push_back(a.name);

    std::size_t total = 1;
    for (const auto& a : spec.axes) total *= static_cast<std::size_t>(a.steps);

    std::vector<SweepCell> cells;
    cells.reserve(total);
    std::vector<int> idx(spec.axes.size(), 0);
    for (std::size_t cell = 0; cell < total; ++cell) {
        std::vector<double> point(spec.axes.size());
        for (std::size_t k = 0; k < spec.axes.size(); ++k) {
            const auto& a = spec.axes[k];
            point[k] = a.min + (idx[k] + 0.5) * (a.max - a.min) / a.steps;
        }

        std::vector<int> replacements(spec.axes.size(), 0);
        const json instantiated =
            replace_placeholders(spec.family_template, names, point, replacements);
        if (cell == 0)
            for (std::size_t k = 0; k < replacements.size(); ++k)
                if (replacements[k] == 0)
                    throw std::invalid_argument("sweep: axis '" + names[k] +
                                                "' never appears in the family template");
        const ChannelSpec channel = channel_from_json(instantiated);

        SweepCell out;
        out.point = std::move(point);
        for (const auto& id : spec.criteria)
            out.values.push_back(evaluate_criterion(id, channel, spec.partition));
        const MapVerdict deciding = classify_channel(channel, spec.partition, 0, spec.seed);
        out.deciding = deciding.criterion;
        out.deciding_margin = deciding.margin;
        cells.push_back(std::move(out));

        // row-major advance: last axis fastest
        for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
            if (++idx[k] < spec.axes[k].steps) break;
            idx[k] = 0;
        }
    }
    return cells;
}

}  // namespace

std::vector<SweepCell> run_sweep_cells(const SweepSpec& spec) {
    if (spec.kind == SweepKind::PurityBounds)
        throw std::invalid_argument("run_sweep_cells: purity-bounds sweeps stream rows directly");
    return run_channel_grid(spec);
}

void run_sweep(const SweepSpec& spec, std::ostream& out, SweepFormat format) {
    json meta;
    meta["name"] = spec.name;
    meta["seed"] = spec.seed;
    meta["version"] = kVersion;
    json spec_json;
    if (spec.kind == SweepKind::PurityBounds) {
        spec_json = json{{"kind", "purity-bounds"}, {"mn_min", spec.mn_min}, {"mn_max", spec.mn_max}};
    } else {
        json axes = json::array();
        for (const auto& a : spec.axes)
            axes.push_back(json{{"name", a.name}, {"min", a.min}, {"max", a.max}, {"steps", a.steps}});
        spec_json = json{{"kind", "channel-grid"},
                         {"family", spec.family_template},
                         {"axes", axes},
                         {"partition", partition_to_string(spec.partition)},
                         {"criteria", spec.criteria}};
    }
    char hash_buf[32];
    std::snprintf(hash_buf, sizeof(hash_buf), "0x%016" PRIx64, fnv1a(spec_json.dump()));
    meta["spec_hash"] = hash_buf;

    if (spec.kind == SweepKind::PurityBounds) {
        if (format == SweepFormat::Csv) {
            out << "# absep sweep " << kVersion << "\n# name: " << spec.name
                << "\n# seed: " << spec.seed << "\n# spec-hash: " << hash_buf << "\n";
            out << "mn,ball_bound,purity_threshold,hyperbola\n";
            for (int mn = spec.mn_min; mn <= spec.mn_max; ++mn)
                out << mn << ',' << fmt_double(1.0 / (mn - 1)) << ','
                    << fmt_double(purity_necessary_threshold(mn)) << ','
                    << fmt_double(9.0 / (mn + 8.0)) << "\n";
            return;
        }
        json rows = json::array();
        for (int mn = spec.mn_min; mn <= spec.mn_max; ++mn)
            rows.push_back(json{{"mn", mn},
                                {"ball_bound", 1.0 / (mn - 1)},
                                {"purity_threshold", purity_necessary_threshold(mn)},
                                {"hyperbola", 9.0 / (mn + 8.0)}});
        out << json{{"meta", meta}, {"rows", rows}}.dump(2) << "\n";
        return;
    }

    const std::vector<SweepCell> cells = run_channel_grid(spec);
    if (format == SweepFormat::Csv) {
        out << "# absep sweep " << kVersion << "\n# name: " << spec.name
            << "\n# seed: " << spec.seed << "\n# spec-hash: " << hash_buf << "\n";
        for (std::size_t k = 0; k < spec.axes.size(); ++k) out << (k ? "," : "") << spec.axes[k].name;
        for (const auto& c : spec.criteria) out << ',' << c << ',' << c << "_margin";
        out << ",deciding,margin\n";
        for (const auto& cell : cells) {
            for (std::size_t k = 0; k < cell.point.size(); ++k)
                out << (k ? "," : "") << fmt_double(cell.point[k]);
            for (const auto& v : cell.values) out << ',' << v.status << ',' << fmt_double(v.margin);
            out << ',' << cell.deciding << ',' << fmt_double(cell.deciding_margin) << "\n";
        }
        return;
    }
    json rows = json::array();
    for (const auto& cell : cells) {
        json r;
        r["point"] = cell.point;
        json vals = json::object();
        for (std::size_t k = 0; k < spec.criteria.size(); ++k)
            vals[spec.criteria[k]] =
                json{{"status", cell.values[k].status}, {"margin", cell.values[k].margin}};
        r["criteria"] = std::move(vals);
        r["deciding"] = cell.deciding;
        r["margin"] = cell.deciding_margin;
        rows.push_back(std::move(r));
    }
    out << json{{"meta", meta}, {"cells", rows}}.dump(2) << "\n";
}

}  // namespace absep
