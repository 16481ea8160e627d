#include "absep/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace absep {

using nlohmann::json;

int max_dim_cap() {
    if (const char* env = std::getenv("ABSEP_MAX_DIM")) {
        const int v = std::atoi(env);
        if (v >= 2) return v;
    }
    return 64;
}

json channel_to_json(const ChannelSpec& c) {
    json j;
    j["family"] = c.family();
    if (const auto* d = c.get_if<Depolarizing>()) {
        j["d"] = d->d;
        j["q"] = d->q;
    } else if (const auto* lp = c.get_if<LocalProduct>()) {
        json factors = json::array();
        for (const auto& f : lp->factors) factors.push_back(channel_to_json(f));
        j["factors"] = std::move(factors);
    } else if (const auto* u = c.get_if<UnitalQubit>()) {
        j["l1"] = u->l1;
        j["l2"] = u->l2;
        j["l3"] = u->l3;
    } else if (const auto* g = c.get_if<GeneralizedPauli>()) {
        j["d"] = g->d;
        j["s"] = g->s;
        j["t"] = g->t;
    } else if (const auto* ct = c.get_if<TraceIdTranspose>()) {
        j["d"] = ct->d;
        j["alpha"] = ct->alpha;
        j["beta"] = ct->beta;
    } else if (const auto* bd = c.get_if<BipartiteDepolarizing>()) {
        j["m"] = bd->m;
        j["n"] = bd->n;
        j["alpha"] = bd->alpha;
        j["beta"] = bd->beta;
        j["gamma"] = bd->gamma;
    } else if (const auto* tr = c.get_if<TracingMap>()) {
        j["d"] = tr->d;
    } else if (const auto* os = c.get_if<OneSided>()) {
        j["inner"] = channel_to_json(*os->inner);
        j["id_dim"] = os->id_dim;
    }
    return j;
}

ChannelSpec channel_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw std::invalid_argument("channel: expected an object with a \"family\" string");
    const std::string family = j["family"].get<std::string>();

    auto num = [&](const char* key) -> double {
        if (!j.contains(key) || !j[key].is_number())
            throw std::invalid_argument("channel: missing numeric field \"" + std::string(key) +
                                        "\" for family " + family);
        return j[key].get<double>();
    };
    auto integer = [&](const char* key) -> int {
        const double v = num(key);
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v)
            throw std::invalid_argument("channel: field \"" + std::string(key) +
                                        "\" must be an integer");
        return i;
    };

    ChannelSpec out = [&]() -> ChannelSpec {
        if (family == "depolarizing") return make_depolarizing(integer("d"), num("q"));
        if (family == "tracing") return make_tracing(integer("d"));
        if (family == "unital_qubit") return make_unital_qubit(num("l1"), num("l2"), num("l3"));
        if (family == "ctit") return make_trace_id_transpose(integer("d"), num("alpha"), num("beta"));
        if (family == "bipartite_depolarizing")
            return make_bipartite_depolarizing(integer("m"), integer("n"), num("alpha"), num("beta"),
                                               num("gamma"));
        if (family == "generalized_pauli") {
            if (!j.contains("t") || !j["t"].is_array())
                throw std::invalid_argument("channel: generalized_pauli needs a \"t\" array");
            return make_generalized_pauli(integer("d"), num("s"), j["t"].get<std::vector<double>>());
        }
        if (family == "local_product") {
            if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
                throw std::invalid_argument("channel: local_product needs a \"factors\" array");
            std::vector<ChannelSpec> factors;
            for (const auto& f : j["factors"]) factors.push_back(channel_from_json(f));
            return make_local_product(std::move(factors));
        }
        if (family == "one_sided") {
            if (!j.contains("inner"))
                throw std::invalid_argument("channel: one_sided needs an \"inner\" channel");
            return make_one_sided(channel_from_json(j["inner"]), integer("id_dim"));
        }
        throw std::invalid_argument("channel: unknown family \"" + family + "\"");
    }();

    if (out.dim() > max_dim_cap())
        throw std::invalid_argument("channel: dimension " + std::to_string(out.dim()) +
                                    " exceeds the cap of " + std::to_string(max_dim_cap()));
    return out;
}

namespace {

json spectrum_json(const std::vector<double>& v) {
    return json(v);
}

json partition_json(const Partition& p) {
    return json(partition_to_string(p));
}

json matrix_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json verdict_to_json(const Verdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["criterion"] = v.criterion;
    j["margin"] = v.margin;
    if (v.witness_spectrum) j["witness"] = {{"spectrum", spectrum_json(*v.witness_spectrum)}};
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json map_verdict_to_json(const MapVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["criterion"] = v.criterion;
    j["margin"] = v.margin;
    if (v.partition) j["partition"] = partition_json(*v.partition);
    if (v.witness) {
        json w;
        if (v.witness->spectrum) w["spectrum"] = spectrum_json(*v.witness->spectrum);
        w["input_recipe"] = v.witness->input_recipe;
        j["witness"] = std::move(w);
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json witness_to_json(const Witness& w) {
    json j;
    j["negativity"] = w.negativity;
    j["partition"] = partition_to_string(Partition(w.partition));
    j["input_recipe"] = w.input_recipe;
    j["input"] = matrix_json(w.input);
    j["unitary"] = matrix_json(w.unitary.mat());
    return j;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    int dim = 0;
    if (!(in >> dim) || dim < 1)
        throw std::invalid_argument("matrix file: expected a positive dimension line");
    if (dim > max_dim_cap())
        throw std::invalid_argument("matrix file: dimension exceeds the cap of " +
                                    std::to_string(max_dim_cap()));
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw std::invalid_argument("matrix file: missing entry (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
            const auto comma = tok.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("matrix file: entries must be re,im pairs");
            try {
                m(i, j) = Complex(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
            } catch (const std::exception&) {
                throw std::invalid_argument("matrix file: malformed entry '" + tok + "'");
            }
        }
    if (!m.is_finite()) throw std::invalid_argument("matrix file: non-finite entries");
    return m;
}

Spectrum parse_spectrum_string(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            vals.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("spectrum: malformed value '" + tok + "'");
        }
    }
    if (vals.empty()) throw std::invalid_argument("spectrum: empty");
    return Spectrum::state(std::move(vals));
}

}  // namespace absep
