#include "altknot/serialize.hpp"

namespace altknot {

Json matrix_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

IntVector vector_from_json(const Json& j) {
    IntVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<Integer>();
    return v;
}

namespace {

Json vector_json(const IntVector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

}  // namespace

void to_json(Json& j, const Diagram& d) {
    Json edges = Json::array();
    for (int e = 0; e < d.crossing_count(); ++e) edges.push_back({d.edge(e).tail, d.edge(e).head, d.edge(e).mu});
    j = Json{{"regions", d.vertex_count()}, {"edges", edges}, {"rotation", d.rotations()}};
    if (d.crossing_count() > 0) j["pd"] = pd_string(d);
}

void from_json(const Json& j, Diagram& d) {
    if (j.contains("edges")) {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.push_back(Edge{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
        d = Diagram::from_graph(j.at("regions").get<int>(), edges, j.at("rotation").get<std::vector<std::vector<int>>>());
    } else if (j.contains("pd")) {
        const Json& pd = j.at("pd");
        d = pd.is_string() ? from_pd_string(pd.get<std::string>()) : from_pd(pd.get<std::vector<PDCrossing>>());
    } else if (j.contains("dt")) {
        const Json& dt = j.at("dt");
        d = dt.is_string() ? from_dt_string(dt.get<std::string>()) : from_dt(dt.get<std::vector<int>>());
    } else {
        throw InvalidDiagram("diagram JSON needs edges, pd or dt");
    }
}

void to_json(Json& j, const Move& m) {
    j = Json{{"kind", to_string(m.kind)}, {"crossing", m.crossing}, {"region", m.region}, {"aux", m.aux}};
}

void from_json(const Json& j, Move& m) {
    m.kind = move_kind_from_string(j.at("kind").get<std::string>());
    m.crossing = j.value("crossing", -1);
    m.region = j.value("region", -1);
    m.aux = j.value("aux", -1);
}

void to_json(Json& j, const Certificate& c) {
    j = Json{{"from_mirror", c.from_mirror}, {"moves", c.moves}, {"terminal_m", c.terminal_m}};
}

void from_json(const Json& j, Certificate& c) {
    c.from_mirror = j.value("from_mirror", false);
    c.moves = j.at("moves").get<std::vector<Move>>();
    c.terminal_m = j.at("terminal_m").get<int>();
}

void to_json(Json& j, const Embedding& e) {
    Json labels = Json::array();
    for (const auto& l : e.labels) labels.push_back(vector_json(l));
    j = Json{{"sigma", e.sigma}, {"labels", labels}};
}

void from_json(const Json& j, Embedding& e) {
    e.sigma = j.at("sigma").get<Sigma>();
    e.labels.clear();
    for (const auto& l : j.at("labels")) e.labels.push_back(vector_from_json(l));
}

void to_json(Json& j, const GoeritzForm& f) {
    j = Json{{"basis", f.basis}, {"matrix", matrix_json(f.matrix)}, {"discarded", f.discarded},
             {"n_plus", f.n_plus}, {"n_minus", f.n_minus}};
}

void to_json(Json& j, const UnknottingReport& r) {
    Json crossings = Json::array();
    for (const auto& c : r.crossings)
        crossings.push_back({{"crossing", c.crossing},
                             {"sign", c.sign},
                             {"via_mirror", c.via_mirror},
                             {"sign_expected", c.sign_expected},
                             {"certificate", c.certificate}});
    j = Json{{"schema_version", kSchemaVersion},
             {"verdict", to_string(r.verdict)},
             {"determinant", r.determinant},
             {"signature", r.signature},
             {"crossings", crossings},
             {"embeddings", r.embeddings},
             {"mirror_embeddings", r.mirror_embeddings},
             {"budget_exhausted", r.budget_exhausted},
             {"nodes", r.nodes},
             {"failures", r.failures},
             {"induction", {{"steps", r.stats.steps},
                            {"transported", r.stats.transported},
                            {"re_searched", r.stats.re_searched}}}};
}

void to_json(Json& j, const TwirlTower& t) {
    j = Json{{"schema_version", kSchemaVersion},
             {"n", static_cast<int>(t.levels.size()) - 1},
             {"diagram", t.top().diagram},
             {"crossing", t.top().crossing},
             {"w", t.top().w},
             {"chain", t.top().chain},
             {"original_rows", t.original},
             {"goeritz", matrix_json(t.goeritz)},
             {"minors", t.minors},
             {"recurrence_holds", t.recurrence_holds},
             {"signature", t.signature}};
}

Json certificate_bundle(const Diagram& input, const Certificate& c) {
    return Json{{"schema_version", kSchemaVersion}, {"input", input}, {"certificate", c}};
}

}  // namespace altknot
