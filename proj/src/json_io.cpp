#include "traintrack/json_io.hpp"

#include <nlohmann/json.hpp>

namespace traintrack::jsonio {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
    fail(ErrorCode::ParseError, "malformed JSON payload: " + what);
}

int require_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) malformed(what + " must be an integer");
    return j.get<int>();
}

const json& require_array(const json& j, const std::string& what) {
    if (!j.is_array()) malformed(what + " must be an array");
    return j;
}

std::string require_string(const json& j, const std::string& what) {
    if (!j.is_string()) malformed(what + " must be a string");
    return j.get<std::string>();
}

} // namespace

json diagram_to_json(const diagrams::DiagramWord& d, const ColourSet& colours) {
    json levels = json::array();
    for (const diagrams::Level& lv : d.levels) {
        json gen;
        switch (lv.gen.kind) {
            case diagrams::GenKind::Alpha: gen = "alpha"; break;
            case diagrams::GenKind::Beta: gen = "beta"; break;
            case diagrams::GenKind::Train:
                gen = json{{"train", colours.name_of(lv.gen.colour)}};
                break;
        }
        levels.push_back(json{{"offset", lv.offset}, {"gen", std::move(gen)}});
    }
    return json{{"inputs", d.inputs}, {"levels", std::move(levels)}};
}

diagrams::DiagramWord diagram_from_json(const json& j, const ColourSet& colours) {
    if (!j.is_object() || !j.contains("inputs") || !j.contains("levels"))
        malformed("diagram needs \"inputs\" and \"levels\"");
    int inputs = require_int(j.at("inputs"), "\"inputs\"");
    std::vector<diagrams::Level> levels;
    for (const json& entry : require_array(j.at("levels"), "\"levels\"")) {
        if (!entry.is_object() || !entry.contains("offset") || !entry.contains("gen"))
            malformed("level needs \"offset\" and \"gen\"");
        int offset = require_int(entry.at("offset"), "\"offset\"");
        const json& gen = entry.at("gen");
        if (gen.is_string()) {
            std::string name = gen.get<std::string>();
            if (name == "alpha")
                levels.push_back(diagrams::Level{offset, diagrams::Generator::alpha()});
            else if (name == "beta")
                levels.push_back(diagrams::Level{offset, diagrams::Generator::beta()});
            else
                malformed("generator string must be \"alpha\" or \"beta\", got \"" + name + "\"");
        } else if (gen.is_object() && gen.contains("train")) {
            ColourId c = colours.id_of(require_string(gen.at("train"), "\"train\""));
            levels.push_back(diagrams::Level{offset, diagrams::Generator::train(c)});
        } else {
            malformed("\"gen\" must be \"alpha\", \"beta\", or {\"train\": name}");
        }
    }
    return diagrams::build(inputs, std::move(levels));
}

json braid_to_json(const braids::ColouredBraid& b, const ColourSet& colours) {
    json word = json::array();
    for (const braids::BraidLetter& letter : b.word)
        word.push_back(json::array({letter.index, letter.sign}));
    return json{{"source", colours.names_of(b.source)}, {"word", std::move(word)}};
}

braids::ColouredBraid braid_from_json(const json& j, const ColourSet& colours) {
    if (!j.is_object() || !j.contains("source") || !j.contains("word"))
        malformed("braid needs \"source\" and \"word\"");
    braids::ColouredBraid b;
    for (const json& name : require_array(j.at("source"), "\"source\""))
        b.source.push_back(colours.id_of(require_string(name, "source entry")));
    for (const json& entry : require_array(j.at("word"), "\"word\"")) {
        if (!entry.is_array() || entry.size() != 2) malformed("letter must be [index, sign]");
        b.word.push_back(braids::BraidLetter{require_int(entry.at(0), "letter index"),
                                             require_int(entry.at(1), "letter sign")});
    }
    (void)braids::target_of(b); // validates every letter against the strand count
    return b;
}

json certificate_to_json(const diagrams::ContractionCertificate& cert) {
    json steps = json::array();
    for (const diagrams::ContractionStep& step : cert.steps) {
        if (step.kind == diagrams::ContractionStep::Kind::EraseUnaryNode)
            steps.push_back(json{{"erase", step.node}});
        else
            steps.push_back(json{{"delete", json::array({step.edge.level, step.edge.strand})}});
    }
    return json{{"steps", std::move(steps)}};
}

diagrams::ContractionCertificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("steps")) malformed("certificate needs \"steps\"");
    diagrams::ContractionCertificate cert;
    for (const json& entry : require_array(j.at("steps"), "\"steps\"")) {
        diagrams::ContractionStep step;
        if (entry.is_object() && entry.contains("erase")) {
            step.kind = diagrams::ContractionStep::Kind::EraseUnaryNode;
            step.node = require_int(entry.at("erase"), "\"erase\"");
        } else if (entry.is_object() && entry.contains("delete")) {
            const json& edge = require_array(entry.at("delete"), "\"delete\"");
            if (edge.size() != 2) malformed("\"delete\" must be [level, strand]");
            step.kind = diagrams::ContractionStep::Kind::DeleteEdge;
            step.edge = diagrams::EdgeId{require_int(edge.at(0), "edge level"),
                                         require_int(edge.at(1), "edge strand")};
        } else {
            malformed("step must be {\"erase\": node} or {\"delete\": [level, strand]}");
        }
        cert.steps.push_back(step);
    }
    return cert;
}

json report_to_json(const twocells::Report& report) {
    json failures = json::array();
    for (const twocells::Failure& failure : report.failures)
        failures.push_back(json{{"inputs", failure.instance}, {"lhs", failure.lhs},
                                {"rhs", failure.rhs}});
    return json{{"check", report.check}, {"instances", report.instances},
                {"failures", std::move(failures)}};
}

json theta_to_json(const ColourWord& word, const ColourSet& colours) {
    return json(colours.names_of(word));
}

} // namespace traintrack::jsonio
