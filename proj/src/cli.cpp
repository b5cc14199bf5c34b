#include "condgeo/cli.hpp"

#include <CLI11.hpp>

#include "condgeo/io.hpp"
#include "condgeo/solver.hpp"

namespace condgeo {

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

StepPtr requireLevel1(const ParsedFormula& f) {
    if (!f.isLevel1())
        throw InputError("a one-step formula (containing '~>') is required here");
    return f.level1();
}

Clause clauseFromName(const std::string& name) {
    if (name == "general") return Clause::General;
    if (name == "feasible") return Clause::Feasible;
    if (name == "extreme") return Clause::Extreme;
    throw InputError("unknown clause '" + name + "'");
}

Json verdictToJson(const Verdict& v) {
    Json j;
    switch (v.kind) {
        case Verdict::Kind::Valid:
            j["verdict"] = "valid";
            j["exhaustive"] = v.exhaustive;
            break;
        case Verdict::Kind::Countermodel:
            j["verdict"] = "countermodel";
            if (v.abstractCounter) j["model"] = abstractModelToJson(*v.abstractCounter);
            if (v.planeCounter) j["model"] = planeModelToJson(*v.planeCounter);
            break;
        case Verdict::Kind::Unknown:
            j["verdict"] = "unknown";
            break;
    }
    j["note"] = v.note;
    return j;
}

int runCheck(const std::string& modelPath, const std::string& formulaText,
             const std::string& clauseName, std::ostream& out) {
    LoadedModel model = loadModelFile(modelPath);
    ParsedFormula formula = parse(formulaText);
    Clause clause = clauseFromName(clauseName);

    Json j;
    j["formula"] = render(formula);
    bool holds = false;

    if (auto* abstract = std::get_if<AbstractModel>(&model)) {
        j["model"] = "abstract";
        if (formula.isLevel1()) {
            holds = evalOneStep(*abstract, formula.level1(), clause);
        } else {
            WorldSet ext = abstract->ext(formula.level0());
            holds = ext.isFull();
            Json arr = Json::array();
            for (int i : ext.members()) arr.push_back(abstract->geometry.worlds[i]);
            j["extension"] = arr;
        }
    } else {
        const PlaneModel& plane = std::get<PlaneModel>(model);
        j["model"] = "plane";
        if (formula.isLevel1()) {
            if (clause == Clause::Extreme) {
                holds = evalPlane(plane, formula.level1());
            } else {
                // Non-extreme clauses need the explicit set family.
                AbstractModel abstracted{planeGeometry(plane), plane.valuation};
                holds = evalOneStep(abstracted, formula.level1(), clause);
            }
        } else {
            WorldSet ext = plane.ext(formula.level0());
            holds = ext.isFull();
            Json arr = Json::array();
            for (int i : ext.members()) arr.push_back(plane.ids[i]);
            j["extension"] = arr;
        }
    }

    j["holds"] = holds;
    out << j.dump(2) << "\n";
    return holds ? kExitHolds : kExitFails;
}

int runValidate(const std::string& formulaText, const std::string& className, int bound,
                long budget, std::uint64_t seed, std::ostream& out) {
    StepPtr f = requireLevel1(parse(formulaText));

    Verdict verdict;
    if (className.empty()) {
        if (lettersOf(f).size() <= 2) {
            verdict = decideValiditySmall(f);
        } else {
            verdict = findCountermodel(f, budget, seed);
        }
    } else {
        ModelClassSpec cls{ModelClassSpec::Kind::AllGeometries, bound};
        if (className == "all") cls.kind = ModelClassSpec::Kind::AllGeometries;
        else if (className == "line") cls.kind = ModelClassSpec::Kind::LineModels;
        else if (className == "chain") cls.kind = ModelClassSpec::Kind::ChainUpsets;
        else if (className == "poset") cls.kind = ModelClassSpec::Kind::PosetUpsets;
        else throw InputError("unknown model class '" + className + "'");
        verdict = decideClassValidity(f, cls);
    }

    out << verdictToJson(verdict).dump(2) << "\n";
    switch (verdict.kind) {
        case Verdict::Kind::Valid: return kExitHolds;
        case Verdict::Kind::Countermodel: return kExitFails;
        case Verdict::Kind::Unknown: return kExitUnknown;
    }
    return kExitInternal;
}

ConvexGeometry geometryOf(const LoadedModel& model) {
    if (const auto* abstract = std::get_if<AbstractModel>(&model)) return abstract->geometry;
    return planeGeometry(std::get<PlaneModel>(model));
}

int runDecompose(const std::string& modelPath, std::ostream& out) {
    LoadedModel model = loadModelFile(modelPath);
    ConvexGeometry g = geometryOf(model);
    std::vector<LinearOrder> chains = decompose(g);

    Json arr = Json::array();
    for (const LinearOrder& order : chains) {
        Json chain = Json::array();
        for (int i : order) chain.push_back(g.worlds[i]);
        arr.push_back(chain);
    }
    Json j;
    j["chains"] = arr;
    out << j.dump(2) << "\n";
    return kExitHolds;
}

int runEmbed(const std::string& modelPath, const std::string& outPath, const std::string& svgPath,
             long precision, const std::vector<std::string>& formulaTexts, std::ostream& out) {
    LoadedModel loaded = loadModelFile(modelPath);
    const auto* abstract = std::get_if<AbstractModel>(&loaded);
    if (abstract == nullptr)
        throw InputError("embed expects an abstract model file; plane models are already planar");

    Certificate cert;
    cert.input = abstractModelToJson(*abstract);

    Elimination elim = eliminateImpossible(*abstract);
    for (int i : elim.removed.members()) cert.impossible.push_back(abstract->geometry.worlds[i]);

    EmbedResult result = embed(elim.model.geometry, std::nullopt, precision);
    EmbeddingVerdict verdict = verifyEmbedding(elim.model.geometry, result.skeleton, result.owner);
    if (!verdict.pass) throw InternalError("embedding verification failed: " + verdict.detail);

    for (const LinearOrder& order : result.chains) {
        std::vector<std::string> chain;
        for (int i : order) chain.push_back(elim.model.geometry.worlds[i]);
        cert.chains.push_back(std::move(chain));
    }
    cert.directions = result.meta.directions;
    cert.safety = result.meta.safety;

    Valuation planeValuation;
    for (const auto& [letter, set] : elim.model.valuation)
        planeValuation[letter] = result.owner.preimage(set);
    PlaneModel plane = makePlaneModel(result.skeleton.ids, result.skeleton.points,
                                      std::move(planeValuation));

    for (int i = 0; i < plane.size(); ++i)
        cert.owners.push_back(elim.model.geometry.worlds[result.owner.mapping[i]]);

    cert.verdictPass = true;
    for (const std::string& text : formulaTexts) {
        StepPtr f = requireLevel1(parse(text));
        Certificate::TruthRow row;
        row.formula = render(ParsedFormula{f, lettersOf(f)});
        row.abstractTruth = evalOneStep(*abstract, f);
        row.planeTruth = evalPlane(plane, f);
        if (row.abstractTruth != row.planeTruth) cert.verdictPass = false;
        cert.truth.push_back(std::move(row));
    }
    cert.plane = plane;

    if (!cert.verdictPass)
        throw InternalError("truth mismatch between the input model and its embedding");

    writeFile(outPath, planeModelToJson(plane).dump(2) + "\n");
    if (!svgPath.empty()) writeFile(svgPath, renderSvg(plane));
    out << certificateToJson(cert).dump(2) << "\n";
    return kExitHolds;
}

int runEnumerate(int n, bool requireEmpty, std::ostream& out) {
    enumerateGeometries(n, requireEmpty, [&](const ConvexGeometry& g) {
        out << geometryToJson(g).dump() << "\n";
        return true;
    });
    return kExitHolds;
}

int runVerifyMorphism(const std::string& fromPath, const std::string& toPath,
                      const std::string& mapPath, bool strong, std::ostream& out) {
    ConvexGeometry src = geometryOf(loadModelFile(fromPath));
    ConvexGeometry tgt = geometryOf(loadModelFile(toPath));

    Json mapJson;
    try {
        mapJson = Json::parse(readFile(mapPath));
    } catch (const Json::parse_error& e) {
        throw InputError("cannot parse " + mapPath + ": " + e.what());
    }
    if (!mapJson.contains("map") || !mapJson.at("map").is_object())
        throw InputError("map file must contain an object under \"map\"");

    std::map<std::string, int> tgtIndex;
    for (std::size_t i = 0; i < tgt.worlds.size(); ++i)
        tgtIndex[tgt.worlds[i]] = static_cast<int>(i);

    std::vector<int> mapping;
    for (const std::string& id : src.worlds) {
        if (!mapJson.at("map").contains(id))
            throw InputError("map is not total: missing source id '" + id + "'");
        std::string target = mapJson.at("map").at(id).get<std::string>();
        auto it = tgtIndex.find(target);
        if (it == tgtIndex.end()) throw InputError("map image '" + target + "' is not a target id");
        mapping.push_back(it->second);
    }

    PointMap f = makePointMap(src.worlds, tgt.worlds, std::move(mapping));
    MorphismVerdict verdict = checkMorphism(f, src, tgt, strong);

    Json j;
    j["morphism"] = verdict.morphism;
    if (strong) j["strong"] = verdict.strong;
    if (verdict.witness) {
        Json arr = Json::array();
        const auto& labels = verdict.morphism ? tgt.worlds : src.worlds;
        for (int i : verdict.witness->members()) arr.push_back(labels[i]);
        j["witness"] = arr;
        j["detail"] = verdict.detail;
    }
    out << j.dump(2) << "\n";

    bool ok = strong ? (verdict.morphism && verdict.strong) : verdict.morphism;
    return ok ? kExitHolds : kExitFails;
}

int runRender(const std::string& modelPath, const std::string& svgPath,
              const std::string& highlightText) {
    LoadedModel model = loadModelFile(modelPath);
    const auto* plane = std::get_if<PlaneModel>(&model);
    if (plane == nullptr) throw InputError("render expects a plane model file");

    if (highlightText.empty()) {
        writeFile(svgPath, renderSvg(*plane));
    } else {
        ParsedFormula highlight = parse(highlightText);
        if (highlight.isLevel1())
            throw InputError("highlight must be a propositional formula");
        PropPtr prop = highlight.level0();
        writeFile(svgPath, renderSvg(*plane, &prop));
    }
    return kExitHolds;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Preferential conditional logic over finite convex geometries"};
    app.require_subcommand(1);

    std::string modelPath, formulaText, clauseName = "extreme";
    auto* check = app.add_subcommand("check", "Evaluate a formula in a model file");
    check->add_option("--model", modelPath)->required();
    check->add_option("--formula", formulaText)->required();
    check->add_option("--clause", clauseName)->check(CLI::IsMember({"general", "feasible", "extreme"}));

    std::string validateFormula, className;
    int bound = 0;
    long budget = kDefaultBudget;
    std::uint64_t seed = 0;
    auto* validateCmd = app.add_subcommand("validate", "Decide validity or search countermodels");
    validateCmd->add_option("--formula", validateFormula)->required();
    validateCmd->add_option("--class", className)->check(CLI::IsMember({"all", "line", "chain", "poset"}));
    validateCmd->add_option("--bound", bound);
    validateCmd->add_option("--budget", budget);
    validateCmd->add_option("--seed", seed);

    std::string decomposePath;
    auto* decomposeCmd = app.add_subcommand("decompose", "Decompose a geometry into linear orders");
    decomposeCmd->add_option("--model", decomposePath)->required();

    std::string embedPath, embedOut, embedSvg;
    long precision = 10000;
    std::vector<std::string> embedFormulas;
    auto* embedCmd = app.add_subcommand("embed", "Embed an abstract model into the plane");
    embedCmd->add_option("--model", embedPath)->required();
    embedCmd->add_option("--out", embedOut)->required();
    embedCmd->add_option("--svg", embedSvg);
    embedCmd->add_option("--precision", precision);
    embedCmd->add_option("--formula", embedFormulas);

    int enumN = 0;
    bool requireEmpty = false;
    auto* enumerateCmd = app.add_subcommand("enumerate", "Enumerate convex geometries as JSON lines");
    enumerateCmd->add_option("--n", enumN)->required();
    enumerateCmd->add_flag("--require-empty", requireEmpty);

    std::string fromPath, toPath, mapPath;
    bool strong = false;
    auto* verifyCmd = app.add_subcommand("verify-morphism", "Check a map between geometries");
    verifyCmd->add_option("--from", fromPath)->required();
    verifyCmd->add_option("--to", toPath)->required();
    verifyCmd->add_option("--map", mapPath)->required();
    verifyCmd->add_flag("--strong", strong);

    std::string renderPath, renderSvgPath, highlightText;
    auto* renderCmd = app.add_subcommand("render", "Write an SVG picture of a plane model");
    renderCmd->add_option("--model", renderPath)->required();
    renderCmd->add_option("--svg", renderSvgPath)->required();
    renderCmd->add_option("--highlight", highlightText);

    std::vector<std::string> argv{"condgeo"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> argp;
    for (const std::string& a : argv) argp.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argp.size()), argp.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (app.got_subcommand(check)) return runCheck(modelPath, formulaText, clauseName, out);
        if (app.got_subcommand(validateCmd)) {
            if (bound == 0) {
                bound = className == "line" ? 6 : 4;
            }
            return runValidate(validateFormula, className, bound, budget, seed, out);
        }
        if (app.got_subcommand(decomposeCmd)) return runDecompose(decomposePath, out);
        if (app.got_subcommand(embedCmd))
            return runEmbed(embedPath, embedOut, embedSvg, precision, embedFormulas, out);
        if (app.got_subcommand(enumerateCmd)) return runEnumerate(enumN, requireEmpty, out);
        if (app.got_subcommand(verifyCmd))
            return runVerifyMorphism(fromPath, toPath, mapPath, strong, out);
        if (app.got_subcommand(renderCmd)) return runRender(renderPath, renderSvgPath, highlightText);
        err << "no subcommand given\n";
        return kExitInput;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace condgeo
