// Command-line front end: classification, factorization, searches, degree
// profiles, and certificate verification, with JSON or human-readable output.
//
// Exit codes: 0 success, 2 input/precondition error, 3 search exhausted,
// 4 structural precondition violated (or a certificate failing verification).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <dyndeg/classify.hpp>
#include <dyndeg/coxeter.hpp>
#include <dyndeg/factor.hpp>
#include <dyndeg/profile.hpp>
#include <dyndeg/text.hpp>

using json = nlohmann::ordered_json;
using namespace dyndeg;

namespace {

constexpr const char* kSchema = "dyndeg/1";

struct RunConfig {
    Rat tol = Rat(1, 1000000);
    bool json_out = false;
    int threads = 1;
    unsigned seed = 0; // reserved for randomized suites; echoed for reproducibility
};

json interval_json(const RationalInterval& v) {
    return json{{"lo", v.lo.get_str()}, {"hi", v.hi.get_str()}};
}

RationalInterval interval_from_json(const json& j) {
    return RationalInterval(parse_rat(j.at("lo").get<std::string>()),
                            parse_rat(j.at("hi").get<std::string>()));
}

json coeffs_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

IntPoly poly_from_json(const json& a) {
    std::vector<Int> c;
    for (const auto& e : a) c.emplace_back(e.get<std::string>());
    return IntPoly(std::move(c));
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& rows) {
    const int dim = static_cast<int>(rows.size());
    std::vector<Int> entries;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim) throw ParseError("matrix JSON is not square");
        for (const auto& e : row) {
            if (e.is_string())
                entries.emplace_back(e.get<std::string>());
            else
                entries.emplace_back(std::to_string(e.get<long long>()));
        }
    }
    return IntMatrix(dim, std::move(entries));
}

// Accepts "0,1;-1,3" or JSON array-of-arrays.
IntMatrix parse_matrix_arg(const std::string& s) {
    std::string t = s;
    size_t a = t.find_first_not_of(" \t\n");
    if (a != std::string::npos && t[a] == '[') {
        json j = json::parse(t, nullptr, /*allow_exceptions=*/true);
        return matrix_from_json(j);
    }
    return parse_matrix(s);
}

json classification_json(const IntPoly& p, const Classification& c) {
    json out;
    out["schema"] = kSchema;
    out["type"] = "classification";
    out["kind"] = kind_name(c.kind);
    out["degree"] = p.degree();
    out["coefficients"] = coeffs_json(p);
    out["poly"] = p.to_string();
    out["disk_counts"] = {{"inside", c.counts.inside}, {"on", c.counts.on}, {"outside", c.counts.outside}};
    out["dominant"] = interval_json(c.dominant);
    out["unit"] = c.pisot_unit;
    out["salem_flag"] = c.salem_flag;
    out["negative_dominant"] = c.negative_dominant;
    out["irreducible"] = c.irreducible;
    out["palindromic"] = c.palindromic;
    json cf = json::array();
    for (auto [n, mult] : c.cyclotomic_factors) cf.push_back(json::array({n, mult}));
    out["cyclotomic_factors"] = std::move(cf);
    return out;
}

json certificate_json(const PrimitivityCertificate& cert) {
    json out;
    out["criterion"] = cert.criterion == PrimitivityCertificate::Criterion::DegreeDrop
                           ? "DegreeDrop"
                           : "IrreduciblePicard";
    out["d1"] = interval_json(cert.d1);
    if (cert.criterion == PrimitivityCertificate::Criterion::DegreeDrop) {
        out["d2"] = interval_json(cert.d2);
    } else {
        out["charpoly"] = coeffs_json(cert.charpoly);
        out["word"] = cert.word;
    }
    out["justification"] = cert.justification;
    return out;
}

json profile_json(const DegreeProfile& prof) {
    json out;
    out["model"] = profile_model_name(prof.model);
    out["dim"] = prof.degrees.size() - 1;
    json degs = json::array();
    for (const auto& d : prof.degrees) degs.push_back(interval_json(d));
    out["degrees"] = std::move(degs);
    out["entropy"] = interval_json(prof.entropy);
    return out;
}

std::string interval_text(const RationalInterval& v) {
    std::ostringstream os;
    os << "[" << v.lo.get_str() << ", " << v.hi.get_str() << "] ~ " << v.mid().get_d();
    return os.str();
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
    if (cfg.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

// ---------------------------------------------------------------------------

int cmd_classify(const RunConfig& cfg, const std::string& poly_arg) {
    IntPoly p = parse_poly(poly_arg);
    Classification c = classify(p, cfg.tol);
    json j = classification_json(p, c);
    std::ostringstream os;
    os << p.to_string() << "\n"
       << "kind: " << kind_name(c.kind) << "\n"
       << "disk counts (inside/on/outside): " << c.counts.inside << "/" << c.counts.on << "/"
       << c.counts.outside << "\n";
    if (c.kind == Kind::Pisot || c.kind == Kind::Salem) {
        os << "dominant: " << interval_text(c.dominant) << "\n";
        if (c.negative_dominant) os << "dominant root is negative; enclosure is of its modulus\n";
        if (c.kind == Kind::Pisot) os << "unit: " << (c.pisot_unit ? "yes" : "no") << "\n";
        if (c.salem_flag) os << "also a Salem quadratic\n";
    }
    if (c.kind == Kind::CyclotomicProduct) {
        os << "cyclotomic factors:";
        for (auto [n, mult] : c.cyclotomic_factors) os << " Phi_" << n << "^" << mult;
        os << "\n";
    }
    emit(cfg, j, os.str());
    return 0;
}

int cmd_factor(const RunConfig& cfg, const std::string& poly_arg) {
    IntPoly p = parse_poly(poly_arg);
    auto factors = factor_int(p);
    json j;
    j["schema"] = kSchema;
    j["type"] = "factorization";
    j["input"] = coeffs_json(p);
    json fs = json::array();
    std::ostringstream os;
    os << p.to_string() << " =";
    bool first = true;
    for (const auto& [f, mult] : factors) {
        fs.push_back(json{{"coefficients", coeffs_json(f)}, {"poly", f.to_string()}, {"multiplicity", mult}});
        if (!first) os << " *";
        first = false;
        os << " (" << f.to_string() << ")";
        if (mult > 1) os << "^" << mult;
    }
    j["factors"] = std::move(fs);
    os << "\n";
    emit(cfg, j, os.str());
    return 0;
}

int cmd_pisot_search(const RunConfig& cfg, int degree, int height, bool units_only) {
    auto results = pisot_search(degree, height, units_only, cfg.tol, cfg.threads);
    json j;
    j["schema"] = kSchema;
    j["type"] = "pisot_search";
    j["degree"] = degree;
    j["height"] = height;
    j["units_only"] = units_only;
    json rs = json::array();
    std::ostringstream os;
    os << results.size() << " Pisot polynomial(s) of degree " << degree << ", height <= " << height
       << (units_only ? ", units only" : "") << "\n";
    for (const auto& [p, dom] : results) {
        rs.push_back(json{{"coefficients", coeffs_json(p)},
                          {"poly", p.to_string()},
                          {"dominant", interval_json(dom)}});
        os << "  " << p.to_string() << "  dominant " << interval_text(dom) << "\n";
    }
    j["results"] = std::move(rs);
    emit(cfg, j, os.str());
    return 0;
}

int cmd_construct(const RunConfig& cfg, int dimension, const std::string& model, int height) {
    if (dimension < 2) throw Error("construct requires dimension >= 2");
    auto results = pisot_search(dimension, height, /*units_only=*/true, cfg.tol, cfg.threads);
    if (results.empty()) {
        std::cerr << "no Pisot unit of degree " << dimension << " within height " << height
                  << "; raise --height\n";
        return 3;
    }
    const IntPoly& p = results[0].first;
    IntMatrix M = companion(p);
    DegreeProfile prof = (model == "abelian") ? abelian_profile(M, cfg.tol) : monomial_profile(M, cfg.tol);
    auto cert = primitivity_by_degree_drop(prof);

    json j;
    j["schema"] = kSchema;
    j["type"] = "construct";
    j["model"] = model;
    j["dimension"] = dimension;
    j["pisot"] = json{{"coefficients", coeffs_json(p)},
                      {"poly", p.to_string()},
                      {"dominant", interval_json(results[0].second)}};
    j["matrix"] = matrix_json(M);
    j["profile"] = profile_json(prof);
    if (cert) j["certificate"] = certificate_json(*cert);

    std::ostringstream os;
    os << "minimal Pisot unit of degree " << dimension << ": " << p.to_string() << "\n"
       << "dominant: " << interval_text(results[0].second) << "\n"
       << "model: " << model << "\n";
    for (size_t k = 0; k < prof.degrees.size(); ++k)
        os << "  d_" << k << " = " << interval_text(prof.degrees[k]) << "\n";
    os << "entropy: " << interval_text(prof.entropy) << "\n";
    if (cert)
        os << "primitivity certificate (DegreeDrop): d1 " << interval_text(cert->d1) << " > d2 "
           << interval_text(cert->d2) << "\n";
    else
        os << "no degree-drop certificate\n";
    emit(cfg, j, os.str());
    return 0;
}

int profile_output(const RunConfig& cfg, const IntMatrix& M, const DegreeProfile& prof,
                   const char* type) {
    auto cert = primitivity_by_degree_drop(prof);
    json j;
    j["schema"] = kSchema;
    j["type"] = type;
    j["matrix"] = matrix_json(M);
    j["profile"] = profile_json(prof);
    if (cert) j["certificate"] = certificate_json(*cert);
    std::ostringstream os;
    os << "model: " << profile_model_name(prof.model) << "\n";
    for (size_t k = 0; k < prof.degrees.size(); ++k)
        os << "  d_" << k << " = " << interval_text(prof.degrees[k]) << "\n";
    os << "entropy: " << interval_text(prof.entropy) << "\n";
    if (cert) os << "primitivity certificate (DegreeDrop)\n";
    emit(cfg, j, os.str());
    return 0;
}

int cmd_monomial_eval(const RunConfig& cfg, const std::string& matrix_arg, const std::string& point_arg) {
    IntMatrix A = parse_matrix_arg(matrix_arg);
    std::vector<Rat> t;
    std::stringstream ss(point_arg);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.push_back(parse_rat(cell));
    auto image = monomial_eval(A, t);
    json j;
    j["schema"] = kSchema;
    j["type"] = "monomial_eval";
    json pt = json::array();
    std::ostringstream os;
    for (const auto& v : image) {
        pt.push_back(v.get_str());
        os << v.get_str() << " ";
    }
    j["image"] = std::move(pt);
    os << "\n";
    emit(cfg, j, os.str());
    return 0;
}

int cmd_product_check(const RunConfig& cfg, const std::string& matrix_arg, int split) {
    IntMatrix A = parse_matrix_arg(matrix_arg);
    auto report = product_formula_check(A, split, cfg.tol);
    json j;
    j["schema"] = kSchema;
    j["type"] = "product_formula";
    j["matrix"] = matrix_json(A);
    j["split"] = split;
    json entries = json::array();
    std::ostringstream os;
    for (const auto& e : report.entries) {
        entries.push_back(json{{"p", e.p},
                               {"total", interval_json(e.total)},
                               {"best_split", interval_json(e.best_split)},
                               {"j", e.best_j},
                               {"pass", e.pass}});
        os << "p=" << e.p << " total " << interval_text(e.total) << " vs max-split "
           << interval_text(e.best_split) << " (j=" << e.best_j << ") "
           << (e.pass ? "pass" : "FAIL") << "\n";
    }
    j["entries"] = std::move(entries);
    j["all_pass"] = report.all_pass;
    os << (report.all_pass ? "all degrees consistent\n" : "INCONSISTENT\n");
    emit(cfg, j, os.str());
    return report.all_pass ? 0 : 4;
}

int cmd_hk_profile(const RunConfig& cfg, const std::string& d1_arg, int m) {
    RationalInterval d1;
    if (auto pos = d1_arg.find(':'); pos != std::string::npos)
        d1 = RationalInterval(parse_rat(d1_arg.substr(0, pos)), parse_rat(d1_arg.substr(pos + 1)));
    else
        d1 = RationalInterval::point(parse_rat(d1_arg));
    DegreeProfile prof = hk_profile(d1, m, cfg.tol);
    bool floor_ok = lehmer_floor_check(d1);
    json j;
    j["schema"] = kSchema;
    j["type"] = "hk_profile";
    j["m"] = m;
    j["d1"] = interval_json(d1);
    j["profile"] = profile_json(prof);
    j["lehmer_floor"] = floor_ok;
    std::ostringstream os;
    for (size_t k = 0; k < prof.degrees.size(); ++k)
        os << "  d_" << k << " = " << interval_text(prof.degrees[k]) << "\n";
    os << "entropy: " << interval_text(prof.entropy) << "\n"
       << "above the smallest known Salem floor: " << (floor_ok ? "yes" : "NO") << "\n";
    emit(cfg, j, os.str());
    return 0;
}

json coxeter_hit_json(int n, const SalemHit& hit, const CertificateOrRefusal& cert) {
    json h;
    h["n"] = n;
    h["word"] = hit.word.letters;
    h["charpoly"] = coeffs_json(hit.charpoly);
    h["salem"] = json{{"coefficients", coeffs_json(hit.salem)},
                      {"dominant", interval_json(hit.dominant)}};
    if (cert.certificate)
        h["certificate"] = certificate_json(*cert.certificate);
    else
        h["refusal"] = cert.refusal_reason;
    return h;
}

int cmd_coxeter(const RunConfig& cfg, int n, int max_len, bool full_degree) {
    WehlerRep rep = wehler_generators(n);
    auto hits = salem_element_search(rep, max_len, full_degree, cfg.tol, cfg.threads);
    json j;
    j["schema"] = kSchema;
    j["type"] = "coxeter_search";
    j["n"] = n;
    j["max_len"] = max_len;
    j["full_degree"] = full_degree;
    json hs = json::array();
    std::ostringstream os;
    for (const auto& hit : hits) {
        auto cert = picard_primitivity_certificate(rep, hit.word, cfg.tol);
        hs.push_back(coxeter_hit_json(n, hit, cert));
        os << "word [";
        for (size_t i = 0; i < hit.word.letters.size(); ++i)
            os << (i ? "," : "") << hit.word.letters[i];
        os << "] charpoly " << hit.charpoly.to_string() << " d1 " << interval_text(hit.dominant)
           << (cert.certificate ? " [certificate]" : "") << "\n";
    }
    j["hits"] = std::move(hs);
    j["count"] = hits.size();
    os << hits.size() << " hit(s) up to length " << max_len << "\n";
    emit(cfg, j, os.str());
    if (full_degree && hits.empty()) return 3;
    return 0;
}

// --------------------------------------------------------------------------
// certificate re-verification

bool verify_degree_drop(const json& cert) {
    RationalInterval d1 = interval_from_json(cert.at("d1"));
    RationalInterval d2 = interval_from_json(cert.at("d2"));
    return d1.lo > d2.hi && d1.lo > 1;
}

bool verify_classification(const json& doc, const Rat& tol) {
    IntPoly p = poly_from_json(doc.at("coefficients"));
    Classification c = classify(p, tol);
    if (std::string(kind_name(c.kind)) != doc.at("kind").get<std::string>()) return false;
    const json& dc = doc.at("disk_counts");
    if (c.counts.inside != dc.at("inside").get<int>() || c.counts.on != dc.at("on").get<int>() ||
        c.counts.outside != dc.at("outside").get<int>())
        return false;
    if (c.kind == Kind::Pisot || c.kind == Kind::Salem) {
        RationalInterval stored = interval_from_json(doc.at("dominant"));
        if (!stored.intersects(c.dominant)) return false;
        if (doc.at("unit").get<bool>() != c.pisot_unit) return false;
    }
    return true;
}

bool verify_picard(const json& cert, const Rat& tol) {
    IntPoly cp = poly_from_json(cert.at("charpoly"));
    CoxeterWord w{cert.at("word").get<std::vector<int>>()};
    const int n = static_cast<int>(cp.degree()) - 1;
    WehlerRep rep = wehler_generators(n);
    if (!(charpoly(word_to_matrix(rep, w)) == cp)) return false;
    Classification c = classify(cp, tol);
    if (c.kind != Kind::Salem) return false;
    return interval_from_json(cert.at("d1")).intersects(c.dominant);
}

bool verify_certificate_obj(const json& cert, const Rat& tol) {
    std::string criterion = cert.at("criterion").get<std::string>();
    if (criterion == "DegreeDrop") return verify_degree_drop(cert);
    if (criterion == "IrreduciblePicard") return verify_picard(cert, tol);
    throw ParseError("unknown certificate criterion: " + criterion);
}

int cmd_verify(const RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc = json::parse(in);
    if (doc.at("schema").get<std::string>() != kSchema)
        throw ParseError("unsupported schema version");
    std::string type = doc.at("type").get<std::string>();
    bool ok = false;
    if (type == "classification") {
        ok = verify_classification(doc, cfg.tol);
    } else if (type == "construct" || type == "abelian_profile" || type == "monomial_profile") {
        if (!doc.contains("certificate")) throw ParseError("document carries no certificate");
        ok = verify_certificate_obj(doc.at("certificate"), cfg.tol);
        if (ok && doc.contains("matrix") && doc.contains("profile")) {
            IntMatrix M = matrix_from_json(doc.at("matrix"));
            std::string model = doc.at("profile").at("model").get<std::string>();
            DegreeProfile prof = (model == "Abelian") ? abelian_profile(M, cfg.tol)
                                                      : monomial_profile(M, cfg.tol);
            const json& degs = doc.at("profile").at("degrees");
            if (degs.size() != prof.degrees.size()) {
                ok = false;
            } else {
                for (size_t k = 0; ok && k < prof.degrees.size(); ++k)
                    ok = interval_from_json(degs[k]).intersects(prof.degrees[k]);
            }
        }
    } else if (type == "coxeter_search") {
        ok = true;
        for (const auto& hit : doc.at("hits")) {
            if (!hit.contains("certificate")) continue;
            if (!verify_certificate_obj(hit.at("certificate"), cfg.tol)) {
                ok = false;
                break;
            }
        }
    } else {
        throw ParseError("cannot verify documents of type '" + type + "'");
    }
    json j;
    j["schema"] = kSchema;
    j["type"] = "verification";
    j["input"] = path;
    j["verified"] = ok;
    emit(cfg, j, std::string("verification: ") + (ok ? "OK" : "FAILED") + "\n");
    return ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of spectral data for lattice automorphisms"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string tol_str = "1/1000000";
    app.add_option("--tol", tol_str, "enclosure tolerance (rational or decimal)")->capture_default_str();
    app.add_flag("--json", cfg.json_out, "emit JSON instead of text");
    app.add_option("--threads", cfg.threads, "worker budget for searches")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed echoed for reproducibility")->capture_default_str();

    std::string poly_arg, matrix_arg, point_arg, d1_arg, model = "abelian", verify_path;
    int degree = 0, height = 1, dimension = 0, split = 1, m_half = 1, n_cox = 2, max_len = 10;
    bool units_only = false, full_degree = false;

    auto* c_classify = app.add_subcommand("classify", "classify a monic integer polynomial");
    c_classify->add_option("poly", poly_arg, "polynomial (human syntax or coefficient list)")->required();

    auto* c_factor = app.add_subcommand("factor", "factor a monic integer polynomial");
    c_factor->add_option("poly", poly_arg)->required();

    auto* c_search = app.add_subcommand("pisot-search", "enumerate Pisot polynomials by degree and height");
    c_search->add_option("degree", degree)->required();
    c_search->add_option("--height", height)->capture_default_str();
    c_search->add_flag("--units-only", units_only);

    auto* c_construct = app.add_subcommand("construct", "build a primitive automorphism model from a searched Pisot unit");
    c_construct->add_option("dimension", dimension)->required();
    c_construct->add_option("--model", model, "abelian|cremona")->check(CLI::IsMember({"abelian", "cremona"}));
    c_construct->add_option("--height", height)->capture_default_str();

    auto* c_monomial = app.add_subcommand("monomial", "monomial-map operations");
    c_monomial->require_subcommand(1);
    auto* c_meval = c_monomial->add_subcommand("eval", "evaluate the monomial map at a rational point");
    c_meval->add_option("-A,--matrix", matrix_arg, "exponent matrix ('0,1;1,0' or JSON)")->required();
    c_meval->add_option("-t,--point", point_arg, "comma-separated rationals")->required();
    auto* c_mprofile = c_monomial->add_subcommand("profile", "certified degree profile of a monomial map");
    c_mprofile->add_option("-A,--matrix", matrix_arg)->required();
    auto* c_mcheck = c_monomial->add_subcommand("product-check", "block-triangular product-formula consistency");
    c_mcheck->add_option("-A,--matrix", matrix_arg)->required();
    c_mcheck->add_option("-b,--split", split)->required();

    auto* c_abelian = app.add_subcommand("abelian", "certified degree profile of a torus automorphism");
    c_abelian->add_option("matrix", matrix_arg)->required();

    auto* c_hk = app.add_subcommand("hk-profile", "mirror-symmetric profile from a first dynamical degree");
    c_hk->add_option("--d1", d1_arg, "rational, or interval 'lo:hi'")->required();
    c_hk->add_option("-m", m_half, "half-dimension")->required();

    auto* c_coxeter = app.add_subcommand("coxeter", "search reflection-group words with Salem spectral data");
    c_coxeter->add_option("n", n_cox)->required();
    c_coxeter->add_option("--max-len", max_len)->capture_default_str();
    c_coxeter->add_flag("--full-degree", full_degree);

    auto* c_verify = app.add_subcommand("verify", "re-check an emitted certificate JSON file");
    c_verify->add_option("file", verify_path)->required();

    // allow the global flags (--json, --tol, ...) after the subcommand name
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.tol = parse_rat(tol_str);
        if (cfg.tol <= 0) throw ParseError("tolerance must be positive");
        if (cfg.threads < 1) cfg.threads = 1;

        if (*c_classify) return cmd_classify(cfg, poly_arg);
        if (*c_factor) return cmd_factor(cfg, poly_arg);
        if (*c_search) return cmd_pisot_search(cfg, degree, height, units_only);
        if (*c_construct) return cmd_construct(cfg, dimension, model, height);
        if (*c_monomial) {
            if (*c_meval) return cmd_monomial_eval(cfg, matrix_arg, point_arg);
            if (*c_mprofile)
                return profile_output(cfg, parse_matrix_arg(matrix_arg),
                                      monomial_profile(parse_matrix_arg(matrix_arg), cfg.tol),
                                      "monomial_profile");
            if (*c_mcheck) return cmd_product_check(cfg, matrix_arg, split);
        }
        if (*c_abelian)
            return profile_output(cfg, parse_matrix_arg(matrix_arg),
                                  abelian_profile(parse_matrix_arg(matrix_arg), cfg.tol),
                                  "abelian_profile");
        if (*c_hk) return cmd_hk_profile(cfg, d1_arg, m_half);
        if (*c_coxeter) return cmd_coxeter(cfg, n_cox, max_len, full_degree);
        if (*c_verify) return cmd_verify(cfg, verify_path);
    } catch (const OddRankFullDegree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const StructureViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
