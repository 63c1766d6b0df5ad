// Copyright 2026 The phaseprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "phaseprobe/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

#include "phaseprobe/errors.hpp"

namespace phaseprobe {

namespace {

using json = nlohmann::json;

constexpr int kMaxSteps = 1'000'000;
constexpr int kMaxFockLevels = 160;

[[noreturn]] void fail(const std::string &path, const std::string &msg) {
    throw ValidationError(path, msg);
}

std::string join(const std::string &base, const std::string &key) {
    return base.empty() ? key : base + "." + key;
}

void check_object(const json &v, const std::string &path,
                  std::initializer_list<const char *> allowed) {
    if (!v.is_object()) {
        fail(path, "expected an object");
    }
    for (auto it = v.begin(); it != v.end(); ++it) {
        bool known = false;
        for (const char *k : allowed) {
            known = known || it.key() == k;
        }
        if (!known) {
            fail(join(path, it.key()), "unknown field");
        }
    }
}

const json &require(const json &obj, const std::string &path, const char *key) {
    if (!obj.contains(key)) {
        fail(join(path, key), "required field missing");
    }
    return obj.at(key);
}

double number(const json &v, const std::string &path) {
    if (!v.is_number()) {
        fail(path, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        fail(path, "must be finite");
    }
    return d;
}

double number_field(const json &obj, const std::string &path, const char *key) {
    return number(require(obj, path, key), join(path, key));
}

double number_or(const json &obj, const std::string &path, const char *key,
                 double fallback) {
    return obj.contains(key) ? number(obj.at(key), join(path, key)) : fallback;
}

int integer(const json &v, const std::string &path) {
    if (v.is_number_integer()) {
        const auto i = v.get<long long>();
        if (i < -1'000'000'000LL || i > 1'000'000'000LL) {
            fail(path, "integer out of range");
        }
        return static_cast<int>(i);
    }
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 1e9) {
            return static_cast<int>(d);
        }
    }
    fail(path, "expected an integer");
}

int level_field(const json &obj, const std::string &path, const char *key) {
    const int n = integer(require(obj, path, key), join(path, key));
    if (n < 0) {
        fail(join(path, key), "number level must be non-negative");
    }
    return n;
}

cplx complex_value(const json &v, const std::string &path) {
    if (v.is_number()) {
        return {number(v, path), 0.0};
    }
    if (v.is_array() && v.size() == 2) {
        return {number(v[0], path + "[0]"), number(v[1], path + "[1]")};
    }
    fail(path, "expected a number or a [re, im] pair");
}

cplx complex_field(const json &obj, const std::string &path, const char *key) {
    return complex_value(require(obj, path, key), join(path, key));
}

cplx complex_or(const json &obj, const std::string &path, const char *key,
                cplx fallback) {
    return obj.contains(key) ? complex_value(obj.at(key), join(path, key))
                             : fallback;
}

std::string string_value(const json &v, const std::string &path) {
    if (!v.is_string()) {
        fail(path, "expected a string");
    }
    return v.get<std::string>();
}

bool boolean(const json &v, const std::string &path) {
    if (!v.is_boolean()) {
        fail(path, "expected true or false");
    }
    return v.get<bool>();
}

NumberFormMode form_mode(const json &obj, const std::string &path) {
    if (!obj.contains("mode")) {
        return NumberFormMode::Exact;
    }
    const std::string m = string_value(obj.at("mode"), join(path, "mode"));
    if (m == "exact") {
        return NumberFormMode::Exact;
    }
    if (m == "paper_literal") {
        return NumberFormMode::PaperLiteral;
    }
    fail(join(path, "mode"), "expected \"exact\" or \"paper_literal\"");
}

void require_distinct_levels(int n, int m, const std::string &path,
                             const char *nk, const char *mk) {
    if (n == m) {
        fail(join(path, mk), std::string("levels ") + nk + " and " + mk +
                                 " must differ (orthogonal branches)");
    }
}

ModelParams parse_two_pair_model(const json &v) {
    const std::string path = "model";
    check_object(v, path, {"omega2", "g1", "g2", "delta1", "delta2"});
    ModelParams m;
    m.omega2 = number_field(v, path, "omega2");
    m.g1 = number_field(v, path, "g1");
    m.g2 = number_field(v, path, "g2");
    m.delta1 = number_field(v, path, "delta1");
    m.delta2 = number_field(v, path, "delta2");
    if (!(m.omega2 > 0.0)) {
        fail("model.omega2", "must be positive");
    }
    return m;
}

QubitPreparation parse_two_pair_qubits(const json &v) {
    const std::string path = "qubits";
    if (v.is_string()) {
        if (v.get<std::string>() != "maximal") {
            fail(path, "expected \"maximal\" or an amplitude object");
        }
        return QubitPreparation::maximal();
    }
    check_object(v, path, {"a1", "b1", "a2", "b2"});
    QubitPreparation q;
    q.a1 = complex_field(v, path, "a1");
    q.b1 = complex_field(v, path, "b1");
    q.a2 = complex_field(v, path, "a2");
    q.b2 = complex_field(v, path, "b2");
    if (std::abs(std::norm(q.a1) + std::norm(q.b1) - 1.0) > 1e-10) {
        fail("qubits.b1", "|a1|^2 + |b1|^2 must equal 1");
    }
    if (std::abs(std::norm(q.a2) + std::norm(q.b2) - 1.0) > 1e-10) {
        fail("qubits.b2", "|a2|^2 + |b2|^2 must equal 1");
    }
    return q;
}

StateSpec parse_two_pair_state(const json &v) {
    const std::string path = "state";
    if (!v.is_object()) {
        fail(path, "expected an object");
    }
    const std::string family =
        string_value(require(v, path, "family"), "state.family");
    if (family == "separable_gaussian") {
        check_object(v, path, {"family", "centroids"});
        const json &c = require(v, path, "centroids");
        if (!c.is_array() || c.size() != 4) {
            fail("state.centroids", "expected [x1, p1, x2, p2]");
        }
        GaussianParams g;
        g.x_o1 = number(c[0], "state.centroids[0]");
        g.p_o1 = number(c[1], "state.centroids[1]");
        g.x_o2 = number(c[2], "state.centroids[2]");
        g.p_o2 = number(c[3], "state.centroids[3]");
        return g;
    }
    if (family == "entangled_coherent") {
        check_object(v, path,
                     {"family", "alpha1", "beta1", "alpha2", "beta2", "c1", "c2"});
        EntangledCoherentParams e;
        e.alpha1 = complex_field(v, path, "alpha1");
        e.beta1 = complex_field(v, path, "beta1");
        e.alpha2 = complex_field(v, path, "alpha2");
        e.beta2 = complex_field(v, path, "beta2");
        e.c1 = complex_or(v, path, "c1", e.c1);
        e.c2 = complex_or(v, path, "c2", e.c2);
        return e;
    }
    if (family == "separable_number") {
        check_object(v, path, {"family", "n1", "m1", "n2", "m2", "alpha1",
                               "beta1", "alpha2", "beta2", "mode"});
        SeparableNumberParams s;
        s.n1 = level_field(v, path, "n1");
        s.m1 = level_field(v, path, "m1");
        s.n2 = level_field(v, path, "n2");
        s.m2 = level_field(v, path, "m2");
        require_distinct_levels(s.n1, s.m1, path, "n1", "m1");
        require_distinct_levels(s.n2, s.m2, path, "n2", "m2");
        s.alpha1 = complex_or(v, path, "alpha1", s.alpha1);
        s.beta1 = complex_or(v, path, "beta1", s.beta1);
        s.alpha2 = complex_or(v, path, "alpha2", s.alpha2);
        s.beta2 = complex_or(v, path, "beta2", s.beta2);
        s.mode = form_mode(v, path);
        return s;
    }
    if (family == "entangled_number") {
        check_object(v, path, {"family", "n1", "m1", "n2", "m2", "p1", "p2",
                               "mode", "paper_b"});
        EntangledNumberParams e;
        e.n1 = level_field(v, path, "n1");
        e.m1 = level_field(v, path, "m1");
        e.n2 = level_field(v, path, "n2");
        e.m2 = level_field(v, path, "m2");
        require_distinct_levels(e.n1, e.m1, path, "n1", "m1");
        require_distinct_levels(e.n2, e.m2, path, "n2", "m2");
        e.p1 = complex_or(v, path, "p1", e.p1);
        e.p2 = complex_or(v, path, "p2", e.p2);
        e.mode = form_mode(v, path);
        e.paper_b = number_or(v, path, "paper_b", e.paper_b);
        return e;
    }
    fail("state.family",
         "unknown family \"" + family +
             "\" (separable_gaussian, entangled_coherent, separable_number, "
             "entangled_number)");
}

SinglePairSpec parse_single(const json &doc) {
    SinglePairSpec s;
    const json &m = require(doc, "", "model");
    check_object(m, "model", {"delta", "g"});
    s.delta = number_field(m, "model", "delta");
    s.g = number_field(m, "model", "g");

    if (doc.contains("qubits")) {
        const json &q = doc.at("qubits");
        if (q.is_string()) {
            if (q.get<std::string>() != "maximal") {
                fail("qubits", "expected \"maximal\" or an amplitude object");
            }
        } else {
            check_object(q, "qubits", {"a_e", "a_g"});
            s.a_e = complex_field(q, "qubits", "a_e");
            s.a_g = complex_field(q, "qubits", "a_g");
            if (std::abs(std::norm(s.a_e) + std::norm(s.a_g) - 1.0) > 1e-10) {
                fail("qubits.a_g", "|a_e|^2 + |a_g|^2 must equal 1");
            }
        }
    }

    if (doc.contains("state")) {
        const json &st = doc.at("state");
        if (!st.is_object()) {
            fail("state", "expected an object");
        }
        const std::string family =
            string_value(require(st, "state", "family"), "state.family");
        if (family == "coherent") {
            check_object(st, "state", {"family", "centroid"});
            const json &c = require(st, "state", "centroid");
            if (!c.is_array() || c.size() != 2) {
                fail("state.centroid", "expected [x, p]");
            }
            s.oscillator = CoherentMode{number(c[0], "state.centroid[0]"),
                                        number(c[1], "state.centroid[1]")};
        } else if (family == "number_superposition") {
            check_object(st, "state", {"family", "n", "m", "alpha", "beta"});
            NumberSuperposition ns;
            ns.n = level_field(st, "state", "n");
            ns.m = level_field(st, "state", "m");
            require_distinct_levels(ns.n, ns.m, "state", "n", "m");
            ns.alpha = complex_or(st, "state", "alpha", ns.alpha);
            ns.beta = complex_or(st, "state", "beta", ns.beta);
            s.oscillator = ns;
        } else {
            fail("state.family", "unknown single-pair family \"" + family +
                                     "\" (coherent, number_superposition)");
        }
    }
    return s;
}

WignerRequest parse_wigner(const json &v) {
    const std::string path = "wigner";
    check_object(v, path, {"times", "grid", "scale"});
    WignerRequest w;
    const json &times = require(v, path, "times");
    if (!times.is_array() || times.empty()) {
        fail("wigner.times", "expected a non-empty array of times");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        w.times.push_back(number(times[i], "wigner.times[" + std::to_string(i) + "]"));
    }
    if (v.contains("grid")) {
        const json &g = v.at("grid");
        const std::string gp = "wigner.grid";
        check_object(g, gp, {"x_min", "x_max", "p_min", "p_max", "step"});
        w.grid.x_min = number_or(g, gp, "x_min", w.grid.x_min);
        w.grid.x_max = number_or(g, gp, "x_max", w.grid.x_max);
        w.grid.p_min = number_or(g, gp, "p_min", w.grid.p_min);
        w.grid.p_max = number_or(g, gp, "p_max", w.grid.p_max);
        w.grid.step = number_or(g, gp, "step", w.grid.step);
        if (!(w.grid.x_max > w.grid.x_min) || !(w.grid.p_max > w.grid.p_min)) {
            fail(gp, "grid ranges must be non-empty");
        }
        if (!(w.grid.step > 0.0) ||
            (w.grid.x_max - w.grid.x_min) / w.grid.step > 1e4 ||
            (w.grid.p_max - w.grid.p_min) / w.grid.step > 1e4) {
            fail("wigner.grid.step", "must be positive and give at most 1e4 "
                                     "intervals per axis");
        }
    }
    if (v.contains("scale")) {
        const std::string sc = string_value(v.at("scale"), "wigner.scale");
        if (sc == "literal") {
            w.scale = WignerScale::Literal;
        } else if (sc == "canonical") {
            w.scale = WignerScale::Canonical;
        } else {
            fail("wigner.scale", "expected \"literal\" or \"canonical\"");
        }
    }
    return w;
}

bool valid_name(const std::string &s) {
    if (s.empty() || s.size() > 120) {
        return false;
    }
    for (char c : s) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<double> TimeGrid::points() const {
    std::vector<double> t(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        t[i] = t_max * static_cast<double>(i) / static_cast<double>(steps);
    }
    return t;
}

SingleDephasingModel SinglePairSpec::model() const {
    SingleDephasingModel m;
    m.delta = delta;
    m.g = g;
    m.a = std::norm(a_e);
    m.c = a_e * std::conj(a_g);
    m.w0 = SingleModeCharFn(oscillator);
    return m;
}

Scenario parse_scenario(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error &e) {
        fail("", std::string("malformed JSON: ") + e.what());
    }
    check_object(doc, "",
                 {"schema", "name", "kind", "model", "qubits", "state", "time",
                  "oracle", "fidelity_mode", "wigner", "expect", "output"});

    Scenario s;
    if (doc.contains("schema")) {
        const std::string sc = string_value(doc.at("schema"), "schema");
        if (sc != kScenarioSchema) {
            fail("schema", "unsupported schema \"" + sc + "\", expected \"" +
                               std::string(kScenarioSchema) + "\"");
        }
    }
    s.name = doc.contains("name") ? string_value(doc.at("name"), "name")
                                  : std::string("scenario");
    if (!valid_name(s.name)) {
        fail("name", "use letters, digits, '_' or '-' only");
    }
    if (doc.contains("kind")) {
        const std::string k = string_value(doc.at("kind"), "kind");
        if (k == "two_pair") {
            s.kind = ScenarioKind::TwoPair;
        } else if (k == "single") {
            s.kind = ScenarioKind::Single;
        } else {
            fail("kind", "expected \"two_pair\" or \"single\"");
        }
    }

    if (s.kind == ScenarioKind::TwoPair) {
        s.model = parse_two_pair_model(require(doc, "", "model"));
        if (doc.contains("qubits")) {
            s.qubits = parse_two_pair_qubits(doc.at("qubits"));
        }
        s.state = parse_two_pair_state(require(doc, "", "state"));
        try {
            (void)make_state(s.state);
        } catch (const ContractViolation &e) {
            fail("state", e.what());
        }
        if (doc.contains("wigner")) {
            fail("wigner", "Wigner snapshots need kind \"single\"");
        }
    } else {
        s.single = parse_single(doc);
        try {
            (void)SingleModeCharFn(s.single.oscillator);
        } catch (const ContractViolation &e) {
            fail("state", e.what());
        }
        if (doc.contains("wigner")) {
            s.wigner = parse_wigner(doc.at("wigner"));
            if (!SingleModeCharFn(s.single.oscillator).is_vacuum()) {
                fail("wigner", "Wigner closed form needs a vacuum oscillator");
            }
        }
    }

    if (doc.contains("time")) {
        const json &t = doc.at("time");
        check_object(t, "time", {"t_max", "steps"});
        s.time.t_max = number_or(t, "time", "t_max", s.time.t_max);
        if (t.contains("steps")) {
            s.time.steps = integer(t.at("steps"), "time.steps");
        }
    }
    if (!(s.time.t_max > 0.0)) {
        fail("time.t_max", "must be positive");
    }
    if (s.time.steps < 2 || s.time.steps > kMaxSteps) {
        fail("time.steps", "must lie in [2, 1000000]");
    }

    if (doc.contains("oracle")) {
        const json &o = doc.at("oracle");
        check_object(o, "oracle", {"enabled", "n1", "n2", "tolerance"});
        if (o.contains("enabled")) {
            s.oracle.enabled = boolean(o.at("enabled"), "oracle.enabled");
        }
        if (o.contains("n1")) {
            s.oracle.n1 = integer(o.at("n1"), "oracle.n1");
        }
        if (o.contains("n2")) {
            s.oracle.n2 = integer(o.at("n2"), "oracle.n2");
        }
        s.oracle.tolerance =
            number_or(o, "oracle", "tolerance", s.oracle.tolerance);
    }
    if (s.oracle.n1 < 2 || s.oracle.n1 > kMaxFockLevels) {
        fail("oracle.n1", "must lie in [2, 160]");
    }
    if (s.oracle.n2 < 2 || s.oracle.n2 > kMaxFockLevels) {
        fail("oracle.n2", "must lie in [2, 160]");
    }
    if (!(s.oracle.tolerance > 0.0)) {
        fail("oracle.tolerance", "must be positive");
    }

    if (doc.contains("fidelity_mode")) {
        const std::string m =
            string_value(doc.at("fidelity_mode"), "fidelity_mode");
        if (m == "normalized") {
            s.fidelity_mode = FidelityMode::Normalized;
        } else if (m == "raw") {
            s.fidelity_mode = FidelityMode::Raw;
        } else {
            fail("fidelity_mode", "expected \"normalized\" or \"raw\"");
        }
    }
    if (s.kind == ScenarioKind::TwoPair) {
        const auto psi = s.qubits.amplitudes();
        if (0.5 * std::norm(psi[1] + psi[2]) < 1e-14) {
            fail("qubits", "preparation is orthogonal to the Bell state");
        }
    }
    // the match statistic always uses normalized fidelities
    if (s.kind == ScenarioKind::TwoPair &&
        (s.qubits.coherence_norm1() < 1e-15 ||
         s.qubits.coherence_norm2() < 1e-15)) {
        fail("qubits", "normalized fidelities need nonzero A1 and A2");
    }
    if (s.kind == ScenarioKind::Single && std::norm(s.single.a_e) *
                                                  std::norm(s.single.a_g) <
                                              1e-30) {
        fail("qubits", "the echo needs a nonzero initial coherence");
    }

    if (doc.contains("expect")) {
        const json &e = doc.at("expect");
        check_object(e, "expect", {"separable", "mismatch_threshold"});
        if (e.contains("separable")) {
            s.expect.separable = boolean(e.at("separable"), "expect.separable");
        }
        if (e.contains("mismatch_threshold")) {
            const double th = number(e.at("mismatch_threshold"),
                                     "expect.mismatch_threshold");
            if (!(th > 0.0)) {
                fail("expect.mismatch_threshold", "must be positive");
            }
            s.expect.mismatch_threshold = th;
        }
    }

    s.output = s.name;
    if (doc.contains("output")) {
        s.output = string_value(doc.at("output"), "output");
        if (!valid_name(s.output)) {
            fail("output", "use letters, digits, '_' or '-' only");
        }
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("", path.string() + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario(buf.str());
    } catch (const ValidationError &e) {
        throw ValidationError(e.path(), e.message(), path.string());
    }
}

} // namespace phaseprobe
