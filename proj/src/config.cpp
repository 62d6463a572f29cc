/*
 * Copyright (C) 2026 rumorctl contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "rumorctl/config.hpp"

#include <cctype>
#include <climits>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace rumorctl {

namespace {

std::string trim(const std::string& s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return s.substr(b, e - b);
}

Real parse_real(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        const Real parsed = std::stod(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument("");
        }
        return parsed;
    }
    catch (const std::exception&) {
        throw std::invalid_argument("key '" + key + "': '" + value + "' is not a number");
    }
}

int parse_int(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        const long parsed = std::stol(value, &used);
        if (used != value.size() || parsed < INT_MIN || parsed > INT_MAX) {
            throw std::invalid_argument("");
        }
        return static_cast<int>(parsed);
    }
    catch (const std::exception&) {
        throw std::invalid_argument("key '" + key + "': '" + value + "' is not an integer");
    }
}

std::vector<Real> parse_real_list(const std::string& key, const std::string& value)
{
    std::vector<Real> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_real(key, trim(item)));
    }
    if (out.empty()) {
        throw std::invalid_argument("key '" + key + "': empty value list");
    }
    return out;
}

void require(bool ok, const std::string& key, const std::string& bound)
{
    if (!ok) {
        throw std::invalid_argument("key '" + key + "': must be " + bound);
    }
}

std::string format_real(Real v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const std::set<std::string> kKnownKeys = {
    "profile",   "beta",        "beta_m",      "beta_M",          "a1",
    "c1",        "a2",          "c2",          "gamma",           "alpha",
    "s0",        "T",           "u_max",       "B",               "budget_fraction",
    "n_steps",   "theta",       "lambda_low",  "lambda_high",     "B_th",
    "lambda_th", "N_sweep",     "n_segments",  "n_levels",        "sweep_param",
    "sweep_values", "sweep_min", "sweep_max",  "sweep_count",     "out"};

} // namespace

Real ScenarioConfig::budget_total() const
{
    if (budget_is_absolute) {
        return B;
    }
    return budget_fraction * (u_max * u_max) * T;
}

SpreadingProfile ScenarioConfig::spreading_profile() const
{
    if (profile == "constant") {
        return SpreadingProfile::constant(beta);
    }
    if (profile == "logistic_increasing") {
        return SpreadingProfile::logistic_increasing(beta_m, beta_M, a1, c1);
    }
    if (profile == "logistic_decreasing") {
        return SpreadingProfile::logistic_decreasing(beta_m, beta_M, a2, c2);
    }
    throw std::invalid_argument("key 'profile': unknown profile '" + profile + "'");
}

EpidemicParams ScenarioConfig::epidemic_params() const
{
    return EpidemicParams(spreading_profile(), gamma, alpha, s0, T);
}

ControlBudget ScenarioConfig::control_budget() const
{
    return ControlBudget(quadratic_cost(), u_max, budget_total());
}

SweepConfig ScenarioConfig::sweep_config() const
{
    SweepConfig cfg;
    cfg.lambda_low = lambda_low;
    cfg.lambda_high = lambda_high;
    cfg.budget_tol = B_th;
    cfg.lambda_tol = lambda_th;
    cfg.n_sweeps = N_sweep;
    cfg.theta = theta;
    cfg.n_steps = n_steps;
    return cfg;
}

Scenario ScenarioConfig::scenario() const
{
    return Scenario{epidemic_params(), control_budget(), sweep_config()};
}

ScenarioConfig
parse_config(const std::string& text,
             const std::vector<std::pair<std::string, std::string>>& overrides)
{
    std::map<std::string, std::string> kv;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("malformed line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::invalid_argument("malformed line " + std::to_string(line_no) +
                                        ": empty key or value");
        }
        if (!kKnownKeys.count(key)) {
            throw std::invalid_argument("unknown key '" + key + "'");
        }
        if (kv.count(key)) {
            throw std::invalid_argument("duplicate key '" + key + "'");
        }
        kv[key] = value;
    }

    for (const auto& [key, value] : overrides) {
        if (!kKnownKeys.count(key)) {
            throw std::invalid_argument("unknown key '" + key + "'");
        }
        kv[key] = value;
    }

    ScenarioConfig cfg;

    auto take = [&kv](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) {
            return std::nullopt;
        }
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    if (auto v = take("profile")) {
        if (*v != "constant" && *v != "logistic_increasing" && *v != "logistic_decreasing") {
            throw std::invalid_argument("key 'profile': unknown profile '" + *v + "'");
        }
        cfg.profile = *v;
    }
    if (auto v = take("beta")) {
        cfg.beta = parse_real("beta", *v);
        require(cfg.beta >= 0.0, "beta", ">= 0");
    }
    if (auto v = take("beta_m")) {
        cfg.beta_m = parse_real("beta_m", *v);
        require(cfg.beta_m >= 0.0, "beta_m", ">= 0");
    }
    if (auto v = take("beta_M")) {
        cfg.beta_M = parse_real("beta_M", *v);
    }
    require(cfg.profile == "constant" || cfg.beta_M > cfg.beta_m, "beta_M", "> beta_m");
    if (auto v = take("a1")) {
        cfg.a1 = parse_real("a1", *v);
        require(cfg.a1 > 0.0, "a1", "> 0");
    }
    if (auto v = take("c1")) {
        cfg.c1 = parse_real("c1", *v);
    }
    if (auto v = take("a2")) {
        cfg.a2 = parse_real("a2", *v);
        require(cfg.a2 > 0.0, "a2", "> 0");
    }
    if (auto v = take("c2")) {
        cfg.c2 = parse_real("c2", *v);
    }
    if (auto v = take("gamma")) {
        cfg.gamma = parse_real("gamma", *v);
        require(cfg.gamma >= 0.0, "gamma", ">= 0");
    }
    if (auto v = take("alpha")) {
        cfg.alpha = parse_real("alpha", *v);
        require(cfg.alpha >= 0.0, "alpha", ">= 0");
    }
    if (auto v = take("s0")) {
        cfg.s0 = parse_real("s0", *v);
        require(cfg.s0 > 0.0 && cfg.s0 < 1.0, "s0", "strictly between 0 and 1");
    }
    if (auto v = take("T")) {
        cfg.T = parse_real("T", *v);
        require(cfg.T > 0.0, "T", "> 0");
    }
    if (auto v = take("u_max")) {
        cfg.u_max = parse_real("u_max", *v);
        require(cfg.u_max > 0.0, "u_max", "> 0");
    }

    const auto b_abs = take("B");
    const auto b_frac = take("budget_fraction");
    if (b_abs && b_frac) {
        throw std::invalid_argument("keys 'B' and 'budget_fraction' are mutually exclusive");
    }
    if (b_abs) {
        cfg.budget_is_absolute = true;
        cfg.B = parse_real("B", *b_abs);
        require(cfg.B >= 0.0, "B", ">= 0");
    }
    else if (b_frac) {
        cfg.budget_fraction = parse_real("budget_fraction", *b_frac);
        require(cfg.budget_fraction >= 0.0 && cfg.budget_fraction <= 1.0, "budget_fraction",
                "within [0, 1]");
    }

    if (auto v = take("n_steps")) {
        cfg.n_steps = parse_int("n_steps", *v);
        require(cfg.n_steps >= 1, "n_steps", ">= 1");
    }
    if (auto v = take("theta")) {
        cfg.theta = parse_real("theta", *v);
        require(cfg.theta > 0.0 && cfg.theta <= 1.0, "theta", "within (0, 1]");
    }
    if (auto v = take("lambda_low")) {
        cfg.lambda_low = parse_real("lambda_low", *v);
        require(cfg.lambda_low >= 0.0, "lambda_low", ">= 0");
    }
    if (auto v = take("lambda_high")) {
        cfg.lambda_high = parse_real("lambda_high", *v);
    }
    require(cfg.lambda_high > cfg.lambda_low, "lambda_high", "> lambda_low");
    if (auto v = take("B_th")) {
        cfg.B_th = parse_real("B_th", *v);
        require(cfg.B_th > 0.0, "B_th", "> 0");
    }
    if (auto v = take("lambda_th")) {
        cfg.lambda_th = parse_real("lambda_th", *v);
        require(cfg.lambda_th > 0.0, "lambda_th", "> 0");
    }
    if (auto v = take("N_sweep")) {
        cfg.N_sweep = parse_int("N_sweep", *v);
        require(cfg.N_sweep >= 1, "N_sweep", ">= 1");
    }
    if (auto v = take("n_segments")) {
        cfg.n_segments = parse_int("n_segments", *v);
        require(cfg.n_segments >= 1 && cfg.n_segments <= 6, "n_segments", "within [1, 6]");
    }
    if (auto v = take("n_levels")) {
        cfg.n_levels = parse_int("n_levels", *v);
        require(cfg.n_levels >= 2 && cfg.n_levels <= 16, "n_levels", "within [2, 16]");
    }

    const auto sweep_param = take("sweep_param");
    const auto sweep_values = take("sweep_values");
    const auto sweep_min = take("sweep_min");
    const auto sweep_max = take("sweep_max");
    const auto sweep_count = take("sweep_count");
    if (sweep_param) {
        SweepRequest req;
        req.parameter = sweep_parameter_from_string(*sweep_param);
        if (sweep_values && (sweep_min || sweep_max || sweep_count)) {
            throw std::invalid_argument(
                "key 'sweep_values' excludes 'sweep_min'/'sweep_max'/'sweep_count'");
        }
        if (sweep_values) {
            req.values = parse_real_list("sweep_values", *sweep_values);
        }
        else {
            if (!sweep_min || !sweep_max || !sweep_count) {
                throw std::invalid_argument("sweep_param requires either 'sweep_values' or all "
                                            "of 'sweep_min', 'sweep_max', 'sweep_count'");
            }
            const Real lo = parse_real("sweep_min", *sweep_min);
            const Real hi = parse_real("sweep_max", *sweep_max);
            const int count = parse_int("sweep_count", *sweep_count);
            require(count >= 2, "sweep_count", ">= 2");
            require(hi > lo, "sweep_max", "> sweep_min");
            req.values.resize(count);
            for (int j = 0; j < count; ++j) {
                req.values[j] = lo + (hi - lo) * static_cast<Real>(j) / (count - 1);
            }
        }
        for (std::size_t j = 1; j < req.values.size(); ++j) {
            require(req.values[j] > req.values[j - 1], "sweep_values", "strictly increasing");
        }
        cfg.sweep = std::move(req);
    }
    else if (sweep_values || sweep_min || sweep_max || sweep_count) {
        throw std::invalid_argument("sweep settings require 'sweep_param'");
    }

    if (auto v = take("out")) {
        cfg.out = *v;
    }

    return cfg;
}

std::string serialize_config(const ScenarioConfig& cfg)
{
    std::ostringstream out;
    out << "profile = " << cfg.profile << "\n";
    out << "beta = " << format_real(cfg.beta) << "\n";
    out << "beta_m = " << format_real(cfg.beta_m) << "\n";
    out << "beta_M = " << format_real(cfg.beta_M) << "\n";
    out << "a1 = " << format_real(cfg.a1) << "\n";
    out << "c1 = " << format_real(cfg.c1) << "\n";
    out << "a2 = " << format_real(cfg.a2) << "\n";
    out << "c2 = " << format_real(cfg.c2) << "\n";
    out << "gamma = " << format_real(cfg.gamma) << "\n";
    out << "alpha = " << format_real(cfg.alpha) << "\n";
    out << "s0 = " << format_real(cfg.s0) << "\n";
    out << "T = " << format_real(cfg.T) << "\n";
    out << "u_max = " << format_real(cfg.u_max) << "\n";
    if (cfg.budget_is_absolute) {
        out << "B = " << format_real(cfg.B) << "\n";
    }
    else {
        out << "budget_fraction = " << format_real(cfg.budget_fraction) << "\n";
    }
    out << "n_steps = " << cfg.n_steps << "\n";
    out << "theta = " << format_real(cfg.theta) << "\n";
    out << "lambda_low = " << format_real(cfg.lambda_low) << "\n";
    out << "lambda_high = " << format_real(cfg.lambda_high) << "\n";
    out << "B_th = " << format_real(cfg.B_th) << "\n";
    out << "lambda_th = " << format_real(cfg.lambda_th) << "\n";
    out << "N_sweep = " << cfg.N_sweep << "\n";
    out << "n_segments = " << cfg.n_segments << "\n";
    out << "n_levels = " << cfg.n_levels << "\n";
    if (cfg.sweep) {
        out << "sweep_param = " << to_string(cfg.sweep->parameter) << "\n";
        out << "sweep_values = ";
        for (std::size_t j = 0; j < cfg.sweep->values.size(); ++j) {
            out << (j ? "," : "") << format_real(cfg.sweep->values[j]);
        }
        out << "\n";
    }
    if (!cfg.out.empty()) {
        out << "out = " << cfg.out << "\n";
    }
    return out.str();
}

} // namespace rumorctl
