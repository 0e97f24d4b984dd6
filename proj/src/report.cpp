#include "lya/report.hpp"

#include <sstream>
#include <stdexcept>

namespace lya {

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
    }
    return "?";
}

bool Report::ok() const {
    for (const auto& c : checks)
        if (c.status != Status::Pass) return false;
    return true;
}

bool Report::has_error() const {
    for (const auto& c : checks)
        if (c.status == Status::Error) return true;
    return false;
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

const Check& Report::at(const std::string& name) const {
    if (const Check* c = find(name)) return *c;
    throw std::out_of_range("no check named '" + name + "' in report '" + subject + "'");
}

void Report::absorb(const Report& other, const std::string& prefix) {
    for (auto c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
}

std::string Report::text() const {
    std::ostringstream os;
    os << subject << "\n";
    for (const auto& c : checks) {
        os << "  [" << status_name(c.status) << "] " << c.name;
        if (!c.rule.empty()) os << "  (" << c.rule << ")";
        os << "\n";
        if (c.witness) {
            os << "      at (";
            for (size_t i = 0; i < c.witness->tuple.size(); ++i) os << (i ? "," : "") << c.witness->tuple[i];
            os << ") residual [";
            for (size_t i = 0; i < c.witness->residual.size(); ++i)
                os << (i ? ", " : "") << c.witness->residual[i];
            os << "]";
            if (c.witness->t_degree) os << " lowest t-degree " << *c.witness->t_degree;
            os << "\n";
        }
        if (!c.note.empty()) os << "      " << c.note << "\n";
    }
    return os.str();
}

Check passing(const std::string& name, const std::string& rule, const std::string& note) {
    return Check{name, Status::Pass, std::nullopt, rule, note};
}

Check failing(const std::string& name, const std::string& rule, Witness w, const std::string& note) {
    return Check{name, Status::Fail, std::move(w), rule, note};
}

}  // namespace lya
