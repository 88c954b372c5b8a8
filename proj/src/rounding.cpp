#include "cfc/rounding.hpp"

#include <boost/dynamic_bitset.hpp>

#include <ostream>
#include <sstream>

#include "cfc/errors.hpp"

namespace cfc {

IntervalVariables::IntervalVariables(const IntervalHypergraph& ih) : ih_(ih) {
    offset_.reserve(ih.size());
    for (const auto& iv : ih.intervals()) {
        offset_.push_back(total_);
        total_ += static_cast<std::size_t>(iv.length());
    }
}

std::size_t IntervalVariables::index(std::size_t interval, Vertex u) const {
    const auto& iv = ih_.interval(interval);
    if (!iv.contains(u)) throw InputError("point " + std::to_string(u) + " is not in interval " + std::to_string(interval));
    return offset_[interval] + static_cast<std::size_t>(u - iv.l);
}

namespace {

using PointSet = boost::dynamic_bitset<>;

class Rounder {
public:
    Rounder(const LPSolution& b_opt, const IntervalHypergraph& ih, const RoundingOptions& options)
        : ih_(ih), vars_(ih), x_(b_opt), options_(options) {
        for (const auto& iv : ih.intervals()) {
            PointSet pts(static_cast<std::size_t>(ih.num_points()) + 1);
            for (Vertex p = iv.l; p <= iv.r; ++p) pts.set(static_cast<std::size_t>(p));
            live_.push_back(std::move(pts));
        }
    }

    RoundingResult run() {
        RoundingResult out;
        const std::size_t guard = vars_.size();
        if (options_.keep_snapshots) out.snapshots.push_back(x_);
        while (!x_.is_integral()) {
            if (out.iterations + 1 > guard) abort("iteration guard: more than mu(H) = " + std::to_string(guard) + " iterations", out.iterations + 1, ih_.size());
            ++out.iterations;
            out.steps.push_back(step(out.iterations));
            if (options_.keep_snapshots) out.snapshots.push_back(x_);
        }
        out.solution = x_;
        return out;
    }

private:
    Rational& value(std::size_t interval, std::size_t point) {
        return x_.values[vars_.index(interval, static_cast<Vertex>(point))];
    }

    // Longest live interval; ties by smallest left endpoint, then input order.
    std::size_t select() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < live_.size(); ++i) {
            const auto len = live_[i].count();
            const auto best_len = live_[best].count();
            if (len > best_len || (len == best_len && live_[i].find_first() < live_[best].find_first())) best = i;
        }
        return best;
    }

    static std::size_t last_point(const PointSet& pts) {
        std::size_t last = pts.find_first();
        for (auto p = last; p != PointSet::npos; p = pts.find_next(p)) last = p;
        return last;
    }

    RoundingStep step(std::size_t iteration) {
        RoundingStep s;
        s.iteration = iteration;
        s.selected = select();
        const std::size_t r = last_point(live_[s.selected]);
        s.r = static_cast<Vertex>(r);
        s.delta = value(s.selected, r);
        for (std::size_t j = 0; j < live_.size(); ++j) {
            if (r < 2 || !live_[j].test(r) || !live_[j].test(r - 1)) continue;
            Rational& left = value(j, r - 1);
            Rational& right = value(j, r);
            left += s.delta;
            right -= s.delta;
            s.shifted.push_back(j);
            if (sgn(right) < 0 || left > 1) abort("value left [0,1] on interval " + std::to_string(j), iteration, j);
            if (sgn(right) == 0) {
                live_[j].reset(r);
                s.shrunk.push_back(j);
            }
        }
        if (options_.trace) {
            auto& os = *options_.trace;
            os << "iter=" << iteration << " select=" << s.selected << " r=" << s.r << " delta=" << s.delta.get_str()
               << " shifted=";
            for (std::size_t i = 0; i < s.shifted.size(); ++i) os << (i ? "," : "") << s.shifted[i];
            os << '\n';
        }
        return s;
    }

    [[noreturn]] void abort(const std::string& why, std::size_t iteration, std::size_t interval) const {
        std::ostringstream os;
        os << "rounding aborted at iteration " << iteration << ": " << why << '\n';
        if (interval < ih_.size())
            os << "  offending interval " << interval << " = [" << ih_.interval(interval).l << ','
               << ih_.interval(interval).r << "]\n";
        for (std::size_t i = 0; i < ih_.size(); ++i) {
            const auto& iv = ih_.interval(i);
            os << "  I" << i << " [" << iv.l << ',' << iv.r << "] live={";
            bool first = true;
            for (auto p = live_[i].find_first(); p != PointSet::npos; p = live_[i].find_next(p)) {
                os << (first ? "" : ",") << p;
                first = false;
            }
            os << "} x=";
            for (Vertex u = iv.l; u <= iv.r; ++u)
                os << (u == iv.l ? "" : " ") << x_.values[vars_.index(i, u)].get_str();
            os << '\n';
        }
        throw RoundingAbort(os.str());
    }

    const IntervalHypergraph& ih_;
    IntervalVariables vars_;
    LPSolution x_;
    std::vector<PointSet> live_;
    const RoundingOptions& options_;
};

}  // namespace

RoundingResult round_solution(const LPSolution& b_opt, const IntervalHypergraph& ih, int q_min,
                              const RoundingOptions& options) {
    if (q_min < 1) throw InputError("q_min must be at least 1");
    const IntervalVariables vars(ih);
    if (b_opt.values.size() != vars.size())
        throw InputError("solution has " + std::to_string(b_opt.values.size()) + " values, expected " +
                         std::to_string(vars.size()));
    for (std::size_t i = 0; i < ih.size(); ++i) {
        Rational sum = 0;
        for (Vertex u = ih.interval(i).l; u <= ih.interval(i).r; ++u) {
            const auto& v = b_opt.values[vars.index(i, u)];
            if (v < 0 || v > 1) throw ContractError("solution value outside [0,1] in interval " + std::to_string(i));
            sum += v;
        }
        if (sum != 1) throw ContractError("equality of interval " + std::to_string(i) + " does not hold");
    }
    Rounder rounder(b_opt, ih, options);
    return rounder.run();
}

}  // namespace cfc
