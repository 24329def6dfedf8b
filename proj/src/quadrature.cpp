#include "xyness/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace xyness {

namespace {

constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error, abs_value;
};

Panel gk15(const std::function<double(double)>& f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double k = wgk[7] * fc, g = wg[3] * fc, ak = std::abs(k);
    for (int j = 0; j < 7; ++j) {
        const double f1 = f(c - h * xgk[j]), f2 = f(c + h * xgk[j]);
        k += wgk[j] * (f1 + f2);
        ak += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            g += wg[j / 2] * (f1 + f2);
    }
    return {a, b, k * h, std::abs((k - g) * h), ak * std::abs(h)};
}

struct WorseFirst {
    bool operator()(const Panel& x, const Panel& y) const
    {
        if (x.error != y.error)
            return x.error < y.error;
        return x.a > y.a;
    }
};

} // namespace

QuadResult integrate(const std::function<double(double)>& f, std::vector<double> points,
                     double abs_tol, int max_intervals)
{
    if (points.size() < 2)
        throw std::invalid_argument("integrate: need at least two points");
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("integrate: tolerance must be positive");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::priority_queue<Panel, std::vector<Panel>, WorseFirst> heap;
    double err = 0.0, absval = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        Panel p = gk15(f, points[i], points[i + 1]);
        err += p.error;
        absval += p.abs_value;
        heap.push(p);
    }
    int count = int(heap.size());
    constexpr double eps = std::numeric_limits<double>::epsilon();
    // estimates below the rounding floor cannot be reduced further
    auto target = [&] { return std::max(abs_tol, 50.0 * eps * absval); };

    while (err > target()) {
        if (count >= max_intervals) {
            std::ostringstream os;
            os << "integrate: tolerance " << abs_tol << " not met after " << count
               << " intervals (estimate " << err << ")";
            throw QuadratureError(os.str());
        }
        Panel w = heap.top();
        const double m = 0.5 * (w.a + w.b);
        if (!(m > w.a && m < w.b)) {
            std::ostringstream os;
            os << "integrate: interval [" << w.a << ", " << w.b << "] cannot be bisected (estimate " << err << ")";
            throw QuadratureError(os.str());
        }
        heap.pop();
        Panel l = gk15(f, w.a, m), r = gk15(f, m, w.b);
        err += l.error + r.error - w.error;
        absval += l.abs_value + r.abs_value - w.abs_value;
        heap.push(l);
        heap.push(r);
        ++count;
    }

    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    QuadResult r;
    for (const Panel& p : all) {
        r.value += p.value;
        r.error += p.error;
    }
    r.intervals = count;
    return r;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_intervals)
{
    return integrate(f, std::vector<double>{a, b}, abs_tol, max_intervals);
}

} // namespace xyness
