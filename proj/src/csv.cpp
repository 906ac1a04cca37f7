#include "lorasic/csv.hpp"

#include <cstdio>

namespace lorasic {

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    // snprintf honours LC_NUMERIC; the schema always uses '.'
    for (char* p = buf; *p; ++p)
        if (*p == ',')
            *p = '.';
    return buf;
}

void write_sweep_csv(std::ostream& out, std::vector<SweepRow> const& rows)
{
    bool const with_mc = !rows.empty() && rows.front().mc.has_value();
    out << "x,h1,q1,q2,c1,c1_sic";
    if (with_mc)
        out << ",mc_c1,mc_c1_ci95,mc_c1_sic,mc_c1_sic_ci95";
    out << '\n';
    for (auto const& r : rows)
    {
        auto const& a = r.analytic;
        out << format_number(r.x) << ',' << format_number(a.h1) << ',' << format_number(a.q1) << ','
            << format_number(a.q2) << ',' << format_number(a.c1) << ',' << format_number(a.c1_sic);
        if (with_mc && r.mc)
        {
            out << ',' << format_number(r.mc->success_c1.mean) << ','
                << format_number(r.mc->success_c1.ci95_halfwidth) << ','
                << format_number(r.mc->success_c1_sic.mean) << ','
                << format_number(r.mc->success_c1_sic.ci95_halfwidth);
        }
        out << '\n';
    }
}

void write_capacity_csv(std::ostream& out, std::vector<CapacityRow> const& rows)
{
    out << "alpha,sf7,sf8,sf9,sf10,sf11,sf12,total\n";
    for (auto const& r : rows)
    {
        out << format_number(r.alpha);
        for (long n : r.nodes)
            out << ',' << n;
        out << ',' << r.total << '\n';
    }
}

} // namespace lorasic
