#include "ncgear/export_dxf.hpp"

#include <sstream>

#include "ncgear/report_io.hpp"

namespace ncgear {

std::string dxf_document(
    const std::vector<std::pair<std::string, std::vector<Complex>>>& polylines) {
    std::ostringstream out;
    out << "0\nSECTION\n2\nHEADER\n";
    out << "9\n$ACADVER\n1\nAC1015\n";
    out << "9\n$INSUNITS\n70\n4\n";  // millimetres
    out << "0\nENDSEC\n";
    out << "0\nSECTION\n2\nENTITIES\n";
    for (const auto& [layer, pts] : polylines) {
        out << "0\nLWPOLYLINE\n";
        out << "8\n" << layer << "\n";
        out << "90\n" << pts.size() << "\n";
        out << "70\n1\n";  // closed
        for (const Complex& p : pts) {
            out << "10\n" << format_g9(p.real()) << "\n";
            out << "20\n" << format_g9(p.imag()) << "\n";
        }
    }
    out << "0\nENDSEC\n0\nEOF\n";
    return out.str();
}

std::vector<std::vector<Complex>> parse_dxf_polylines(const std::string& text) {
    std::vector<std::vector<Complex>> polylines;
    std::istringstream in(text);
    std::string code, value;
    bool in_polyline = false;
    double x = 0.0;
    bool have_x = false;
    while (std::getline(in, code) && std::getline(in, value)) {
        const int group = std::stoi(code);
        if (group == 0) {
            in_polyline = value == "LWPOLYLINE";
            if (in_polyline) polylines.emplace_back();
            have_x = false;
        } else if (in_polyline && group == 10) {
            x = std::stod(value);
            have_x = true;
        } else if (in_polyline && group == 20 && have_x) {
            polylines.back().emplace_back(x, std::stod(value));
            have_x = false;
        }
    }
    return polylines;
}

}  // namespace ncgear
