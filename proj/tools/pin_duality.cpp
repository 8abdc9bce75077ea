// Surveys every duality convention over the fixture suite and writes the
// header that pins the winning one.
//   pin_duality [output-header]

#include <fstream>
#include <iostream>

#include "perco/contact.hpp"
#include "perco/dual.hpp"
#include "perco/error.hpp"
#include "perco/fixtures.hpp"

namespace {

const char* enum_name(perco::CrossingOrientation c) {
  return c == perco::CrossingOrientation::LeftToRight ? "CrossingOrientation::LeftToRight"
                                                      : "CrossingOrientation::RightToLeft";
}
const char* enum_name(perco::CycleReading r) {
  return r == perco::CycleReading::Clockwise ? "CycleReading::Clockwise" : "CycleReading::Counterclockwise";
}
const char* enum_name(perco::ArcChoice a) {
  return a == perco::ArcChoice::FromSource ? "ArcChoice::FromSource" : "ArcChoice::ToSource";
}
const char* enum_name(perco::DualityVerdict v) {
  switch (v) {
    case perco::DualityVerdict::HoldsAsStated: return "DualityVerdict::HoldsAsStated";
    case perco::DualityVerdict::HoldsComplemented: return "DualityVerdict::HoldsComplemented";
    case perco::DualityVerdict::Fails: return "DualityVerdict::Fails";
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace perco;
  try {
    std::vector<NormalizedGraph> graphs;
    for (const auto& named : fixtures::duality_suite()) graphs.push_back(normalize_spec(named.spec));
    const auto params = ContactParams::homogeneous(1, Rational(1), Rational(1));
    auto d = build_discrete(params, 1, 2, Rational(1, 2), all_infected(1));
    graphs.push_back(normalize(d.graph, d.cycle));

    const auto pin = pin_convention(graphs);
    for (const auto& [conv, verdict] : pin.table) std::cerr << to_string(conv) << "  " << to_string(verdict) << '\n';
    if (pin.verdict == DualityVerdict::Fails) {
      std::cerr << "no convention gives a consistent verdict\n";
      return 1;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (argc > 1) {
      file.open(argv[1]);
      if (!file) {
        std::cerr << "cannot write " << argv[1] << '\n';
        return 2;
      }
      out = &file;
    }
    *out << "#pragma once\n\n"
         << "// Generated by tools/pin_duality from an exhaustive survey of the fixture\n"
         << "// graphs. Regenerate rather than edit.\n\n"
         << "#include \"perco/dual.hpp\"\n\n"
         << "namespace perco {\n\n"
         << "inline constexpr DualConvention kPinnedConvention{" << enum_name(pin.convention.crossing) << ", "
         << enum_name(pin.convention.reading) << ", " << enum_name(pin.convention.arc) << "};\n"
         << "inline constexpr DualityVerdict kPinnedVerdict = " << enum_name(pin.verdict) << ";\n\n"
         << "}  // namespace perco\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
