#include "balobs/model.hpp"

namespace balobs {

namespace {

const std::string kIwasawa = R"MODEL(
// Iwasawa manifold: quotient of the complex Heisenberg group.
var real al11 al22 al33;
var complex al12 al13 al23;
var complex a11 a12 a21 a22 a31 a32;

algebra iwasawa {
  dim = 3;
  d e3 = - e1 ^ e2;
}

metric g {
  convention = "hermitian-standard";
  entry 1 1 = al11;
  entry 1 2 = al12;
  entry 1 3 = al13;
  entry 2 2 = al22;
  entry 2 3 = al23;
  entry 3 3 = al33;
}

// Kuranishi family; the t^2 term keeps the Maurer-Cartan equation
// satisfied against [Z1,Z2] = Z3.
curve kuranishi = t*a11*~e1 @ Z1 + t*a12*~e2 @ Z1
                + t*a21*~e1 @ Z2 + t*a22*~e2 @ Z2
                + t*a31*~e1 @ Z3 + t*a32*~e2 @ Z3
                - t^2*(a11*a22 - a12*a21)*~e3 @ Z3;
)MODEL";

const std::string kNakamuraI = R"MODEL(
// Complex parallelisable Nakamura manifold, lattice case with
// dim H^{0,1} = 3. P stands for the character exp(conj(z1) - z1);
// its inverse enters as P^-1.
var real al11 al22 al33;
var complex al12 al13 al23;
var complex a11 a12 a13 a21 a22 a23 a31 a32 a33;

algebra nakamura {
  dim = 3;
  d e2 = - e1 ^ e2;
  d e3 = e1 ^ e3;
}

char P {
  dlog10 = - e1;
  dlog01 = ~e1;
}

metric g {
  convention = "hermitian-standard";
  entry 1 1 = al11;
  entry 1 2 = al12;
  entry 1 3 = al13;
  entry 2 2 = al22;
  entry 2 3 = al23;
  entry 3 3 = al33;
}

// Kuranishi classes in the tilde coframe ~E = (~e1, [P]~e2, [P^-1]~e3).
curve class1 = t*a11*~e1 @ Z1 + t*a21*~e1 @ Z2 + t*a22*[P]*~e2 @ Z2
             + t*a31*~e1 @ Z3 + t*a33*[P^-1]*~e3 @ Z3;
curve class2 = t*a12*[P]*~e2 @ Z1 + t*a13*[P^-1]*~e3 @ Z1
             + t*a21*~e1 @ Z2 + t*a23*[P^-1]*~e3 @ Z2
             + t*a31*~e1 @ Z3 + t*a32*[P]*~e2 @ Z3;
curve class3 = t*a12*[P]*~e2 @ Z1 + t*a22*[P]*~e2 @ Z2
             + t*a32*[P]*~e2 @ Z3 + t*a33*[P^-1]*~e3 @ Z3;
curve class4 = t*a13*[P^-1]*~e3 @ Z1 + t*a22*[P]*~e2 @ Z2
             + t*a23*[P^-1]*~e3 @ Z2 + t*a33*[P^-1]*~e3 @ Z3;

assume "lattice chosen with b, d in 2*pi*Z so that exp(conj(z1)-z1) descends to the quotient; declared, not verified";
)MODEL";

const std::string kNakamuraII = R"MODEL(
// Complex parallelisable Nakamura manifold, lattice case with
// dim H^{0,1} = 1: no characters are declared, the invariant complex
// is the weight-zero sector only.
var real al11 al22 al33;
var complex al12 al13 al23;
var complex a1 a2 a3;

algebra nakamura {
  dim = 3;
  d e2 = - e1 ^ e2;
  d e3 = e1 ^ e3;
}

metric g {
  convention = "hermitian-standard";
  entry 1 1 = al11;
  entry 1 2 = al12;
  entry 1 3 = al13;
  entry 2 2 = al22;
  entry 2 3 = al23;
  entry 3 3 = al33;
}

curve kuranishi = t*a1*~e1 @ Z1 + t*a2*~e1 @ Z2 + t*a3*~e1 @ Z3;
)MODEL";

struct SplitName {
    std::string base;
    std::string curve;
};

SplitName split_registry_name(const std::string& name) {
    auto pos = name.find(':');
    if (pos == std::string::npos) return {name, ""};
    return {name.substr(0, pos), name.substr(pos + 1)};
}

} // namespace

std::vector<std::string> registry_names() { return {"iwasawa", "nakamura-i", "nakamura-ii"}; }

const std::string& registry_source(const std::string& name) {
    SplitName sn = split_registry_name(name);
    if (sn.base == "iwasawa") return kIwasawa;
    if (sn.base == "nakamura-i") return kNakamuraI;
    if (sn.base == "nakamura-ii") return kNakamuraII;
    throw StructuralError("unknown registry model '" + sn.base + "'");
}

ModelFile registry(const std::string& name) {
    SplitName sn = split_registry_name(name);
    ModelFile m = parse_model(registry_source(sn.base), sn.base);
    if (!sn.curve.empty()) {
        if (!m.curves.count(sn.curve))
            throw StructuralError("registry model '" + sn.base + "' has no curve '" + sn.curve + "'");
        m.default_curve = sn.curve;
    }
    return m;
}

std::map<std::string, Cplx> registry_fd_defaults(const std::string& name) {
    SplitName sn = split_registry_name(name);
    std::map<std::string, Cplx> a;
    // Identity metric sample.
    a["al11"] = 1.0;
    a["al22"] = 1.0;
    a["al33"] = 1.0;
    a["al12"] = 0.0;
    a["al13"] = 0.0;
    a["al23"] = 0.0;
    if (sn.base == "iwasawa") {
        a["a11"] = Cplx(0.35, 0.0);
        a["a12"] = Cplx(0.25, -0.15);
        a["a21"] = Cplx(-0.20, 0.10);
        a["a22"] = Cplx(0.30, 0.0);
        a["a31"] = Cplx(0.0, 0.15);
        a["a32"] = Cplx(-0.10, 0.0);
    } else if (sn.base == "nakamura-i") {
        for (const char* v : {"a11", "a12", "a13", "a21", "a22", "a23", "a31", "a32", "a33"})
            a[v] = 0.0;
        a["a11"] = Cplx(0.30, 0.0);
        a["a21"] = Cplx(0.20, -0.10);
        a["a22"] = Cplx(-0.15, 0.05);
        a["a31"] = Cplx(0.0, 0.25);
        a["a33"] = Cplx(0.10, 0.10);
    } else if (sn.base == "nakamura-ii") {
        a["a1"] = Cplx(0.30, 0.0);
        a["a2"] = Cplx(0.25, -0.10);
        a["a3"] = Cplx(-0.20, 0.05);
    } else {
        throw StructuralError("unknown registry model '" + sn.base + "'");
    }
    return a;
}

} // namespace balobs
