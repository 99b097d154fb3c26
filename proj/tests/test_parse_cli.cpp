#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "burnside/cli.hpp"
#include "burnside/limits.hpp"
#include "burnside/errors.hpp"
#include "burnside/parse.hpp"
#include "burnside/report.hpp"

using namespace burnside;

TEST_CASE("group spec grammar") {
  CHECK(parse_group("S3") == symmetric_group(3));
  CHECK(parse_group("C4") == cyclic_group(4));
  CHECK(parse_group("e") == trivial_group());
  CHECK(parse_group("S2wrS3") == wreath_product(2, symmetric_group(3)).group);
  CHECK(parse_group("S2wrS3")->order() == 72);
  CHECK(parse_group("S2xS3") == direct_product(symmetric_group(2), symmetric_group(3)).group);
  CHECK(parse_group("(S2xS2)xC3")->order() == 12);
  CHECK(parse_group("perm(3): (0 1), (0 1 2)") == symmetric_group(3));
  CHECK(parse_group("(perm(2): (0 1))xS2")->order() == 4);
  CHECK_THROWS_AS(parse_group("Q8"), ParseError);
  CHECK_THROWS_AS(parse_group("S3junk"), ParseError);
}

TEST_CASE("element grammar") {
  GroupPtr s2 = symmetric_group(2);
  CoeffRing z = CoeffRing::integers();

  CHECK(parse_element("t", s2, z) == BurnsideElement::basis(s2, 0));
  CHECK(parse_element("1", s2, z) == BurnsideElement::unit(s2));
  CHECK(parse_element("2*[H1_0] + 1*[H2_0]", s2, z) ==
        BurnsideElement::basis(s2, 0).scaled(Scalar(z, 2)) + BurnsideElement::unit(s2));
  CHECK(parse_element("t - 1", s2, z) ==
        BurnsideElement::basis(s2, 0) - BurnsideElement::unit(s2));
  CHECK(parse_element("-3", s2, z) == BurnsideElement::unit(s2).scaled(Scalar(z, -3)));
  CHECK(parse_element("", s2, z).is_zero());

  CoeffRing zi = CoeffRing::gaussian();
  BurnsideElement g = parse_element("2+1i*[H1_0] - i", s2, zi);
  CHECK(g.coeff(0) == Scalar::gaussian(2, 1));
  CHECK(g.coeff(1) == Scalar::gaussian(0, -1));

  CoeffRing q = CoeffRing::rationals();
  CHECK(parse_element("1/2*[H1_0]", s2, q).coeff(0) == Scalar::rational(mpq_class(1, 2)));

  CHECK_THROWS_AS(parse_element("t", symmetric_group(3), z), ParseError);
  CHECK_THROWS_AS(parse_element("[H5_0]", s2, z), ParseError);
}

TEST_CASE("operator grammar") {
  CHECK(parse_operator("[S2/e]") == OperatorElement::basis(2, 0));
  CHECK(parse_operator("t") == OperatorElement::basis(2, 0));
  CHECK(parse_operator("e") == OperatorElement::identity_op());
  CHECK(parse_operator("1") == OperatorElement::unit());
  CHECK(parse_operator("[S3/H2_0] + 2*e") ==
        OperatorElement::basis(3, 1) + OperatorElement::identity_op().scaled(2));
  CHECK(parse_operator("[S2/S2]") == OperatorElement::basis(2, 1));

  OperatorElement2 z2 = parse_operator2("[S1xS1/e]");
  CHECK(z2.part(1, 1) == BurnsideElement::unit(bidegree_group(1, 1)));
}

TEST_CASE("scalar forms round trip") {
  for (const char* s : {"0", "7", "-12"})
    CHECK(Scalar::parse(CoeffRing::integers(), s).to_string() == s);
  for (const char* s : {"2+3i", "-i", "5", "2-3i", "3i"})
    CHECK(Scalar::parse(CoeffRing::gaussian(), s).to_string() == s);
  for (const char* s : {"1/2", "-7/3", "4"})
    CHECK(Scalar::parse(CoeffRing::rationals(), s).to_string() == s);
  CHECK(Scalar::parse(CoeffRing::residues(6), "13").to_string() == "1");
}

TEST_CASE("element json round trip") {
  GroupPtr s3 = symmetric_group(3);
  BurnsideElement x = BurnsideElement::basis(s3, 1) -
                      BurnsideElement::basis(s3, 3).scaled(Scalar(CoeffRing::integers(), 4));
  nlohmann::json j = element_to_json(x);
  CHECK(j["group"] == "S3");
  CHECK(element_from_json(j) == x);
}

namespace {

std::pair<int, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str() + err.str()};
}

}  // namespace

TEST_CASE("cli marks and legend") {
  auto [code, text] = run({"marks", "--group", "S2"});
  CHECK(code == 0);
  CHECK(text.find("[[2,0],[1,1]]") != std::string::npos);
  CHECK(text.find("H1_0") != std::string::npos);
  CHECK(text.find("H2_0") != std::string::npos);
}

TEST_CASE("cli theta prints the beta-operation and the closed form") {
  auto [code, text] = run({"theta", "--group", "S2", "--op", "[S2/e]", "--elem", "t"});
  CHECK(code == 0);
  CHECK(text.find("2t") != std::string::npos);
  CHECK(text.find("agrees") != std::string::npos);
}

TEST_CASE("cli arithmetic and functorial verbs") {
  CHECK(run({"mul", "--group", "S2", "--lhs", "t", "--rhs", "t"}).second == "2t\n");
  CHECK(run({"add", "--group", "S2", "--lhs", "t", "--rhs", "1"}).second == "t + 1\n");
  CHECK(run({"mul", "--group", "S2", "--coeff", "Zi", "--lhs", "i*t", "--rhs", "i*t"}).second ==
        "-2t\n");
  CHECK(run({"restrict", "--hom", "unit@S2", "--elem", "t"}).second == "2*[H1_0]\n");
  CHECK(run({"transfer", "--group", "S2", "--sub", "H1_0", "--elem", "1"}).second == "t\n");
  CHECK(run({"deflate", "--hom", "toe@S2", "--elem", "t"}).second == "1*[H1_0]\n");
  CHECK(run({"pow", "--group", "e", "--elem", "2", "--degree", "2"}).second == "t + 2\n");
  CHECK(run({"opmul", "--op", "e", "--with", "e"}).second == "deg 2: 1*[H1_0]\n");
  CHECK(run({"plethysm", "--op", "t", "--with", "e"}).second == "deg 2: 1*[H1_0]\n");
}

TEST_CASE("cli obstruct exits zero with the obstruction verdict") {
  auto [code, text] = run({"obstruct", "zmod", "2"});
  CHECK(code == 0);
  CHECK(text.find("obstructed") != std::string::npos);
  CHECK(run({"obstruct", "gaussian"}).first == 0);
}

TEST_CASE("cli exit codes") {
  CHECK(run({"nonsense"}).first == 64);
  CHECK(run({"marks", "--group", "S99"}).first == 1);
  // a candidate check with failures exits 2
  CHECK(run({"check", "candidate", "--group", "e", "--mod", "2", "--degree", "2"}).first == 2);
  CHECK(run({"check", "candidate", "--group", "e", "--mod", "3", "--degree", "2"}).first == 0);
}

TEST_CASE("cli exps and theta2 verbs") {
  auto exps = run({"exps", "--group", "e", "--elem", "-1", "--degree", "2"});
  CHECK(exps.first == 0);
  CHECK(exps.second.find("t - 1") != std::string::npos);

  auto th2 = run({"theta2", "--group", "S2", "--op2", "[S1xS1/e]", "--lhs", "t", "--rhs", "1"});
  CHECK(th2.first == 0);
  CHECK(th2.second == "t\n");
}

TEST_CASE("cli hom specs") {
  CHECK(run({"restrict", "--hom", "incl@S2>S3", "--elem", "[H3_0]"}).second == "t\n");
  CHECK(run({"restrict", "--hom", "sign@S3", "--elem", "t"}).second == "1*[H3_0]\n");
  CHECK(run({"restrict", "--hom", "diag@S2", "--elem", "[H1_0]"}).second == "2t\n");
  CHECK(run({"deflate", "--hom", "pr2@S2xS2", "--elem", "[H1_0]"}).second == "t\n");
  CHECK(run({"restrict", "--hom", "bogus@S2", "--elem", "t"}).first == 1);
}

TEST_CASE("cli respects the set bound") {
  auto r = run({"pow", "--group", "e", "--bound-set", "100", "--elem", "12", "--degree", "3"});
  CHECK(r.first == 1);
  CHECK(r.second.find("exceeds") != std::string::npos);
  limits().set_size = 1000000;  // restore the default for later cases
}

TEST_CASE("cli json output is valid and deterministic") {
  auto first = run({"obstruct", "--json", "zmod", "6"});
  auto second = run({"obstruct", "--json", "zmod", "6"});
  CHECK(first.first == 0);
  CHECK(first.second == second.second);
  nlohmann::json j = nlohmann::json::parse(first.second);
  CHECK(j["failures"] == 0);
  CHECK(j["entries"].is_array());

  auto elem = run({"mul", "--group", "S3", "--json", "--lhs", "[H2_0]", "--rhs", "[H3_0]"});
  nlohmann::json je = nlohmann::json::parse(elem.second);
  CHECK(je["group"] == "S3");
  CHECK(element_from_json(je) ==
        mul(BurnsideElement::basis(symmetric_group(3), 1),
            BurnsideElement::basis(symmetric_group(3), 2)));
}
