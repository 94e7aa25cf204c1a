#pragma once

// Round-trip corpus; together the documents use every grammar production.

#include <string>
#include <vector>

namespace cohom1::corpus {

inline const std::vector<std::string>& dsl_corpus() {
  static const std::vector<std::string> docs = {
      "family N6B { p = 1; q = 0; n = 2 }",
      "family N6B { p = 2; q = 4; n = 1; }",
      "family N6B { p = -3; q = 2; n = 5; gen_x = 1; gen_y = 0; }",
      "family N6C { n = 1; }",
      "family N6C { n = 12 }",
      "family N6D { p = 3; }",
      "family N6D { p = -7; }",
      "family N6E { p = 2; }",
      "family N6F { n = 4; }",
      "family N6F {}",
      "family N6A { r = 0; s = 0; b_minus = 1; c_minus = 0; b_plus = 0; c_plus = 1; m_minus = 1; m_plus = 1; }",
      "family N6A { r = 2; s = -1; b_minus = 1; c_minus = 1; b_plus = 1; c_plus = -1; m_minus = 2; m_plus = 3;\n"
      "  a_minus = 1; a_plus = 3; }",
      "# comment line\nfamily N6C { n = 3; } # trailing comment\n",
      "family N6B { p = 1; q = 0; n = 1; }\nfamily N6F { n = 2; }\nfamily N6E { p = 5; }",
      "diagram { G = S3xS3; Kminus = torus(); Kplus = S3 x cyclic(3); H = circle(1,0) x cyclic(3) }",
      "diagram { G = S3 x S3; Kminus = torus(); Kplus = torus(); H = circle(1, 0) x cyclic(2, [0, 1/2]); }",
      "diagram {\n  G = S3xS3;\n  Kminus = torus();\n  Kplus = S3 x circle(0, 1);\n  H = circle(3, 1);\n}",
      "diagram { G = S3xS3; Kminus = S3 x circle(0,1); Kplus = S3 x circle(0,1); H = circle(2,1); }",
      "diagram { G = S3 x T2; Kminus = circle(0,1,0); Kplus = circle(0,0,1); H = cyclic(1); }",
      "diagram { G = S3xT2; Kminus = circle(1, 1, 0) x cyclic(2, [0, 0, 1/2]); Kplus = circle(2, 0, 1) x cyclic(2, "
      "[0, 1/2, 0]); H = cyclic(2, [0, 1/2, 0]) x cyclic(2, [0, 0, 1/2]); }",
      "diagram { G = S3 x T2; Kminus = circle(-1, 2, 3); Kplus = circle(4, -1, 1); H = cyclic(3, [1/3, -2/3, 0]); }",
      "diagram { G = SU3; Kminus = S_U2U1; Kplus = S_U2U1; H = SU2SU1 x cyclic(4); }",
      "diagram { G = SU3; Kminus = S_U2U1; Kplus = S_U2U1; H = SU2SU1; }",
      "diagram { G = SU3; Kminus = S_U2U1; Kplus = SU3; H = cyclic(3); }",
      "diagram { H = circle(1,0); G = S3xS3; Kplus = torus(); Kminus = torus(); }",
      "diagram { G = S3xS3; Kminus = torus(); Kplus = torus(); H = circle(1,0) x cyclic(5, [0, 3/5]); }",
      "diagram { G = S3xS3; Kminus = torus(); Kplus = torus(); H = circle(0,1) x cyclic(4); }",
      "diagram { G = S3 x S3 x S3; }",
      "diagram {}",
      "diagram { G = T2; Kminus = cyclic(6, [1/6, 5/6]); }",
      "family N6D { p = 1; }\ndiagram { G = SU3; Kminus = S_U2U1; Kplus = S_U2U1; H = SU2SU1 x cyclic(2); }\n",
      "family N6A { r = 1; s = 1; b_minus = 0; c_minus = 1; b_plus = 1; c_plus = 0; m_minus = 1; m_plus = 1; }"
      " # all slopes primitive\n",
  };
  return docs;
}

}  // namespace cohom1::corpus
