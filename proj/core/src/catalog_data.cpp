namespace degreelab {

// The manifold registry shipped with the artifact.  Homotopy-group data
// and the 4-sphere homeomorphism flags are curated facts, each with a
// source note; homology comes from the named chain complexes wherever a
// builder exists and from known betti tables otherwise.
extern const char* builtin_catalog_json;
const char* builtin_catalog_json = R"JSON({
  "entries": [
    {"name": "s2", "dim": 2, "orientable": true, "complex": "sphere:n=2",
     "cover": {"type": "self"}, "sheets": 1,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_n(S^n) = Z via the degree"}},
    {"name": "s3", "dim": 3, "orientable": true, "complex": "sphere:n=3",
     "cover": {"type": "self"}, "sheets": 1,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_n(S^n) = Z via the degree"}},
    {"name": "s4", "dim": 4, "orientable": true, "complex": "sphere:n=4",
     "cover": {"type": "self"}, "sheets": 1,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_n(S^n) = Z via the degree"},
     "homeomorphic_to_s4": true},
    {"name": "s5", "dim": 5, "orientable": true, "complex": "sphere:n=5",
     "cover": {"type": "self"}, "sheets": 1,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_n(S^n) = Z via the degree"}},
    {"name": "s6", "dim": 6, "orientable": true, "complex": "sphere:n=6",
     "cover": {"type": "self"}, "sheets": 1,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_n(S^n) = Z via the degree"}},

    {"name": "lens:m=2", "dim": 3, "orientable": true, "complex": "lens:m=2,dim=3",
     "cover": {"type": "named", "name": "s3"}, "sheets": 2,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_3 lifts to the S^3 cover"},
     "notes": "equals the 3-dimensional real projective space"},
    {"name": "lens:m=3", "dim": 3, "orientable": true, "complex": "lens:m=3,dim=3",
     "cover": {"type": "named", "name": "s3"}, "sheets": 3,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_3 lifts to the S^3 cover"}},
    {"name": "lens:m=4", "dim": 3, "orientable": true, "complex": "lens:m=4,dim=3",
     "cover": {"type": "named", "name": "s3"}, "sheets": 4,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_3 lifts to the S^3 cover"}},
    {"name": "lens:m=5", "dim": 3, "orientable": true, "complex": "lens:m=5,dim=3",
     "cover": {"type": "named", "name": "s3"}, "sheets": 5,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_3 lifts to the S^3 cover"}},
    {"name": "lens:m=6", "dim": 3, "orientable": true, "complex": "lens:m=6,dim=3",
     "cover": {"type": "named", "name": "s3"}, "sheets": 6,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_3 lifts to the S^3 cover"}},
    {"name": "lens:m=7", "dim": 3, "orientable": true, "complex": "lens:m=7,dim=3",
     "cover": {"type": "named", "name": "s3"}, "sheets": 7,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_3 lifts to the S^3 cover"}},

    {"name": "rp2", "dim": 2, "orientable": false, "complex": "rp:n=2",
     "cover": {"type": "named", "name": "s2"}, "sheets": 2,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_2 lifts to the S^2 cover"}},
    {"name": "rp3", "dim": 3, "orientable": true, "complex": "rp:n=3",
     "cover": {"type": "named", "name": "s3"}, "sheets": 2,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_3 lifts to the S^3 cover"}},
    {"name": "rp4", "dim": 4, "orientable": false, "complex": "rp:n=4",
     "cover": {"type": "named", "name": "s4"}, "sheets": 2,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_4 lifts to the S^4 cover"}},

    {"name": "t2", "dim": 2, "orientable": true, "complex": "t2",
     "cover": {"type": "noncompact", "desc": "R^2"},
     "pi_n": {"status": "zero", "group": "0", "source": "aspherical: the plane covers it"}},
    {"name": "t3", "dim": 3, "orientable": true, "betti": [1, 3, 3, 1],
     "cover": {"type": "noncompact", "desc": "R^3"},
     "pi_n": {"status": "zero", "group": "0", "source": "aspherical: 3-space covers it"}},

    {"name": "cp1", "dim": 2, "orientable": true, "complex": "cp1",
     "cover": {"type": "self"}, "sheets": 1,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_2(S^2) = Z"},
     "notes": "the 2-sphere with its complex structure"},
    {"name": "cp2", "dim": 4, "orientable": true, "complex": "cp2",
     "cover": {"type": "self"}, "sheets": 1,
     "pi_n": {"status": "zero", "group": "0",
              "source": "circle bundle over it is the 5-sphere: pi_4 = pi_4(S^5) = 0"},
     "homeomorphic_to_s4": false},

    {"name": "s2xs2", "dim": 4, "orientable": true, "betti": [1, 0, 2, 0, 1],
     "cover": {"type": "self"}, "sheets": 1,
     "pi_n": {"status": "nonzero", "group": "Z_2 + Z_2",
              "source": "pi_4(S^2 x S^2) = pi_4(S^2)^2, and pi_4(S^2) = Z_2"},
     "homeomorphic_to_s4": false},

    {"name": "poincare", "dim": 3, "orientable": true, "betti": [1, 0, 0, 1],
     "cover": {"type": "named", "name": "s3"}, "sheets": 120,
     "pi_n": {"status": "nonzero", "group": "Z", "source": "pi_3 lifts to the S^3 cover"},
     "notes": "dodecahedral space, the Brieskorn (2,3,5) link; an integral homology sphere"},

    {"name": "r3g6", "dim": 3, "orientable": true, "betti": [1, 0, 0, 1],
     "cover": {"type": "noncompact", "desc": "R^3"},
     "pi_n": {"status": "zero", "group": "0", "source": "flat, hence aspherical"},
     "notes": "flat 3-manifold from the orientation-flipping translation group; a rational homology sphere whose universal cover is not"}
  ]
})JSON";

} // namespace degreelab
