//! Inputs shared by the benchmarks.

use logdiv::{parse_poly, DivisorOnPn, HomogPoly, Poly, ProblemSpec, Vars};

pub const CAYLEY: &str = "x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3";
pub const NODAL_CUBIC: &str = "x0*x3^2 + x0^3 + x2^2*x3 - x1^3 - x1^2*x3";

/// Affine germs with an isolated critical point at the origin.
pub const GERMS: [(&str, &str); 4] = [
    ("a3", "x^4 + y^2 + z^2"),
    ("e6", "x^3 + y^4 + z^2"),
    ("d4", "x^2*y + y^3 + z^2"),
    ("sheared_e6", "(x + 2*y)^3 + (y - z)^4 + (z + x)^2"),
];

pub fn affine(text: &str) -> Poly {
    parse_poly(text, &Vars::new(["x", "y", "z"])).unwrap()
}

pub fn surface(text: &str) -> HomogPoly {
    HomogPoly::parse(text, &Vars::numbered("x", 4)).unwrap()
}

pub fn plane_nodal_cubic() -> ProblemSpec {
    let vars = Vars::numbered("x", 4);
    let h = DivisorOnPn::parse("H", "x0", &vars).unwrap();
    let s = DivisorOnPn::parse("S", NODAL_CUBIC, &vars).unwrap();
    let mut spec = ProblemSpec::new(vars, vec![h, s]).unwrap();
    spec.decomposition = Some(("H".into(), "S".into()));
    spec
}
