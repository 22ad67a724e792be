//! Ring fixtures shared by the benchmarks.

/// Two nilpotent axes `x^n = y^n = xy = 0`; dimension `2n - 1`.
pub fn two_axes(n: u32) -> String {
    format!("field 2\nvars x y\nrel x^{n}\nrel y^{n}\nrel x*y\n")
}

/// Three cubed axes with all mixed products zero; never DSC.
pub const THREE_CUBES: &str = "field 2\nvars x1 x2 x3\nrel x1^3\nrel x2^3\nrel x3^3\n\
                               rel x1*x2\nrel x1*x3\nrel x2*x3\n";

/// `x^2 = y^2 = 0` with `xy` surviving; forces the exhaustive search.
pub const GLUED_SQUARES: &str = "field 2\nvars x y\nrel x^2\nrel y^2\n";

/// A three-variable ring with a larger standard basis.
pub fn cube_box(n: u32) -> String {
    format!("field 3\nvars x y z\nrel x^{n}\nrel y^{n}\nrel z^{n}\n")
}
