//! The reference values the workbench verifies against. Everything here is
//! an expected value for a computation done from scratch elsewhere; nothing
//! in this module feeds back into the algorithms.

/// Character table of the order-48 group; rows in conventional label order,
/// columns in class order `1, -1, i, w, -w, d, jd, -jd`.
pub fn g_character_table() -> Vec<(&'static str, [&'static str; 8])> {
    vec![
        ("1+", ["1", "1", "1", "1", "1", "1", "1", "1"]),
        ("1-", ["1", "1", "1", "1", "1", "-1", "-1", "-1"]),
        ("2_0", ["2", "2", "2", "-1", "-1", "0", "0", "0"]),
        ("3+", ["3", "3", "-1", "0", "0", "1", "-1", "-1"]),
        ("3-", ["3", "3", "-1", "0", "0", "-1", "1", "1"]),
        (
            "2+",
            ["2", "-2", "0", "-1", "1", "0", "i*sqrt2", "-1*i*sqrt2"],
        ),
        (
            "2-",
            ["2", "-2", "0", "-1", "1", "0", "-1*i*sqrt2", "i*sqrt2"],
        ),
        ("4_0", ["4", "-4", "0", "1", "-1", "0", "0", "0"]),
    ]
}

/// Character table of the order-16 subgroup; columns
/// `1, -1, i, j, d, jd, -jd`.
pub fn h_character_table() -> Vec<(&'static str, [&'static str; 7])> {
    vec![
        ("1a", ["1", "1", "1", "1", "1", "1", "1"]),
        ("1b", ["1", "1", "1", "1", "-1", "-1", "-1"]),
        ("1c", ["1", "1", "1", "-1", "1", "-1", "-1"]),
        ("1d", ["1", "1", "1", "-1", "-1", "1", "1"]),
        ("2a", ["2", "2", "-2", "0", "0", "0", "0"]),
        ("2b", ["2", "-2", "0", "0", "0", "i*sqrt2", "-1*i*sqrt2"]),
        ("2c", ["2", "-2", "0", "0", "0", "-1*i*sqrt2", "i*sqrt2"]),
    ]
}

pub const G_REAL_ALGEBRA: &str = "2R + M2(R) + M2(C) + 2M3(R) + M4(R)";
pub const G_COMPLEX_ALGEBRA: &str = "2C + 3M2(C) + 2M3(C) + M4(C)";

/// Real algebra types along the quotient chain.
pub const QUOTIENT_ALGEBRA_CHAIN: [(&str, &str); 5] = [
    ("G", "2R + M2(R) + M2(C) + 2M3(R) + M4(R)"),
    ("Sym(4)", "2R + M2(R) + 2M3(R)"),
    ("Sym(3)", "2R + M2(R)"),
    ("Sym(2)", "2R"),
    ("Sym(1)", "R"),
];

/// Real algebra types of the normal subgroups themselves.
pub const NORMAL_SUBGROUP_ALGEBRAS: [(&str, &str); 4] = [
    ("1", "R"),
    ("Z2", "2R"),
    ("Q8", "4R + H"),
    ("2.Alt(4)", "R + C + M3(R) + H + M2(C)"),
];

/// Restriction of each irreducible of the order-48 group to the order-16
/// subgroup, as decomposition strings in subgroup labels.
pub const BRANCHING: [(&str, &str); 8] = [
    ("1+", "1a"),
    ("1-", "1b"),
    ("2_0", "1a + 1b"),
    ("3+", "1c + 2a"),
    ("3-", "1d + 2a"),
    ("2+", "2b"),
    ("2-", "2c"),
    ("4_0", "2b + 2c"),
];

/// The tensor catalogue: each pair `(lhs, rhs)` is a reference identity,
/// verified by evaluating both sides through the query language.
pub const TENSOR_CATALOGUE: [(&str, &str); 48] = [
    // Squares of the complex spinors.
    ("2+ * 2+", "1- + 3+"),
    ("2- * 2-", "1- + 3+"),
    ("2+ * 2-", "1+ + 3-"),
    ("2- * 2+", "1+ + 3-"),
    ("4_0 * 4_0", "1+ + 3- + 1- + 3+ + 2_0 + 3+ + 3-"),
    // Subgroup-level spinor products.
    ("2b * 2b", "1b + 1c + 2a"),
    ("2c * 2c", "1b + 1c + 2a"),
    ("2b * 2c", "1a + 1d + 2a"),
    ("2c * 2b", "1a + 1d + 2a"),
    // Products of the 3-dimensional representations.
    ("3+ * 3+", "3- + 1+ + 2_0 + 3+"),
    ("3- * 3-", "3- + 1+ + 2_0 + 3+"),
    ("L2(3+)", "3-"),
    ("L2(3-)", "3-"),
    ("S2(3+)", "1+ + 2_0 + 3+"),
    ("S2(3-)", "1+ + 2_0 + 3+"),
    ("3+ * 3-", "1- + 2_0 + 3+ + 3-"),
    ("3- * 3+", "1- + 2_0 + 3+ + 3-"),
    // Cube constituents of the 3-dimensional representations.
    ("L3(3+)", "1-"),
    ("M3(3+)", "2_0 + 3+ + 3-"),
    ("S3(3+)", "1+ + 3+ + 3+ + 3-"),
    ("L3(3-)", "1+"),
    ("M3(3-)", "2_0 + 3+ + 3-"),
    ("S3(3-)", "1- + 3+ + 3- + 3-"),
    // Spinor times bosonic representations.
    ("2+ * 1+", "2+"),
    ("2- * 1-", "2+"),
    ("2+ * 1-", "2-"),
    ("2- * 1+", "2-"),
    ("2+ * 2_0", "4_0"),
    ("2- * 2_0", "4_0"),
    ("2+ * 3+", "2- + 4_0"),
    ("2- * 3-", "2- + 4_0"),
    ("2+ * 3-", "2+ + 4_0"),
    ("2- * 3+", "2+ + 4_0"),
    // Additional products.
    ("L2(2_0)", "1-"),
    ("S2(2_0)", "1+ + 2_0"),
    ("2_0 * 3+", "3+ + 3-"),
    ("2_0 * 3-", "3+ + 3-"),
    ("4_0 * 2_0", "2+ + 2- + 4_0"),
    ("4_0 * 3+", "2+ + 2- + 4_0 + 4_0"),
    ("4_0 * 3-", "2+ + 2- + 4_0 + 4_0"),
    ("2+ * 4_0", "2_0 + 3+ + 3-"),
    ("2- * 4_0", "2_0 + 3+ + 3-"),
    ("L2(4_0)", "1- + 2_0 + 3-"),
    ("S2(4_0)", "1+ + 3+ + 3+ + 3-"),
    // Squares of the boson-plus-spinor sum.
    ("L2(3+ + 4_0)", "3- + 1- + 2_0 + 3- + 2+ + 2- + 4_0 + 4_0"),
    (
        "S2(3+ + 4_0)",
        "1+ + 2_0 + 3+ + 1+ + 3+ + 3+ + 3- + 2+ + 2- + 4_0 + 4_0",
    ),
    ("L2(3- + 4_0)", "3- + 1- + 2_0 + 3- + 2+ + 2- + 4_0 + 4_0"),
    (
        "S2(3- + 4_0)",
        "1+ + 2_0 + 3+ + 1+ + 3+ + 3+ + 3- + 2+ + 2- + 4_0 + 4_0",
    ),
];
