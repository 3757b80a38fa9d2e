//! Shared fixtures for the integration suites.

/// Pointed-lattice sentences exercised throughout the crate: the running
/// axioms (linearity, conicity, integrality), lattice laws, the unit
/// distribution equations, and the quasi-equations of the decision
/// procedures.
pub const LATTICE_CORPUS: &[&str] = &[
    "x <= y | y <= x",
    "x <= 1 | 1 <= x",
    "x <= 1",
    "1 <= x",
    "x ^ y = y ^ x",
    "x v y = y v x",
    "x ^ (y ^ z) = (x ^ y) ^ z",
    "x v (y v z) = (x v y) v z",
    "x ^ (x v y) = x",
    "x v x ^ y = x",
    "x ^ x = x",
    "x ^ (y v z) = x ^ y v x ^ z",
    "x v y ^ z = (x v y) ^ (x v z)",
    "1 ^ (x v y) = 1 ^ x v 1 ^ y",
    "1 v x ^ y = (1 v x) ^ (1 v y)",
    "x ^ (1 v y) = x ^ 1 v x ^ y",
    "1 ^ x = 1 ^ y & 1 v x = 1 v y => x = y",
    "1 <= x v y & 1 <= x v z => 1 <= x v (y ^ z)",
    "x v y = 1 & x v z = 1 => x v (y ^ z) = 1",
    "1 <= x1 v x2 => 1 ^ z <= (x1 ^ z) v (x2 ^ z)",
    "1 <= x1 v x2 v x3 => 1 ^ z <= (x1 ^ z) v (x2 ^ z) v (x3 ^ z)",
];

/// Residuated-lattice sentences: the translated axioms, monoid and
/// residuation laws, cancellativity, and the derived distribution laws.
pub const RL_CORPUS: &[&str] = &[
    "1 ^ x \\ y v 1 ^ y \\ x = 1",
    "1 ^ x \\ 1 v 1 ^ x = 1",
    "1 ^ x \\ 1 = 1",
    "x * (y * z) = (x * y) * z",
    "x * y = y * x",
    "x * 1 = x",
    "x * (x \\ y) <= y",
    "(y / x) * x <= y",
    "x \\ (y ^ z) = (x \\ y) ^ (x \\ z)",
    "x \\ (y v z) = x \\ y v x \\ z",
    "x \\ (x * y) = y",
    "(y * x) / x = y",
    "x * y = x * z => y = z",
    "y * x = z * x => y = z",
    "x * x = x * x * x",
    "1 ^ x * y = (1 ^ x) * (1 ^ y)",
    "1 ^ y \\ (x * y) v 1 ^ x \\ 1 = 1",
];
